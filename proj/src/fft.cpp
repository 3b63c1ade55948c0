#include "fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace radarbeat::detail {

namespace {

// FFTW's planner is not reentrant; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct buffer_deleter {
  void operator()(void* p) const noexcept { fftw_free(p); }
};

template <typename T>
using fftw_buffer = std::unique_ptr<T[], buffer_deleter>;

template <typename T>
fftw_buffer<T> allocate(std::size_t n) {
  auto* p = static_cast<T*>(fftw_malloc(sizeof(T) * std::max<std::size_t>(n, 1)));
  if (p == nullptr) throw std::bad_alloc();
  return fftw_buffer<T>(p);
}

class plan_guard {
 public:
  explicit plan_guard(fftw_plan p) : plan_(p) {
    if (plan_ == nullptr) throw std::runtime_error("FFTW failed to create a plan");
  }
  ~plan_guard() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan_);
  }
  plan_guard(const plan_guard&) = delete;
  plan_guard& operator=(const plan_guard&) = delete;
  void execute() const { fftw_execute(plan_); }

 private:
  fftw_plan plan_;
};

}  // namespace

std::vector<std::complex<double>> rfft(std::span<const double> x, std::size_t n) {
  if (n < x.size() || n == 0) throw std::invalid_argument("rfft: transform length too short");
  auto in = allocate<double>(n);
  auto out = allocate<fftw_complex>(n / 2 + 1);
  fftw_plan raw;
  {
    std::lock_guard lock(planner_mutex());
    raw = fftw_plan_dft_r2c_1d(static_cast<int>(n), in.get(), out.get(), FFTW_ESTIMATE);
  }
  plan_guard plan(raw);
  std::fill(in.get(), in.get() + n, 0.0);
  std::copy(x.begin(), x.end(), in.get());
  plan.execute();
  std::vector<std::complex<double>> result(n / 2 + 1);
  for (std::size_t k = 0; k < result.size(); ++k) result[k] = {out[k][0], out[k][1]};
  return result;
}

std::vector<std::complex<double>> fft(std::span<const std::complex<double>> x, std::size_t n) {
  if (n < x.size() || n == 0) throw std::invalid_argument("fft: transform length too short");
  auto in = allocate<fftw_complex>(n);
  auto out = allocate<fftw_complex>(n);
  fftw_plan raw;
  {
    std::lock_guard lock(planner_mutex());
    raw = fftw_plan_dft_1d(static_cast<int>(n), in.get(), out.get(), FFTW_FORWARD, FFTW_ESTIMATE);
  }
  plan_guard plan(raw);
  for (std::size_t i = 0; i < n; ++i) {
    in[i][0] = i < x.size() ? x[i].real() : 0.0;
    in[i][1] = i < x.size() ? x[i].imag() : 0.0;
  }
  plan.execute();
  std::vector<std::complex<double>> result(n);
  for (std::size_t k = 0; k < n; ++k) result[k] = {out[k][0], out[k][1]};
  return result;
}

std::vector<double> irfft(std::span<const std::complex<double>> spectrum, std::size_t n) {
  if (n == 0 || spectrum.size() != n / 2 + 1) {
    throw std::invalid_argument("irfft: spectrum length does not match n/2+1");
  }
  auto in = allocate<fftw_complex>(spectrum.size());
  auto out = allocate<double>(n);
  fftw_plan raw;
  {
    std::lock_guard lock(planner_mutex());
    raw = fftw_plan_dft_c2r_1d(static_cast<int>(n), in.get(), out.get(), FFTW_ESTIMATE);
  }
  plan_guard plan(raw);
  for (std::size_t k = 0; k < spectrum.size(); ++k) {
    in[k][0] = spectrum[k].real();
    in[k][1] = spectrum[k].imag();
  }
  plan.execute();
  std::vector<double> result(out.get(), out.get() + n);
  const double scale = 1.0 / static_cast<double>(n);
  for (double& v : result) v *= scale;
  return result;
}

}  // namespace radarbeat::detail
