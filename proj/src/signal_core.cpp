#include "radarbeat/signal_core.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "fft.hpp"
#include "radarbeat/errors.hpp"

namespace radarbeat {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// Shared stencil code for real and complex samples.
template <typename T>
std::vector<T> differentiate(const std::vector<T>& x, double dt, int k) {
  if (k < 1 || k > 3) throw invalid_input_error("derivative order must be 1, 2 or 3");
  const std::size_t n = x.size();
  const std::size_t need = static_cast<std::size_t>(2 * k + 1);
  if (n < need) {
    throw length_error("derivative of order " + std::to_string(k) + " needs at least " +
                       std::to_string(need) + " samples, got " + std::to_string(n));
  }
  std::vector<T> d(n);
  switch (k) {
    case 1: {
      const double s = 1.0 / (2.0 * dt);
      for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (x[i + 1] - x[i - 1]) * s;
      d[0] = (-3.0 * x[0] + 4.0 * x[1] - x[2]) * s;
      d[n - 1] = (3.0 * x[n - 1] - 4.0 * x[n - 2] + x[n - 3]) * s;
      break;
    }
    case 2: {
      const double s = 1.0 / (dt * dt);
      for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (x[i + 1] - 2.0 * x[i] + x[i - 1]) * s;
      d[0] = (2.0 * x[0] - 5.0 * x[1] + 4.0 * x[2] - x[3]) * s;
      d[n - 1] = (2.0 * x[n - 1] - 5.0 * x[n - 2] + 4.0 * x[n - 3] - x[n - 4]) * s;
      break;
    }
    case 3: {
      const double s = 1.0 / (2.0 * dt * dt * dt);
      for (std::size_t i = 2; i + 2 < n; ++i) {
        d[i] = (x[i + 2] - 2.0 * x[i + 1] + 2.0 * x[i - 1] - x[i - 2]) * s;
      }
      auto forward = [&](std::size_t i) {
        return (-5.0 * x[i] + 18.0 * x[i + 1] - 24.0 * x[i + 2] + 14.0 * x[i + 3] - 3.0 * x[i + 4]) * s;
      };
      auto backward = [&](std::size_t i) {
        return (5.0 * x[i] - 18.0 * x[i - 1] + 24.0 * x[i - 2] - 14.0 * x[i - 3] + 3.0 * x[i - 4]) * s;
      };
      d[0] = forward(0);
      d[1] = forward(1);
      d[n - 2] = backward(n - 2);
      d[n - 1] = backward(n - 1);
      break;
    }
  }
  return d;
}

template <typename Series>
Series drop_ends(const Series& series, std::size_t count) {
  if (series.size() < 2 * count + 1) {
    throw length_error("series too short to drop " + std::to_string(count) + " samples per side");
  }
  Series out;
  out.dt = series.dt;
  out.t0 = series.time_at(count);
  out.samples.assign(series.samples.begin() + static_cast<std::ptrdiff_t>(count),
                     series.samples.end() - static_cast<std::ptrdiff_t>(count));
  return out;
}

PowerSpectrum make_spectrum(std::size_t bins, std::size_t nfft, double dt) {
  PowerSpectrum ps;
  ps.freqs.resize(bins);
  ps.power.resize(bins);
  const double df = 1.0 / (static_cast<double>(nfft) * dt);
  for (std::size_t k = 0; k < bins; ++k) ps.freqs[k] = static_cast<double>(k) * df;
  return ps;
}

std::size_t resolve_nfft(std::size_t nfft, std::size_t n) {
  if (nfft == 0) return default_nfft(n);
  if (nfft < n) throw invalid_input_error("nfft must be at least the series length");
  return nfft;
}

}  // namespace

double wrap_to_pi(double angle) noexcept {
  return angle - two_pi * std::ceil((angle - std::numbers::pi) / two_pi);
}

RealSeries unwrap_phase(const RealSeries& wrapped) {
  validate(wrapped);
  RealSeries out = wrapped;
  for (std::size_t i = 1; i < out.size(); ++i) {
    out.samples[i] = out.samples[i - 1] + wrap_to_pi(wrapped.samples[i] - wrapped.samples[i - 1]);
  }
  return out;
}

ComplexSeries kth_derivative(const ComplexSeries& series, int k) {
  validate(series);
  return ComplexSeries{differentiate(series.samples, series.dt, k), series.dt, series.t0};
}

RealSeries kth_derivative(const RealSeries& series, int k) {
  validate(series);
  return RealSeries{differentiate(series.samples, series.dt, k), series.dt, series.t0};
}

RealSeries interior(const RealSeries& series, std::size_t count) { return drop_ends(series, count); }

ComplexSeries interior(const ComplexSeries& series, std::size_t count) {
  return drop_ends(series, count);
}

std::size_t default_nfft(std::size_t n) noexcept {
  std::size_t nfft = 1;
  while (nfft < 4 * n) nfft <<= 1;
  return nfft;
}

double mean(const RealSeries& series) {
  if (series.samples.empty()) return 0.0;
  return std::accumulate(series.samples.begin(), series.samples.end(), 0.0) /
         static_cast<double>(series.size());
}

RealSeries remove_mean(RealSeries series) {
  const double m = mean(series);
  for (double& v : series.samples) v -= m;
  return series;
}

PowerSpectrum periodogram(const RealSeries& series, bool remove_mean_flag, std::size_t nfft) {
  validate(series);
  nfft = resolve_nfft(nfft, series.size());
  std::vector<double> x = series.samples;
  if (remove_mean_flag) {
    const double m = mean(series);
    for (double& v : x) v -= m;
  }
  const auto spec = detail::rfft(x, nfft);
  PowerSpectrum ps = make_spectrum(spec.size(), nfft, series.dt);
  const double scale = series.dt / static_cast<double>(series.size());
  for (std::size_t k = 0; k < spec.size(); ++k) ps.power[k] = std::norm(spec[k]) * scale;
  return ps;
}

PowerSpectrum periodogram(const ComplexSeries& series, bool remove_mean_flag, std::size_t nfft) {
  validate(series);
  nfft = resolve_nfft(nfft, series.size());
  std::vector<complex_t> x = series.samples;
  if (remove_mean_flag) {
    complex_t m = std::accumulate(x.begin(), x.end(), complex_t{});
    m /= static_cast<double>(x.size());
    for (auto& v : x) v -= m;
  }
  const auto spec = detail::fft(x, nfft);
  PowerSpectrum ps = make_spectrum(spec.size(), nfft, series.dt);
  const double scale = series.dt / static_cast<double>(series.size());
  for (std::size_t k = 0; k < spec.size(); ++k) ps.power[k] = std::norm(spec[k]) * scale;
  return ps;
}

}  // namespace radarbeat
