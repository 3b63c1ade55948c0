#include "radarbeat/vme.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "fft.hpp"
#include "radarbeat/errors.hpp"
#include "radarbeat/signal_core.hpp"

namespace radarbeat {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;
constexpr std::size_t min_vme_length = 64;

double objective_at(std::span<const complex_t> u, std::span<const complex_t> f,
                    std::size_t n, double omega_c, double alpha) {
  double j = 0.0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    const double d = two_pi * static_cast<double>(k) / static_cast<double>(n) - omega_c;
    const double d2 = d * d;
    j += alpha * d2 * std::norm(u[k]) + std::norm(f[k] - u[k]) / (alpha * alpha * d2 * d2 + vme_epsilon);
  }
  return j;
}

}  // namespace

double OneSidedSpectrum::omega(std::size_t k) const noexcept {
  return two_pi * static_cast<double>(k) / static_cast<double>(n);
}

std::vector<double> mirror_extend(std::span<const double> x) {
  const std::size_t n = x.size();
  const std::size_t h = n / 2;
  std::vector<double> ext;
  ext.reserve(n + 2 * h);
  for (std::size_t i = h; i > 0; --i) ext.push_back(x[i - 1]);
  ext.insert(ext.end(), x.begin(), x.end());
  for (std::size_t i = 0; i < h; ++i) ext.push_back(x[n - 1 - i]);
  return ext;
}

OneSidedSpectrum extended_spectrum(const RealSeries& signal) {
  validate(signal);
  const auto ext = mirror_extend(signal.samples);
  return OneSidedSpectrum{detail::rfft(ext, ext.size()), ext.size(), signal.dt};
}

double vme_gain(double omega, double omega_center, double alpha) noexcept {
  const double d2 = (omega - omega_center) * (omega - omega_center);
  return 1.0 / (1.0 + alpha * d2 * (alpha * alpha * d2 * d2 + vme_epsilon));
}

double vme_objective(const OneSidedSpectrum& mode, double f_center_hz,
                     const OneSidedSpectrum& input, double alpha) {
  if (mode.n != input.n || mode.bins.size() != input.bins.size() || mode.dt != input.dt ||
      mode.bins.size() != mode.n / 2 + 1) {
    throw grid_mismatch_error("mode and input spectra are not on the same frequency grid");
  }
  if (!(alpha > 0.0)) throw invalid_input_error("alpha must be positive");
  return objective_at(mode.bins, input.bins, mode.n, two_pi * f_center_hz * mode.dt, alpha);
}

void validate(const VmeConfig& cfg, double dt) {
  if (!(cfg.alpha > 0.0) || !std::isfinite(cfg.alpha)) throw invalid_input_error("alpha must be positive");
  const double nyquist = 0.5 / dt;
  if (!(cfg.f_init > 0.0) || !(cfg.f_init < nyquist)) {
    throw invalid_input_error("f_init must lie strictly between 0 and the Nyquist frequency");
  }
  if (cfg.max_iters < 1) throw invalid_input_error("max_iters must be at least 1");
  if (!(cfg.tol > 0.0)) throw invalid_input_error("tol must be positive");
}

VmeResult vme_extract(const RealSeries& signal, const VmeConfig& cfg) {
  validate(signal, min_vme_length);
  validate(cfg, signal.dt);

  const std::size_t n = signal.size();
  const std::size_t h = n / 2;
  const OneSidedSpectrum input = extended_spectrum(signal);
  const std::size_t bins = input.bins.size();

  const double omega_init = two_pi * cfg.f_init * signal.dt;
  const double omega_lo = 0.5 * omega_init;
  const double omega_hi = 1.5 * omega_init;
  double omega_c = omega_init;
  double omega_mode = omega_init;  // centre of the current mode iterate

  std::vector<complex_t> u(bins);
  std::vector<complex_t> next(bins);
  VmeResult result;

  for (int it = 1; it <= cfg.max_iters; ++it) {
    double diff = 0.0;
    double norm_prev = 0.0;
    for (std::size_t k = 0; k < bins; ++k) {
      next[k] = input.bins[k] * vme_gain(input.omega(k), omega_c, cfg.alpha);
      diff += std::norm(next[k] - u[k]);
      norm_prev += std::norm(u[k]);
    }
    u.swap(next);
    omega_mode = omega_c;
    const double j = objective_at(u, input.bins, input.n, omega_c, cfg.alpha);
    result.objective_trace.push_back(j);
    result.iterations = it;

    const double change = norm_prev > 0.0 ? diff / norm_prev : (diff > 0.0 ? std::numeric_limits<double>::infinity() : 0.0);
    if (change < cfg.tol || !cfg.update_center) {
      result.converged = true;
      break;
    }

    // Centre step: power-weighted mean frequency minimises the bandwidth term.
    // It is kept only when the full objective does not increase.
    double num = 0.0;
    double den = 0.0;
    for (std::size_t k = 0; k < bins; ++k) {
      const double p = std::norm(u[k]);
      num += input.omega(k) * p;
      den += p;
    }
    if (!(den > 0.0)) {
      result.converged = true;
      break;
    }
    const double candidate = std::clamp(num / den, omega_lo, omega_hi);
    if (objective_at(u, input.bins, input.n, candidate, cfg.alpha) <= j) {
      omega_c = candidate;
    } else {
      result.converged = true;
      break;
    }
  }

  const auto full = detail::irfft(u, input.n);
  result.mode = RealSeries{std::vector<double>(full.begin() + static_cast<std::ptrdiff_t>(h),
                                               full.begin() + static_cast<std::ptrdiff_t>(h + n)),
                           signal.dt, signal.t0};
  result.residual = RealSeries{std::vector<double>(n), signal.dt, signal.t0};
  for (std::size_t i = 0; i < n; ++i) result.residual.samples[i] = signal.samples[i] - result.mode.samples[i];
  result.f_final = omega_mode / (two_pi * signal.dt);
  result.mode_spectrum = OneSidedSpectrum{std::move(u), input.n, input.dt};
  return result;
}

DesiredFrequency select_desired_frequency(const PowerSpectrum& spectrum) {
  if (spectrum.freqs.size() != spectrum.power.size()) {
    throw invalid_input_error("spectrum frequency and power lengths differ");
  }
  if (spectrum.freqs.empty() || spectrum.freqs.back() < desired_band_hi ||
      spectrum.freqs.front() > desired_band_lo) {
    throw band_coverage_error("spectrum does not cover 2.0-3.4 Hz");
  }
  std::vector<std::size_t> band;
  for (std::size_t k = 0; k < spectrum.size(); ++k) {
    if (spectrum.freqs[k] >= desired_band_lo && spectrum.freqs[k] <= desired_band_hi) band.push_back(k);
  }
  if (band.size() < 3) throw band_coverage_error("spectrum has fewer than 3 bins in 2.0-3.4 Hz");

  DesiredFrequency out{desired_fallback, true};
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i + 1 < band.size(); ++i) {
    const double p = spectrum.power[band[i]];
    if (p > spectrum.power[band[i - 1]] && p > spectrum.power[band[i + 1]] && p > best) {
      best = p;
      out = {spectrum.freqs[band[i]], false};
    }
  }
  return out;
}

HarmonicResult harmonic_enhance(const RealSeries& signal, const DesiredFrequency& desired,
                                const VmeConfig& base, int mode_count) {
  if (mode_count != 1 && mode_count != 2) throw invalid_input_error("mode_count must be 1 or 2");
  HarmonicResult out;
  out.desired = desired;
  VmeConfig cfg = base;
  cfg.f_init = desired.hz;
  out.modes.push_back(vme_extract(signal, cfg));
  out.output = out.modes.front().mode;
  if (mode_count == 2) {
    cfg.f_init = 1.5 * desired.hz;
    out.modes.push_back(vme_extract(signal, cfg));
    const auto& second = out.modes.back().mode.samples;
    for (std::size_t i = 0; i < out.output.size(); ++i) out.output.samples[i] += second[i];
  }
  return out;
}

HarmonicResult harmonic_enhance(const RealSeries& signal, const DesiredFrequency& desired,
                                double alpha, int mode_count) {
  VmeConfig cfg;
  cfg.alpha = alpha;
  return harmonic_enhance(signal, desired, cfg, mode_count);
}

HarmonicResult harmonic_enhance(const RealSeries& signal, double alpha, int mode_count) {
  return harmonic_enhance(signal, select_desired_frequency(periodogram(signal, true)), alpha, mode_count);
}

}  // namespace radarbeat
