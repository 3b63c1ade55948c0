#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace radarbeat {

using complex_t = std::complex<double>;

/// Uniformly sampled complex series such as the slow-time radar signal.
/// `t0` is the time of the first sample; `dt` the sample interval (seconds).
struct ComplexSeries {
  std::vector<complex_t> samples;
  double dt = 0.0;
  double t0 = 0.0;

  std::size_t size() const noexcept { return samples.size(); }
  double time_at(std::size_t i) const noexcept { return t0 + static_cast<double>(i) * dt; }
};

/// Uniformly sampled real series (phase, displacement, enhanced signal, modes).
struct RealSeries {
  std::vector<double> samples;
  double dt = 0.0;
  double t0 = 0.0;

  std::size_t size() const noexcept { return samples.size(); }
  double time_at(std::size_t i) const noexcept { return t0 + static_cast<double>(i) * dt; }
};

/// One-sided (real input) or full (complex input) periodogram.
struct PowerSpectrum {
  std::vector<double> freqs;  // Hz, uniformly spaced from 0
  std::vector<double> power;

  std::size_t size() const noexcept { return freqs.size(); }
  double spacing() const noexcept { return freqs.size() > 1 ? freqs[1] - freqs[0] : 0.0; }
};

struct IbiEntry {
  double time_s = 0.0;
  double interval_ms = 0.0;

  friend bool operator==(const IbiEntry&, const IbiEntry&) = default;
};

/// Irregularly timestamped interbeat intervals; times strictly increasing.
struct IbiSeries {
  std::vector<IbiEntry> entries;

  std::size_t size() const noexcept { return entries.size(); }
  bool empty() const noexcept { return entries.empty(); }
};

// Throw invalid_input_error / length_error when an invariant is violated.
void validate(const ComplexSeries& s, std::size_t min_length = 1);
void validate(const RealSeries& s, std::size_t min_length = 1);
void validate(const IbiSeries& s);

}  // namespace radarbeat
