#include "radarbeat/series.hpp"

#include <cmath>
#include <string>

#include "radarbeat/errors.hpp"

namespace radarbeat {

namespace {

void check_common(std::size_t n, double dt, std::size_t min_length) {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw invalid_input_error("sample interval must be positive and finite");
  }
  if (n < min_length) {
    throw length_error("series has " + std::to_string(n) + " samples, need at least " +
                       std::to_string(min_length));
  }
}

}  // namespace

void validate(const ComplexSeries& s, std::size_t min_length) {
  check_common(s.size(), s.dt, min_length);
  for (const auto& z : s.samples) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw invalid_input_error("complex series contains a non-finite sample");
    }
  }
}

void validate(const RealSeries& s, std::size_t min_length) {
  check_common(s.size(), s.dt, min_length);
  for (double v : s.samples) {
    if (!std::isfinite(v)) throw invalid_input_error("real series contains a non-finite sample");
  }
}

void validate(const IbiSeries& s) {
  for (std::size_t i = 0; i < s.entries.size(); ++i) {
    const auto& e = s.entries[i];
    if (!std::isfinite(e.time_s) || !std::isfinite(e.interval_ms)) {
      throw invalid_input_error("IBI series contains a non-finite entry");
    }
    if (i > 0 && !(e.time_s > s.entries[i - 1].time_s)) {
      throw invalid_input_error("IBI entry times must be strictly increasing");
    }
  }
}

}  // namespace radarbeat
