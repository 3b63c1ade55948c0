#include "radarbeat/enhance.hpp"

#include <cmath>

#include "radarbeat/radar_image.hpp"
#include "radarbeat/signal_core.hpp"

namespace radarbeat {

namespace {

RealSeries unwrapped_phase(const ComplexSeries& signal) { return unwrap_phase(wrapped_phase(signal)); }

}  // namespace

RealSeries abs_kth_derivative(const ComplexSeries& signal, int k) {
  const ComplexSeries d = kth_derivative(signal, k);
  RealSeries out{std::vector<double>(d.size()), d.dt, d.t0};
  for (std::size_t i = 0; i < d.size(); ++i) out.samples[i] = std::abs(d.samples[i]);
  return out;
}

RealSeries enhanced_heartbeat(const ComplexSeries& signal) { return abs_kth_derivative(signal, 2); }

RealSeries variant_psi_prime_sq(const ComplexSeries& signal) {
  RealSeries dpsi = kth_derivative(unwrapped_phase(signal), 1);
  for (std::size_t i = 0; i < dpsi.size(); ++i) {
    dpsi.samples[i] = std::abs(signal.samples[i]) * dpsi.samples[i] * dpsi.samples[i];
  }
  return dpsi;
}

RealSeries variant_psi_second(const ComplexSeries& signal) {
  RealSeries d2psi = kth_derivative(unwrapped_phase(signal), 2);
  for (std::size_t i = 0; i < d2psi.size(); ++i) {
    d2psi.samples[i] = std::abs(signal.samples[i] * d2psi.samples[i]);
  }
  return d2psi;
}

}  // namespace radarbeat
