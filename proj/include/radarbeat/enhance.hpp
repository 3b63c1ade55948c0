#pragma once

#include "radarbeat/series.hpp"

namespace radarbeat {

/// |s''(t)|, the heartbeat-enhanced signal. Length and dt follow the input;
/// the first and last boundary_samples(2) values are edge artifacts.
RealSeries enhanced_heartbeat(const ComplexSeries& signal);

/// |s^(k)(t)| for k = 1..3.
RealSeries abs_kth_derivative(const ComplexSeries& signal, int k);

/// |s(t)|·ψ'(t)², the first-phase-derivative part of |s''| (ψ'' set to zero).
RealSeries variant_psi_prime_sq(const ComplexSeries& signal);

/// |s(t)|·|ψ''(t)|, the second-phase-derivative part of |s''| (ψ' set to zero).
RealSeries variant_psi_second(const ComplexSeries& signal);

}  // namespace radarbeat
