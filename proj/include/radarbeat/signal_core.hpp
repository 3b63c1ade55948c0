#pragma once

#include <cstddef>

#include "radarbeat/series.hpp"

namespace radarbeat {

/// Nearest-multiple-of-2π phase unwrapping. The first sample is kept; every
/// successive difference of the result lies in (-π, π].
RealSeries unwrap_phase(const RealSeries& wrapped);

/// Maps an angle into (-π, π].
double wrap_to_pi(double angle) noexcept;

/// k-th time derivative (k = 1..3) by central finite differences, scaled by
/// dt^-k. The first and last `boundary_samples(k)` values come from one-sided
/// second-order stencils and should be treated as edge artifacts.
ComplexSeries kth_derivative(const ComplexSeries& series, int k);
RealSeries kth_derivative(const RealSeries& series, int k);

/// Number of samples at each end of a k-th derivative that use one-sided stencils.
constexpr std::size_t boundary_samples(int k) noexcept { return static_cast<std::size_t>(k); }

/// Drops `count` samples from both ends; t0 advances accordingly.
RealSeries interior(const RealSeries& series, std::size_t count);
ComplexSeries interior(const ComplexSeries& series, std::size_t count);

/// Smallest power of two >= 4·n, the default periodogram transform length.
std::size_t default_nfft(std::size_t n) noexcept;

/// Rectangular-window periodogram, power[k] = |DFT(x, nfft)[k]|²·dt/N.
/// Real input yields bins 0..nfft/2, complex input all nfft bins.
/// nfft = 0 selects default_nfft(N).
PowerSpectrum periodogram(const RealSeries& series, bool remove_mean, std::size_t nfft = 0);
PowerSpectrum periodogram(const ComplexSeries& series, bool remove_mean, std::size_t nfft = 0);

double mean(const RealSeries& series);
RealSeries remove_mean(RealSeries series);

}  // namespace radarbeat
