#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

// Thin FFTW wrappers. Unnormalized forward transforms; `irfft` divides by n.
namespace radarbeat::detail {

// Forward DFT of real input zero-padded to n; returns bins 0..n/2.
std::vector<std::complex<double>> rfft(std::span<const double> x, std::size_t n);

// Forward DFT of complex input zero-padded to n; returns all n bins.
std::vector<std::complex<double>> fft(std::span<const std::complex<double>> x, std::size_t n);

// Inverse of rfft for a length-n real signal given bins 0..n/2.
std::vector<double> irfft(std::span<const std::complex<double>> spectrum, std::size_t n);

}  // namespace radarbeat::detail
