#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "radarbeat/series.hpp"

namespace radarbeat {

// Variational mode extraction.
//
// Frequencies inside the objective are digital angular frequencies
// (rad/sample, ω = 2π·f·dt), which is the scale on which the balance
// parameter α is defined. Configuration and results use Hz.

inline constexpr double vme_epsilon = 1e-12;
inline constexpr double alpha_enhanced_default = 3e4;  // for |s''| input
inline constexpr double alpha_phase_default = 1e5;     // for unwrapped-phase input

struct VmeConfig {
  double alpha = alpha_enhanced_default;
  double f_init = 2.7;  // Hz
  int max_iters = 500;
  double tol = 1e-7;    // relative change of the mode spectrum
  bool update_center = true;
};

/// Non-negative-frequency half of the DFT of a length-n real sequence.
struct OneSidedSpectrum {
  std::vector<complex_t> bins;  // n/2 + 1 values
  std::size_t n = 0;            // transform length
  double dt = 0.0;              // sample interval of the transformed sequence

  double omega(std::size_t k) const noexcept;  // rad/sample
};

struct VmeResult {
  RealSeries mode;
  RealSeries residual;
  OneSidedSpectrum mode_spectrum;  // on the mirror-extended grid
  double f_final = 0.0;  // Hz, the centre the final mode was computed with
  int iterations = 0;
  bool converged = false;
  std::vector<double> objective_trace;  // objective after each mode update
};


/// Mirror extension by half the length on each side (floor(N/2) samples).
std::vector<double> mirror_extend(std::span<const double> x);

/// One-sided spectrum of the mirror-extended signal; the grid VME works on.
OneSidedSpectrum extended_spectrum(const RealSeries& signal);

/// Per-bin gain of the exact mode update for a fixed centre:
/// û = F̂ / (1 + α(ω-ωc)²·(α²(ω-ωc)⁴ + ε)).
double vme_gain(double omega, double omega_center, double alpha) noexcept;

/// J = Σ_k α(ω_k-ωc)²|û_k|² + |F̂_k-û_k|² / (α²(ω_k-ωc)⁴ + ε).
double vme_objective(const OneSidedSpectrum& mode, double f_center_hz,
                     const OneSidedSpectrum& input, double alpha);

void validate(const VmeConfig& cfg, double dt);

/// Extracts the mode around cfg.f_init by alternating exact minimisation.
/// Non-convergence is reported through `converged`, not an exception.
VmeResult vme_extract(const RealSeries& signal, const VmeConfig& cfg);

struct DesiredFrequency {
  double hz = 0.0;
  bool fallback = false;  // no interior local maximum in the band
};

inline constexpr double desired_band_lo = 2.0;
inline constexpr double desired_band_hi = 3.4;
inline constexpr double desired_fallback = 2.7;

/// Largest interior local maximum of the PSD restricted to [2.0, 3.4] Hz,
/// or 2.7 Hz when the band has none.
DesiredFrequency select_desired_frequency(const PowerSpectrum& spectrum);

struct HarmonicResult {
  RealSeries output;
  DesiredFrequency desired;
  std::vector<VmeResult> modes;  // one per extracted mode
};

/// Selects f_d from the signal's own periodogram, then extracts mode 1 at f_d
/// and, for mode_count == 2, mode 2 at 1.5·f_d; the output is their sum.
HarmonicResult harmonic_enhance(const RealSeries& signal, double alpha, int mode_count);

/// As above with an externally chosen desired frequency.
HarmonicResult harmonic_enhance(const RealSeries& signal, const DesiredFrequency& desired,
                                double alpha, int mode_count);

/// As above with every VME setting except f_init taken from `base`.
HarmonicResult harmonic_enhance(const RealSeries& signal, const DesiredFrequency& desired,
                                const VmeConfig& base, int mode_count);

}  // namespace radarbeat
