#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "radarbeat/radar_image.hpp"
#include "radarbeat/series.hpp"

namespace radarbeat {

inline constexpr double default_wavelength_mm = 3.797;  // c / 79 GHz
inline constexpr double default_frame_interval = 6.87e-3;

struct SynthConfig {
  double duration = 60.0;  // s
  double dt = default_frame_interval;
  double resp_freq = 0.2;  // Hz
  double resp_amp = 8.0;   // mm
  double resp_skew = 0.0;  // rad, phase of the respiration second harmonic
  double heart_mean_ibi = 850.0;  // ms
  double heart_ibi_sd = 40.0;     // ms
  double heart_amp = 0.35;        // mm
  double pulse_width = 0.06;      // s, Gaussian sigma
  std::optional<double> snr_db = 20.0;  // nullopt: noise-free
  double wavelength = default_wavelength_mm;  // mm
  std::uint64_t seed = 1;
};

/// Messages for every configured value outside the typical physiological
/// ranges (respiration 0.1-0.3 Hz and 4-12 mm, heartbeat 0.2-0.5 mm).
std::vector<std::string> physiological_warnings(const SynthConfig& cfg);

/// Throws for values no generator can honour (non-positive dt, IBI out of 400-1500 ms, ...).
void validate(const SynthConfig& cfg);

struct SynthRecord {
  ComplexSeries signal;
  RealSeries displacement_mm;
  std::vector<double> rpeaks_s;
  IbiSeries true_ibi;
  SynthConfig config;
  std::vector<std::string> warnings;
};

/// R-peak times from t = 0, intervals from a normal distribution clipped at
/// ±3 sd with a 350 ms floor. Deterministic per seed.
std::vector<double> gen_rpeaks(double mean_ibi_ms, double sd_ms, double duration, std::uint64_t seed);

/// Number of samples covering [0, duration] at interval dt.
std::size_t sample_count(double duration, double dt);

/// Sum of Gaussian pulses amp·exp(-(t-t_k)²/(2σ²)) centred on each R-peak.
RealSeries heartbeat_displacement(const std::vector<double>& rpeaks, double amp_mm, double pulse_width,
                                  double dt, double duration);

/// amp·[cos(2πft) + 0.3·cos(4πft + skew)].
RealSeries respiration_displacement(double freq, double amp_mm, double dt, double duration, double skew);

/// s(t) = exp(j·4π·d(t)/λ) + n(t), with complex white noise of power 10^(-snr/10).
ComplexSeries modulate(const RealSeries& displacement_mm, double wavelength_mm,
                       std::optional<double> snr_db, std::uint64_t seed);

SynthRecord synthesize(const SynthConfig& cfg);

struct CubeLayout {
  std::size_t n_range = 16;
  std::size_t n_angle = 9;
  std::size_t target_range_bin = 8;
  std::size_t target_angle_bin = 4;
  double range_start = 0.5;        // m
  double range_step = 0.0384;      // m, c / (2 · 3.9 GHz)
  double angle_span = 1.0471975511965976;  // rad, full width centred on 0
  double clutter_level = 1.0;      // magnitude of each static scatterer
  std::size_t clutter_cells = 3;
  std::optional<double> noise_power;  // per-cell noise; defaults to the record's
  std::uint64_t seed = 7;
};

/// Embeds the record's signal in a cube with static clutter and noise elsewhere.
RadarCube make_cube(const SynthRecord& record, const CubeLayout& layout);

}  // namespace radarbeat
