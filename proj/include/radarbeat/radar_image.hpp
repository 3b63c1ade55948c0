#pragma once

#include <cstddef>
#include <vector>

#include "radarbeat/series.hpp"

namespace radarbeat {

/// Complex radar image over (range bin, angle bin, slow-time frame).
/// Storage is frame-major: index = (frame · n_range + range) · n_angle + angle.
struct RadarCube {
  std::vector<double> range_axis;  // m, strictly ascending
  std::vector<double> angle_axis;  // rad, strictly ascending
  std::size_t n_frames = 0;
  double dt = 0.0;                 // frame interval, s
  std::vector<complex_t> data;

  RadarCube() = default;
  RadarCube(std::vector<double> ranges, std::vector<double> angles, std::size_t frames, double dt);

  std::size_t n_range() const noexcept { return range_axis.size(); }
  std::size_t n_angle() const noexcept { return angle_axis.size(); }
  std::size_t index(std::size_t r, std::size_t a, std::size_t frame) const noexcept {
    return (frame * n_range() + r) * n_angle() + a;
  }
  complex_t& at(std::size_t r, std::size_t a, std::size_t frame) { return data[index(r, a, frame)]; }
  const complex_t& at(std::size_t r, std::size_t a, std::size_t frame) const {
    return data[index(r, a, frame)];
  }
};

/// Time-averaged power image over (range bin, angle bin), angle fastest.
struct PowerImage {
  std::vector<double> range_axis;
  std::vector<double> angle_axis;
  std::vector<double> values;

  double at(std::size_t r, std::size_t a) const { return values[r * angle_axis.size() + a]; }
};

struct TargetPosition {
  double range_m = 0.0;
  double angle_rad = 0.0;
  std::size_t range_bin = 0;
  std::size_t angle_bin = 0;
};

struct Displacement {
  RealSeries displacement_mm;
  /// Samples whose echo had zero magnitude; their phase was carried forward.
  std::size_t zero_magnitude_samples = 0;
};

void validate(const RadarCube& cube);

/// Subtracts each cell's slow-time mean (static clutter suppression).
RadarCube remove_clutter(const RadarCube& cube);

/// Per-cell time mean of |I_C|².
PowerImage average_power_image(const RadarCube& cube);

/// Global argmax of the power image; ties go to the smallest range, then angle.
TargetPosition select_target(const PowerImage& image);

/// Slow-time series of the cell at (range_m, angle_rad), which must be on the grid.
ComplexSeries extract_signal(const RadarCube& cube, double range_m, double angle_rad);

/// d(t) = (λ/4π)·unwrap(∠s(t)) in millimetres; wavelength given in millimetres.
Displacement displacement(const ComplexSeries& signal, double wavelength_mm);

/// Wrapped phase ∠s(t) with zero-magnitude samples holding the previous phase.
/// `zero_count` receives the number of such samples when non-null.
RealSeries wrapped_phase(const ComplexSeries& signal, std::size_t* zero_count = nullptr);

}  // namespace radarbeat
