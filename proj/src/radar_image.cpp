#include "radarbeat/radar_image.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "radarbeat/errors.hpp"
#include "radarbeat/signal_core.hpp"

namespace radarbeat {

namespace {

void check_axis(const std::vector<double>& axis, const char* name) {
  if (axis.empty()) throw invalid_input_error(std::string(name) + " axis is empty");
  for (std::size_t i = 0; i < axis.size(); ++i) {
    if (!std::isfinite(axis[i])) throw invalid_input_error(std::string(name) + " axis is not finite");
    if (i > 0 && !(axis[i] > axis[i - 1])) {
      throw invalid_input_error(std::string(name) + " axis must be strictly ascending");
    }
  }
}

// Exact grid lookup with a small relative tolerance for values read from text.
std::size_t locate(const std::vector<double>& axis, double value, const char* name) {
  for (std::size_t i = 0; i < axis.size(); ++i) {
    const double tol = 1e-9 * std::max(1.0, std::abs(axis[i]));
    if (std::abs(axis[i] - value) <= tol) return i;
  }
  throw lookup_error(std::string(name) + " coordinate " + std::to_string(value) + " is not on the cube grid");
}

}  // namespace

RadarCube::RadarCube(std::vector<double> ranges, std::vector<double> angles, std::size_t frames,
                     double frame_dt)
    : range_axis(std::move(ranges)),
      angle_axis(std::move(angles)),
      n_frames(frames),
      dt(frame_dt),
      data(range_axis.size() * angle_axis.size() * frames) {}

void validate(const RadarCube& cube) {
  check_axis(cube.range_axis, "range");
  check_axis(cube.angle_axis, "angle");
  if (!(cube.dt > 0.0)) throw invalid_input_error("cube frame interval must be positive");
  if (cube.n_frames == 0) throw length_error("cube has no frames");
  if (cube.data.size() != cube.n_range() * cube.n_angle() * cube.n_frames) {
    throw invalid_input_error("cube data size does not match its dimensions");
  }
}

RadarCube remove_clutter(const RadarCube& cube) {
  validate(cube);
  if (cube.n_frames < 2) throw length_error("clutter removal needs at least two frames");
  RadarCube out = cube;
  const double inv = 1.0 / static_cast<double>(cube.n_frames);
  for (std::size_t r = 0; r < cube.n_range(); ++r) {
    for (std::size_t a = 0; a < cube.n_angle(); ++a) {
      complex_t m{};
      for (std::size_t f = 0; f < cube.n_frames; ++f) m += cube.at(r, a, f);
      m *= inv;
      for (std::size_t f = 0; f < cube.n_frames; ++f) out.at(r, a, f) -= m;
    }
  }
  return out;
}

PowerImage average_power_image(const RadarCube& cube) {
  validate(cube);
  PowerImage img{cube.range_axis, cube.angle_axis,
                 std::vector<double>(cube.n_range() * cube.n_angle(), 0.0)};
  const double inv = 1.0 / static_cast<double>(cube.n_frames);
  for (std::size_t r = 0; r < cube.n_range(); ++r) {
    for (std::size_t a = 0; a < cube.n_angle(); ++a) {
      double acc = 0.0;
      for (std::size_t f = 0; f < cube.n_frames; ++f) acc += std::norm(cube.at(r, a, f));
      img.values[r * cube.n_angle() + a] = acc * inv;
    }
  }
  return img;
}

TargetPosition select_target(const PowerImage& image) {
  const std::size_t na = image.angle_axis.size();
  if (image.values.empty() || image.values.size() != image.range_axis.size() * na) {
    throw invalid_input_error("power image is empty or inconsistent with its axes");
  }
  // Row-major scan with strict comparison keeps the smallest (range, angle) on ties.
  std::size_t best = 0;
  for (std::size_t i = 1; i < image.values.size(); ++i) {
    if (image.values[i] > image.values[best]) best = i;
  }
  if (!(image.values[best] > 0.0)) throw no_target_error("power image is identically zero");
  TargetPosition pos;
  pos.range_bin = best / na;
  pos.angle_bin = best % na;
  pos.range_m = image.range_axis[pos.range_bin];
  pos.angle_rad = image.angle_axis[pos.angle_bin];
  return pos;
}

ComplexSeries extract_signal(const RadarCube& cube, double range_m, double angle_rad) {
  validate(cube);
  const std::size_t r = locate(cube.range_axis, range_m, "range");
  const std::size_t a = locate(cube.angle_axis, angle_rad, "angle");
  ComplexSeries s;
  s.dt = cube.dt;
  s.samples.resize(cube.n_frames);
  for (std::size_t f = 0; f < cube.n_frames; ++f) s.samples[f] = cube.at(r, a, f);
  return s;
}

RealSeries wrapped_phase(const ComplexSeries& signal, std::size_t* zero_count) {
  validate(signal);
  RealSeries phase{std::vector<double>(signal.size()), signal.dt, signal.t0};
  std::size_t zeros = 0;
  double previous = 0.0;
  for (std::size_t i = 0; i < signal.size(); ++i) {
    const complex_t z = signal.samples[i];
    if (z == complex_t{}) {
      ++zeros;
      phase.samples[i] = previous;
      continue;
    }
    double p = std::arg(z);
    if (p <= -std::numbers::pi) p = std::numbers::pi;
    phase.samples[i] = previous = p;
  }
  if (zero_count != nullptr) *zero_count = zeros;
  return phase;
}

Displacement displacement(const ComplexSeries& signal, double wavelength_mm) {
  if (!(wavelength_mm > 0.0) || !std::isfinite(wavelength_mm)) {
    throw invalid_input_error("wavelength must be positive");
  }
  Displacement out;
  RealSeries psi = unwrap_phase(wrapped_phase(signal, &out.zero_magnitude_samples));
  const double scale = wavelength_mm / (4.0 * std::numbers::pi);
  for (double& v : psi.samples) v *= scale;
  out.displacement_mm = std::move(psi);
  return out;
}

}  // namespace radarbeat
