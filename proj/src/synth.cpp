#include "radarbeat/synth.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "radarbeat/errors.hpp"
#include "radarbeat/eval.hpp"

namespace radarbeat {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// Separate streams for R-peaks, noise and cube content, derived from one seed.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream)};
  std::uint64_t out = 0;
  std::array<std::uint32_t, 2> words{};
  seq.generate(words.begin(), words.end());
  out = (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
  return out;
}

void range_warning(std::vector<std::string>& out, const char* name, double v, double lo, double hi,
                   const char* unit) {
  if (v < lo || v > hi) {
    std::ostringstream os;
    os << name << " = " << v << ' ' << unit << " is outside the typical range " << lo << '-' << hi << ' ' << unit;
    out.push_back(os.str());
  }
}

}  // namespace

std::vector<std::string> physiological_warnings(const SynthConfig& cfg) {
  std::vector<std::string> out;
  range_warning(out, "resp_freq", cfg.resp_freq, 0.1, 0.3, "Hz");
  range_warning(out, "resp_amp", cfg.resp_amp, 4.0, 12.0, "mm");
  range_warning(out, "heart_amp", cfg.heart_amp, 0.2, 0.5, "mm");
  return out;
}

void validate(const SynthConfig& cfg) {
  if (!(cfg.dt > 0.0)) throw invalid_input_error("dt must be positive");
  if (!(cfg.duration > 0.0)) throw invalid_input_error("duration must be positive");
  if (cfg.heart_mean_ibi < 400.0 || cfg.heart_mean_ibi > 1500.0) {
    throw invalid_input_error("heart_mean_ibi must lie in 400-1500 ms");
  }
  if (cfg.heart_ibi_sd < 0.0) throw invalid_input_error("heart_ibi_sd must be non-negative");
  if (!(cfg.pulse_width > 0.0)) throw invalid_input_error("pulse_width must be positive");
  if (!(cfg.wavelength > 0.0)) throw invalid_input_error("wavelength must be positive");
  if (cfg.resp_freq < 0.0 || cfg.resp_amp < 0.0 || cfg.heart_amp < 0.0) {
    throw invalid_input_error("amplitudes and frequencies must be non-negative");
  }
}

std::vector<double> gen_rpeaks(double mean_ibi_ms, double sd_ms, double duration, std::uint64_t seed) {
  if (mean_ibi_ms < 400.0 || mean_ibi_ms > 1500.0) throw invalid_input_error("mean IBI must lie in 400-1500 ms");
  if (sd_ms < 0.0) throw invalid_input_error("IBI standard deviation must be non-negative");
  std::mt19937_64 rng(stream_seed(seed, 1));
  std::normal_distribution<double> normal(0.0, 1.0);
  // Accumulate in milliseconds so integer-valued intervals stay exact.
  std::vector<double> peaks{0.0};
  double total_ms = 0.0;
  const double limit_ms = duration * 1000.0;
  for (;;) {
    double interval = mean_ibi_ms;
    if (sd_ms > 0.0) {
      interval = std::clamp(mean_ibi_ms + sd_ms * normal(rng), mean_ibi_ms - 3.0 * sd_ms, mean_ibi_ms + 3.0 * sd_ms);
      interval = std::max(interval, 350.0);
    }
    if (total_ms + interval > limit_ms) break;
    total_ms += interval;
    peaks.push_back(total_ms / 1000.0);
  }
  return peaks;
}

std::size_t sample_count(double duration, double dt) {
  return static_cast<std::size_t>(std::floor(duration / dt + 1e-9)) + 1;
}

RealSeries heartbeat_displacement(const std::vector<double>& rpeaks, double amp_mm, double pulse_width,
                                  double dt, double duration) {
  if (!(dt > 0.0) || !(pulse_width > 0.0)) throw invalid_input_error("dt and pulse width must be positive");
  RealSeries out{std::vector<double>(sample_count(duration, dt), 0.0), dt, 0.0};
  if (amp_mm == 0.0) return out;
  const double reach = 10.0 * pulse_width;
  const double inv = 1.0 / (2.0 * pulse_width * pulse_width);
  for (double tk : rpeaks) {
    const auto first = static_cast<std::ptrdiff_t>(std::ceil((tk - reach) / dt));
    const auto last = static_cast<std::ptrdiff_t>(std::floor((tk + reach) / dt));
    for (std::ptrdiff_t i = std::max<std::ptrdiff_t>(first, 0);
         i <= last && i < static_cast<std::ptrdiff_t>(out.size()); ++i) {
      const double d = static_cast<double>(i) * dt - tk;
      out.samples[static_cast<std::size_t>(i)] += amp_mm * std::exp(-d * d * inv);
    }
  }
  return out;
}

RealSeries respiration_displacement(double freq, double amp_mm, double dt, double duration, double skew) {
  if (!(dt > 0.0)) throw invalid_input_error("dt must be positive");
  RealSeries out{std::vector<double>(sample_count(duration, dt), 0.0), dt, 0.0};
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double t = static_cast<double>(i) * dt;
    out.samples[i] = amp_mm * (std::cos(two_pi * freq * t) + 0.3 * std::cos(2.0 * two_pi * freq * t + skew));
  }
  return out;
}

ComplexSeries modulate(const RealSeries& displacement_mm, double wavelength_mm, std::optional<double> snr_db,
                       std::uint64_t seed) {
  validate(displacement_mm);
  if (!(wavelength_mm > 0.0)) throw invalid_input_error("wavelength must be positive");
  ComplexSeries s{std::vector<complex_t>(displacement_mm.size()), displacement_mm.dt, displacement_mm.t0};
  const double k = 4.0 * std::numbers::pi / wavelength_mm;
  for (std::size_t i = 0; i < s.size(); ++i) s.samples[i] = std::polar(1.0, k * displacement_mm.samples[i]);
  if (snr_db) {
    std::mt19937_64 rng(stream_seed(seed, 2));
    const double sigma = std::sqrt(std::pow(10.0, -*snr_db / 10.0) / 2.0);
    std::normal_distribution<double> normal(0.0, sigma);
    for (auto& z : s.samples) {
      const double re = normal(rng);
      const double im = normal(rng);
      z += complex_t{re, im};
    }
  }
  return s;
}

SynthRecord synthesize(const SynthConfig& cfg) {
  validate(cfg);
  SynthRecord rec;
  rec.config = cfg;
  rec.warnings = physiological_warnings(cfg);
  rec.rpeaks_s = gen_rpeaks(cfg.heart_mean_ibi, cfg.heart_ibi_sd, cfg.duration, cfg.seed);
  rec.displacement_mm = heartbeat_displacement(rec.rpeaks_s, cfg.heart_amp, cfg.pulse_width, cfg.dt, cfg.duration);
  const RealSeries resp = respiration_displacement(cfg.resp_freq, cfg.resp_amp, cfg.dt, cfg.duration, cfg.resp_skew);
  for (std::size_t i = 0; i < resp.size(); ++i) rec.displacement_mm.samples[i] += resp.samples[i];
  rec.signal = modulate(rec.displacement_mm, cfg.wavelength, cfg.snr_db, cfg.seed);
  rec.true_ibi = reference_ibi_from_rpeaks(rec.rpeaks_s);
  return rec;
}

RadarCube make_cube(const SynthRecord& record, const CubeLayout& layout) {
  if (layout.n_range == 0 || layout.n_angle == 0) throw invalid_input_error("cube needs at least one cell");
  if (layout.target_range_bin >= layout.n_range || layout.target_angle_bin >= layout.n_angle) {
    throw invalid_input_error("target cell lies outside the cube");
  }
  std::vector<double> ranges(layout.n_range);
  for (std::size_t i = 0; i < ranges.size(); ++i) ranges[i] = layout.range_start + static_cast<double>(i) * layout.range_step;
  std::vector<double> angles(layout.n_angle);
  for (std::size_t i = 0; i < angles.size(); ++i) {
    angles[i] = layout.n_angle == 1 ? 0.0
                                    : -0.5 * layout.angle_span + layout.angle_span * static_cast<double>(i) /
                                                                     static_cast<double>(layout.n_angle - 1);
  }
  const std::size_t frames = record.signal.size();
  RadarCube cube(std::move(ranges), std::move(angles), frames, record.signal.dt);

  std::mt19937_64 rng(stream_seed(layout.seed, 3));
  const double noise_power =
      layout.noise_power.value_or(record.config.snr_db ? std::pow(10.0, -*record.config.snr_db / 10.0) : 0.0);
  if (noise_power > 0.0) {
    std::normal_distribution<double> normal(0.0, std::sqrt(noise_power / 2.0));
    for (auto& z : cube.data) {
      const double re = normal(rng);
      const double im = normal(rng);
      z = {re, im};
    }
  }

  const std::size_t cells = layout.n_range * layout.n_angle;
  const std::size_t target = layout.target_range_bin * layout.n_angle + layout.target_angle_bin;
  std::vector<std::size_t> others;
  for (std::size_t c = 0; c < cells; ++c) {
    if (c != target) others.push_back(c);
  }
  std::shuffle(others.begin(), others.end(), rng);
  std::uniform_real_distribution<double> phase(-std::numbers::pi, std::numbers::pi);
  for (std::size_t i = 0; i < std::min(layout.clutter_cells, others.size()); ++i) {
    const complex_t clutter = std::polar(layout.clutter_level, phase(rng));
    const std::size_t r = others[i] / layout.n_angle;
    const std::size_t a = others[i] % layout.n_angle;
    for (std::size_t f = 0; f < frames; ++f) cube.at(r, a, f) += clutter;
  }
  for (std::size_t f = 0; f < frames; ++f) {
    cube.at(layout.target_range_bin, layout.target_angle_bin, f) = record.signal.samples[f];
  }
  return cube;
}

}  // namespace radarbeat
