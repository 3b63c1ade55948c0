#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "radarbeat/eval.hpp"
#include "radarbeat/radar_image.hpp"
#include "radarbeat/series.hpp"
#include "radarbeat/synth.hpp"

namespace radarbeat::io {

// Text formats use a single header line and 6-decimal fixed notation.

/// Formats a value in 6-decimal fixed notation ("-0.000000" becomes "0.000000").
std::string fixed6(double v);

void write_signal_csv(std::ostream& os, const ComplexSeries& s);     // time_s,re,im
ComplexSeries read_signal_csv(std::istream& is);

void write_rpeaks_csv(std::ostream& os, const std::vector<double>& rpeaks);  // rpeak_s
std::vector<double> read_rpeaks_csv(std::istream& is);

void write_ibi_csv(std::ostream& os, const IbiSeries& ibi);          // time_s,ibi_ms
IbiSeries read_ibi_csv(std::istream& is);

void write_spectrum_csv(std::ostream& os, const PowerSpectrum& ps);  // freq_hz,power

/// RVC1 little-endian radar cube: "RVC1", u32 n_range, u32 n_angle,
/// u32 n_frames, f64 dt, f64 range axis, f64 angle axis, then frame-major
/// interleaved (re, im) f32 samples with angle fastest.
void write_cube(std::ostream& os, const RadarCube& cube);
RadarCube read_cube(std::istream& is);

/// Flat JSON object of SynthConfig fields; absent keys keep their defaults.
/// "snr_db": null selects a noise-free record.
SynthConfig parse_synth_config(const std::string& json_text);
std::string synth_config_json(const SynthConfig& cfg, const std::vector<std::string>& warnings = {});

std::string metric_report_json(const MetricReport& report);

/// Writes via a temporary file in the same directory followed by a rename.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);
std::string read_file(const std::filesystem::path& path);

}  // namespace radarbeat::io
