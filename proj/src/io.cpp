#include "radarbeat/io.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "radarbeat/errors.hpp"

namespace radarbeat::io {

namespace {

using json = nlohmann::json;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(trim(cell));
  return out;
}

double parse_number(const std::string& s, std::size_t line_no) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size() || !std::isfinite(v)) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw io_error("line " + std::to_string(line_no) + ": '" + s + "' is not a finite number");
  }
}

// Reads rows under the expected header; each row must have `header.size()` numbers.
std::vector<std::vector<double>> read_table(std::istream& is, const std::vector<std::string>& header) {
  std::string line;
  if (!std::getline(is, line)) throw io_error("empty CSV input");
  if (split(line) != header) {
    std::string expected;
    for (std::size_t i = 0; i < header.size(); ++i) expected += (i ? "," : "") + header[i];
    throw io_error("unexpected CSV header '" + trim(line) + "', expected '" + expected + "'");
  }
  std::vector<std::vector<double>> rows;
  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto cells = split(line);
    if (cells.size() != header.size()) {
      throw io_error("line " + std::to_string(line_no) + ": expected " + std::to_string(header.size()) + " columns");
    }
    std::vector<double> row;
    for (const auto& c : cells) row.push_back(parse_number(c, line_no));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <typename T>
void put_le(std::ostream& os, T value) {
  using U = std::conditional_t<sizeof(T) == 8, std::uint64_t, std::uint32_t>;
  const U bits = std::bit_cast<U>(value);
  std::array<char, sizeof(T)> bytes{};
  for (std::size_t i = 0; i < sizeof(T); ++i) bytes[i] = static_cast<char>((bits >> (8 * i)) & 0xFFu);
  os.write(bytes.data(), bytes.size());
}

template <typename T>
T get_le(std::istream& is) {
  using U = std::conditional_t<sizeof(T) == 8, std::uint64_t, std::uint32_t>;
  std::array<unsigned char, sizeof(T)> bytes{};
  if (!is.read(reinterpret_cast<char*>(bytes.data()), bytes.size())) throw io_error("truncated RVC1 stream");
  U bits = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) bits |= static_cast<U>(bytes[i]) << (8 * i);
  return std::bit_cast<T>(bits);
}

template <typename T>
void assign_if(const json& j, const char* key, T& target) {
  if (j.contains(key)) target = j.at(key).get<T>();
}

}  // namespace

std::string fixed6(double v) {
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%.6f", v);
  std::string s(buf.data());
  if (s == "-0.000000") s = "0.000000";
  return s;
}

void write_signal_csv(std::ostream& os, const ComplexSeries& s) {
  os << "time_s,re,im\n";
  for (std::size_t i = 0; i < s.size(); ++i) {
    os << fixed6(s.time_at(i)) << ',' << fixed6(s.samples[i].real()) << ',' << fixed6(s.samples[i].imag()) << '\n';
  }
}

ComplexSeries read_signal_csv(std::istream& is) {
  const auto rows = read_table(is, {"time_s", "re", "im"});
  if (rows.size() < 2) throw io_error("signal CSV needs at least two samples");
  ComplexSeries s;
  s.t0 = rows.front()[0];
  s.dt = (rows.back()[0] - rows.front()[0]) / static_cast<double>(rows.size() - 1);
  if (!(s.dt > 0.0)) throw io_error("signal CSV times must increase");
  s.samples.reserve(rows.size());
  for (const auto& r : rows) s.samples.emplace_back(r[1], r[2]);
  return s;
}

void write_rpeaks_csv(std::ostream& os, const std::vector<double>& rpeaks) {
  os << "rpeak_s\n";
  for (double t : rpeaks) os << fixed6(t) << '\n';
}

std::vector<double> read_rpeaks_csv(std::istream& is) {
  std::vector<double> out;
  for (const auto& r : read_table(is, {"rpeak_s"})) out.push_back(r[0]);
  return out;
}

void write_ibi_csv(std::ostream& os, const IbiSeries& ibi) {
  os << "time_s,ibi_ms\n";
  for (const auto& e : ibi.entries) os << fixed6(e.time_s) << ',' << fixed6(e.interval_ms) << '\n';
}

IbiSeries read_ibi_csv(std::istream& is) {
  IbiSeries out;
  for (const auto& r : read_table(is, {"time_s", "ibi_ms"})) out.entries.push_back({r[0], r[1]});
  validate(out);
  return out;
}

void write_spectrum_csv(std::ostream& os, const PowerSpectrum& ps) {
  os << "freq_hz,power\n";
  for (std::size_t k = 0; k < ps.size(); ++k) os << fixed6(ps.freqs[k]) << ',' << fixed6(ps.power[k]) << '\n';
}

void write_cube(std::ostream& os, const RadarCube& cube) {
  validate(cube);
  os.write("RVC1", 4);
  put_le<std::uint32_t>(os, static_cast<std::uint32_t>(cube.n_range()));
  put_le<std::uint32_t>(os, static_cast<std::uint32_t>(cube.n_angle()));
  put_le<std::uint32_t>(os, static_cast<std::uint32_t>(cube.n_frames));
  put_le<double>(os, cube.dt);
  for (double r : cube.range_axis) put_le<double>(os, r);
  for (double a : cube.angle_axis) put_le<double>(os, a);
  for (const auto& z : cube.data) {
    put_le<float>(os, static_cast<float>(z.real()));
    put_le<float>(os, static_cast<float>(z.imag()));
  }
  if (!os) throw io_error("failed to write RVC1 stream");
}

RadarCube read_cube(std::istream& is) {
  std::array<char, 4> magic{};
  if (!is.read(magic.data(), magic.size()) || std::string(magic.data(), 4) != "RVC1") {
    throw io_error("not an RVC1 cube");
  }
  const auto n_range = get_le<std::uint32_t>(is);
  const auto n_angle = get_le<std::uint32_t>(is);
  const auto n_frames = get_le<std::uint32_t>(is);
  const double dt = get_le<double>(is);
  std::vector<double> ranges(n_range);
  for (auto& r : ranges) r = get_le<double>(is);
  std::vector<double> angles(n_angle);
  for (auto& a : angles) a = get_le<double>(is);
  RadarCube cube(std::move(ranges), std::move(angles), n_frames, dt);
  for (auto& z : cube.data) {
    const float re = get_le<float>(is);
    const float im = get_le<float>(is);
    z = {re, im};
  }
  validate(cube);
  return cube;
}

SynthConfig parse_synth_config(const std::string& json_text) {
  SynthConfig cfg;
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw io_error(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw io_error("config must be a flat JSON object");
  try {
    assign_if(j, "duration", cfg.duration);
    assign_if(j, "dt", cfg.dt);
    assign_if(j, "resp_freq", cfg.resp_freq);
    assign_if(j, "resp_amp", cfg.resp_amp);
    assign_if(j, "resp_skew", cfg.resp_skew);
    assign_if(j, "heart_mean_ibi", cfg.heart_mean_ibi);
    assign_if(j, "heart_ibi_sd", cfg.heart_ibi_sd);
    assign_if(j, "heart_amp", cfg.heart_amp);
    assign_if(j, "pulse_width", cfg.pulse_width);
    assign_if(j, "wavelength", cfg.wavelength);
    assign_if(j, "seed", cfg.seed);
    if (j.contains("snr_db")) {
      const auto& v = j.at("snr_db");
      cfg.snr_db = v.is_null() ? std::nullopt : std::optional<double>(v.get<double>());
    }
  } catch (const json::exception& e) {
    throw io_error(std::string("config has a value of the wrong type: ") + e.what());
  }
  return cfg;
}

std::string synth_config_json(const SynthConfig& cfg, const std::vector<std::string>& warnings) {
  json j;
  j["duration"] = cfg.duration;
  j["dt"] = cfg.dt;
  j["resp_freq"] = cfg.resp_freq;
  j["resp_amp"] = cfg.resp_amp;
  j["resp_skew"] = cfg.resp_skew;
  j["heart_mean_ibi"] = cfg.heart_mean_ibi;
  j["heart_ibi_sd"] = cfg.heart_ibi_sd;
  j["heart_amp"] = cfg.heart_amp;
  j["pulse_width"] = cfg.pulse_width;
  j["wavelength"] = cfg.wavelength;
  j["seed"] = cfg.seed;
  j["snr_db"] = cfg.snr_db ? json(*cfg.snr_db) : json(nullptr);
  if (!warnings.empty()) j["warnings"] = warnings;
  return j.dump(2) + "\n";
}

std::string metric_report_json(const MetricReport& report) {
  json j;
  j["cc"] = report.cc;
  j["cc_pearson"] = report.cc_pearson;
  j["rmse_ms"] = report.rmse_ms;
  j["tcr_percent"] = report.tcr_percent;
  j["n_segments"] = report.n_segments;
  j["n_covered"] = report.n_covered;
  return j.dump(2) + "\n";
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw io_error("cannot open " + tmp.string() + " for writing");
    os << contents;
    if (!os) throw io_error("failed writing " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw io_error("cannot rename " + tmp.string() + ": " + ec.message());
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw io_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

}  // namespace radarbeat::io
