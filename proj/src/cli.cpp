#include "radarbeat/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "radarbeat/enhance.hpp"
#include "radarbeat/errors.hpp"
#include "radarbeat/eval.hpp"
#include "radarbeat/io.hpp"
#include "radarbeat/pipeline.hpp"
#include "radarbeat/radar_image.hpp"
#include "radarbeat/signal_core.hpp"
#include "radarbeat/synth.hpp"

namespace radarbeat::cli {

namespace fs = std::filesystem;

namespace {

constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

void print_error(std::ostream& err, const std::string& kind, const std::string& message) {
  nlohmann::ordered_json j;
  j["error"]["kind"] = kind;
  j["error"]["message"] = message;
  err << j.dump() << '\n';
}

std::string record_name(std::size_t i) {
  std::ostringstream ss;
  ss << "record_" << std::setw(3) << std::setfill('0') << i;
  return ss.str();
}

template <typename Writer>
std::string render(Writer&& write) {
  std::ostringstream ss;
  write(ss);
  return ss.str();
}

ComplexSeries load_signal(const fs::path& path) {
  std::istringstream is(io::read_file(path));
  return io::read_signal_csv(is);
}

ComplexSeries signal_from_cube(const fs::path& path) {
  std::istringstream is(io::read_file(path), std::ios::binary);
  const RadarCube cube = io::read_cube(is);
  const TargetPosition target = select_target(average_power_image(remove_clutter(cube)));
  return extract_signal(cube, target.range_m, target.angle_rad);
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw io_error("cannot create directory " + dir.string() + ": " + ec.message());
}

// synth

struct SynthArgs {
  std::string config;
  std::string out;
  std::size_t records = 1;
  bool cube = false;
};

void write_record(const SynthRecord& rec, const fs::path& dir, bool with_cube) {
  ensure_dir(dir);
  io::write_file_atomic(dir / "signal.csv", render([&](std::ostream& os) { io::write_signal_csv(os, rec.signal); }));
  io::write_file_atomic(dir / "rpeaks.csv", render([&](std::ostream& os) { io::write_rpeaks_csv(os, rec.rpeaks_s); }));
  io::write_file_atomic(dir / "config.json", io::synth_config_json(rec.config, rec.warnings));
  if (with_cube) {
    const RadarCube cube = make_cube(rec, CubeLayout{});
    io::write_file_atomic(dir / "cube.rvc", render([&](std::ostream& os) { io::write_cube(os, cube); }));
  }
}

int cmd_synth(const SynthArgs& a, std::ostream& out, std::ostream& err) {
  const SynthConfig base = io::parse_synth_config(io::read_file(a.config));
  if (a.records == 0) throw invalid_input_error("--records must be at least 1");
  const fs::path root(a.out);
  for (std::size_t i = 0; i < a.records; ++i) {
    SynthConfig cfg = base;
    cfg.seed = base.seed + i;
    const SynthRecord rec = synthesize(cfg);
    for (const auto& w : rec.warnings) err << "warning: " << w << '\n';
    write_record(rec, a.records == 1 ? root : root / record_name(i), a.cube);
  }
  out << "wrote " << a.records << " record(s) to " << root.string() << '\n';
  return 0;
}

// run

struct RunArgs {
  std::string method;
  std::string signal;
  std::string cube;
  std::string dataset;
  std::string out;
  std::optional<double> alpha;
};

void write_run(const RunResult& r, const fs::path& dir) {
  ensure_dir(dir);
  io::write_file_atomic(dir / "ibi.csv", render([&](std::ostream& os) { io::write_ibi_csv(os, r.ibi); }));
  io::write_file_atomic(dir / "diagnostics.json", diagnostics_json(r.diagnostics));
}

int cmd_run(const RunArgs& a, std::ostream& out) {
  RunConfig cfg;
  cfg.method = parse_method(a.method);
  cfg.alpha = a.alpha;
  const fs::path root(a.out);

  const int sources = int(!a.signal.empty()) + int(!a.cube.empty()) + int(!a.dataset.empty());
  if (sources != 1) throw invalid_input_error("give exactly one of --signal, --cube or --dataset");

  if (!a.dataset.empty()) {
    std::vector<fs::path> dirs;
    for (const auto& entry : fs::directory_iterator(a.dataset)) {
      if (entry.is_directory() && fs::exists(entry.path() / "signal.csv")) dirs.push_back(entry.path());
    }
    std::sort(dirs.begin(), dirs.end());
    if (dirs.empty()) throw io_error("no record directories with signal.csv under " + a.dataset);
    std::vector<ComplexSeries> signals;
    for (const auto& d : dirs) signals.push_back(load_signal(d / "signal.csv"));
    const auto results = run_batch(signals, cfg);
    for (std::size_t i = 0; i < dirs.size(); ++i) write_run(results[i], root / dirs[i].filename());
    out << "ran " << to_string(cfg.method) << " on " << dirs.size() << " record(s)\n";
    return 0;
  }

  const ComplexSeries signal = a.cube.empty() ? load_signal(a.signal) : signal_from_cube(a.cube);
  const RunResult r = run_method(signal, cfg);
  write_run(r, root);
  out << "ran " << to_string(cfg.method) << ": " << r.ibi.entries.size() << " intervals\n";
  return 0;
}

// eval

struct EvalArgs {
  std::string est;
  std::string ref;
  std::string out;
  double t0 = 0.5;
  double tth = 50.0;
  double duration = 0.0;
};

int cmd_eval(const EvalArgs& a, std::ostream& out) {
  std::istringstream est_in(io::read_file(a.est));
  const IbiSeries est = io::read_ibi_csv(est_in);
  std::istringstream ref_in(io::read_file(a.ref));
  const IbiSeries ref = reference_ibi_from_rpeaks(io::read_rpeaks_csv(ref_in));
  EvalParams p;
  p.segment = a.t0;
  p.threshold_ms = a.tth;
  p.duration = a.duration;
  const std::string report = io::metric_report_json(evaluate(est, ref, p));
  if (!a.out.empty()) io::write_file_atomic(a.out, report);
  out << report;
  return 0;
}

// spectrum

struct SpectrumArgs {
  std::string signal;
  std::string transform;
  std::string out;
  int k = 2;
};

int cmd_spectrum(const SpectrumArgs& a, std::ostream& out) {
  const ComplexSeries s = load_signal(a.signal);
  PowerSpectrum ps;
  if (a.transform == "phase") {
    ps = periodogram(unwrap_phase(wrapped_phase(s)), true);
  } else if (a.transform == "raw") {
    ps = periodogram(s, true);
  } else if (a.transform == "d2") {
    ps = periodogram(interior(kth_derivative(s, 2), boundary_samples(2)), true);
  } else if (a.transform == "absd2") {
    ps = periodogram(interior(enhanced_heartbeat(s), boundary_samples(2)), true);
  } else if (a.transform == "absdk") {
    if (a.k < 1 || a.k > 3) throw invalid_input_error("--k must be 1, 2 or 3");
    ps = periodogram(interior(abs_kth_derivative(s, a.k), boundary_samples(a.k)), true);
  } else {
    throw invalid_input_error("unknown transform '" + a.transform + "'");
  }
  io::write_file_atomic(a.out, render([&](std::ostream& os) { io::write_spectrum_csv(os, ps); }));
  out << "wrote " << ps.size() << " bins to " << a.out << '\n';
  return 0;
}

}  // namespace

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Radar heartbeat interval estimation"};
  app.require_subcommand(1);

  SynthArgs synth_args;
  auto* synth = app.add_subcommand("synth", "Generate synthetic radar records");
  synth->add_option("--config", synth_args.config, "Flat JSON synthesis config")->required();
  synth->add_option("--out", synth_args.out, "Output directory")->required();
  synth->add_option("--records", synth_args.records, "Number of records (seeds seed..seed+n-1)");
  synth->add_flag("--cube", synth_args.cube, "Also write a radar cube per record");

  RunArgs run_args;
  auto* run = app.add_subcommand("run", "Estimate interbeat intervals");
  run->add_option("--method", run_args.method, "conv1|conv2|conv3|prop1|prop2|prop3")->required();
  run->add_option("--signal", run_args.signal, "Signal CSV");
  run->add_option("--cube", run_args.cube, "RVC1 radar cube");
  run->add_option("--dataset", run_args.dataset, "Directory of synthesized records");
  run->add_option("--out", run_args.out, "Output directory")->required();
  run->add_option("--alpha", run_args.alpha, "VME balance parameter");

  EvalArgs eval_args;
  auto* ev = app.add_subcommand("eval", "Score estimated intervals against R-peaks");
  ev->add_option("--est", eval_args.est, "Estimated IBI CSV")->required();
  ev->add_option("--ref", eval_args.ref, "Reference R-peak CSV")->required();
  ev->add_option("--t0", eval_args.t0, "Coverage segment length in s");
  ev->add_option("--tth", eval_args.tth, "Coverage error threshold in ms");
  ev->add_option("--duration", eval_args.duration, "Evaluated duration in s");
  ev->add_option("--out", eval_args.out, "Also write the report here");

  SpectrumArgs spec_args;
  auto* sp = app.add_subcommand("spectrum", "Export a power spectral density");
  sp->add_option("--signal", spec_args.signal, "Signal CSV")->required();
  sp->add_option("--transform", spec_args.transform, "phase|raw|d2|absd2|absdk")->required();
  sp->add_option("--k", spec_args.k, "Derivative order for absdk");
  sp->add_option("--out", spec_args.out, "PSD CSV")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    print_error(err, "usage", e.what());
    return exit_usage;
  }

  try {
    if (*synth) return cmd_synth(synth_args, out, err);
    if (*run) return cmd_run(run_args, out);
    if (*ev) return cmd_eval(eval_args, out);
    if (*sp) return cmd_spectrum(spec_args, out);
  } catch (const radarbeat::error& e) {
    print_error(err, e.kind(), e.what());
    return exit_failure;
  } catch (const std::exception& e) {
    print_error(err, "internal", e.what());
    return exit_failure;
  }
  return exit_usage;
}

}  // namespace radarbeat::cli
