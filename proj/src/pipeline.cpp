#include "radarbeat/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include <json.hpp>

#include "radarbeat/enhance.hpp"
#include "radarbeat/errors.hpp"
#include "radarbeat/radar_image.hpp"
#include "radarbeat/signal_core.hpp"

namespace radarbeat {

std::string to_string(MethodId id) {
  switch (id) {
    case MethodId::conv1: return "conv1";
    case MethodId::conv2: return "conv2";
    case MethodId::conv3: return "conv3";
    case MethodId::prop1: return "prop1";
    case MethodId::prop2: return "prop2";
    case MethodId::prop3: return "prop3";
  }
  return "unknown";
}

MethodId parse_method(std::string_view name) {
  for (MethodId id : all_methods) {
    if (to_string(id) == name) return id;
  }
  throw invalid_input_error("unknown method '" + std::string(name) +
                            "', expected one of conv1, conv2, conv3, prop1, prop2, prop3");
}

bool uses_enhanced_signal(MethodId id) noexcept {
  return id == MethodId::prop1 || id == MethodId::prop2 || id == MethodId::prop3;
}

int vme_mode_count(MethodId id) noexcept {
  switch (id) {
    case MethodId::conv1:
    case MethodId::prop1: return 0;
    case MethodId::conv2:
    case MethodId::prop2: return 1;
    case MethodId::conv3:
    case MethodId::prop3: return 2;
  }
  return 0;
}

RunResult run_method(const ComplexSeries& signal, const RunConfig& cfg) {
  validate(signal, 8);
  const double covered = signal.dt * static_cast<double>(signal.size() - 1);
  if (covered < min_run_duration - 1e-9) {
    throw length_error("signal covers " + std::to_string(covered) + " s, at least " +
                       std::to_string(min_run_duration) + " s required");
  }

  RunResult result;
  auto& diag = result.diagnostics;
  diag.method = to_string(cfg.method);

  const std::size_t trim = boundary_samples(2);
  const RealSeries enhanced = interior(enhanced_heartbeat(signal), trim);
  diag.stages.push_back("enhance_absd2");
  const DesiredFrequency desired = select_desired_frequency(periodogram(enhanced, true));
  diag.f_desired = desired.hz;
  diag.f_desired_fallback = desired.fallback;

  RealSeries input;
  if (uses_enhanced_signal(cfg.method)) {
    input = enhanced;
    diag.trimmed_samples = trim;
    diag.alpha = cfg.alpha.value_or(alpha_enhanced_default);
  } else {
    input = unwrap_phase(wrapped_phase(signal));
    diag.stages.push_back("unwrap_phase");
    diag.alpha = cfg.alpha.value_or(alpha_phase_default);
  }
  input = remove_mean(std::move(input));
  diag.stages.push_back("remove_mean");

  const int modes = vme_mode_count(cfg.method);
  if (modes > 0) {
    VmeConfig vcfg;
    vcfg.alpha = diag.alpha;
    vcfg.max_iters = cfg.vme_max_iters;
    vcfg.tol = cfg.vme_tol;
    vcfg.f_init = desired.hz;
    validate(vcfg, input.dt);
    HarmonicResult enhanced_modes = harmonic_enhance(input, desired, vcfg, modes);
    diag.stages.push_back("vme_mode1");
    if (modes == 2) diag.stages.push_back("vme_mode2");
    diag.modes = std::move(enhanced_modes.modes);
    input = std::move(enhanced_modes.output);
  }

  const IbiSeries raw = topology_ibi(input, cfg.topology);
  diag.stages.push_back("topology_ibi");
  diag.raw_intervals = raw.entries.size();
  result.ibi = reject_outliers(raw, cfg.outliers);
  diag.stages.push_back("reject_outliers");
  result.pre_ibi = std::move(input);
  return result;
}

std::vector<RunResult> run_batch(const std::vector<ComplexSeries>& signals, const RunConfig& cfg,
                                 unsigned threads) {
  std::vector<RunResult> results(signals.size());
  std::vector<std::exception_ptr> errors(signals.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, signals.size())));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < signals.size(); i = next++) {
      try {
        results[i] = run_method(signals[i], cfg);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  pool.clear();

  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

std::string diagnostics_json(const RunDiagnostics& diag) {
  nlohmann::ordered_json j;
  j["method"] = diag.method;
  j["stages"] = diag.stages;
  j["alpha"] = diag.alpha;
  j["f_desired_hz"] = diag.f_desired;
  j["f_desired_fallback"] = diag.f_desired_fallback;
  j["trimmed_samples"] = diag.trimmed_samples;
  j["raw_intervals"] = diag.raw_intervals;
  auto modes = nlohmann::ordered_json::array();
  for (const auto& m : diag.modes) {
    nlohmann::ordered_json mj;
    mj["f_final_hz"] = m.f_final;
    mj["iterations"] = m.iterations;
    mj["converged"] = m.converged;
    mj["objective_trace"] = m.objective_trace;
    modes.push_back(std::move(mj));
  }
  j["modes"] = std::move(modes);
  return j.dump(2) + "\n";
}

}  // namespace radarbeat
