#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "radarbeat/eval.hpp"
#include "radarbeat/ibi.hpp"
#include "radarbeat/series.hpp"
#include "radarbeat/vme.hpp"

namespace radarbeat {

/// The six estimation methods. conv* work on the unwrapped phase, prop* on
/// |s''(t)|; *1 skips VME, *2 keeps VME mode 1, *3 adds mode 2 at 1.5·f_d.
enum class MethodId { conv1, conv2, conv3, prop1, prop2, prop3 };

inline constexpr MethodId all_methods[] = {MethodId::conv1, MethodId::conv2, MethodId::conv3,
                                           MethodId::prop1, MethodId::prop2, MethodId::prop3};

std::string to_string(MethodId id);
/// Throws invalid_input_error for unknown names.
MethodId parse_method(std::string_view name);

bool uses_enhanced_signal(MethodId id) noexcept;  // prop*
int vme_mode_count(MethodId id) noexcept;         // 0, 1 or 2

inline constexpr double min_run_duration = 10.0;  // s

struct RunConfig {
  MethodId method = MethodId::prop3;
  std::optional<double> alpha;  // defaults per input kind
  int vme_max_iters = 500;
  double vme_tol = 1e-7;
  TopologyParams topology{};
  OutlierParams outliers{};
};

struct RunDiagnostics {
  std::string method;
  std::vector<std::string> stages;  // names of the stages executed, in order
  double alpha = 0.0;
  double f_desired = 0.0;
  bool f_desired_fallback = false;
  std::size_t trimmed_samples = 0;  // per side
  std::vector<VmeResult> modes;     // objective traces included
  std::size_t raw_intervals = 0;    // before outlier rejection
};

struct RunResult {
  IbiSeries ibi;
  RealSeries pre_ibi;  // signal handed to the IBI estimator
  RunDiagnostics diagnostics;
};

/// Runs one method end to end. The desired frequency is always chosen from
/// the spectrum of the trimmed |s''(t)| so that all methods share it.
RunResult run_method(const ComplexSeries& signal, const RunConfig& cfg);

/// Runs each signal through the same configuration on a pool of threads.
/// Results keep the input order; the first failure is rethrown.
std::vector<RunResult> run_batch(const std::vector<ComplexSeries>& signals, const RunConfig& cfg,
                                 unsigned threads = 0);

std::string diagnostics_json(const RunDiagnostics& diag);

}  // namespace radarbeat
