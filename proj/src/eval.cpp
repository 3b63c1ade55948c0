#include "radarbeat/eval.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "radarbeat/errors.hpp"

namespace radarbeat {

namespace {

void check_same_grid(const RealSeries& h, const RealSeries& h0) {
  if (h.size() != h0.size() || h.samples.empty()) {
    throw grid_mismatch_error("IBI series must be sampled on the same non-empty grid");
  }
}

}  // namespace

IbiSeries reference_ibi_from_rpeaks(std::span<const double> rpeak_times) {
  if (rpeak_times.size() < 2) throw length_error("need at least two R-peaks");
  IbiSeries out;
  for (std::size_t k = 1; k < rpeak_times.size(); ++k) {
    if (!(rpeak_times[k] > rpeak_times[k - 1])) {
      throw invalid_input_error("R-peak times must be strictly increasing");
    }
    out.entries.push_back({rpeak_times[k], 1000.0 * (rpeak_times[k] - rpeak_times[k - 1])});
  }
  return out;
}

double interpolate(const IbiSeries& series, double t) {
  const auto& e = series.entries;
  if (e.empty()) throw length_error("cannot interpolate an empty IBI series");
  if (t <= e.front().time_s) return e.front().interval_ms;
  if (t >= e.back().time_s) return e.back().interval_ms;
  const auto it = std::upper_bound(e.begin(), e.end(), t,
                                   [](double v, const IbiEntry& x) { return v < x.time_s; });
  const auto& hi = *it;
  const auto& lo = *(it - 1);
  const double w = (t - lo.time_s) / (hi.time_s - lo.time_s);
  return lo.interval_ms + w * (hi.interval_ms - lo.interval_ms);
}

RealSeries resample_ibi(const IbiSeries& series, double grid_rate, double t_a, double t_b) {
  if (series.empty()) throw length_error("cannot resample an empty IBI series");
  validate(series);
  if (!(grid_rate > 0.0)) throw invalid_input_error("grid rate must be positive");
  const double eps = 1e-9;
  if (t_a < series.entries.front().time_s - eps || t_b > series.entries.back().time_s + eps || t_b < t_a) {
    throw invalid_input_error("resampling span lies outside the IBI series support");
  }
  const double step = 1.0 / grid_rate;
  const auto count = static_cast<std::size_t>(std::floor((t_b - t_a) / step + 1e-9)) + 1;
  RealSeries out{std::vector<double>(count), step, t_a};
  for (std::size_t i = 0; i < count; ++i) out.samples[i] = interpolate(series, out.time_at(i));
  return out;
}

double correlation_coefficient(const RealSeries& h, const RealSeries& h0) {
  check_same_grid(h, h0);
  double cross = 0.0;
  double e = 0.0;
  double e0 = 0.0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    cross += h0.samples[i] * h.samples[i];
    e += h.samples[i] * h.samples[i];
    e0 += h0.samples[i] * h0.samples[i];
  }
  if (!(e > 0.0) || !(e0 > 0.0)) throw undefined_metric_error("correlation of an all-zero series");
  return cross / (std::sqrt(e0) * std::sqrt(e));
}

double pearson_correlation(const RealSeries& h, const RealSeries& h0) {
  check_same_grid(h, h0);
  const double n = static_cast<double>(h.size());
  double m = 0.0;
  double m0 = 0.0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    m += h.samples[i];
    m0 += h0.samples[i];
  }
  m /= n;
  m0 /= n;
  double cross = 0.0;
  double v = 0.0;
  double v0 = 0.0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const double a = h.samples[i] - m;
    const double b = h0.samples[i] - m0;
    cross += a * b;
    v += a * a;
    v0 += b * b;
  }
  if (!(v > 0.0) || !(v0 > 0.0)) throw undefined_metric_error("Pearson correlation of a constant series");
  return cross / std::sqrt(v * v0);
}

double rmse(const RealSeries& h, const RealSeries& h0) {
  check_same_grid(h, h0);
  double acc = 0.0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const double d = h.samples[i] - h0.samples[i];
    acc += d * d;
  }
  return std::sqrt(acc / static_cast<double>(h.size()));
}

CoverageResult tcr(const IbiSeries& estimated, const IbiSeries& reference, double duration,
                   double segment, double threshold_ms) {
  if (!(segment > 0.0)) throw invalid_input_error("segment length must be positive");
  const auto n_segments = static_cast<std::size_t>(std::floor(duration / segment + 1e-9));
  if (n_segments < 1) throw invalid_input_error("duration shorter than one segment");
  CoverageResult out;
  out.n_segments = n_segments;
  if (estimated.empty()) return out;

  const double end = static_cast<double>(n_segments) * segment;
  std::vector<bool> covered(n_segments, false);
  for (const auto& e : estimated.entries) {
    if (e.time_s < 0.0 || e.time_s > end) continue;
    auto n = static_cast<std::size_t>(std::floor(e.time_s / segment));
    if (n >= n_segments) n = n_segments - 1;
    if (std::abs(e.interval_ms - interpolate(reference, e.time_s)) <= threshold_ms) covered[n] = true;
  }
  out.n_covered = static_cast<std::size_t>(std::count(covered.begin(), covered.end(), true));
  out.percent = 100.0 * static_cast<double>(out.n_covered) / static_cast<double>(n_segments);
  return out;
}

MetricReport evaluate(const IbiSeries& estimated, const IbiSeries& reference, const EvalParams& params) {
  validate(estimated);
  validate(reference);
  if (reference.size() < 2) throw length_error("reference IBI series needs at least two entries");
  MetricReport report;
  const double duration = params.duration > 0.0 ? params.duration : reference.entries.back().time_s;
  const auto coverage = tcr(estimated, reference, duration, params.segment, params.threshold_ms);
  report.tcr_percent = coverage.percent;
  report.n_segments = coverage.n_segments;
  report.n_covered = coverage.n_covered;

  if (estimated.size() < 2) throw undefined_metric_error("need at least two estimated IBIs for CC and RMSE");
  const double t_a = std::max(estimated.entries.front().time_s, reference.entries.front().time_s);
  const double t_b = std::min(estimated.entries.back().time_s, reference.entries.back().time_s);
  if (!(t_b > t_a)) throw undefined_metric_error("estimated and reference IBIs do not overlap in time");
  const RealSeries h = resample_ibi(estimated, params.grid_rate, t_a, t_b);
  const RealSeries h0 = resample_ibi(reference, params.grid_rate, t_a, t_b);
  report.cc = correlation_coefficient(h, h0);
  report.rmse_ms = rmse(h, h0);
  // A constant series has no Pearson correlation; report 0 rather than failing the whole report.
  try {
    report.cc_pearson = pearson_correlation(h, h0);
  } catch (const undefined_metric_error&) {
    report.cc_pearson = 0.0;
  }
  return report;
}

}  // namespace radarbeat
