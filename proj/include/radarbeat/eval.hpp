#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "radarbeat/series.hpp"

namespace radarbeat {

struct MetricReport {
  double cc = 0.0;          // uncentered correlation of h and h0
  double cc_pearson = 0.0;  // mean-removed (Pearson) correlation, diagnostic
  double rmse_ms = 0.0;
  double tcr_percent = 0.0;
  std::size_t n_segments = 0;
  std::size_t n_covered = 0;
};

struct EvalParams {
  double grid_rate = 10.0;  // Hz, resampling grid for CC/RMSE
  double segment = 0.5;     // T0, s
  double threshold_ms = 50.0;  // Tth
  double duration = 0.0;    // T, s; 0 takes the last reference time
};

/// Entry k: (rpeak[k], 1000·(rpeak[k] - rpeak[k-1])) for k >= 1.
IbiSeries reference_ibi_from_rpeaks(std::span<const double> rpeak_times);

/// Piecewise-linear value of the series at time t, held constant beyond its ends.
double interpolate(const IbiSeries& series, double t);

/// Piecewise-linear resampling onto t_a, t_a + 1/rate, ... <= t_b.
RealSeries resample_ibi(const IbiSeries& series, double grid_rate, double t_a, double t_b);

/// ∫h0·h / (√∫h0² · √∫h²), no mean removal.
double correlation_coefficient(const RealSeries& h, const RealSeries& h0);

/// Pearson correlation of the two sampled series.
double pearson_correlation(const RealSeries& h, const RealSeries& h0);

double rmse(const RealSeries& h, const RealSeries& h0);

struct CoverageResult {
  double percent = 0.0;
  std::size_t n_segments = 0;
  std::size_t n_covered = 0;
};

/// Time coverage rate: share of segments [nT0, (n+1)T0) holding at least one
/// estimate within `threshold_ms` of the interpolated reference. The last
/// segment is closed at N·T0.
CoverageResult tcr(const IbiSeries& estimated, const IbiSeries& reference, double duration,
                   double segment, double threshold_ms);

/// Full report over the intersection of the estimated and reference supports.
MetricReport evaluate(const IbiSeries& estimated, const IbiSeries& reference, const EvalParams& params = {});

}  // namespace radarbeat
