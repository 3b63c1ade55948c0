#pragma once

#include <vector>

#include "radarbeat/series.hpp"

namespace radarbeat {

enum class FeatureKind { local_max, local_min };

struct FeaturePoint {
  double time = 0.0;  // s, sub-sample refined by a parabolic fit
  FeatureKind kind = FeatureKind::local_max;
  double amplitude = 0.0;
  double prominence = 0.0;
};

inline constexpr double default_min_prominence = 0.05;

/// Strict local extrema whose prominence is at least `min_prominence` times
/// the largest prominence found. Ordered by time.
std::vector<FeaturePoint> extract_features(const RealSeries& y,
                                           double min_prominence = default_min_prominence);

/// Parameters of the topological matching IBI estimator. Times in seconds.
struct TopologyParams {
  double lag_min = 0.4;
  double lag_max = 1.4;
  double window = 0.3;       // comparison window after anchor and candidate
  double tolerance = 0.05;   // allowed mismatch of relative feature times
  double threshold = 0.5;    // minimum similarity score to emit an interval
  double min_prominence = default_min_prominence;
};

/// Topological matching of feature sequences across candidate lags.
///
/// For each anchor feature every later feature of the same kind whose lag lies
/// in [lag_min, lag_max] is scored by how well the features in the window
/// following the anchor reappear, with the same relative timing (within
/// `tolerance`) and similar amplitude, in the window following the candidate.
/// The best-scoring lag emits (candidate time, lag in ms) when its score
/// reaches `threshold` and the time is later than the last emitted entry.
IbiSeries topology_ibi(const RealSeries& y, const TopologyParams& params = {});

struct OutlierParams {
  std::size_t neighbors = 5;     // entries in each running-median window, self included
  double max_deviation = 0.25;   // relative to that median
};

/// Removes entries deviating from the median of their nearest-in-time neighbours.
IbiSeries reject_outliers(const IbiSeries& series, const OutlierParams& params = {});

}  // namespace radarbeat
