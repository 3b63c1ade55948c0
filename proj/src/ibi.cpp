#include "radarbeat/ibi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "radarbeat/errors.hpp"

namespace radarbeat {

namespace {

// Feature positions are kept in samples so that all matching decisions are
// independent of the series start time.
struct RawFeature {
  double position = 0.0;
  FeatureKind kind = FeatureKind::local_max;
  double amplitude = 0.0;
  double prominence = 0.0;
};

// Topographic prominence of a strict maximum of `sign`·y at index i.
double prominence_at(const std::vector<double>& y, std::size_t i, double sign) {
  const double peak = sign * y[i];
  double left_min = peak;
  for (std::size_t j = i; j > 0; --j) {
    const double v = sign * y[j - 1];
    if (v > peak) break;
    left_min = std::min(left_min, v);
  }
  double right_min = peak;
  for (std::size_t j = i + 1; j < y.size(); ++j) {
    const double v = sign * y[j];
    if (v > peak) break;
    right_min = std::min(right_min, v);
  }
  return peak - std::max(left_min, right_min);
}

std::vector<RawFeature> raw_features(const RealSeries& y, double min_prominence) {
  validate(y);
  std::vector<RawFeature> out;
  const auto& x = y.samples;
  if (x.size() < 3) return out;
  for (std::size_t i = 1; i + 1 < x.size(); ++i) {
    const double a = x[i - 1];
    const double b = x[i];
    const double c = x[i + 1];
    FeatureKind kind;
    if (b > a && b > c) {
      kind = FeatureKind::local_max;
    } else if (b < a && b < c) {
      kind = FeatureKind::local_min;
    } else {
      continue;
    }
    const double curvature = a - 2.0 * b + c;
    const double offset = curvature != 0.0 ? 0.5 * (a - c) / curvature : 0.0;
    const double sign = kind == FeatureKind::local_max ? 1.0 : -1.0;
    out.push_back({static_cast<double>(i) + offset, kind, b - 0.25 * (a - c) * offset,
                   prominence_at(x, i, sign)});
  }
  double largest = 0.0;
  for (const auto& f : out) largest = std::max(largest, f.prominence);
  std::erase_if(out, [&](const RawFeature& f) { return f.prominence < min_prominence * largest; });
  return out;
}

double similarity(double a, double b) {
  const double den = std::abs(a) + std::abs(b);
  return den > 0.0 ? 1.0 - std::abs(a - b) / den : 1.0;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

std::vector<FeaturePoint> extract_features(const RealSeries& y, double min_prominence) {
  std::vector<FeaturePoint> out;
  for (const auto& f : raw_features(y, min_prominence)) {
    out.push_back({y.t0 + f.position * y.dt, f.kind, f.amplitude, f.prominence});
  }
  return out;
}

IbiSeries topology_ibi(const RealSeries& y, const TopologyParams& params) {
  if (!(params.lag_min > 0.0) || !(params.lag_max > params.lag_min) || !(params.window >= 0.0) ||
      !(params.tolerance >= 0.0)) {
    throw invalid_input_error("invalid topology parameters");
  }
  const auto features = raw_features(y, params.min_prominence);
  IbiSeries out;
  if (features.size() < 2) return out;

  const double lag_min = params.lag_min / y.dt;
  const double lag_max = params.lag_max / y.dt;
  const double window = params.window / y.dt;
  const double tol = params.tolerance / y.dt;
  constexpr double score_tie = 1e-9;

  std::vector<double> pos(features.size());
  for (std::size_t i = 0; i < features.size(); ++i) pos[i] = features[i].position;
  auto upper = [&](double p) {
    return static_cast<std::size_t>(std::upper_bound(pos.begin(), pos.end(), p) - pos.begin());
  };
  auto lower = [&](double p) {
    return static_cast<std::size_t>(std::lower_bound(pos.begin(), pos.end(), p) - pos.begin());
  };

  double last_emitted = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < features.size(); ++i) {
    const auto& anchor = features[i];
    const std::size_t anchor_end = upper(anchor.position + window);
    const double anchor_count = static_cast<double>(anchor_end - i);

    double best_score = -1.0;
    std::size_t best_j = 0;
    const std::size_t j_end = upper(anchor.position + lag_max);
    for (std::size_t j = std::max(i + 1, lower(anchor.position + lag_min)); j < j_end; ++j) {
      const auto& cand = features[j];
      if (cand.kind != anchor.kind) continue;
      const std::size_t cand_end = upper(cand.position + window);
      double total = 0.0;
      for (std::size_t k = i; k < anchor_end; ++k) {
        const double rel = features[k].position - anchor.position;
        double best = 0.0;
        for (std::size_t l = j; l < cand_end; ++l) {
          if (features[l].kind != features[k].kind) continue;
          if (std::abs((features[l].position - cand.position) - rel) > tol) continue;
          best = std::max(best, similarity(features[k].amplitude, features[l].amplitude));
        }
        total += best;
      }
      const double score = total / anchor_count;
      if (score > best_score + score_tie) {
        best_score = score;
        best_j = j;
      }
    }

    if (best_score < params.threshold) continue;
    const double t = y.t0 + features[best_j].position * y.dt;
    if (!(t > last_emitted)) continue;
    out.entries.push_back({t, 1000.0 * (features[best_j].position - anchor.position) * y.dt});
    last_emitted = t;
  }
  return out;
}

IbiSeries reject_outliers(const IbiSeries& series, const OutlierParams& params) {
  validate(series);
  if (params.neighbors == 0) throw invalid_input_error("outlier window must hold at least one entry");
  const auto& e = series.entries;
  const std::size_t n = e.size();
  const std::size_t window = std::min(params.neighbors, n);
  IbiSeries out;
  std::vector<double> values;
  for (std::size_t i = 0; i < n; ++i) {
    // Grow the nearest-in-time window outward from i; ties prefer the earlier entry.
    std::size_t lo = i;
    std::size_t hi = i + 1;
    while (hi - lo < window) {
      if (lo == 0) {
        ++hi;
      } else if (hi == n) {
        --lo;
      } else if (e[i].time_s - e[lo - 1].time_s <= e[hi].time_s - e[i].time_s) {
        --lo;
      } else {
        ++hi;
      }
    }
    values.clear();
    for (std::size_t k = lo; k < hi; ++k) values.push_back(e[k].interval_ms);
    const double med = median(values);
    if (std::abs(e[i].interval_ms - med) <= params.max_deviation * std::abs(med)) out.entries.push_back(e[i]);
  }
  return out;
}

}  // namespace radarbeat
