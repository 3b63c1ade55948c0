#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "radarbeat/enhance.hpp"
#include "radarbeat/signal_core.hpp"

using namespace radarbeat;

namespace {

constexpr double pi = std::numbers::pi;
constexpr double frame_dt = 6.87e-3;

struct PhaseModel {
  double s0 = 1.0;
  double m = 0.3;
  double f = 1.2;
  double psi(double t) const { return m * std::sin(2.0 * pi * f * t); }
  double psi1(double t) const { return m * 2.0 * pi * f * std::cos(2.0 * pi * f * t); }
  double psi2(double t) const { return -m * std::pow(2.0 * pi * f, 2) * std::sin(2.0 * pi * f * t); }
};

ComplexSeries phase_signal(const PhaseModel& p, double duration, complex_t scale = 1.0) {
  ComplexSeries s{{}, frame_dt, 0.0};
  const auto n = static_cast<std::size_t>(duration / frame_dt) + 1;
  for (std::size_t i = 0; i < n; ++i) s.samples.push_back(scale * p.s0 * std::polar(1.0, p.psi(i * frame_dt)));
  return s;
}

ComplexSeries pure_tone(double f, double duration) {
  ComplexSeries s{{}, frame_dt, 0.0};
  const auto n = static_cast<std::size_t>(duration / frame_dt) + 1;
  for (std::size_t i = 0; i < n; ++i) s.samples.push_back(std::polar(1.0, 2.0 * pi * f * i * frame_dt));
  return s;
}

double rms_relative_error(const std::vector<double>& got, const std::vector<double>& want, std::size_t skip) {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = skip; i + skip < got.size(); ++i) {
    num += std::pow(got[i] - want[i], 2);
    den += want[i] * want[i];
  }
  return std::sqrt(num / den);
}

}  // namespace

TEST_SUITE("enhance") {

TEST_CASE("enhanced signal of a constant is zero") {
  const ComplexSeries s{std::vector<complex_t>(30, {0.3, 0.4}), frame_dt, 0.0};
  for (double v : enhanced_heartbeat(s).samples) CHECK(v < 1e-6);
  for (int k = 1; k <= 3; ++k) {
    for (double v : abs_kth_derivative(s, k).samples) CHECK(v < 1e-3);
  }
}

TEST_CASE("enhanced signal of a tone is (2 pi f)^2") {
  const auto s = pure_tone(1.2, 10.0);
  const auto y = enhanced_heartbeat(s);
  const double expected = std::pow(2.0 * pi * 1.2, 2);
  for (std::size_t i = 2; i + 2 < y.size(); ++i) REQUIRE(y.samples[i] == doctest::Approx(expected).epsilon(5e-3));
}

TEST_CASE("order-k magnitude of a tone is (2 pi f)^k") {
  const double f = 1.3;
  const auto s = pure_tone(f, 10.0);
  for (int k = 1; k <= 3; ++k) {
    const auto y = abs_kth_derivative(s, k);
    const double expected = std::pow(2.0 * pi * f, k);
    for (std::size_t i = boundary_samples(k); i + boundary_samples(k) < y.size(); ++i) {
      REQUIRE(y.samples[i] == doctest::Approx(expected).epsilon(1e-2));
    }
  }
  const auto y2 = abs_kth_derivative(s, 2);
  const auto e = enhanced_heartbeat(s);
  CHECK(y2.samples == e.samples);
}

TEST_CASE("enhanced signal matches s0 sqrt(psi'^4 + psi''^2) for a sinusoidal phase") {
  const PhaseModel p{2.5, 0.3, 1.2};
  const auto s = phase_signal(p, 20.0);
  const auto y = enhanced_heartbeat(s);
  std::vector<double> want(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double t = i * frame_dt;
    want[i] = p.s0 * std::sqrt(std::pow(p.psi1(t), 4) + std::pow(p.psi2(t), 2));
  }
  CHECK(rms_relative_error(y.samples, want, 2) < 0.02);
}

TEST_CASE("phase variants on linear and quadratic phases") {
  const double a = 0.9;
  ComplexSeries linear{{}, frame_dt, 0.0};
  ComplexSeries quadratic{{}, frame_dt, 0.0};
  for (int i = 0; i < 400; ++i) {
    const double t = i * frame_dt;
    linear.samples.push_back(2.0 * std::polar(1.0, 5.0 * t));
    quadratic.samples.push_back(2.0 * std::polar(1.0, a * t * t));
  }
  for (double v : variant_psi_prime_sq(linear).samples) CHECK(v == doctest::Approx(2.0 * 25.0).epsilon(1e-9));
  for (double v : variant_psi_second(linear).samples) CHECK(v < 1e-6);
  for (double v : variant_psi_second(quadratic).samples) CHECK(v == doctest::Approx(2.0 * a * 2.0).epsilon(1e-6));
  const ComplexSeries still{std::vector<complex_t>(20, std::polar(1.0, 0.4)), frame_dt, 0.0};
  for (double v : variant_psi_prime_sq(still).samples) CHECK(v < 1e-9);
}

TEST_CASE("phase variants match their analytic forms for a sinusoidal phase") {
  const PhaseModel p{1.5, 0.3, 1.2};
  const auto s = phase_signal(p, 20.0);
  const auto v1 = variant_psi_prime_sq(s);
  const auto v2 = variant_psi_second(s);
  std::vector<double> w1(v1.size());
  std::vector<double> w2(v2.size());
  for (std::size_t i = 0; i < w1.size(); ++i) {
    const double t = i * frame_dt;
    w1[i] = p.s0 * p.psi1(t) * p.psi1(t);
    w2[i] = std::abs(p.s0 * p.psi2(t));
  }
  CHECK(rms_relative_error(v1.samples, w1, 2) < 0.02);
  CHECK(rms_relative_error(v2.samples, w2, 2) < 0.02);
}

TEST_CASE("enhanced signal ignores a constant phase rotation and scales with amplitude") {
  const PhaseModel p{1.0, 0.8, 1.1};
  const auto base = enhanced_heartbeat(phase_signal(p, 5.0));
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-pi, pi);
  for (int trial = 0; trial < 5; ++trial) {
    const auto rotated = enhanced_heartbeat(phase_signal(p, 5.0, std::polar(1.0, u(rng))));
    for (std::size_t i = 0; i < base.size(); ++i) REQUIRE(rotated.samples[i] == doctest::Approx(base.samples[i]).epsilon(1e-12));
  }
  for (double c : {-3.0, 0.5, 7.0}) {
    const auto scaled = enhanced_heartbeat(phase_signal(p, 5.0, c));
    for (std::size_t i = 0; i < base.size(); ++i) REQUIRE(scaled.samples[i] == doctest::Approx(std::abs(c) * base.samples[i]).epsilon(1e-12));
  }
}

TEST_CASE("enhanced signal emphasises the second harmonic of a single-tone phase") {
  for (double fh : {0.9, 1.2, 1.5}) {
    const PhaseModel p{1.0, 0.3, fh};
    const auto y = remove_mean(interior(enhanced_heartbeat(phase_signal(p, 60.0)), boundary_samples(2)));
    const auto ps = periodogram(y, true);
    const auto top = static_cast<std::size_t>(std::max_element(ps.power.begin(), ps.power.end()) - ps.power.begin());
    CHECK(std::abs(ps.freqs[top] - 2.0 * fh) <= ps.spacing());
  }
}

}  // TEST_SUITE
