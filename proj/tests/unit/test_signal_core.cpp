#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "radarbeat/errors.hpp"
#include "radarbeat/signal_core.hpp"

using namespace radarbeat;

namespace {

constexpr double pi = std::numbers::pi;
constexpr double frame_dt = 6.87e-3;

RealSeries real_series(std::vector<double> x, double dt = 1.0) { return RealSeries{std::move(x), dt, 0.0}; }

}  // namespace

TEST_SUITE("signal_core") {

TEST_CASE("unwrap leaves a series without wrap crossings unchanged") {
  const auto out = unwrap_phase(real_series({1.0, 1.1, 1.2}));
  CHECK(out.samples == std::vector<double>{1.0, 1.1, 1.2});
}

TEST_CASE("unwrap corrects a single forward wrap") {
  const auto out = unwrap_phase(real_series({3.0, -3.0}));
  CHECK(out.samples[0] == 3.0);
  CHECK(out.samples[1] == doctest::Approx(-3.0 + 2.0 * pi).epsilon(1e-15));
  CHECK(out.samples[1] == doctest::Approx(3.2832).epsilon(1e-4));
}

TEST_CASE("unwrap recovers a random walk up to a constant multiple of 2pi") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> step(-3.0, 3.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> walk{step(rng)};
    for (int i = 1; i < 500; ++i) walk.push_back(walk.back() + step(rng));
    std::vector<double> wrapped;
    for (double v : walk) wrapped.push_back(std::atan2(std::sin(v), std::cos(v)));
    const auto out = unwrap_phase(real_series(wrapped));
    const double offset = out.samples[0] - walk[0];
    CHECK(std::abs(offset / (2.0 * pi) - std::round(offset / (2.0 * pi))) < 1e-9);
    for (std::size_t i = 0; i < walk.size(); ++i) REQUIRE(out.samples[i] - walk[i] == doctest::Approx(offset).epsilon(1e-9));
  }
}

TEST_CASE("unwrap output steps lie in (-pi, pi] and stay congruent to the input") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> any(-pi + 1e-12, pi);
  std::vector<double> wrapped(1000);
  for (auto& v : wrapped) v = any(rng);
  const auto out = unwrap_phase(real_series(wrapped));
  CHECK(out.samples[0] == wrapped[0]);
  for (std::size_t i = 1; i < out.size(); ++i) {
    const double d = out.samples[i] - out.samples[i - 1];
    REQUIRE(d > -pi);
    REQUIRE(d <= pi + 1e-12);
    const double k = (out.samples[i] - wrapped[i]) / (2.0 * pi);
    REQUIRE(std::abs(k - std::round(k)) < 1e-9);
  }
}

TEST_CASE("unwrap rejects non-finite samples") {
  CHECK_THROWS_AS(unwrap_phase(real_series({0.0, std::numeric_limits<double>::quiet_NaN()})), invalid_input_error);
}

TEST_CASE("wrap_to_pi maps onto (-pi, pi]") {
  CHECK(wrap_to_pi(-pi) == doctest::Approx(pi));
  CHECK(wrap_to_pi(pi) == doctest::Approx(pi));
  CHECK(wrap_to_pi(3.0 * pi / 2.0) == doctest::Approx(-pi / 2.0));
  CHECK(wrap_to_pi(0.25) == doctest::Approx(0.25));
}

TEST_CASE("derivative of a constant series is zero for every order") {
  const ComplexSeries s{std::vector<complex_t>(20, {1.5, -0.5}), 0.01, 0.0};
  for (int k = 1; k <= 3; ++k) {
    for (const auto& v : kth_derivative(s, k).samples) REQUIRE(std::abs(v) < 1e-6);
  }
}

TEST_CASE("second derivative of a quadratic is exact") {
  std::vector<double> x;
  for (int n = 0; n < 12; ++n) x.push_back(static_cast<double>(n * n));
  const auto d2 = kth_derivative(real_series(x), 2);
  for (double v : d2.samples) CHECK(v == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("second derivative of a complex tone matches (2 pi f)^2") {
  const double f = 1.0;
  ComplexSeries s{{}, frame_dt, 0.0};
  for (int n = 0; n < 2000; ++n) s.samples.push_back(std::polar(1.0, 2.0 * pi * f * n * frame_dt));
  const auto d2 = kth_derivative(s, 2);
  const double expected = std::pow(2.0 * pi * f, 2);
  for (std::size_t i = 2; i + 2 < d2.size(); ++i) REQUIRE(std::abs(d2.samples[i]) == doctest::Approx(expected).epsilon(5e-3));
}

TEST_CASE("derivative stencils are exact on low-order polynomials including boundaries") {
  // Order k stencils are exact for polynomials of degree k+1.
  const double dt = 0.1;
  auto poly = [](double t, int deg) { return std::pow(t, deg) + 0.5 * t; };
  for (int k = 1; k <= 3; ++k) {
    const int deg = k + 1;
    std::vector<double> x;
    for (int n = 0; n < 15; ++n) x.push_back(poly(n * dt, deg));
    const auto d = kth_derivative(real_series(x, dt), k);
    for (std::size_t n = 0; n < d.size(); ++n) {
      const double t = static_cast<double>(n) * dt;
      double exact = 0.0;
      if (k == 1) exact = deg * std::pow(t, deg - 1) + 0.5;
      if (k == 2) exact = deg * (deg - 1) * std::pow(t, deg - 2);
      if (k == 3) exact = deg * (deg - 1) * (deg - 2) * std::pow(t, deg - 3);
      REQUIRE(d.samples[n] == doctest::Approx(exact).epsilon(1e-7).scale(1.0));
    }
  }
}

TEST_CASE("differentiation is linear") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  ComplexSeries x{{}, 0.01, 0.0};
  ComplexSeries y{{}, 0.01, 0.0};
  for (int n = 0; n < 64; ++n) {
    x.samples.emplace_back(g(rng), g(rng));
    y.samples.emplace_back(g(rng), g(rng));
  }
  const complex_t a{1.7, -0.3};
  const complex_t b{-0.4, 2.1};
  ComplexSeries mix{{}, 0.01, 0.0};
  for (int n = 0; n < 64; ++n) mix.samples.push_back(a * x.samples[n] + b * y.samples[n]);
  for (int k = 1; k <= 3; ++k) {
    const auto dm = kth_derivative(mix, k);
    const auto dx = kth_derivative(x, k);
    const auto dy = kth_derivative(y, k);
    for (int n = 0; n < 64; ++n) {
      const complex_t expect = a * dx.samples[n] + b * dy.samples[n];
      REQUIRE(std::abs(dm.samples[n] - expect) <= 1e-12 * (1.0 + std::abs(expect)));
    }
  }
}

TEST_CASE("differentiation requires 2k+1 samples") {
  const ComplexSeries s{std::vector<complex_t>(4), 0.01, 0.0};
  CHECK_NOTHROW(kth_derivative(s, 1));
  CHECK_THROWS_AS(kth_derivative(s, 2), length_error);
  CHECK_THROWS_AS(kth_derivative(ComplexSeries{std::vector<complex_t>(6), 0.01, 0.0}, 3), length_error);
  CHECK_THROWS_AS(kth_derivative(s, 4), invalid_input_error);
}

TEST_CASE("interior trims boundary samples and advances the start time") {
  const RealSeries s{{0, 1, 2, 3, 4, 5}, 0.5, 1.0};
  const auto t = interior(s, 2);
  CHECK(t.samples == std::vector<double>{2, 3});
  CHECK(t.t0 == doctest::Approx(2.0));
  CHECK(t.dt == 0.5);
}

TEST_CASE("periodogram of a DC series puts all power in bin 0") {
  const auto ps = periodogram(real_series(std::vector<double>(100, 3.0), 0.01), false, 256);
  CHECK(ps.freqs.size() == 129);
  CHECK(ps.freqs[0] == 0.0);
  CHECK(ps.power[0] == doctest::Approx(9.0 * 100 * 0.01));
  for (std::size_t k = 1; k < ps.size(); k += 2) CHECK(ps.power[k] >= 0.0);
  // Zero padding spreads a DC block into sinc side lobes; without padding it stays in bin 0.
  const auto exact = periodogram(real_series(std::vector<double>(128, 3.0), 0.01), false, 128);
  for (std::size_t k = 1; k < exact.size(); ++k) CHECK(exact.power[k] < 1e-20);
}

TEST_CASE("periodogram of an on-bin sinusoid has a single dominant bin") {
  const std::size_t n = 512;
  const double dt = 0.01;
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = std::sin(2.0 * pi * 20.0 * static_cast<double>(i) / n);
  const auto ps = periodogram(real_series(x, dt), false, n);
  const auto top = std::max_element(ps.power.begin(), ps.power.end()) - ps.power.begin();
  CHECK(top == 20);
  CHECK(ps.freqs[20] == doctest::Approx(20.0 / (n * dt)));
  for (std::size_t k = 0; k < ps.size(); ++k) {
    if (k != 20) REQUIRE(ps.power[20] >= 1e3 * ps.power[k]);
  }
}

TEST_CASE("periodogram argmax of an off-bin sinusoid agrees with a dense DFT search") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> freq(1.0, 20.0);
  for (int trial = 0; trial < 5; ++trial) {
    const double f = freq(rng);
    const double dt = 0.02;
    std::vector<double> x(300);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = std::cos(2.0 * pi * f * i * dt + 0.3);
    const auto ps = periodogram(real_series(x, dt), false);
    CHECK(ps.size() == default_nfft(x.size()) / 2 + 1);
    const auto top = std::max_element(ps.power.begin(), ps.power.end()) - ps.power.begin();
    const double dense = oracle::dense_peak_frequency(x, dt, 0.5, 24.0, 1e-3);
    CHECK(std::abs(ps.freqs[top] - dense) <= ps.spacing());
    CHECK(std::abs(ps.freqs[top] - f) <= ps.spacing());
  }
}

TEST_CASE("periodogram bins match the dense DFT") {
  std::mt19937_64 rng(6);
  std::normal_distribution<double> g;
  std::vector<complex_t> x(37);
  for (auto& v : x) v = {g(rng), g(rng)};
  const double dt = 0.1;
  const auto ps = periodogram(ComplexSeries{x, dt, 0.0}, false, 64);
  const auto dft = oracle::dense_dft(x, 64);
  REQUIRE(ps.size() == 64);
  for (std::size_t k = 0; k < 64; ++k) CHECK(ps.power[k] == doctest::Approx(std::norm(dft[k]) * dt / 37.0).epsilon(1e-10));
}

TEST_CASE("periodogram obeys Parseval") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g;
  std::vector<complex_t> x(100);
  for (auto& v : x) v = {g(rng), g(rng)};
  const double dt = 0.05;
  const std::size_t nfft = 512;
  double energy = 0.0;
  for (const auto& v : x) energy += std::norm(v);
  const auto ps = periodogram(ComplexSeries{x, dt, 0.0}, false, nfft);
  double total = 0.0;
  for (double p : ps.power) total += p;
  CHECK(total == doctest::Approx(energy / 100.0 * dt * nfft).epsilon(1e-9));

  std::vector<double> r(100);
  for (auto& v : r) v = g(rng);
  double renergy = 0.0;
  for (double v : r) renergy += v * v;
  const auto rps = periodogram(real_series(r, dt), false, nfft);
  double rtotal = rps.power.front() + rps.power.back();
  for (std::size_t k = 1; k + 1 < rps.size(); ++k) rtotal += 2.0 * rps.power[k];
  CHECK(rtotal == doctest::Approx(renergy / 100.0 * dt * nfft).epsilon(1e-9));
}

TEST_CASE("periodogram mean removal zeroes the DC bin") {
  std::vector<double> x(64);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = 5.0 + std::sin(0.3 * i);
  const auto ps = periodogram(real_series(x, 0.1), true);
  CHECK(ps.power[0] < 1e-20);
}

TEST_CASE("periodogram rejects nfft shorter than the series") {
  CHECK_THROWS_AS(periodogram(real_series(std::vector<double>(10, 1.0)), false, 8), invalid_input_error);
}

TEST_CASE("default nfft is the next power of two at least four times the length") {
  CHECK(default_nfft(1) == 4);
  CHECK(default_nfft(100) == 512);
  CHECK(default_nfft(128) == 512);
  CHECK(default_nfft(8734) == 65536);
}

TEST_CASE("series validation") {
  CHECK_THROWS_AS(validate(RealSeries{{1.0}, 0.0, 0.0}), invalid_input_error);
  CHECK_THROWS_AS(validate(RealSeries{{}, 1.0, 0.0}), length_error);
  CHECK_THROWS_AS(validate(ComplexSeries{{complex_t(std::numeric_limits<double>::infinity(), 0.0)}, 1.0, 0.0}),
                  invalid_input_error);
  CHECK_THROWS_AS(validate(IbiSeries{{{1.0, 800.0}, {1.0, 810.0}}}), invalid_input_error);
}

}  // TEST_SUITE
