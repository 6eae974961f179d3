#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <utility>

#include "haarhankel/errors.hpp"
#include "haarhankel/haar.hpp"
#include "haarhankel/oracle.hpp"
#include "test_support.hpp"

using namespace haarhankel;

namespace {

RadialFunction unit(std::function<double(double)> g) {
  RadialFunction f;
  f.evaluate = std::move(g);
  return f;
}

RadialFunction without_antiderivative(RadialFunction f) {
  f.g_antiderivative = nullptr;
  return f;
}

// Random step function constant on the 2^depth dyadic cells of [0, 1].
struct StepFunction {
  std::vector<double> values;

  double operator()(double x) const {
    const auto cells = static_cast<double>(values.size());
    const auto i = std::min(values.size() - 1, static_cast<std::size_t>(std::floor(x * cells)));
    return values[i];
  }
};

StepFunction random_step(int depth) {
  StepFunction s;
  s.values.resize(std::size_t{1} << depth);
  for (auto& v : s.values) {
    v = testing::uniform(-2.0, 2.0);
  }
  return s;
}

// Independent reference: plain adaptive panel quadrature from the oracle module.
double oracle_integral(const std::function<double(double)>& g, double lo, double hi) {
  QuadratureConfig cfg;
  cfg.abs_tol = 1e-15;
  cfg.rel_tol = 1e-15;
  return direct_integral(g, lo, hi, cfg);
}

}  // namespace

TEST_CASE("scaling coefficient examples") {
  CHECK(scaling_coefficient(unit([](double) { return 1.0; }), 0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(scaling_coefficient(unit([](double) { return 0.0; }), 0) == 0.0);
  CHECK(scaling_coefficient(unit([](double) { return 1.0; }), 3) == doctest::Approx(1.0).epsilon(1e-15));

  const auto g = [](double x) { return x * x * std::exp(-x * x); };
  const double expected = (std::sqrt(std::numbers::pi) * std::erf(1.0) - 2.0 * std::exp(-1.0)) / 4.0;
  CHECK(std::abs(oracle_integral(g, 0.0, 1.0) - expected) <= 1e-14);
  CHECK(std::abs(scaling_coefficient(unit(g), 0) - expected) <= 1e-13);
}

TEST_CASE("detail coefficient examples") {
  for (int j = 0; j <= 4; ++j) {
    for (std::int64_t k = 0; k < (std::int64_t{1} << j); ++k) {
      CHECK(std::abs(detail_coefficient(unit([](double) { return 3.5; }), j, k)) <= 1e-15);
    }
  }
  CHECK(detail_coefficient(unit([](double x) { return x; }), 0, 0) ==
        doctest::Approx(-0.25).epsilon(1e-15));
  CHECK_THROWS_AS(detail_coefficient(unit([](double x) { return x; }), 2, 4), ArgumentError);
  CHECK_THROWS_AS(detail_coefficient(unit([](double x) { return x; }), 31, 0), CapacityError);
}

TEST_CASE("gaussian closed form needs erf(a r), not erf(r)") {
  const double a = 1.7;
  const double lo = 0.25;
  const double mid = 0.375;
  const double hi = 0.5;
  const auto g = [a](double r) { return r * r * std::exp(-a * a * r * r); };
  const auto with_erf_ar = [a](double r) {
    return (std::sqrt(std::numbers::pi) * std::erf(a * r) - 2 * a * r * std::exp(-a * a * r * r)) /
           (4 * a * a * a);
  };
  const auto with_erf_r = [a](double r) {
    return (std::sqrt(std::numbers::pi) * std::erf(r) - 2 * a * r * std::exp(-a * a * r * r)) /
           (4 * a * a * a);
  };
  const double left = oracle_integral(g, lo, mid);
  const double right = oracle_integral(g, mid, hi);
  CHECK(std::abs(with_erf_ar(mid) - with_erf_ar(lo) - left) <= 1e-15);
  CHECK(std::abs(with_erf_ar(hi) - with_erf_ar(mid) - right) <= 1e-15);
  CHECK(std::abs(with_erf_r(mid) - with_erf_r(lo) - left) > 1e-4);
  CHECK(std::abs(gaussian_g_antiderivative(a, mid) - gaussian_g_antiderivative(a, lo) - left) <=
        1e-15);
  CHECK(std::abs(gaussian_g_integral(a, lo, mid) - left) <= 1e-16);
}

TEST_CASE("gaussian interval integral keeps accuracy in the far tail") {
  const auto g = [](double r) { return r * r * std::exp(-r * r); };
  for (const auto& [lo, hi] : {std::pair{5.0, 5.1}, std::pair{6.0, 6.05}, std::pair{7.5, 8.0},
                               std::pair{0.0, 1e-3}, std::pair{0.9, 1.2}}) {
    CAPTURE(lo);
    const double ref = oracle_integral(g, lo, hi);
    CHECK(std::abs(gaussian_g_integral(1.0, lo, hi) - ref) <= 1e-12 * std::abs(ref));
  }
}

TEST_CASE("gaussian coefficients") {
  const auto coeffs = gaussian_coefficients(1.0, 6.0, 3);
  const double c00 = (std::sqrt(std::numbers::pi) * std::erf(6.0) - 12.0 * std::exp(-36.0)) / 4.0 / 6.0;
  CHECK(coeffs.scaling() == doctest::Approx(c00).epsilon(1e-15));
  CHECK(coeffs.details().size() == 15);
  CHECK(coeffs.h() == 6.0);
  CHECK(coeffs.max_level() == 3);

  // Detail (2, 1) against independent quadrature of g(6x) on the unit axis.
  const auto g_hat = [](double x) {
    const double r = 6.0 * x;
    return r * r * std::exp(-r * r);
  };
  const double d21 = 2.0 * (oracle_integral(g_hat, 0.25, 0.375) - oracle_integral(g_hat, 0.375, 0.5));
  CHECK(std::abs(coeffs.detail(2, 1) - d21) <= 1e-14);

  // Intervals beyond r = 6 / a carry nothing.
  const auto wide = gaussian_coefficients(1.0, 24.0, 6);
  for (const auto& d : wide.details()) {
    const double r_lo = 24.0 * std::ldexp(static_cast<double>(d.index), -d.level);
    if (r_lo >= 6.0) {
      CHECK(std::abs(d.value) < 1e-14);
    }
  }
  CHECK_THROWS_AS(gaussian_coefficients(0.0, 6.0, 3), ArgumentError);
  CHECK_THROWS_AS(gaussian_coefficients(1.0, -6.0, 3), ArgumentError);
}

TEST_CASE("analytic and numeric gaussian coefficients agree") {
  for (const auto& [a, h] : {std::pair{1.0, 6.0}, std::pair{0.5, 10.0}, std::pair{2.0, 4.0}}) {
    CAPTURE(a);
    const auto analytic = gaussian_coefficients(a, h, 6);
    const auto numeric = decompose(without_antiderivative(gaussian_test_function(a)), h, 6, 0.0);
    const auto via_antiderivative = decompose(gaussian_test_function(a), h, 6, 0.0);
    CHECK(std::abs(analytic.scaling() - numeric.scaling()) <= 1e-12);
    for (const auto& d : analytic.details()) {
      CHECK(std::abs(d.value - numeric.detail(d.level, d.index)) <= 1e-12);
      CHECK(std::abs(d.value - via_antiderivative.detail(d.level, d.index)) <= 1e-12);
    }
  }
}

TEST_CASE("decompose of the zero function") {
  const auto coeffs = decompose(unit([](double) { return 0.0; }), 2.0, 5, 0.0);
  CHECK(coeffs.scaling() == 0.0);
  CHECK(coeffs.details().empty());
  CHECK(reconstruct(coeffs, 0.3) == 0.0);
}

TEST_CASE("decompose argument validation") {
  const auto f = unit([](double r) { return r; });
  CHECK_THROWS_AS(decompose(f, 1.0, 31, 0.0), CapacityError);
  CHECK_THROWS_AS(decompose(f, 0.0, 3, 0.0), ArgumentError);
  CHECK_THROWS_AS(decompose(f, 1.0, -1, 0.0), ArgumentError);
  CHECK_THROWS_AS(decompose(f, 1.0, 3, -1e-3), ArgumentError);
  CHECK_THROWS_AS(decompose(RadialFunction{}, 1.0, 3, 0.0), ArgumentError);
}

TEST_CASE("integration failures propagate") {
  IntegrationOptions opts;
  opts.max_depth = 2;
  const auto wild = unit([](double x) { return std::sin(1.0 / (x + 1e-9)); });
  CHECK_THROWS_AS(decompose_unit(wild, 1.0, 1, 0.0, opts), IntegrationError);
}

TEST_CASE("reconstruct basics") {
  const WaveletCoefficients zero(1.0, 2, 0.0, {});
  CHECK(reconstruct(zero, 0.4) == 0.0);
  const WaveletCoefficients one(1.0, 2, 1.0, {});
  for (const double x : {0.0, 0.1, 0.5, 0.77, 1.0}) {
    CHECK(reconstruct(one, x) == 1.0);
  }
  const WaveletCoefficients single(1.0, 1, 0.0, {{1, 1, 1.0}});
  CHECK(reconstruct(single, 0.6) == doctest::Approx(std::sqrt(2.0)));
  CHECK(reconstruct(single, 0.8) == doctest::Approx(-std::sqrt(2.0)));
  CHECK(reconstruct(single, 0.75) == doctest::Approx(-std::sqrt(2.0)));  // right-continuous
  CHECK(reconstruct(single, 0.2) == 0.0);
  CHECK_THROWS_AS(reconstruct(one, 1.5), ArgumentError);
}

TEST_CASE("round trip on dyadic step functions (property)") {
  for (int trial = 0; trial < 20; ++trial) {
    const int level = static_cast<int>(testing::uniform_int(0, 7));
    const int depth = static_cast<int>(testing::uniform_int(0, level + 1));
    const auto step = random_step(depth);
    const auto coeffs = decompose_unit(unit(step), 3.0, level, 0.0);
    for (int i = 0; i < 100; ++i) {
      double x = testing::uniform(0.0, 1.0);
      // Non-dyadic at the finest level.
      const double cells = std::ldexp(1.0, level + 1);
      if (std::floor(x * cells) == x * cells) {
        continue;
      }
      CHECK(reconstruct(coeffs, x) == doctest::Approx(step(x)).epsilon(1e-12));
    }
  }
}

TEST_CASE("physical input f = s(r)/r gives the same table as the step itself") {
  const auto step = random_step(3);
  const double h = 2.5;
  const auto via_f = decompose(unit([&](double r) { return step(r / h) / r; }), h, 4, 0.0);
  const auto direct = decompose_unit(unit(step), h, 4, 0.0);
  CHECK(via_f.scaling() == doctest::Approx(direct.scaling()).epsilon(1e-13));
  for (const auto& d : direct.details()) {
    CHECK(std::abs(via_f.detail(d.level, d.index) - d.value) <= 1e-12);
  }
}

TEST_CASE("gaussian detail coefficients decay with level") {
  const auto coeffs = gaussian_coefficients(1.0, 6.0, 10);
  std::vector<double> level_max(11, 0.0);
  for (const auto& d : coeffs.details()) {
    level_max[d.level] = std::max(level_max[d.level], std::abs(d.value));
  }
  // Non-increasing from level 1 on; from level 3 to 4 onwards each step at
  // least halves (asymptotically 2^{-3/2} for a C^1 integrand).
  for (int j = 1; j <= 10; ++j) {
    CAPTURE(j);
    CHECK(level_max[j] <= level_max[j - 1]);
    if (j >= 4) {
      CHECK(level_max[j] / level_max[j - 1] <= 0.5);
    }
  }
  CHECK(level_max[10] / level_max[9] == doctest::Approx(std::pow(2.0, -1.5)).epsilon(0.01));
}

TEST_CASE("sparsification is monotone in eps") {
  const auto full = decompose(without_antiderivative(gaussian_test_function(1.0)), 6.0, 8, 0.0);
  std::set<std::pair<int, std::int64_t>> previous;
  bool first = true;
  for (const double eps : {0.0, 1e-8, 1e-6, 1e-4, 1e-3, 1e-2}) {
    const auto table = decompose(without_antiderivative(gaussian_test_function(1.0)), 6.0, 8, eps);
    const auto resparse = full.sparsified(eps);
    CHECK(table.details().size() == resparse.details().size());
    std::set<std::pair<int, std::int64_t>> kept;
    for (const auto& d : table.details()) {
      CHECK(std::abs(d.value) > eps);
      kept.insert({d.level, d.index});
    }
    if (!first) {
      CHECK(std::includes(previous.begin(), previous.end(), kept.begin(), kept.end()));
    }
    previous = std::move(kept);
    first = false;
  }
  CHECK_THROWS_AS(full.sparsified(1e-3).sparsified(1e-4), ArgumentError);
}

TEST_CASE("decompose is linear in f") {
  const auto f1 = unit([](double r) { return std::cos(r) * std::exp(-r); });
  const auto f2 = unit([](double r) { return 1.0 / (1.0 + r * r); });
  const double alpha = 1.5;
  const double beta = -0.75;
  const auto combo = unit([&](double r) { return alpha * f1.evaluate(r) + beta * f2.evaluate(r); });
  const auto c1 = decompose(f1, 4.0, 6, 0.0);
  const auto c2 = decompose(f2, 4.0, 6, 0.0);
  const auto c = decompose(combo, 4.0, 6, 0.0);
  CHECK(std::abs(c.scaling() - (alpha * c1.scaling() + beta * c2.scaling())) <= 1e-12);
  for (const auto& d : c.details()) {
    const double expected = alpha * c1.detail(d.level, d.index) + beta * c2.detail(d.level, d.index);
    CHECK(std::abs(d.value - expected) <= 1e-12);
  }
}

TEST_CASE("coefficient table invariants are enforced") {
  CHECK_THROWS_AS(WaveletCoefficients(1.0, 2, 0.0, {{1, 0, 1.0}, {0, 0, 1.0}}), ArgumentError);
  CHECK_THROWS_AS(WaveletCoefficients(1.0, 2, 0.0, {{1, 2, 1.0}}), ArgumentError);
  CHECK_THROWS_AS(WaveletCoefficients(1.0, 2, 0.0, {{3, 0, 1.0}}), ArgumentError);
  CHECK_THROWS_AS(WaveletCoefficients(1.0, 2, 0.0, {{0, 0, 1e-5}}, 1e-3), ArgumentError);
  CHECK_THROWS_AS(WaveletCoefficients(1.0, 2, 0.0, {{0, 0, std::nan("")}}), ArgumentError);
  CHECK_THROWS_AS(WaveletCoefficients(1.0, 31, 0.0, {}), CapacityError);
  const WaveletCoefficients ok(1.0, 2, 0.5, {{0, 0, 1.0}, {2, 3, -2.0}});
  CHECK(ok.detail(2, 3) == -2.0);
  CHECK(ok.detail(1, 0) == 0.0);
}
