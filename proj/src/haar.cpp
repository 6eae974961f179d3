#include "haarhankel/haar.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "haarhankel/errors.hpp"
#include "haarhankel/quadrature.hpp"
#include "haarhankel/specfun.hpp"

namespace haarhankel {
namespace {

// 2^{j/2}
double level_norm(int level) { return std::sqrt(std::ldexp(1.0, level)); }

void check_level(int max_level) {
  if (max_level < 0) {
    throw ArgumentError("max level must be >= 0, got " + std::to_string(max_level));
  }
  if (max_level > kMaxLevel) {
    throw CapacityError("max level " + std::to_string(max_level) + " exceeds the limit of " +
                        std::to_string(kMaxLevel));
  }
}

double integrate(const RadialFunction& g, double lo, double hi,
                 const IntegrationOptions& opts) {
  if (g.has_antiderivative()) {
    return g.g_antiderivative(hi) - g.g_antiderivative(lo);
  }
  return quadrature::adaptive_gauss_kronrod(g.evaluate, lo, hi, opts.abs_tol, opts.max_depth);
}

bool by_position(const DetailCoefficient& a, const DetailCoefficient& b) {
  return a.level != b.level ? a.level < b.level : a.index < b.index;
}

// int_0^u t^2 exp(-t^2) dt
double unit_gaussian_moment(double u) {
  if (u < 1.0) {
    // sum_n (-1)^n u^(2n+3) / (n! (2n+3))
    const double u2 = u * u;
    double power = u2 * u;  // (-1)^n u^(2n+3) / n!
    double sum = power / 3.0;
    for (int n = 1; n < 60; ++n) {
      power *= -u2 / n;
      const double term = power / (2 * n + 3);
      sum += term;
      if (std::abs(term) <= 1e-18 * std::abs(sum)) {
        break;
      }
    }
    return sum;
  }
  return 0.25 * std::sqrt(std::numbers::pi) * specfun::erf(u) - 0.5 * u * std::exp(-u * u);
}

// int_lo^hi t^2 exp(-t^2) dt for 0 <= lo <= hi
double unit_gaussian_moment(double lo, double hi) {
  if (lo >= 1.0) {
    return 0.25 * std::sqrt(std::numbers::pi) * (specfun::erfc(lo) - specfun::erfc(hi)) +
           0.5 * (lo * std::exp(-lo * lo) - hi * std::exp(-hi * hi));
  }
  return unit_gaussian_moment(hi) - unit_gaussian_moment(lo);
}

}  // namespace

WaveletCoefficients::WaveletCoefficients(double h, int max_level, double scaling,
                                         std::vector<DetailCoefficient> details,
                                         double threshold)
    : h_(h),
      max_level_(max_level),
      scaling_(scaling),
      details_(std::move(details)),
      threshold_(threshold) {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw ArgumentError("support length h must be finite and > 0");
  }
  check_level(max_level);
  if (!(threshold >= 0.0) || !std::isfinite(threshold)) {
    throw ArgumentError("threshold must be finite and >= 0");
  }
  if (!std::isfinite(scaling)) {
    throw ArgumentError("scaling coefficient is not finite");
  }
  for (std::size_t i = 0; i < details_.size(); ++i) {
    const auto& d = details_[i];
    if (d.level < 0 || d.level > max_level) {
      throw ArgumentError("detail level " + std::to_string(d.level) + " outside [0, " +
                          std::to_string(max_level) + "]");
    }
    if (d.index < 0 || d.index >= (std::int64_t{1} << d.level)) {
      throw ArgumentError("detail index " + std::to_string(d.index) + " outside level " +
                          std::to_string(d.level));
    }
    if (!std::isfinite(d.value)) {
      throw ArgumentError("detail coefficient is not finite");
    }
    if (threshold > 0.0 && !(std::abs(d.value) > threshold)) {
      throw ArgumentError("detail coefficient below the sparsity threshold");
    }
    if (i > 0 && !by_position(details_[i - 1], d)) {
      throw ArgumentError("detail coefficients must be unique and ordered by (level, index)");
    }
  }
}

double WaveletCoefficients::detail(int level, std::int64_t index) const {
  const DetailCoefficient key{level, index, 0.0};
  const auto it = std::lower_bound(details_.begin(), details_.end(), key, by_position);
  if (it != details_.end() && it->level == level && it->index == index) {
    return it->value;
  }
  return 0.0;
}

WaveletCoefficients WaveletCoefficients::sparsified(double eps) const {
  if (!(eps >= threshold_)) {
    throw ArgumentError("cannot sparsify below the current threshold");
  }
  std::vector<DetailCoefficient> kept;
  std::copy_if(details_.begin(), details_.end(), std::back_inserter(kept),
               [eps](const DetailCoefficient& d) { return std::abs(d.value) > eps; });
  return WaveletCoefficients(h_, max_level_, scaling_, std::move(kept), eps);
}

double scaling_coefficient(const RadialFunction& g, std::int64_t k,
                           const IntegrationOptions& opts) {
  const double lo = static_cast<double>(k);
  return integrate(g, lo, lo + 1.0, opts);
}

double detail_coefficient(const RadialFunction& g, int level, std::int64_t index,
                          const IntegrationOptions& opts) {
  check_level(level);
  if (index < 0 || index >= (std::int64_t{1} << level)) {
    throw ArgumentError("detail index outside [0, 2^j)");
  }
  const double width = std::ldexp(1.0, -level);
  const double lo = width * static_cast<double>(index);
  const double mid = width * (static_cast<double>(index) + 0.5);
  const double hi = width * (static_cast<double>(index) + 1.0);
  return level_norm(level) * (integrate(g, lo, mid, opts) - integrate(g, mid, hi, opts));
}

WaveletCoefficients decompose_unit(const RadialFunction& g_hat, double h, int max_level,
                                   double eps, const IntegrationOptions& opts) {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw ArgumentError("support length h must be finite and > 0");
  }
  check_level(max_level);
  if (!(eps >= 0.0) || !std::isfinite(eps)) {
    throw ArgumentError("threshold eps must be finite and >= 0");
  }

  // Integrals over the 2^{J+1} finest half-cells, then pairwise sums upward.
  const int finest = max_level + 1;
  const std::size_t leaves = std::size_t{1} << finest;
  std::vector<double> cells(leaves);
  for (std::size_t m = 0; m < leaves; ++m) {
    const double lo = std::ldexp(static_cast<double>(m), -finest);
    const double hi = std::ldexp(static_cast<double>(m + 1), -finest);
    cells[m] = integrate(g_hat, lo, hi, opts);
  }

  std::vector<std::vector<DetailCoefficient>> per_level(max_level + 1);
  for (int level = max_level; level >= 0; --level) {
    const std::size_t count = std::size_t{1} << level;
    const double norm = level_norm(level);
    std::vector<double> coarser(count);
    auto& out = per_level[level];
    for (std::size_t k = 0; k < count; ++k) {
      const double left = cells[2 * k];
      const double right = cells[2 * k + 1];
      coarser[k] = left + right;
      const double d = norm * (left - right);
      if (std::abs(d) > eps) {
        out.push_back({level, static_cast<std::int64_t>(k), d});
      }
    }
    cells = std::move(coarser);
  }

  std::vector<DetailCoefficient> details;
  for (auto& level : per_level) {
    details.insert(details.end(), level.begin(), level.end());
  }
  return WaveletCoefficients(h, max_level, cells.front(), std::move(details), eps);
}

WaveletCoefficients decompose(const RadialFunction& f, double h, int max_level, double eps,
                              const IntegrationOptions& opts) {
  if (!f.evaluate) {
    throw ArgumentError("radial function has no evaluator");
  }
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw ArgumentError("support length h must be finite and > 0");
  }
  RadialFunction g_hat;
  g_hat.evaluate = [f = f.evaluate, h](double x) {
    const double r = h * x;
    return f(r) * r;
  };
  if (f.has_antiderivative()) {
    g_hat.g_antiderivative = [big_g = f.g_antiderivative, h](double x) {
      return big_g(h * x) / h;
    };
  }
  return decompose_unit(g_hat, h, max_level, eps, opts);
}

double reconstruct(const WaveletCoefficients& coeffs, double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw ArgumentError("reconstruct: x must lie in [0, 1]");
  }
  if (x == 1.0) {
    x = std::nextafter(1.0, 0.0);
  }
  double sum = coeffs.scaling();
  for (int level = 0; level <= coeffs.max_level(); ++level) {
    const double scaled = std::ldexp(x, level);
    const auto k = static_cast<std::int64_t>(std::floor(scaled));
    const double d = coeffs.detail(level, k);
    if (d == 0.0) {
      continue;
    }
    const double t = scaled - static_cast<double>(k);
    sum += (t < 0.5 ? 1.0 : -1.0) * level_norm(level) * d;
  }
  return sum;
}

RadialFunction gaussian_test_function(double a) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw ArgumentError("gaussian width parameter a must be finite and > 0");
  }
  RadialFunction f;
  f.evaluate = [a](double r) { return r * std::exp(-a * a * r * r); };
  f.g_antiderivative = [a](double r) { return gaussian_g_antiderivative(a, r); };
  return f;
}

double gaussian_g_antiderivative(double a, double r) {
  const double ar = a * r;
  return (std::sqrt(std::numbers::pi) * specfun::erf(ar) - 2.0 * ar * std::exp(-ar * ar)) /
         (4.0 * a * a * a);
}

double gaussian_g_integral(double a, double lo, double hi) {
  if (hi < lo) {
    return -gaussian_g_integral(a, hi, lo);
  }
  if (lo < 0.0) {
    throw DomainError("gaussian_g_integral: interval must lie in r >= 0");
  }
  return unit_gaussian_moment(a * lo, a * hi) / (a * a * a);
}

WaveletCoefficients gaussian_coefficients(double a, double h, int max_level) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw ArgumentError("gaussian width parameter a must be finite and > 0");
  }
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw ArgumentError("support length h must be finite and > 0");
  }
  check_level(max_level);
  // Coefficients of g(h x): int_{x0}^{x1} g(h x) dx = (1/h) int_{h x0}^{h x1} g(r) dr.
  const auto cell = [a, h](double x0, double x1) {
    return gaussian_g_integral(a, h * x0, h * x1) / h;
  };
  std::vector<DetailCoefficient> details;
  for (int level = 0; level <= max_level; ++level) {
    const std::int64_t count = std::int64_t{1} << level;
    const double width = std::ldexp(1.0, -level);
    const double norm = level_norm(level);
    for (std::int64_t k = 0; k < count; ++k) {
      const double lo = width * static_cast<double>(k);
      const double mid = width * (static_cast<double>(k) + 0.5);
      const double hi = width * (static_cast<double>(k) + 1.0);
      details.push_back({level, k, norm * (cell(lo, mid) - cell(mid, hi))});
    }
  }
  return WaveletCoefficients(h, max_level, cell(0.0, 1.0), std::move(details), 0.0);
}

double gaussian_exact_transform(double a, double p) {
  const double a2 = a * a;
  return p / (4.0 * a2 * a2) * std::exp(-p * p / (4.0 * a2));
}

}  // namespace haarhankel
