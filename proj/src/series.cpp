#include "haarhankel/series.hpp"

#include <cmath>
#include <string>

#include "haarhankel/errors.hpp"
#include "haarhankel/quadrature.hpp"
#include "haarhankel/specfun.hpp"

namespace haarhankel {
namespace {

// Below this value of p * (right end of the atom) the brackets are built from
// Taylor expansions of J0 and its primitive instead of differences of nearly
// equal function values.
constexpr double kSmallArgument = 1e-4;

void check_p(double p) {
  if (!(p >= 0.0) || !std::isfinite(p)) {
    throw DomainError("transform argument p must be finite and >= 0, got " + std::to_string(p));
  }
}

// A0(x) = int_0^x J0(p t) dt, A1(x) = int_0^x J1(p t) dt, small p x.
double primitive_taylor(double x, double p, TransformOrder order) {
  const double y2 = (p * x) * (p * x);
  if (order == TransformOrder::Order0) {
    // x (1 - y^2/12 + y^4/320 - y^6/16128)
    return x * (1.0 - y2 / 12.0 + y2 * y2 / 320.0 - y2 * y2 * y2 / 16128.0);
  }
  // (1 - J0(y)) / p = p x^2 (1/4 - y^2/64 + y^4/2304)
  return p * x * x * (0.25 - y2 / 64.0 + y2 * y2 / 2304.0);
}

double level_norm(int level) { return std::sqrt(std::ldexp(1.0, level)); }

}  // namespace

double atom_transform_scaling(std::int64_t k, double p, TransformOrder order) {
  check_p(p);
  if (k < 0) {
    throw ArgumentError("scaling atom index must be >= 0");
  }
  const double a = static_cast<double>(k);
  const double b = a + 1.0;
  if (p == 0.0) {
    return order == TransformOrder::Order0 ? 1.0 : 0.0;
  }
  if (p * b < kSmallArgument) {
    return primitive_taylor(b, p, order) - primitive_taylor(a, p, order);
  }
  if (order == TransformOrder::Order0) {
    return (specfun::j0_primitive(p * b) - specfun::j0_primitive(p * a)) / p;
  }
  return (specfun::bessel_j0(p * a) - specfun::bessel_j0(p * b)) / p;
}

double atom_transform_detail(int level, std::int64_t index, double p, TransformOrder order) {
  check_p(p);
  if (level < 0 || level > kMaxLevel) {
    throw ArgumentError("detail atom level outside [0, " + std::to_string(kMaxLevel) + "]");
  }
  if (index < 0 || index >= (std::int64_t{1} << level)) {
    throw ArgumentError("detail atom index outside [0, 2^j)");
  }
  if (p == 0.0) {
    return 0.0;
  }
  const double width = std::ldexp(1.0, -level);
  const double a = width * static_cast<double>(index);
  const double m = width * (static_cast<double>(index) + 0.5);
  const double b = width * (static_cast<double>(index) + 1.0);
  const double norm = level_norm(level);
  if (p * b < kSmallArgument) {
    return norm * (2.0 * primitive_taylor(m, p, order) - primitive_taylor(a, p, order) -
                   primitive_taylor(b, p, order));
  }
  if (order == TransformOrder::Order0) {
    using specfun::j0_primitive;
    return norm * (2.0 * j0_primitive(p * m) - j0_primitive(p * a) - j0_primitive(p * b)) / p;
  }
  using specfun::bessel_j0;
  return norm * (bessel_j0(p * a) - 2.0 * bessel_j0(p * m) + bessel_j0(p * b)) / p;
}

double transform(const WaveletCoefficients& coeffs, TransformOrder order, double p) {
  check_p(p);
  const double q = p * coeffs.h();
  quadrature::CompensatedSum sum;
  sum.add(coeffs.scaling() * atom_transform_scaling(0, q, order));
  for (const auto& d : coeffs.details()) {
    sum.add(d.value * atom_transform_detail(d.level, d.index, q, order));
  }
  return coeffs.h() * sum.value();
}

Curve transform_grid(const WaveletCoefficients& coeffs, TransformOrder order,
                     std::span<const double> p_grid) {
  for (std::size_t i = 0; i < p_grid.size(); ++i) {
    if (!(p_grid[i] >= 0.0) || !std::isfinite(p_grid[i])) {
      throw ArgumentError("p grid values must be finite and >= 0");
    }
    if (i > 0 && !(p_grid[i] > p_grid[i - 1])) {
      throw ArgumentError("p grid must be strictly increasing");
    }
  }
  Curve curve;
  curve.reserve(p_grid.size());
  for (const double p : p_grid) {
    curve.push_back({p, transform(coeffs, order, p)});
  }
  return curve;
}

}  // namespace haarhankel
