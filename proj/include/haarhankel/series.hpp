#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "haarhankel/haar.hpp"

namespace haarhankel {

enum class TransformOrder { Order0, Order1 };

/// Bessel order n of J_n.
constexpr int bessel_order(TransformOrder order) noexcept {
  return order == TransformOrder::Order0 ? 0 : 1;
}

struct CurvePoint {
  double p;
  double value;

  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

/// Points ordered by strictly increasing p.
using Curve = std::vector<CurvePoint>;

/// int_k^{k+1} J_n(p x) dx, the transform of the unit scaling atom phi(x - k).
///   Order0: [G(p(k+1)) - G(pk)] / p,  G = j0_primitive
///   Order1: [J0(pk) - J0(p(k+1))] / p
/// p = 0 gives the limits 1 and 0.
double atom_transform_scaling(std::int64_t k, double p, TransformOrder order);

/// int psi_jk(x) J_n(p x) dx with psi_jk = 2^{j/2} psi(2^j x - k). With
/// a = 2^-j k, m = 2^-j (k + 1/2), b = 2^-j (k + 1):
///   Order0: 2^{j/2} [2 G(pm) - G(pa) - G(pb)] / p
///   Order1: 2^{j/2} [J0(pa) - 2 J0(pm) + J0(pb)] / p
/// Vanishes at p = 0.
double atom_transform_detail(int level, std::int64_t index, double p, TransformOrder order);

/// Hankel transform int_0^h g(r) J_n(p r) dr of the function described by
/// `coeffs`: h times the unit-interval series evaluated at p h.
double transform(const WaveletCoefficients& coeffs, TransformOrder order, double p);

/// transform() over a strictly increasing grid of p >= 0.
Curve transform_grid(const WaveletCoefficients& coeffs, TransformOrder order,
                     std::span<const double> p_grid);

}  // namespace haarhankel
