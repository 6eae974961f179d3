#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "haarhankel/haar.hpp"
#include "haarhankel/series.hpp"

namespace haarhankel {

/// Settings of the direct quadrature oracle.
struct QuadratureConfig {
  double abs_tol = 1e-11;
  double rel_tol = 1e-11;
  std::size_t max_panels = 100000;
  std::size_t nodes_per_panel = 32;
  double r_max = 0.0;  ///< truncation radius for direct_hankel, must be set > 0

  /// Throws ArgumentError if a field violates its contract. `need_r_max`
  /// additionally requires r_max > 0.
  void validate(bool need_r_max) const;
};

struct QuadratureResult {
  double value;
  double error;        ///< sum of per-panel |whole - halves| estimates
  std::size_t panels;  ///< panels in the final partition
};

/// McMahon (first order) estimates of the positive zeros of J_n below `limit`.
std::vector<double> bessel_zero_estimates(TransformOrder order, double limit);

/// int_lo^hi g by globally adaptive panel quadrature: each panel is integrated
/// with an n-point Gauss-Legendre rule and once more as two halves, the
/// difference being its error estimate; the worst panel is bisected until the
/// summed estimate is below max(abs_tol, rel_tol |value|). Optional breakpoints
/// inside (lo, hi) become initial panel edges.
///
/// Throws IntegrationError (carrying the best estimate and its error bound)
/// when max_panels would be exceeded.
QuadratureResult direct_integral_detailed(const std::function<double(double)>& g, double lo,
                                          double hi, const QuadratureConfig& cfg,
                                          std::span<const double> breakpoints = {});

double direct_integral(const std::function<double(double)>& g, double lo, double hi,
                       const QuadratureConfig& cfg, std::span<const double> breakpoints = {});

/// int_0^{r_max} f(r) r J_n(p r) dr with initial panels bounded by the
/// approximate zeros of J_n(p r), so each holds at most half an oscillation.
QuadratureResult direct_hankel_detailed(const RadialFunction& f, TransformOrder order, double p,
                                        const QuadratureConfig& cfg,
                                        std::span<const double> breakpoints = {});

double direct_hankel(const RadialFunction& f, TransformOrder order, double p,
                     const QuadratureConfig& cfg, std::span<const double> breakpoints = {});

}  // namespace haarhankel
