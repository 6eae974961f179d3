#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace haarhankel::quadrature {

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::span<const double> nodes;
  std::span<const double> weights;
};

/// Returns the n-point Gauss-Legendre rule (n >= 1). Rules are computed once
/// by Newton iteration on the Legendre recurrence and cached for the life of
/// the process; the returned spans stay valid.
GaussLegendreRule gauss_legendre(std::size_t n);

/// n-point Gauss-Legendre approximation of int_lo^hi f.
double gauss_legendre_integrate(const std::function<double(double)>& f,
                                double lo, double hi, std::size_t n);

struct GaussKronrodEstimate {
  double value;  ///< 15-point Kronrod result
  double error;  ///< |K15 - G7|
};

/// One application of the 7/15-point Gauss-Kronrod pair on [lo, hi].
GaussKronrodEstimate gauss_kronrod15(const std::function<double(double)>& f,
                                     double lo, double hi);

/// Globally adaptive 7/15 Gauss-Kronrod: the interval with the largest
/// |K15 - G7| is bisected until the summed estimate is <= abs_tol. Throws
/// IntegrationError when the worst interval is already max_depth bisections
/// deep.
double adaptive_gauss_kronrod(const std::function<double(double)>& f,
                              double lo, double hi, double abs_tol,
                              int max_depth);

/// Neumaier compensated accumulator.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if ((sum_ >= 0 ? sum_ : -sum_) >= (x >= 0 ? x : -x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const noexcept { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

}  // namespace haarhankel::quadrature
