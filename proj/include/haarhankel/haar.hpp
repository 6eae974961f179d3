#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace haarhankel {

/// A real function of radius on [0, h]. For decompose() `evaluate` is the
/// physical input f(r); the transform integrand is g(r) = f(r) r.
///
/// `g_antiderivative`, when set, is an antiderivative of g in r and replaces
/// numeric quadrature for the coefficient integrals.
struct RadialFunction {
  std::function<double(double)> evaluate;
  std::function<double(double)> g_antiderivative;

  bool has_antiderivative() const noexcept { return static_cast<bool>(g_antiderivative); }
};

/// Adaptive 7/15 Gauss-Kronrod settings for numeric coefficients.
struct IntegrationOptions {
  double abs_tol = 1e-12;
  int max_depth = 50;
};

struct DetailCoefficient {
  int level;           ///< j >= 0
  std::int64_t index;  ///< 0 <= k < 2^j
  double value;        ///< d_jk

  friend bool operator==(const DetailCoefficient&, const DetailCoefficient&) = default;
};

inline constexpr int kMaxLevel = 30;

/// Haar coefficients of g(h x) on the unit interval: one scaling
/// coefficient c_00 and a sparse set of detail coefficients d_jk,
/// 0 <= j <= max_level, stored coarse to fine with ascending k.
///
/// Immutable after construction. The constructor enforces every invariant
/// (finite values, index ranges, ordering, |d| > threshold when threshold > 0)
/// and throws ArgumentError / CapacityError otherwise.
class WaveletCoefficients {
 public:
  WaveletCoefficients(double h, int max_level, double scaling,
                      std::vector<DetailCoefficient> details, double threshold = 0.0);

  double h() const noexcept { return h_; }
  int max_level() const noexcept { return max_level_; }
  double scaling() const noexcept { return scaling_; }
  double threshold() const noexcept { return threshold_; }
  std::span<const DetailCoefficient> details() const noexcept { return details_; }

  /// d_jk, or 0 if the entry was not stored.
  double detail(int level, std::int64_t index) const;

  /// Copy keeping only |d_jk| > eps. eps must not be below the current threshold.
  WaveletCoefficients sparsified(double eps) const;

 private:
  double h_;
  int max_level_;
  double scaling_;
  std::vector<DetailCoefficient> details_;
  double threshold_;
};

/// int_k^{k+1} g(x) dx for a function already expressed on the rescaled axis.
double scaling_coefficient(const RadialFunction& g, std::int64_t k,
                           const IntegrationOptions& opts = {});

/// 2^{j/2} (int over [2^-j k, 2^-j (k+1/2)] - int over [2^-j (k+1/2), 2^-j (k+1)]) of g.
double detail_coefficient(const RadialFunction& g, int level, std::int64_t index,
                          const IntegrationOptions& opts = {});

/// Haar table of g(r) = f(r) r truncated to [0, h], levels 0..max_level, with
/// details |d| <= eps dropped (eps = 0 drops exact zeros only).
WaveletCoefficients decompose(const RadialFunction& f, double h, int max_level,
                              double eps, const IntegrationOptions& opts = {});

/// Same as decompose() but takes the rescaled integrand g_hat(x), x in [0, 1],
/// directly (g_antiderivative, if set, is an antiderivative in x).
WaveletCoefficients decompose_unit(const RadialFunction& g_hat, double h, int max_level,
                                   double eps, const IntegrationOptions& opts = {});

/// Partial Haar sum at rescaled coordinate x in [0, 1]. Atoms are
/// right-continuous; x = 1 takes the left limit.
double reconstruct(const WaveletCoefficients& coeffs, double x);

// ---------------------------------------------------------------------------
// Gaussian test case: f(r) = r exp(-a^2 r^2), g(r) = r^2 exp(-a^2 r^2),
// order-1 transform (p / 4a^4) exp(-p^2 / 4a^2).

/// f with the closed-form antiderivative of g attached.
RadialFunction gaussian_test_function(double a);

/// (sqrt(pi) erf(a r) - 2 a r exp(-a^2 r^2)) / (4 a^3)
double gaussian_g_antiderivative(double a, double r);

/// int_lo^hi r^2 exp(-a^2 r^2) dr, evaluated through erfc in the tail so that
/// narrow far-out intervals keep their relative accuracy.
double gaussian_g_integral(double a, double lo, double hi);

/// Closed-form Haar table of the Gaussian test case on [0, h] (every detail
/// kept, threshold 0).
WaveletCoefficients gaussian_coefficients(double a, double h, int max_level);

/// Exact order-1 Hankel transform of the Gaussian test function.
double gaussian_exact_transform(double a, double p);

}  // namespace haarhankel
