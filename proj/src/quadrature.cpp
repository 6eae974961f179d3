#include "haarhankel/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <queue>
#include <numbers>
#include <string>
#include <vector>

#include "haarhankel/errors.hpp"

namespace haarhankel::quadrature {
namespace {

struct StoredRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

StoredRule compute_gauss_legendre(std::size_t n) {
  StoredRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const std::size_t half = (n + 1) / 2;
  for (std::size_t i = 0; i < half; ++i) {
    // Tricomi initial guess for the i-th largest root.
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double kk = static_cast<double>(k);
        const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
        p0 = p1;
        p1 = p2;
      }
      // p1 = P_n(x), p0 = P_{n-1}(x)
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) {
        break;
      }
    }
    // Recompute the derivative at the converged root.
    double p0 = 1.0;
    double p1 = x;
    for (std::size_t k = 2; k <= n; ++k) {
      const double kk = static_cast<double>(k);
      const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
      p0 = p1;
      p1 = p2;
    }
    dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) {
    rule.nodes[n / 2] = 0.0;
  }
  return rule;
}

// 7/15 Gauss-Kronrod abscissae and weights (QUADPACK qk15).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Interval {
  double lo;
  double hi;
  int depth;
  GaussKronrodEstimate estimate;
};

struct LargerError {
  bool operator()(const Interval& a, const Interval& b) const {
    return a.estimate.error < b.estimate.error;
  }
};

}  // namespace

GaussLegendreRule gauss_legendre(std::size_t n) {
  if (n == 0) {
    throw ArgumentError("Gauss-Legendre rule needs at least one node");
  }
  static std::mutex mutex;
  static std::map<std::size_t, std::unique_ptr<StoredRule>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) {
    slot = std::make_unique<StoredRule>(compute_gauss_legendre(n));
  }
  return {slot->nodes, slot->weights};
}

double gauss_legendre_integrate(const std::function<double(double)>& f,
                                double lo, double hi, std::size_t n) {
  const auto rule = gauss_legendre(n);
  const double c = 0.5 * (lo + hi);
  const double r = 0.5 * (hi - lo);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * f(c + r * rule.nodes[i]);
  }
  return r * sum;
}

GaussKronrodEstimate gauss_kronrod15(const std::function<double(double)>& f,
                                     double lo, double hi) {
  const double c = 0.5 * (lo + hi);
  const double r = 0.5 * (hi - lo);
  const double fc = f(c);
  double kronrod = kWgk[7] * fc;
  double gauss = kWg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = r * kXgk[i];
    const double pair = f(c - dx) + f(c + dx);
    kronrod += kWgk[i] * pair;
    if (i % 2 == 1) {
      gauss += kWg[i / 2] * pair;
    }
  }
  return {r * kronrod, std::abs(r * (kronrod - gauss))};
}

double adaptive_gauss_kronrod(const std::function<double(double)>& f,
                              double lo, double hi, double abs_tol,
                              int max_depth) {
  if (!(abs_tol > 0.0) || max_depth < 0) {
    throw ArgumentError("adaptive_gauss_kronrod: abs_tol must be > 0 and max_depth >= 0");
  }
  if (lo == hi) {
    return 0.0;
  }
  // Global strategy: always bisect the interval with the largest error.
  std::priority_queue<Interval, std::vector<Interval>, LargerError> queue;
  queue.push({lo, hi, 0, gauss_kronrod15(f, lo, hi)});
  double value = queue.top().estimate.value;
  double error = queue.top().estimate.error;
  while (!(error <= abs_tol)) {
    const Interval worst = queue.top();
    if (worst.depth >= max_depth || !std::isfinite(error)) {
      throw IntegrationError("adaptive Gauss-Kronrod failed to converge on [" +
                                 std::to_string(worst.lo) + ", " + std::to_string(worst.hi) + "]",
                             worst.lo, worst.hi, value, error);
    }
    queue.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    const Interval left{worst.lo, mid, worst.depth + 1, gauss_kronrod15(f, worst.lo, mid)};
    const Interval right{mid, worst.hi, worst.depth + 1, gauss_kronrod15(f, mid, worst.hi)};
    value += left.estimate.value + right.estimate.value - worst.estimate.value;
    error += left.estimate.error + right.estimate.error - worst.estimate.error;
    queue.push(left);
    queue.push(right);
    if (error <= abs_tol) {
      // Recount to shed drift from the running updates.
      CompensatedSum v;
      CompensatedSum e;
      for (auto copy = queue; !copy.empty(); copy.pop()) {
        v.add(copy.top().estimate.value);
        e.add(copy.top().estimate.error);
      }
      value = v.value();
      error = e.value();
    }
  }
  return value;
}

}  // namespace haarhankel::quadrature
