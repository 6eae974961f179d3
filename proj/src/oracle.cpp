#include "haarhankel/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <limits>
#include <queue>
#include <string>
#include <tuple>
#include <utility>

#include "haarhankel/errors.hpp"
#include "haarhankel/quadrature.hpp"
#include "haarhankel/specfun.hpp"

namespace haarhankel {
namespace {

struct Panel {
  double lo;
  double hi;
  double left;   // GL over [lo, mid]
  double right;  // GL over [mid, hi]
  double error;  // |GL[lo, hi] - left - right|

  double value() const { return left + right; }
};

struct ByError {
  bool operator()(const Panel& a, const Panel& b) const { return a.error < b.error; }
};

class PanelIntegrator {
 public:
  PanelIntegrator(const std::function<double(double)>& g, std::size_t nodes)
      : g_(g), nodes_(nodes) {}

  Panel make(double lo, double hi, double whole) const {
    const double mid = 0.5 * (lo + hi);
    const double left = quadrature::gauss_legendre_integrate(g_, lo, mid, nodes_);
    const double right = quadrature::gauss_legendre_integrate(g_, mid, hi, nodes_);
    return {lo, hi, left, right, std::abs(whole - left - right)};
  }

  Panel make(double lo, double hi) const {
    return make(lo, hi, quadrature::gauss_legendre_integrate(g_, lo, hi, nodes_));
  }

 private:
  const std::function<double(double)>& g_;
  std::size_t nodes_;
};

double summed_value(std::vector<Panel> panels) {
  std::sort(panels.begin(), panels.end(),
            [](const Panel& a, const Panel& b) { return a.lo < b.lo; });
  quadrature::CompensatedSum sum;
  for (const auto& panel : panels) {
    sum.add(panel.value());
  }
  return sum.value();
}

QuadratureResult integrate_panels(const std::function<double(double)>& g,
                                  const std::vector<double>& edges,
                                  const QuadratureConfig& cfg) {
  const double lo = edges.front();
  const double hi = edges.back();
  if (edges.size() - 1 > cfg.max_panels) {
    throw IntegrationError("initial partition needs " + std::to_string(edges.size() - 1) +
                               " panels, budget is " + std::to_string(cfg.max_panels),
                           lo, hi, std::nan(""), std::numeric_limits<double>::infinity());
  }
  const PanelIntegrator integrator(g, cfg.nodes_per_panel);
  std::priority_queue<Panel, std::vector<Panel>, ByError> queue;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    queue.push(integrator.make(edges[i], edges[i + 1]));
  }

  // Exact recount; the loop below keeps cheaper running totals.
  const auto totals = [&queue]() {
    quadrature::CompensatedSum value;
    quadrature::CompensatedSum error;
    auto copy = queue;
    while (!copy.empty()) {
      value.add(copy.top().value());
      error.add(copy.top().error);
      copy.pop();
    }
    return std::pair{value.value(), error.value()};
  };

  auto [value, error] = totals();
  while (error > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value))) {
    const Panel worst = queue.top();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (queue.size() + 1 > cfg.max_panels || !(worst.lo < mid && mid < worst.hi)) {
      throw IntegrationError("panel quadrature did not reach tolerance on [" +
                                 std::to_string(lo) + ", " + std::to_string(hi) + "]",
                             lo, hi, value, error);
    }
    queue.pop();
    const Panel left = integrator.make(worst.lo, mid, worst.left);
    const Panel right = integrator.make(mid, worst.hi, worst.right);
    value += left.value() + right.value() - worst.value();
    error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    if (!(error > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value)))) {
      // Drift check on the running totals before accepting.
      std::tie(value, error) = totals();
    }
  }

  std::vector<Panel> panels;
  panels.reserve(queue.size());
  while (!queue.empty()) {
    panels.push_back(queue.top());
    queue.pop();
  }
  const std::size_t count = panels.size();
  return {summed_value(std::move(panels)), error, count};
}

std::vector<double> make_edges(double lo, double hi, std::span<const double> interior) {
  std::vector<double> edges{lo};
  for (const double x : interior) {
    if (x > lo && x < hi) {
      edges.push_back(x);
    }
  }
  edges.push_back(hi);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

}  // namespace

void QuadratureConfig::validate(bool need_r_max) const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
    throw ArgumentError("quadrature tolerances must be > 0");
  }
  if (max_panels < 1) {
    throw ArgumentError("max_panels must be >= 1");
  }
  if (nodes_per_panel < 2) {
    throw ArgumentError("nodes_per_panel must be >= 2");
  }
  if (need_r_max && (!(r_max > 0.0) || !std::isfinite(r_max))) {
    throw ArgumentError("r_max must be finite and > 0");
  }
}

std::vector<double> bessel_zero_estimates(TransformOrder order, double limit) {
  const double n = bessel_order(order);
  std::vector<double> zeros;
  for (int m = 1;; ++m) {
    const double beta = (m + 0.5 * n - 0.25) * std::numbers::pi;
    const double z = beta - (4.0 * n * n - 1.0) / (8.0 * beta);
    if (!(z < limit)) {
      break;
    }
    zeros.push_back(z);
  }
  return zeros;
}

QuadratureResult direct_integral_detailed(const std::function<double(double)>& g, double lo,
                                          double hi, const QuadratureConfig& cfg,
                                          std::span<const double> breakpoints) {
  cfg.validate(false);
  if (!(lo <= hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw ArgumentError("direct_integral: need finite lo <= hi");
  }
  if (lo == hi) {
    return {0.0, 0.0, 0};
  }
  return integrate_panels(g, make_edges(lo, hi, breakpoints), cfg);
}

double direct_integral(const std::function<double(double)>& g, double lo, double hi,
                       const QuadratureConfig& cfg, std::span<const double> breakpoints) {
  return direct_integral_detailed(g, lo, hi, cfg, breakpoints).value;
}

QuadratureResult direct_hankel_detailed(const RadialFunction& f, TransformOrder order, double p,
                                        const QuadratureConfig& cfg,
                                        std::span<const double> breakpoints) {
  cfg.validate(true);
  if (!(p >= 0.0) || !std::isfinite(p)) {
    throw DomainError("direct_hankel: p must be finite and >= 0");
  }
  if (!f.evaluate) {
    throw ArgumentError("direct_hankel: radial function has no evaluator");
  }
  std::vector<double> interior(breakpoints.begin(), breakpoints.end());
  if (p > 0.0) {
    for (const double z : bessel_zero_estimates(order, p * cfg.r_max)) {
      interior.push_back(z / p);
    }
  }
  const auto& evaluate = f.evaluate;
  const std::function<double(double)> integrand =
      order == TransformOrder::Order0
          ? std::function<double(double)>(
                [&evaluate, p](double r) { return evaluate(r) * r * specfun::bessel_j0(p * r); })
          : std::function<double(double)>(
                [&evaluate, p](double r) { return evaluate(r) * r * specfun::bessel_j1(p * r); });
  return integrate_panels(integrand, make_edges(0.0, cfg.r_max, interior), cfg);
}

double direct_hankel(const RadialFunction& f, TransformOrder order, double p,
                     const QuadratureConfig& cfg, std::span<const double> breakpoints) {
  return direct_hankel_detailed(f, order, p, cfg, breakpoints).value;
}

}  // namespace haarhankel
