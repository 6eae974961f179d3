#include "haarhankel/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "haarhankel/csv.hpp"
#include "haarhankel/errors.hpp"

namespace haarhankel::cli {
namespace {

RadialFunction input_function(const RunConfig& cfg) {
  if (cfg.function == FunctionKind::Gaussian) {
    return gaussian_test_function(cfg.a);
  }
  std::ifstream in(cfg.input);
  if (!in) {
    throw InputError("cannot read sample file '" + cfg.input + "'", 0);
  }
  return io::sampled_function(io::read_samples_csv(in));
}

WaveletCoefficients build_coefficients(const RunConfig& cfg, const RadialFunction& f, int level) {
  if (cfg.function == FunctionKind::Gaussian) {
    return gaussian_coefficients(cfg.a, cfg.h, level).sparsified(cfg.eps);
  }
  return decompose(f, cfg.h, level, cfg.eps, cfg.integration);
}

QuadratureConfig oracle_config(const RunConfig& cfg) {
  QuadratureConfig quad = cfg.quad;
  quad.r_max = cfg.h;
  return quad;
}

bool analytic_reference(const RunConfig& cfg) {
  return cfg.function == FunctionKind::Gaussian && cfg.order == TransformOrder::Order1;
}

// f whose g = f r is the Haar partial sum stored in `coeffs`.
RadialFunction reconstructed_function(const WaveletCoefficients& coeffs) {
  RadialFunction f;
  f.evaluate = [&coeffs](double r) {
    const double x = std::min(1.0, r / coeffs.h());
    return reconstruct(coeffs, x) / r;
  };
  return f;
}

std::vector<double> dyadic_breakpoints(const WaveletCoefficients& coeffs) {
  const int finest = coeffs.max_level() + 1;
  const std::size_t cells = std::size_t{1} << finest;
  std::vector<double> points;
  points.reserve(cells - 1);
  for (std::size_t m = 1; m < cells; ++m) {
    points.push_back(coeffs.h() * std::ldexp(static_cast<double>(m), -finest));
  }
  return points;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

void RunConfig::validate() const {
  if (function == FunctionKind::Gaussian && (!(a > 0.0) || !std::isfinite(a))) {
    throw ArgumentError("--a must be > 0");
  }
  if (function == FunctionKind::Samples && input.empty()) {
    throw ArgumentError("--function samples requires --input <path>");
  }
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw ArgumentError("--h must be > 0");
  }
  const auto check_level = [](int j) {
    if (j < 0 || j > kMaxLevel) {
      throw ArgumentError("levels must lie in [0, " + std::to_string(kMaxLevel) + "]");
    }
  };
  check_level(level);
  std::for_each(levels.begin(), levels.end(), check_level);
  if (!(eps >= 0.0) || !std::isfinite(eps)) {
    throw ArgumentError("--eps must be >= 0");
  }
  if (!(p_min >= 0.0) || !(p_max > p_min) || !std::isfinite(p_max)) {
    throw ArgumentError("need 0 <= pmin < pmax");
  }
  if (p_count < 1) {
    throw ArgumentError("--pcount must be >= 1");
  }
  if (command == Command::ErrorStudy && levels.size() < 2) {
    throw ArgumentError("error-study needs at least two levels (--levels 2,3,4)");
  }
  if (compare_analytic && !analytic_reference(*this)) {
    throw ArgumentError("--compare-analytic is available for the gaussian at order 1 only");
  }
  quad.validate(false);
}

std::vector<double> RunConfig::p_grid() const {
  std::vector<double> grid(static_cast<std::size_t>(p_count));
  if (p_count == 1) {
    grid[0] = p_min;
    return grid;
  }
  const double step = (p_max - p_min) / (p_count - 1);
  for (int i = 0; i < p_count; ++i) {
    grid[i] = i + 1 == p_count ? p_max : p_min + step * i;
  }
  return grid;
}

std::string cmd_coeffs(const RunConfig& cfg) {
  cfg.validate();
  const auto coeffs = build_coefficients(cfg, input_function(cfg), cfg.level);
  std::ostringstream out;
  io::write_coefficients_csv(out, coeffs);
  return out.str();
}

std::string cmd_transform(const RunConfig& cfg) {
  cfg.validate();
  const auto coeffs = [&cfg]() {
    if (!cfg.coeffs_input.empty()) {
      std::ifstream in(cfg.coeffs_input);
      if (!in) {
        throw InputError("cannot read coefficient table '" + cfg.coeffs_input + "'", 0);
      }
      return io::read_coefficients_csv(in, cfg.h);
    }
    return build_coefficients(cfg, input_function(cfg), cfg.level);
  }();
  const auto grid = cfg.p_grid();
  const auto curve = transform_grid(coeffs, cfg.order, grid);

  std::vector<std::string> header{"p", "value"};
  if (cfg.compare_analytic) {
    header.insert(header.end(), {"exact", "abs_err"});
  }
  std::vector<std::vector<double>> rows;
  rows.reserve(curve.size());
  for (const auto& point : curve) {
    if (cfg.compare_analytic) {
      const double exact = gaussian_exact_transform(cfg.a, point.p);
      rows.push_back({point.p, point.value, exact, std::abs(point.value - exact)});
    } else {
      rows.push_back({point.p, point.value});
    }
  }
  return io::format_table(header, rows);
}

std::string cmd_error_study(const RunConfig& cfg) {
  cfg.validate();
  const auto f = input_function(cfg);
  const auto grid = cfg.p_grid();

  std::vector<double> reference(grid.size());
  if (analytic_reference(cfg)) {
    std::transform(grid.begin(), grid.end(), reference.begin(),
                   [&cfg](double p) { return gaussian_exact_transform(cfg.a, p); });
  } else {
    const auto quad = oracle_config(cfg);
    std::transform(grid.begin(), grid.end(), reference.begin(),
                   [&](double p) { return direct_hankel(f, cfg.order, p, quad); });
  }

  std::vector<std::string> header{"p"};
  std::vector<std::vector<double>> rows(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    rows[i].push_back(grid[i]);
  }
  for (const int level : cfg.levels) {
    header.push_back("err_J" + std::to_string(level));
    const auto curve = transform_grid(build_coefficients(cfg, f, level), cfg.order, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      rows[i].push_back(std::abs(curve[i].value - reference[i]));
    }
  }
  return io::format_table(header, rows);
}

std::string cmd_bench(const RunConfig& cfg) {
  cfg.validate();
  const auto f = input_function(cfg);
  const auto grid = cfg.p_grid();
  const auto quad = oracle_config(cfg);
  const std::vector<int> levels = cfg.levels.empty() ? std::vector<int>{cfg.level} : cfg.levels;

  std::vector<std::vector<double>> rows;
  for (const int level : levels) {
    const auto coeffs = build_coefficients(cfg, f, level);

    auto start = std::chrono::steady_clock::now();
    const auto curve = transform_grid(coeffs, cfg.order, grid);
    const double series_ms = elapsed_ms(start);

    // The oracle integrates the same Haar partial sum, so the two columns
    // differ only by quadrature and special-function error.
    const auto step = reconstructed_function(coeffs);
    const auto breaks = dyadic_breakpoints(coeffs);
    start = std::chrono::steady_clock::now();
    double max_diff = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double oracle = direct_hankel(step, cfg.order, grid[i], quad, breaks);
      max_diff = std::max(max_diff, std::abs(oracle - curve[i].value));
    }
    const double oracle_ms = elapsed_ms(start);
    rows.push_back({static_cast<double>(grid.size()), static_cast<double>(level), series_ms,
                    oracle_ms, max_diff});
  }
  return io::format_table({"p_count", "J", "series_ms", "oracle_ms", "max_abs_diff"}, rows);
}

int run(int argc, const char* const* argv) {
  CLI::App app{"Hankel transforms of order 0 and 1 through Haar wavelet series", "hankel-haar"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string function = "gaussian";
  int order = 1;

  // --h is the support length, so help is long-form only.
  app.set_help_flag("--help", "Print this help message and exit");
  const auto add_common = [&](CLI::App* sub) {
    sub->set_help_flag("--help", "Print this help message and exit");
    sub->add_option("--function", function, "Input function")
        ->check(CLI::IsMember({"gaussian", "samples"}));
    sub->add_option("--a", cfg.a, "Gaussian width parameter");
    sub->add_option("--input", cfg.input, "Two-column r,value sample file");
    sub->add_option("--order", order, "Hankel order")->check(CLI::IsMember({0, 1}));
    sub->add_option("--h", cfg.h, "Support length");
    sub->add_option("--level", cfg.level, "Finest detail level J");
    sub->add_option("--levels", cfg.levels, "Comma separated list of levels")->delimiter(',');
    sub->add_option("--eps", cfg.eps, "Detail threshold");
    sub->add_option("--pmin", cfg.p_min);
    sub->add_option("--pmax", cfg.p_max);
    sub->add_option("--pcount", cfg.p_count);
    sub->add_option("--output,-o", cfg.output, "Output CSV path ('-' for stdout)");
    sub->add_option("--abs-tol", cfg.quad.abs_tol, "Oracle absolute tolerance");
    sub->add_option("--rel-tol", cfg.quad.rel_tol, "Oracle relative tolerance");
    sub->add_option("--max-panels", cfg.quad.max_panels, "Oracle panel budget");
    sub->add_option("--nodes-per-panel", cfg.quad.nodes_per_panel, "Gauss-Legendre nodes");
  };

  auto* coeffs = app.add_subcommand("coeffs", "Write the Haar coefficient table");
  auto* transform = app.add_subcommand("transform", "Write the transform curve p,value");
  auto* study = app.add_subcommand("error-study", "Absolute error per level against a reference");
  auto* bench = app.add_subcommand("bench", "Time the series against the quadrature oracle");
  for (auto* sub : {coeffs, transform, study, bench}) {
    add_common(sub);
  }
  transform->add_flag("--compare-analytic", cfg.compare_analytic,
                      "Add exact and abs_err columns (gaussian, order 1)");
  transform->add_option("--coeffs", cfg.coeffs_input, "Read coefficients from a j,k,value table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kSuccess : kArgumentError;
  }

  cfg.function = function == "samples" ? FunctionKind::Samples : FunctionKind::Gaussian;
  cfg.order = order == 0 ? TransformOrder::Order0 : TransformOrder::Order1;

  try {
    std::string csv;
    if (coeffs->parsed()) {
      cfg.command = Command::Coeffs;
      csv = cmd_coeffs(cfg);
    } else if (transform->parsed()) {
      cfg.command = Command::Transform;
      csv = cmd_transform(cfg);
    } else if (study->parsed()) {
      cfg.command = Command::ErrorStudy;
      csv = cmd_error_study(cfg);
    } else {
      cfg.command = Command::Bench;
      csv = cmd_bench(cfg);
    }
    if (cfg.output.empty() || cfg.output == "-") {
      std::cout << csv;
    } else {
      io::write_file_atomic(cfg.output, csv);
    }
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const IntegrationError& e) {
    std::cerr << "convergence error: " << e.what() << " (estimate " << e.estimate()
              << ", error bound " << e.error_bound() << ")\n";
    return kConvergenceError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "argument error: " << e.what() << '\n';
    return kArgumentError;
  } catch (const std::domain_error& e) {
    std::cerr << "argument error: " << e.what() << '\n';
    return kArgumentError;
  } catch (const std::length_error& e) {
    std::cerr << "argument error: " << e.what() << '\n';
    return kArgumentError;
  }
  return kSuccess;
}

}  // namespace haarhankel::cli
