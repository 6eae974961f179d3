#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "haarhankel/cli.hpp"
#include "haarhankel/csv.hpp"
#include "haarhankel/errors.hpp"

using namespace haarhankel;
namespace fs = std::filesystem;

namespace {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  std::size_t column(const std::string& name) const {
    const auto it = std::find(header.begin(), header.end(), name);
    REQUIRE(it != header.end());
    return static_cast<std::size_t>(it - header.begin());
  }
  double max_of(const std::string& name) const {
    const std::size_t c = column(name);
    double m = 0.0;
    for (const auto& row : rows) {
      m = std::max(m, row[c]);
    }
    return m;
  }
};

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    cells.push_back(cell);
  }
  return cells;
}

Table parse(const std::string& csv) {
  Table table;
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  table.header = split(line);
  while (std::getline(in, line)) {
    std::vector<double> row;
    for (const auto& cell : split(line)) {
      row.push_back(std::stod(cell));
    }
    REQUIRE(row.size() == table.header.size());
    table.rows.push_back(row);
  }
  return table;
}

fs::path scratch_dir() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("haarhankel_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

fs::path write_text(const std::string& name, const std::string& text) {
  const auto path = scratch_dir() / name;
  std::ofstream(path) << text;
  return path;
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "hankel-haar");
  std::vector<const char*> argv;
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  return cli::run(static_cast<int>(argv.size()), argv.data());
}

cli::RunConfig gaussian(int level) {
  cli::RunConfig cfg;
  cfg.level = level;
  return cfg;
}

std::string sample_file() {
  std::string text = "r,value\n";
  for (int i = 0; i <= 60; ++i) {
    const double r = 0.1 * i;
    text += io::format_double(r) + "," + io::format_double(r * std::exp(-r * r)) + "\n";
  }
  return text;
}

}  // namespace

TEST_CASE("coeffs row counts") {
  CHECK(parse(cli::cmd_coeffs(gaussian(0))).rows.size() == 2);
  const auto full = parse(cli::cmd_coeffs(gaussian(3)));
  CHECK(full.header == std::vector<std::string>{"j", "k", "value"});
  CHECK(full.rows.size() == 16);
  CHECK(full.rows[0][0] == -1.0);

  auto cfg = gaussian(3);
  cfg.eps = 1e-3;
  const auto sparse = parse(cli::cmd_coeffs(cfg));
  CHECK(sparse.rows.size() <= 16);
  CHECK(sparse.rows.size() < full.rows.size());
  for (std::size_t i = 1; i < sparse.rows.size(); ++i) {
    CHECK(std::abs(sparse.rows[i][2]) > 1e-3);
  }
}

TEST_CASE("transform curve") {
  auto cfg = gaussian(3);
  cfg.compare_analytic = true;
  cfg.p_count = 201;
  const auto j3 = parse(cli::cmd_transform(cfg));
  REQUIRE(j3.rows.size() == 201);
  CHECK(j3.rows[0][0] == 0.0);
  CHECK(j3.rows[0][1] == 0.0);
  CHECK(j3.rows.back()[0] == 10.0);
  CHECK(j3.max_of("abs_err") <= 1e-2);

  cfg.level = 8;
  const auto j8 = parse(cli::cmd_transform(cfg));
  CHECK(j8.max_of("abs_err") < j3.max_of("abs_err"));

  cfg.order = TransformOrder::Order0;
  CHECK_THROWS_AS(cli::cmd_transform(cfg), ArgumentError);
}

TEST_CASE("error-study") {
  auto cfg = gaussian(3);
  cfg.command = cli::Command::ErrorStudy;
  cfg.levels = {2, 3, 4};
  const auto study = parse(cli::cmd_error_study(cfg));
  CHECK(study.header == std::vector<std::string>{"p", "err_J2", "err_J3", "err_J4"});
  CHECK(study.max_of("err_J3") <= study.max_of("err_J2"));
  CHECK(study.max_of("err_J4") <= study.max_of("err_J3"));

  cfg.p_min = 0.0;
  cfg.p_count = 1;
  const auto origin = parse(cli::cmd_error_study(cfg));
  REQUIRE(origin.rows.size() == 1);
  for (std::size_t c = 1; c < origin.header.size(); ++c) {
    CHECK(origin.rows[0][c] == 0.0);
  }

  cfg.levels = {3, 4};
  cfg.p_max = 100.0;
  cfg.p_count = 2001;
  const auto wide = parse(cli::cmd_error_study(cfg));
  const std::size_t c = wide.column("err_J3");
  double near = 0.0;
  double far = 0.0;
  for (const auto& row : wide.rows) {
    (row[0] <= 20.0 ? near : far) = std::max(row[0] <= 20.0 ? near : far, row[c]);
  }
  CHECK(far <= near);

  cfg.levels = {3};
  CHECK_THROWS_AS(cli::cmd_error_study(cfg), ArgumentError);
}

TEST_CASE("error-study against the oracle for sampled input") {
  cli::RunConfig cfg;
  cfg.command = cli::Command::ErrorStudy;
  cfg.function = cli::FunctionKind::Samples;
  cfg.input = write_text("gauss_samples.csv", sample_file()).string();
  cfg.levels = {2, 4, 6};
  cfg.order = TransformOrder::Order0;
  cfg.p_count = 21;
  const auto study = parse(cli::cmd_error_study(cfg));
  CHECK(study.max_of("err_J6") < study.max_of("err_J2"));
}

TEST_CASE("bench agrees with the oracle") {
  auto cfg = gaussian(4);
  cfg.command = cli::Command::Bench;
  cfg.levels = {3, 4};
  cfg.p_count = 11;
  for (auto order : {TransformOrder::Order0, TransformOrder::Order1}) {
    cfg.order = order;
    const auto bench = parse(cli::cmd_bench(cfg));
    CHECK(bench.header == std::vector<std::string>{"p_count", "J", "series_ms", "oracle_ms", "max_abs_diff"});
    REQUIRE(bench.rows.size() == 2);
    CHECK(bench.rows[0][0] == 11.0);
    CHECK(bench.rows[1][1] == 4.0);
    CHECK(bench.max_of("max_abs_diff") <= 1e-9);
  }
}

TEST_CASE("coefficient tables round-trip through files") {
  const auto table = scratch_dir() / "coeffs.csv";
  const auto direct = scratch_dir() / "direct.csv";
  const auto via = scratch_dir() / "via.csv";
  REQUIRE(run_cli({"coeffs", "--level", "6", "--eps", "1e-6", "-o", table.string()}) == 0);
  REQUIRE(run_cli({"transform", "--level", "6", "--eps", "1e-6", "--pmax", "30", "-o", direct.string()}) == 0);
  REQUIRE(run_cli({"transform", "--coeffs", table.string(), "--pmax", "30", "-o", via.string()}) == 0);
  CHECK(read_text(direct) == read_text(via));
  CHECK(!fs::exists(fs::path(via.string() + ".tmp")));
}

TEST_CASE("repeated runs are byte-identical") {
  auto cfg = gaussian(5);
  cfg.order = TransformOrder::Order0;
  CHECK(cli::cmd_transform(cfg) == cli::cmd_transform(cfg));
  cfg.function = cli::FunctionKind::Samples;
  cfg.input = write_text("det_samples.csv", sample_file()).string();
  CHECK(cli::cmd_coeffs(cfg) == cli::cmd_coeffs(cfg));
}

TEST_CASE("exit codes") {
  const auto out = (scratch_dir() / "exit.csv").string();
  CHECK(run_cli({"transform", "-o", out}) == cli::kSuccess);
  CHECK(run_cli({"--help"}) == cli::kSuccess);
  CHECK(run_cli({}) == cli::kArgumentError);
  CHECK(run_cli({"transform", "--order", "2"}) == cli::kArgumentError);
  CHECK(run_cli({"transform", "--level", "31"}) == cli::kArgumentError);
  CHECK(run_cli({"transform", "--pmin", "5", "--pmax", "1"}) == cli::kArgumentError);
  CHECK(run_cli({"transform", "--a", "-1"}) == cli::kArgumentError);
  CHECK(run_cli({"transform", "--function", "samples"}) == cli::kArgumentError);
  CHECK(run_cli({"error-study", "--levels", "3"}) == cli::kArgumentError);
  CHECK(run_cli({"coeffs", "--bogus"}) == cli::kArgumentError);

  const auto missing = (scratch_dir() / "missing.csv").string();
  CHECK(run_cli({"coeffs", "--function", "samples", "--input", missing}) == cli::kInputError);
  const auto bad = write_text("bad.csv", "r,value\n0,1\n0.5,x\n").string();
  CHECK(run_cli({"coeffs", "--function", "samples", "--input", bad}) == cli::kInputError);

  const auto good = write_text("good.csv", sample_file()).string();
  CHECK(run_cli({"error-study", "--function", "samples", "--input", good, "--levels", "2,3", "--pmax", "40",
                 "--pcount", "3", "--max-panels", "1", "-o", out}) == cli::kConvergenceError);
}

TEST_CASE("sample file parsing") {
  const auto parse_samples = [](const std::string& text) {
    std::istringstream in(text);
    return io::read_samples_csv(in);
  };
  CHECK(parse_samples("r,value\n0,1\n1,2\n").size() == 2);
  CHECK(parse_samples("0,1\n1,2\n2,0\n").size() == 3);  // no header
  const auto line_of = [&](const std::string& text) {
    try {
      parse_samples(text);
    } catch (const InputError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  CHECK(line_of("r,value\n0,1\n1\n") == 3);
  CHECK(line_of("r,value\n0,1\n1,2\n0.5,3\n") == 4);  // not increasing
  CHECK(line_of("r,value\n-1,1\n") == 2);
  CHECK(line_of("r,value\n0,1\n1,abc\n") == 3);
  CHECK(line_of("r,value\n") > 0);  // empty

  const auto f = io::sampled_function({{0.5, 2.0}, {1.5, 4.0}});
  CHECK(f.evaluate(0.1) == 2.0);
  CHECK(f.evaluate(1.0) == doctest::Approx(3.0));
  CHECK(f.evaluate(2.0) == 0.0);
}
