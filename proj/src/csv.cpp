#include "haarhankel/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <memory>
#include <ostream>
#include <sstream>
#include <system_error>

#include "haarhankel/errors.hpp"

namespace haarhankel::io {
namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) {
    fields.push_back(trim(field));
  }
  if (!line.empty() && line.back() == ',') {
    fields.emplace_back();
  }
  return fields;
}

bool parse_double(const std::string& text, double& out) {
  if (text.empty()) {
    return false;
  }
  char* end = nullptr;
  out = std::strtod(text.c_str(), &end);
  return end == text.c_str() + text.size();
}

bool parse_int(const std::string& text, long long& out) {
  const auto* begin = text.data();
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc() && ptr == end && !text.empty();
}

}  // namespace

std::string format_double(double x) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", x);
  return buffer;
}

void write_coefficients_csv(std::ostream& out, const WaveletCoefficients& coeffs) {
  out << "j,k,value\n";
  out << "-1,0," << format_double(coeffs.scaling()) << '\n';
  for (const auto& d : coeffs.details()) {
    out << d.level << ',' << d.index << ',' << format_double(d.value) << '\n';
  }
}

WaveletCoefficients read_coefficients_csv(std::istream& in, double h) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) {
    throw InputError("coefficient table is empty", 0);
  }
  ++line_no;
  if (trim(line) != "j,k,value") {
    throw InputError("expected header 'j,k,value'", line_no);
  }
  bool have_scaling = false;
  double scaling = 0.0;
  int max_level = 0;
  std::vector<DetailCoefficient> details;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) {
      continue;
    }
    const auto fields = split_fields(line);
    long long j = 0;
    long long k = 0;
    double value = 0.0;
    if (fields.size() != 3 || !parse_int(fields[0], j) || !parse_int(fields[1], k) ||
        !parse_double(fields[2], value)) {
      throw InputError("malformed coefficient row '" + trim(line) + "'", line_no);
    }
    if (!std::isfinite(value)) {
      throw InputError("non-finite coefficient", line_no);
    }
    if (j == -1) {
      if (k != 0 || have_scaling) {
        throw InputError("exactly one scaling row (j = -1, k = 0) is allowed", line_no);
      }
      have_scaling = true;
      scaling = value;
      continue;
    }
    if (j < 0 || j > kMaxLevel || k < 0 || k >= (1LL << j)) {
      throw InputError("detail index (" + std::to_string(j) + ", " + std::to_string(k) +
                           ") out of range",
                       line_no);
    }
    if (!details.empty()) {
      const auto& prev = details.back();
      if (j < prev.level || (j == prev.level && k <= prev.index)) {
        throw InputError("rows must be ordered by (j, k) without duplicates", line_no);
      }
    }
    details.push_back({static_cast<int>(j), static_cast<std::int64_t>(k), value});
    max_level = std::max(max_level, static_cast<int>(j));
  }
  if (!have_scaling) {
    throw InputError("coefficient table has no scaling row (j = -1)", 0);
  }
  return WaveletCoefficients(h, max_level, scaling, std::move(details), 0.0);
}

std::vector<Sample> read_samples_csv(std::istream& in) {
  std::vector<Sample> samples;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) {
      continue;
    }
    const auto fields = split_fields(line);
    Sample s{};
    const bool numeric = fields.size() == 2 && parse_double(fields[0], s.r) &&
                         parse_double(fields[1], s.value);
    if (!numeric) {
      if (line_no == 1) {
        continue;  // header
      }
      throw InputError("expected two numeric columns 'r,value'", line_no);
    }
    if (!std::isfinite(s.r) || !std::isfinite(s.value)) {
      throw InputError("non-finite sample", line_no);
    }
    if (s.r < 0.0) {
      throw InputError("sample radius must be >= 0", line_no);
    }
    if (!samples.empty() && !(s.r > samples.back().r)) {
      throw InputError("sample radii must be strictly increasing", line_no);
    }
    samples.push_back(s);
  }
  if (samples.empty()) {
    throw InputError("sample file contains no samples", line_no + 1);
  }
  return samples;
}

RadialFunction sampled_function(std::vector<Sample> samples) {
  if (samples.empty()) {
    throw ArgumentError("sampled_function needs at least one sample");
  }
  auto data = std::make_shared<const std::vector<Sample>>(std::move(samples));
  RadialFunction f;
  f.evaluate = [data](double r) {
    const auto& s = *data;
    if (r <= s.front().r) {
      return s.front().value;
    }
    if (r > s.back().r) {
      return 0.0;
    }
    const auto it = std::lower_bound(s.begin(), s.end(), r,
                                     [](const Sample& a, double x) { return a.r < x; });
    const auto& hi = *it;
    const auto& lo = *(it - 1);
    const double t = (r - lo.r) / (hi.r - lo.r);
    return lo.value + t * (hi.value - lo.value);
  };
  return f;
}

std::string format_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<double>>& rows) {
  std::string out;
  for (std::size_t i = 0; i < header.size(); ++i) {
    out += (i ? "," : "") + header[i];
  }
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) {
        out += ',';
      }
      out += format_double(row[i]);
    }
    out += '\n';
  }
  return out;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw InputError("cannot open '" + tmp.string() + "' for writing", 0);
    }
    out << content;
    out.flush();
    if (!out) {
      throw InputError("failed writing '" + tmp.string() + "'", 0);
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw InputError("cannot move output into place at '" + path.string() + "'", 0);
  }
}

}  // namespace haarhankel::io
