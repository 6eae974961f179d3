#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "haarhankel/haar.hpp"

namespace haarhankel::io {

/// Shortest form that round-trips binary64: printf %.17g.
std::string format_double(double x);

/// Header `j,k,value`; the scaling coefficient is the row j = -1, k = 0,
/// followed by the details coarse to fine.
void write_coefficients_csv(std::ostream& out, const WaveletCoefficients& coeffs);

/// Inverse of write_coefficients_csv. The file does not carry h, so it is
/// supplied by the caller; the max level is the deepest level present.
/// Throws InputError naming the offending line.
WaveletCoefficients read_coefficients_csv(std::istream& in, double h);

struct Sample {
  double r;
  double value;
};

/// Two-column `r,value` file, strictly increasing r >= 0. A non-numeric first
/// line is taken as the header.
std::vector<Sample> read_samples_csv(std::istream& in);

/// f(r) by linear interpolation between samples; constant at the first
/// value below the first sample and zero beyond the last one.
RadialFunction sampled_function(std::vector<Sample> samples);

/// Header row followed by one line per row, values via format_double.
std::string format_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<double>>& rows);

/// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace haarhankel::io
