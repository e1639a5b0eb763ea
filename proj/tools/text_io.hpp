#ifndef AR1BAND_TOOLS_TEXT_IO_HPP
#define AR1BAND_TOOLS_TEXT_IO_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

// Small text and file helpers for the command line tool. Number output is
// locale-independent (period decimal separator) and round-trips exactly.

namespace ar1band::tools {

/// Unreadable or unwritable files; mapped to exit code 3.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shortest decimal form of v that parses back to the same bits.
std::string fmt_double(double v);

/// Whole file contents; throws IoError if the file cannot be opened.
std::string read_file(const std::string& path);

/// Time list: comma-separated tokens, each an integer or an inclusive
/// "a:b" range expanding with unit gaps. A leading '@' names a file whose
/// contents are tokenized the same way (whitespace or commas).
std::vector<std::int64_t> parse_times(const std::string& arg);

/// Real list: comma-separated floats, or @file with whitespace/comma
/// separated floats.
std::vector<double> parse_reals(const std::string& arg);

/// Observations CSV with header "time,value".
std::vector<std::pair<std::int64_t, double>> parse_obs_csv(
    const std::string& path);

/// Mean flag: either a constant float, or @file naming a CSV with header
/// "time,mean". Constant means have per_time empty.
struct MeanArg {
  bool is_constant = true;
  double constant = 0.0;
  std::map<std::int64_t, double> per_time;

  /// Mean values aligned with the given times; every time must be listed
  /// in a per-time file.
  std::vector<double> align(const std::vector<std::int64_t>& times) const;
};

MeanArg parse_mean(const std::string& arg);

/// Type-7 quantile (linear interpolation) of an unsorted sample copy.
double quantile(std::vector<double> values, double p);

}  // namespace ar1band::tools

#endif  // AR1BAND_TOOLS_TEXT_IO_HPP
