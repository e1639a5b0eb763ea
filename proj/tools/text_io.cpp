#include "text_io.hpp"

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ar1band/types.hpp"

namespace ar1band::tools {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Tokens separated by whitespace or commas.
std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      if (!cur.empty()) {
        out.push_back(cur);
        cur.clear();
      }
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::int64_t parse_int(const std::string& token) {
  std::int64_t value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ValidationError("invalid integer '" + token + "'");
  }
  return value;
}

double parse_double(const std::string& token) {
  errno = 0;
  char* end = nullptr;
  const double value = std::strtod(token.c_str(), &end);
  if (end != token.c_str() + token.size() || token.empty() || errno == ERANGE) {
    throw ValidationError("invalid number '" + token + "'");
  }
  return value;
}

}  // namespace

std::string fmt_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot read file '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::int64_t> parse_times(const std::string& arg) {
  std::string text = arg;
  if (!arg.empty() && arg[0] == '@') {
    text = read_file(arg.substr(1));
  }
  std::vector<std::int64_t> times;
  for (const std::string& token : tokenize(text)) {
    const std::size_t colon = token.find(':');
    if (colon == std::string::npos) {
      times.push_back(parse_int(token));
      continue;
    }
    const std::int64_t a = parse_int(token.substr(0, colon));
    const std::int64_t b = parse_int(token.substr(colon + 1));
    if (a > b) {
      throw ValidationError("invalid range '" + token + "': start > end");
    }
    for (std::int64_t t = a; t <= b; ++t) times.push_back(t);
  }
  if (times.empty()) {
    throw ValidationError("times must be non-empty");
  }
  return times;
}

std::vector<double> parse_reals(const std::string& arg) {
  std::string text = arg;
  if (!arg.empty() && arg[0] == '@') {
    text = read_file(arg.substr(1));
  }
  std::vector<double> values;
  for (const std::string& token : tokenize(text)) {
    values.push_back(parse_double(token));
  }
  return values;
}

std::vector<std::pair<std::int64_t, double>> parse_obs_csv(
    const std::string& path) {
  const std::string text = read_file(path);
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) {
    throw ValidationError("observations file '" + path + "' is empty");
  }
  const auto header = split(strip(line), ',');
  if (header.size() != 2 || strip(header[0]) != "time" ||
      strip(header[1]) != "value") {
    throw ValidationError("observations file must have header 'time,value'");
  }

  std::vector<std::pair<std::int64_t, double>> obs;
  while (std::getline(in, line)) {
    const std::string row = strip(line);
    if (row.empty()) continue;
    const auto fields = split(row, ',');
    if (fields.size() != 2) {
      throw ValidationError("observations row '" + row +
                            "' must have two fields");
    }
    obs.emplace_back(parse_int(strip(fields[0])),
                     parse_double(strip(fields[1])));
  }
  if (obs.empty()) {
    throw ValidationError("observations file has no data rows");
  }
  std::sort(obs.begin(), obs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i + 1 < obs.size(); ++i) {
    if (obs[i].first == obs[i + 1].first) {
      throw ValidationError("duplicate time " + std::to_string(obs[i].first));
    }
  }
  return obs;
}

std::vector<double> MeanArg::align(
    const std::vector<std::int64_t>& times) const {
  std::vector<double> out;
  out.reserve(times.size());
  for (std::int64_t t : times) {
    if (is_constant) {
      out.push_back(constant);
      continue;
    }
    const auto it = per_time.find(t);
    if (it == per_time.end()) {
      throw ValidationError("mean file has no entry for time " +
                            std::to_string(t));
    }
    out.push_back(it->second);
  }
  return out;
}

MeanArg parse_mean(const std::string& arg) {
  MeanArg mean;
  if (arg.empty() || arg[0] != '@') {
    mean.is_constant = true;
    mean.constant = parse_double(arg);
    return mean;
  }

  const std::string path = arg.substr(1);
  const std::string text = read_file(path);
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) {
    throw ValidationError("mean file '" + path + "' is empty");
  }
  const auto header = split(strip(line), ',');
  if (header.size() != 2 || strip(header[0]) != "time" ||
      strip(header[1]) != "mean") {
    throw ValidationError("mean file must have header 'time,mean'");
  }
  mean.is_constant = false;
  while (std::getline(in, line)) {
    const std::string row = strip(line);
    if (row.empty()) continue;
    const auto fields = split(row, ',');
    if (fields.size() != 2) {
      throw ValidationError("mean row '" + row + "' must have two fields");
    }
    const std::int64_t t = parse_int(strip(fields[0]));
    if (!mean.per_time.emplace(t, parse_double(strip(fields[1]))).second) {
      throw ValidationError("duplicate time " + std::to_string(t) +
                            " in mean file");
    }
  }
  return mean;
}

double quantile(std::vector<double> values, double p) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n == 1) return values[0];
  const double h = p * static_cast<double>(n - 1);
  const std::size_t lo = static_cast<std::size_t>(h);
  const double frac = h - static_cast<double>(lo);
  if (lo + 1 >= n) return values[n - 1];
  return values[lo] + frac * (values[lo + 1] - values[lo]);
}

}  // namespace ar1band::tools
