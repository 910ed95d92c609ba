#include "diamag/cli/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace diamag::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view text, int line, const std::string& key) {
  double v = 0.0;
  const auto t = trim(text);
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size()) {
    throw ConfigError(line, key, "expected a number, got '" + std::string(t) + "'");
  }
  return v;
}

int parse_int(std::string_view text, int line, const std::string& key) {
  int v = 0;
  const auto t = trim(text);
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size()) {
    throw ConfigError(line, key, "expected an integer, got '" + std::string(t) + "'");
  }
  return v;
}

std::vector<double> parse_list(std::string_view text, int line, const std::string& key) {
  std::vector<double> out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(parse_double(text.substr(0, comma), line, key));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

void apply(Settings& s, const std::string& key, std::string_view value, int line) {
  if (key == "large_s_threshold") {
    s.kernel.large_s_threshold = parse_double(value, line, key);
  } else if (key == "smallq_max_q") {
    s.kernel.smallq_max_q = parse_double(value, line, key);
  } else if (key == "smallq_pole_ratio") {
    s.kernel.smallq_pole_ratio = parse_double(value, line, key);
  } else if (key == "abs_tol") {
    s.quadrature.abs_tol = parse_double(value, line, key);
  } else if (key == "rel_tol") {
    s.quadrature.rel_tol = parse_double(value, line, key);
  } else if (key == "max_subdivisions") {
    s.quadrature.max_subdivisions = parse_int(value, line, key);
  } else if (key == "delta_widths") {
    s.quadrature.delta_widths = parse_list(value, line, key);
  } else if (key == "extrapolation_order") {
    s.quadrature.extrapolation_order = parse_int(value, line, key);
  } else {
    throw ConfigError(line, key, "unknown key '" + key + "'");
  }
}

}  // namespace

Settings parse_config(std::string_view text, Settings base) {
  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);

    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(line_no, "line", "expected key=value, got '" + std::string(line) + "'");
    }
    const std::string key(trim(line.substr(0, eq)));
    if (key.empty()) throw ConfigError(line_no, "line", "missing key before '='");
    apply(base, key, line.substr(eq + 1), line_no);
  }
  base.kernel.validate();
  base.quadrature.validate();
  return base;
}

Settings load_config(const std::string& path, Settings base) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("config", "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), base);
}

}  // namespace diamag::cli
