#pragma once

#include <string>
#include <string_view>

#include "diamag/core/error.hpp"
#include "diamag/kernel/regime.hpp"
#include "diamag/oracle/settings.hpp"

namespace diamag::cli {

struct Settings {
  kernel::KernelSettings kernel;
  oracle::QuadratureSettings quadrature;
};

// A config line that could not be applied. field() is the key, or "line"
// when the line has no key at all.
class ConfigError : public ValidationError {
 public:
  ConfigError(int line, const std::string& key, const std::string& message)
      : ValidationError(key, "line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

// key=value lines; '#' starts a comment, blank lines are skipped.
// Keys: large_s_threshold, smallq_max_q, smallq_pole_ratio, abs_tol, rel_tol,
// max_subdivisions, delta_widths (comma separated), extrapolation_order.
// The merged settings are validated before returning.
Settings parse_config(std::string_view text, Settings base = {});

// Reads the file and parses it; an unreadable file is a ValidationError on "config".
Settings load_config(const std::string& path, Settings base = {});

}  // namespace diamag::cli
