#pragma once

#include <stdexcept>
#include <string>

namespace radarbeat {

/// Base class for every error raised by the library. `kind()` is a stable
/// machine-readable tag used by the CLI error records.
class error : public std::runtime_error {
 public:
  error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

struct invalid_input_error : error {
  explicit invalid_input_error(const std::string& w) : error("invalid_input", w) {}
};

struct length_error : error {
  explicit length_error(const std::string& w) : error("length", w) {}
};

struct lookup_error : error {
  explicit lookup_error(const std::string& w) : error("lookup", w) {}
};

struct no_target_error : error {
  explicit no_target_error(const std::string& w) : error("no_target", w) {}
};

struct grid_mismatch_error : error {
  explicit grid_mismatch_error(const std::string& w) : error("grid_mismatch", w) {}
};

struct undefined_metric_error : error {
  explicit undefined_metric_error(const std::string& w) : error("undefined_metric", w) {}
};

struct band_coverage_error : error {
  explicit band_coverage_error(const std::string& w) : error("band_coverage", w) {}
};

struct io_error : error {
  explicit io_error(const std::string& w) : error("io", w) {}
};

}  // namespace radarbeat
