#pragma once

#include <stdexcept>
#include <string>

namespace linksim {

/// A numeric precondition was violated (non-positive bandwidth, K >= tau, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Two-ray geometry sits on an exact destructive null of the sine term.
class TwoRayNullError : public DomainError {
 public:
  TwoRayNullError(const std::string& what, double distance_m, double nearest_null_m)
      : DomainError(what), distance_m_(distance_m), nearest_null_m_(nearest_null_m) {}

  double distance_m() const noexcept { return distance_m_; }
  double nearest_null_m() const noexcept { return nearest_null_m_; }

 private:
  double distance_m_;
  double nearest_null_m_;
};

/// Invalid or unparsable configuration. Messages carry a dotted key path.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A Monte Carlo run could not be completed.
class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reading or writing result files failed.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace linksim
