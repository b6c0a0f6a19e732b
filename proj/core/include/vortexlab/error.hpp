#ifndef VORTEXLAB_ERROR_HPP
#define VORTEXLAB_ERROR_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace vortexlab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Vorticity handed to the Biot-Savart inversion still carries circulation.
struct MeanNotZero : Error {
  using Error::Error;
};

/// Advective CFL number exceeded the configured limit.
struct CflViolation : Error {
  CflViolation(double time, double cfl)
      : Error("CFL violation at t=" + std::to_string(time) +
              " (cfl=" + std::to_string(cfl) + ")"),
        t(time) {}
  double t;
};

/// The discretization blew up (NaN/Inf appeared in the state).
struct NonFinite : Error {
  explicit NonFinite(double time)
      : Error("non-finite value at t=" + std::to_string(time)), t(time) {}
  double t;
};

/// Operation requested on data it is not defined for.
struct NotApplicable : Error {
  using Error::Error;
};

struct QuadratureNotConverged : Error {
  using Error::Error;
};

struct InequalityViolated : Error {
  using Error::Error;
};

struct InsufficientData : Error {
  using Error::Error;
};

struct NonPositiveValues : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

/// Config validation failure; collects every violation, not just the first.
struct SchemaError : Error {
  explicit SchemaError(std::vector<std::string> viol)
      : Error(join(viol)), violations(std::move(viol)) {}
  std::vector<std::string> violations;

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string s = "config schema violations:";
    for (const auto& e : v) s += "\n  " + e;
    return s;
  }
};

}  // namespace vortexlab

#endif
