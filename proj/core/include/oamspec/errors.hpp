#pragma once

#include <stdexcept>
#include <string>

namespace oam {

/// Invalid parameters: a mode, quadrature setting, scenario or run option
/// outside its declared range.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A quadrature did not reproduce itself under node doubling, or the
/// integration window truncates a non-negligible part of the integrand.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The azimuthal window of a spectrum cuts off probability above threshold.
class WindowTooSmallError : public std::runtime_error {
 public:
  WindowTooSmallError(const std::string& what, int window, double edge_ratio)
      : std::runtime_error(what), window_(window), edge_ratio_(edge_ratio) {}

  int window() const noexcept { return window_; }
  double edge_ratio() const noexcept { return edge_ratio_; }

 private:
  int window_;
  double edge_ratio_;
};

/// Zero-norm mode, empty anti-diagonal, or a similar input with nothing to
/// work on.
class DegenerateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace oam
