#include "oamspec/special_functions.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace oam {
namespace {

// Below this argument the power series for I_0 is summed directly; above it
// the Hankel expansion converges to machine precision.
constexpr double kSeriesLimit = 30.0;

double bessel_i0_scaled(double x) {
  if (x <= kSeriesLimit) {
    const double q = 0.25 * x * x;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 500; ++k) {
      term *= q / (static_cast<double>(k) * k);
      sum += term;
      if (term < sum * 1e-17) break;
    }
    return sum * std::exp(-x);
  }
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 500; ++k) {
    const double next = term * (2.0 * k - 1.0) * (2.0 * k - 1.0) / (8.0 * k * x);
    if (next >= term) break;  // asymptotic series starts diverging
    term = next;
    sum += term;
    if (term < sum * 1e-17) break;
  }
  return sum / std::sqrt(2.0 * std::numbers::pi * x);
}

// Start order for the backward ratio recurrence. The truncation error
// behaves like exp(-(N^2 - n^2) / x) for large x and (x/2N)^(N-n) for small x.
int backward_start(int max_order, double x) {
  const double n = static_cast<double>(max_order);
  return static_cast<int>(std::ceil(std::sqrt(n * n + 80.0 * x))) + 40;
}

}  // namespace

double laguerre_poly(int p, int a, double x) {
  if (p < 0 || a < 0) {
    throw std::invalid_argument("laguerre_poly: p and a must be nonnegative");
  }
  if (p == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + a - x;
  for (int k = 1; k < p; ++k) {
    const double next = ((2.0 * k + 1.0 + a - x) * cur - (k + a) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<double> bessel_i_scaled_orders(int max_order, double x) {
  if (max_order < 0) {
    throw std::invalid_argument("bessel_i_scaled_orders: negative order");
  }
  if (!(x >= 0.0)) {
    throw std::domain_error("bessel_i: argument must be nonnegative");
  }
  std::vector<double> out(static_cast<std::size_t>(max_order) + 1, 0.0);
  if (x == 0.0) {
    out[0] = 1.0;
    return out;
  }
  if (std::isinf(x)) {
    throw std::overflow_error("bessel_i: infinite argument");
  }
  // ratio_n = I_n / I_{n-1} = x / (2n + x * ratio_{n+1}), started from zero
  // far above max_order. This is Miller's algorithm in ratio form, so no
  // intermediate value can overflow.
  std::vector<double> ratio(static_cast<std::size_t>(max_order) + 1, 0.0);
  double r = 0.0;
  for (int n = backward_start(max_order, x); n >= 1; --n) {
    r = x / (2.0 * n + x * r);
    if (n <= max_order) ratio[static_cast<std::size_t>(n)] = r;
  }
  out[0] = bessel_i0_scaled(x);
  for (int n = 1; n <= max_order; ++n) {
    out[static_cast<std::size_t>(n)] = out[static_cast<std::size_t>(n) - 1] * ratio[static_cast<std::size_t>(n)];
  }
  return out;
}

double bessel_i_scaled(int l, double x) {
  const int order = l < 0 ? -l : l;
  return bessel_i_scaled_orders(order, x)[static_cast<std::size_t>(order)];
}

double bessel_i(int l, double x) {
  const double scaled = bessel_i_scaled(l, x);
  if (scaled == 0.0) return 0.0;
  if (std::log(scaled) + x > std::log(std::numeric_limits<double>::max())) {
    throw std::overflow_error("bessel_i: I_" + std::to_string(l) + "(" + std::to_string(x) +
                              ") overflows double; use bessel_i_scaled");
  }
  return scaled * std::exp(x);
}

double bessel_j(int l, double x) {
  const unsigned order = static_cast<unsigned>(l < 0 ? -l : l);
  double sign = 1.0;
  if (x < 0.0) {
    x = -x;
    if (order % 2 == 1) sign = -sign;
  }
  if (l < 0 && order % 2 == 1) sign = -sign;
  return sign * std::cyl_bessel_j(static_cast<double>(order), x);
}

}  // namespace oam
