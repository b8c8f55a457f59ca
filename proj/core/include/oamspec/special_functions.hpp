#pragma once

#include <vector>

namespace oam {

/// Associated Laguerre polynomial L_p^a(x), standard sign convention
/// (alternating (-1)^m in the explicit sum).
double laguerre_poly(int p, int a, double x);

/// Modified Bessel function of the first kind I_l(x) for x >= 0.
/// Negative orders map to I_{|l|}. Throws std::overflow_error when the
/// result is not representable; use bessel_i_scaled in that regime.
double bessel_i(int l, double x);

/// Exponentially scaled e^{-x} I_l(x), finite for every x >= 0.
double bessel_i_scaled(int l, double x);

/// e^{-x} I_n(x) for n = 0..max_order from a single backward sweep.
std::vector<double> bessel_i_scaled_orders(int max_order, double x);

/// Bessel function of the first kind J_l(x), any integer order.
double bessel_j(int l, double x);

}  // namespace oam
