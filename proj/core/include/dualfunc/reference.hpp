#pragma once

#include <functional>

#include "dualfunc/dual.hpp"

namespace dualfunc {

/// Real gamma function. Lanczos rational approximation for a >= 0.5,
/// reflection below; relative error under 1e-13 on [0.5, 30].
/// Throws PoleError within 1e-10 of a non-positive integer.
double gamma_real(double a);

/// Logarithmic derivative of gamma. Upward recurrence to a >= 10 followed
/// by the asymptotic series.
double digamma(double a);

/// Derivative of digamma, same evaluation scheme.
double trigamma(double a);

/// Central finite differences with Richardson extrapolation.
struct FDConfig {
  int order = 1;             // 1 = first derivative, 2 = second
  double base_step = 0.0;    // 0 means cbrt(machine eps) * max(1, |x|)
  int richardson_levels = 2; // 0..8
};

/// Best Richardson-extrapolated estimate of the order-th derivative of f at x.
/// Exceptions thrown by f propagate unchanged.
double finite_diff(const std::function<double(double)>& f, double x,
                   const FDConfig& cfg = {});

struct QuadratureResult {
  DualReal value{};
  double abs_error_estimate = 0.0;
  int nodes = 0;
};

/// Double-exponential quadrature of a dual-valued integrand over (lo, hi).
/// hi may be +infinity (exp-sinh transform). The re and du channels are
/// integrated over the same node set; success requires both level-to-level
/// differences at or below tol (absolute). Robust against integrable
/// endpoint singularities such as t^{a-1} and log t at the lower endpoint.
QuadratureResult quad_de(const std::function<DualReal(double)>& f, double lo,
                         double hi, double tol, int max_nodes = 1 << 14);

}  // namespace dualfunc
