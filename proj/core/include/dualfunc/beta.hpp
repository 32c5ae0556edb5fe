#pragma once

#include "dualfunc/dual.hpp"
#include "dualfunc/gamma.hpp"
#include "dualfunc/reference.hpp"

namespace dualfunc {

/// Dual beta function through the gamma relation
/// beta(a, c) = Gamma(a) Gamma(c) / Gamma(a + c), exact in the dual algebra.
/// PoleError names the argument (first, second, or their sum) at a pole.
DualReal beta_dual(const DualReal& a, const DualReal& c);

/// Direct double-exponential quadrature of the defining integral
/// int_0^1 t^{a-1} (1-t)^{c-1} dt with the dual channels carried as log t
/// and log(1-t) weights. Verification path; requires a.re > 0 and c.re > 0.
QuadratureResult beta_dual_quadrature(const DualReal& a, const DualReal& c,
                                      double tol);

}  // namespace dualfunc
