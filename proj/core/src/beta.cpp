#include "dualfunc/beta.hpp"

#include <algorithm>
#include <cmath>

namespace dualfunc {

namespace {

void rethrow_pole(const DualReal& v, const char* which) {
  try {
    (void)gamma_dual(v);
  } catch (const PoleError& e) {
    throw PoleError(std::string("beta_dual: ") + which + " argument at pole",
                    e.nearest_pole());
  }
}

}  // namespace

DualReal beta_dual(const DualReal& a, const DualReal& c) {
  rethrow_pole(a, "first");
  rethrow_pole(c, "second");
  rethrow_pole(a + c, "sum of");
  return gamma_dual(a) * gamma_dual(c) / gamma_dual(a + c);
}

QuadratureResult beta_dual_quadrature(const DualReal& a, const DualReal& c,
                                      double tol) {
  if (!(a.re > 0.0) || !(c.re > 0.0)) {
    throw DomainError("beta_dual_quadrature: requires positive real parts");
  }
  DualReal am1 = a - DualReal{1.0};
  DualReal cm1 = c - DualReal{1.0};
  double piece_tol = std::max(tol, 1e-12) * 0.25;

  // Each half keeps its endpoint singularity at the lower quadrature limit,
  // where the transform resolves t accurately.
  auto left = [&](double t) { return pow(t, am1) * pow(1.0 - t, cm1); };
  auto right = [&](double s) { return pow(s, cm1) * pow(1.0 - s, am1); };

  QuadratureResult l = quad_de(left, 0.0, 0.5, piece_tol);
  QuadratureResult r = quad_de(right, 0.0, 0.5, piece_tol);
  return {l.value + r.value, l.abs_error_estimate + r.abs_error_estimate,
          l.nodes + r.nodes};
}

}  // namespace dualfunc
