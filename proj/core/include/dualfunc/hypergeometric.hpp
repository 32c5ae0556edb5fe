#pragma once

#include <vector>

#include "dualfunc/dual.hpp"
#include "dualfunc/gamma.hpp"
#include "dualfunc/reference.hpp"

namespace dualfunc {

/// Ordered numerator and denominator parameter lists of a pFq series,
/// every entry a dual number.
struct HypergeometricParams {
  std::vector<DualReal> numerator;
  std::vector<DualReal> denominator;

  int p() const { return static_cast<int>(numerator.size()); }
  int q() const { return static_cast<int>(denominator.size()); }
};

/// Where (and whether) the series converges; |x| means |x.re| throughout.
struct ConvergenceClass {
  enum class Tag {
    ConvergesEverywhere,
    ConvergesOpenUnitDisk,
    ConvergesOnBoundary,
    TerminatesPolynomial,
    Diverges,
    DenominatorPole,
  };

  Tag tag = Tag::Diverges;
  int degree = -1;  // TerminatesPolynomial: smallest such degree
  int index = -1;   // DenominatorPole: offending denominator position

  friend bool operator==(const ConvergenceClass&, const ConvergenceClass&) = default;
};

/// Total classification: polynomial termination (numerator at a non-positive
/// integer with exactly zero dual part) dominates; an uncovered denominator
/// pole comes next; the remaining tags follow the p-vs-q ratio test with the
/// boundary case decided by Re(sum of denominators - sum of numerators) > 0.
ConvergenceClass classify_convergence(const HypergeometricParams& params,
                                      const DualReal& x);

struct SeriesResult {
  DualReal value{};
  int terms_used = 0;
  bool converged = false;
  double tail_bound = 0.0;
};

/// Generalized dual hypergeometric series: partial sums of
///   prod (a_i)_k / prod (b_j)_k * x^k / k!
/// in dual arithmetic. Interior points stop once three consecutive terms are
/// below tol relative to the running magnitude in both channels; on the
/// |x.re| = 1 boundary (when admissible) partial sums at geometrically spaced
/// lengths are Richardson-extrapolated in the known decay basis, with
/// tail_bound reporting the extrapolation uncertainty.
SeriesResult pfq(const HypergeometricParams& params, const DualReal& x,
                 double tol = 1e-12, int max_terms = 10000);

/// r-th dual derivative: prod (a_i)_r / prod (b_j)_r * pFq(all shifted by r).
DualReal pfq_derivative(const HypergeometricParams& params, const DualReal& x,
                        int r, double tol = 1e-12, int max_terms = 10000);

/// Residual of the hypergeometric operator identity
///   [theta prod(theta + b_j - 1) - x prod(theta + a_i)] F = 0
/// with theta = x d/dx acting on term k as multiplication by the shifted
/// index. Both operator sides are summed term by term and subtracted.
DualReal theta_ode_residual(const HypergeometricParams& params, const DualReal& x,
                            double tol = 1e-12, int max_terms = 10000);

/// The contiguous-relation families, named by what they shift.
enum class RelationId {
  NumeratorPair,            // (a1-ak) F = a1 F(a1+) - ak F(ak+),              k = 2..p
  NumeratorDenominator,     // (a1-bk+1) F = a1 F(a1+) - (bk-1) F(bk-),        k = 1..q
  RaiseFirstNumeratorPLtQ,  // a1 F = a1 F(a1+) - x sum U_j F(bj+),            p < q
  RaiseFirstNumeratorPEqQ,  // (a1+x) F = a1 F(a1+) - x sum U_j F(bj+),        p = q
  RaiseFirstNumeratorPGtQ,  // [(1-x)a1 + (sum a - sum b)x] F = ...,           p = q+1
  LowerNumeratorPLeQ,       // F = F(ak-) + x sum W_jk F(bj+),                 p <= q
  LowerNumeratorPGtQ,       // (1-x) F = F(ak-) + x sum W_jk F(bj+),           p = q+1
};

/// LHS - RHS of the selected relation, evaluated through pfq; expected ~ 0.
/// k_or_j selects the shifted numerator/denominator where the relation has a
/// free index (1-based; ignored by the RaiseFirstNumerator family).
/// Throws InapplicableRelation on a shape mismatch and DegenerateParameters
/// when two denominator real parts coincide within 1e-8 (U/W poles).
DualReal contiguous_residual(RelationId relation, const HypergeometricParams& params,
                             const DualReal& x, int k_or_j, double tol = 1e-12,
                             int max_terms = 10000);

/// Integral representations that peel off the leading parameter pair.
struct IntegralForm {
  enum class Kind { Euler01, Infinite, Scaled };
  Kind kind = Kind::Euler01;
  double b = 1.0;  // scale of the Scaled form, > 0

  static IntegralForm euler_01() { return {Kind::Euler01, 1.0}; }
  static IntegralForm infinite() { return {Kind::Infinite, 1.0}; }
  static IntegralForm scaled(double b) { return {Kind::Scaled, b}; }
};

/// Gamma prefactor times the double-exponential quadrature of the kernel:
///   Euler01:  int_0^1 u^{a1-1} (1-u)^{b1-a1-1} F_inner(u x) du
///   Infinite: int_0^inf u^{a1-1} (1+u)^{-b1} F_inner(u/(1+u) x) du
///   Scaled:   b^{a1} int_0^inf u^{a1-1} (1+bu)^{-b1} F_inner(bu/(1+bu) x) du
/// where F_inner drops the first numerator and denominator parameters.
/// Requires p, q >= 1 and Re(a1), Re(b1), Re(b1 - a1) > 0.
QuadratureResult pfq_integral_rep(const HypergeometricParams& params,
                                  const DualReal& x, const IntegralForm& form,
                                  double tol);

}  // namespace dualfunc
