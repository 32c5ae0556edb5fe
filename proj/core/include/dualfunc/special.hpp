#pragma once

#include <utility>

#include "dualfunc/hypergeometric.hpp"

namespace dualfunc {

/// Confluent hypergeometric function 1F1(a; b; x) on dual arguments.
SeriesResult confluent(const DualReal& a, const DualReal& b, const DualReal& x,
                       double tol = 1e-12, int max_terms = 10000);

/// Gauss hypergeometric function 2F1(a1, a2; b1; x) on dual arguments.
SeriesResult gauss(const DualReal& a1, const DualReal& a2, const DualReal& b1,
                   const DualReal& x, double tol = 1e-12, int max_terms = 10000);

/// The six r-fold differential identities of the confluent function, LHS
/// produced by term-by-term differentiation of the weighted series, RHS by
/// the printed closed form. Formulas with a dual power of x need x.re > 0.
///   1: d^r F                    = (a)_r/(b)_r F(a+r; b+r; x)
///   2: d^r [x^{a+r-1} F]        = (a)_r x^{a-1} F(a+r; b; x)
///   3: d^r [x^{b-1} F]          = (-1)^r (1-b)_r x^{b-1-r} F(a; b-r; x)
///   4: d^r [e^{-x} F]           = (-1)^r (b-a)_r/(b)_r F(b-a+r; b+r; -x)
///   5: d^r [e^{-x} x^{b-a+r-1} F] = (b-a)_r x^{b-a-1} F(b-a+r; b; -x)
///   6: d^r [e^{-x} x^{b-1} F]   = (-1)^r (1-b)_r x^{b-r-1} F(b-a; b-r; -x)
std::pair<DualReal, DualReal> confluent_diff_formula(int id, int r, const DualReal& a,
                                                     const DualReal& b,
                                                     const DualReal& x,
                                                     double tol = 1e-12,
                                                     int max_terms = 10000);

/// LHS - RHS of the three confluent contiguous relations:
///   1: (a-b+1) F = a F(a+) - (b-1) F(b-)
///   2: b (a+x) F = a b F(a+) - (a-b) x F(b+)
///   3: b F = b F(a-) + x F(b+)
DualReal confluent_contiguous_residual(int id, const DualReal& a, const DualReal& b,
                                       const DualReal& x, double tol = 1e-12,
                                       int max_terms = 10000);

/// Five integral representations of the confluent function (form 2 follows
/// the real segment [0, x.re] with the dual channel carried pointwise, which
/// restricts it to Re(b-a) > 1 whenever x.du != 0; forms 4 and 5 run over
/// (-1, 1)). All require Re(a) > 0 and Re(b-a) > 0.
QuadratureResult confluent_integral_rep(int form, const DualReal& a,
                                        const DualReal& b, const DualReal& x,
                                        double tol);

/// Closed-form antiderivatives of weighted confluent integrands (constant of
/// integration fixed to 0). Returns {value of the antiderivative at x,
/// its dual derivative taken term-by-term}, so a test can check the
/// derivative against the integrand directly.
///   1: int F dx             = (b-1)/(a-1) F(a-1; b-1; x)
///   2: int x^{b-1} F dx     = x^b / b     F(a; b+1; x)
///   3: int x^{a-2} F dx     = x^{a-1}/(a-1) F(a-1; b; x)
///   4: int e^{-x} F dx      = e^{-x} (b-1)/(1+a-b) F(a; b-1; x)
std::pair<DualReal, DualReal> confluent_integral_formula(int id, const DualReal& a,
                                                         const DualReal& b,
                                                         const DualReal& x,
                                                         double tol = 1e-12,
                                                         int max_terms = 10000);

/// Gauss summation at x = 1:
/// Gamma(b1) Gamma(b1-a1-a2) / (Gamma(b1-a1) Gamma(b1-a2)), dual throughout.
/// Requires Re(b1 - a1 - a2) > 0 and no gamma pole among the four arguments.
DualReal gauss_sum_at_1(const DualReal& a1, const DualReal& a2, const DualReal& b1);

/// Pfaff transformation pair:
/// {F(a1,a2;b1;x), (1-x)^{-a1} F(a1, b1-a2; b1; -x/(1-x))}.
/// Requires |x.re| < 1, |(x/(1-x)).re| < 1 and (1-x).re > 0.
std::pair<DualReal, DualReal> pfaff_transform(const DualReal& a1, const DualReal& a2,
                                              const DualReal& b1, const DualReal& x,
                                              double tol = 1e-12,
                                              int max_terms = 10000);

/// Euler transformation pair:
/// {F(a1,a2;b1;x), (1-x)^{b1-a1-a2} F(b1-a1, b1-a2; b1; x)}.
std::pair<DualReal, DualReal> euler_transform(const DualReal& a1, const DualReal& a2,
                                              const DualReal& b1, const DualReal& x,
                                              double tol = 1e-12,
                                              int max_terms = 10000);

/// Residual of x(1-x) z'' + [b1 - (1+a1+a2) x] z' - a1 a2 z with the
/// derivatives taken by the series derivative formula; needs |x.re| <= 0.75.
DualReal gauss_ode_residual(const DualReal& a1, const DualReal& a2,
                            const DualReal& b1, const DualReal& x,
                            double tol = 1e-12, int max_terms = 10000);

/// LHS - RHS of the five Gauss contiguous relations:
///   1: (a1-a2) F = a1 F(a1+) - a2 F(a2+)
///   2: (a1-b1+1) F = a1 F(a1+) - (b1-1) F(b1-)
///   3: [a1 + (a2-b1) x] F = a1 (1-x) F(a1+) - x (b1-a1)(b1-a2)/b1 F(b1+)
///   4: (1-x) F = F(a1-) - (b1-a2)/b1 x F(b1+)
///   5: (1-x) F = F(a2-) - (b1-a1)/b1 x F(b1+)
DualReal gauss_contiguous_residual(int id, const DualReal& a1, const DualReal& a2,
                                   const DualReal& b1, const DualReal& x,
                                   double tol = 1e-12, int max_terms = 10000);

/// The four r-fold differential identities of the Gauss function:
///   1: d^r F             = (a1)_r (a2)_r/(b1)_r F(a1+r, a2+r; b1+r; x)
///   2: d^r [x^{a1+r-1} F] = (a1)_r x^{a1-1} F(a1+r, a2; b1; x)
///   3: d^r [x^{a2+r-1} F] = (a2)_r x^{a2-1} F(a1, a2+r; b1; x)
///   4: d^r [x^{b1-1} F]   = (b1-r)_r x^{b1-r-1} F(a1, a2; b1-r; x)
std::pair<DualReal, DualReal> gauss_diff_formula(int id, int r, const DualReal& a1,
                                                 const DualReal& a2, const DualReal& b1,
                                                 const DualReal& x, double tol = 1e-12,
                                                 int max_terms = 10000);

/// Elementary closed forms of Gauss specializations, returned as
/// {series side, lifted elementary side}.
enum class ElementaryIdentityId { Arcsin, Arctan, Log1p, LogRatio, Binomial };

/// Binomial uses the integer degree n (ignored by the others): the pair is
/// {2F1(-n, 1; 1; -x), (1+x)^n}. All require |x.re| < 1 plus the identity's
/// own domain.
std::pair<DualReal, DualReal> elementary_identity(ElementaryIdentityId id,
                                                  const DualReal& x, int n = 3,
                                                  double tol = 1e-12,
                                                  int max_terms = 10000);

}  // namespace dualfunc
