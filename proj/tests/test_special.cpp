#include <cmath>

#include <doctest.h>

#include "dualfunc/special.hpp"

using namespace dualfunc;

namespace {

void check_close(const DualReal& got, const DualReal& want, double tol = 1e-12) {
  CHECK(got.re == doctest::Approx(want.re).epsilon(tol));
  CHECK(got.du == doctest::Approx(want.du).epsilon(tol));
}

}  // namespace

TEST_CASE("confluent closed values") {
  double e1 = std::exp(1.0);
  // numerator equal to denominator cancels term-wise, leaving exp
  check_close(confluent({1.3, 0.0}, {1.3, 0.0}, {1.0, 2.0}).value, {e1, 2.0 * e1},
              1e-11);
  CHECK(confluent({1.0, 0.0}, {2.0, 0.0}, {1.0, 0.0}).value.re ==
        doctest::Approx(e1 - 1.0).epsilon(1e-12));
  CHECK(confluent({0.5, 0.0}, {1.5, 0.0}, {0.0, 0.0}).value.re == 1.0);
}

TEST_CASE("confluent differential formulas, both sides") {
  auto [l1, r1] = confluent_diff_formula(1, 1, {1.0, 0.0}, {2.0, 0.0}, {0.5, 0.0});
  check_close(l1, r1, 1e-10);
  check_close(r1, DualReal{0.5} * confluent({2.0, 0.0}, {3.0, 0.0}, {0.5, 0.0}).value,
              1e-11);

  // r = 0 with the exponential weight is the identity on both sides
  auto [l4, r4] = confluent_diff_formula(4, 0, {0.8, 0.0}, {1.9, 0.0}, {0.4, 0.0});
  check_close(l4, r4, 1e-11);

  auto [l2, r2] = confluent_diff_formula(1, 2, {0.7, 0.0}, {1.9, 0.0}, {0.3, 1.0});
  CHECK(std::fabs(l2.re - r2.re) < 1e-9 * (1.0 + std::fabs(r2.re)));
  CHECK(std::fabs(l2.du - r2.du) < 1e-9 * (1.0 + std::fabs(r2.du)));

  for (int id = 2; id <= 6; ++id) {
    auto [lhs, rhs] = confluent_diff_formula(id, 1, {0.9, 1.0}, {2.4, 0.0}, {0.6, 1.0});
    CHECK(std::fabs(lhs.re - rhs.re) < 1e-9 * (1.0 + std::fabs(rhs.re)));
    CHECK(std::fabs(lhs.du - rhs.du) < 1e-9 * (1.0 + std::fabs(rhs.du)));
  }
  CHECK_THROWS_AS(confluent_diff_formula(7, 1, {1.0, 0.0}, {2.0, 0.0}, {0.5, 0.0}),
                  DomainError);
  CHECK_THROWS_AS(confluent_diff_formula(2, 1, {1.0, 0.0}, {2.0, 0.0}, {-0.5, 0.0}),
                  DomainError);
}

TEST_CASE("confluent contiguous relations") {
  // at x = 0 every series is 1 and relation 3 collapses to b = b
  CHECK(confluent_contiguous_residual(3, {0.9, 0.0}, {1.7, 0.0}, {0.0, 0.0}).re ==
        doctest::Approx(0.0));
  DualReal r1 = confluent_contiguous_residual(1, {0.9, 0.0}, {1.7, 0.0}, {0.6, 0.0});
  CHECK(std::fabs(r1.re) < 1e-10);
  DualReal r2 = confluent_contiguous_residual(2, {1.2, 0.0}, {2.4, 0.0}, {0.5, 2.0});
  CHECK(std::fabs(r2.re) < 1e-9);
  CHECK(std::fabs(r2.du) < 1e-9);
  CHECK_THROWS_AS(confluent_contiguous_residual(4, {1.0, 0.0}, {2.0, 0.0}, {0.5, 0.0}),
                  DomainError);
}

TEST_CASE("confluent integral representations") {
  double e1 = std::exp(1.0);
  QuadratureResult q1 = confluent_integral_rep(1, {1.0, 0.0}, {2.0, 0.0}, {1.0, 0.0},
                                               1e-10);
  CHECK(q1.value.re == doctest::Approx(e1 - 1.0).epsilon(1e-9));
  QuadratureResult q3 = confluent_integral_rep(3, {1.0, 0.0}, {2.0, 0.0}, {1.0, 0.0},
                                               1e-10);
  CHECK(q3.value.re == doctest::Approx(e1 - 1.0).epsilon(1e-9));

  DualReal a{0.8, 1.0}, b{2.2, 0.0}, x{0.9, 1.0};
  DualReal series = confluent(a, b, x).value;
  for (int form : {1, 3, 4, 5}) {
    check_close(confluent_integral_rep(form, a, b, x, 1e-9).value, series, 1e-7);
  }
  // form 2 carries the path endpoint; with x.du != 0 it needs Re(b-a) > 1
  check_close(confluent_integral_rep(2, a, b, x, 1e-9).value, series, 1e-7);
  CHECK_THROWS_AS(confluent_integral_rep(2, {0.8, 0.0}, {1.5, 0.0}, {0.9, 1.0}, 1e-9),
                  DomainError);
  CHECK_NOTHROW(confluent_integral_rep(2, {0.8, 0.0}, {1.5, 0.0}, {0.9, 0.0}, 1e-9));
  CHECK_THROWS_AS(confluent_integral_rep(1, {-0.2, 0.0}, {1.0, 0.0}, {0.5, 0.0}, 1e-9),
                  DomainError);
  CHECK_THROWS_AS(confluent_integral_rep(6, a, b, x, 1e-9), DomainError);

  QuadratureResult q4 = confluent_integral_rep(4, a, b, x, 1e-9);
  QuadratureResult q5 = confluent_integral_rep(5, a, b, x, 1e-9);
  check_close(q4.value, q5.value, 1e-9);
}

TEST_CASE("confluent integral formulas differentiate back to their integrands") {
  DualReal a{2.0, 0.0}, b{3.0, 0.0}, x{0.7, 0.0};
  auto [value, derivative] = confluent_integral_formula(1, a, b, x);
  check_close(value,
              (b - DualReal{1.0}) / (a - DualReal{1.0}) *
                  confluent(a - DualReal{1.0}, b - DualReal{1.0}, x).value,
              1e-11);
  check_close(derivative, confluent(a, b, x).value, 1e-10);

  // the power weight sends the antiderivative to zero with x
  DualReal small = confluent_integral_formula(2, {1.0, 0.0}, {1.5, 0.0}, {1e-4, 0.0})
                       .first;
  CHECK(std::fabs(small.re) < 1e-5);

  DualReal ax{1.0, 0.0}, bx{2.5, 0.0}, xx{0.4, 1.0};
  auto [v13, d13] = confluent_integral_formula(4, ax, bx, xx);
  (void)v13;
  DualReal integrand = lift(ElementaryFunctionId::exp(), -xx) *
                       confluent(ax, bx, xx).value;
  CHECK(std::fabs(d13.re - integrand.re) < 1e-8 * (1.0 + std::fabs(integrand.re)));
  CHECK(std::fabs(d13.du - integrand.du) < 1e-8 * (1.0 + std::fabs(integrand.du)));

  CHECK_THROWS_AS(confluent_integral_formula(1, {1.0, 0.0}, {2.0, 0.0}, {0.5, 0.0}),
                  DegenerateParameters);
  CHECK_THROWS_AS(confluent_integral_formula(4, {1.5, 0.0}, {2.5, 0.0}, {0.5, 0.0}),
                  DegenerateParameters);
}

TEST_CASE("gauss closed values") {
  check_close(gauss({0.7, 1.0}, {1.9, 0.0}, {2.4, 0.0}, {0.0, 0.0}).value, {1.0, 0.0});
  DualReal x{0.2, 0.1};
  DualReal lhs = x * gauss({1.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}, -x).value;
  check_close(lhs, {std::log(1.2), 0.1 / 1.2}, 1e-11);
  DualReal at{0.5, 0.0};
  CHECK((at * gauss({0.5, 0.0}, {1.0, 0.0}, {1.5, 0.0}, -(at * at)).value).re ==
        doctest::Approx(std::atan(0.5)).epsilon(1e-12));
  // symmetry in the numerator pair is exact term-wise
  DualReal g1 = gauss({0.6, 1.0}, {1.4, 0.0}, {2.2, 0.0}, {0.4, 1.0}).value;
  DualReal g2 = gauss({1.4, 0.0}, {0.6, 1.0}, {2.2, 0.0}, {0.4, 1.0}).value;
  CHECK(g1 == g2);
}

TEST_CASE("gauss summation at the boundary") {
  DualReal v = gauss_sum_at_1({0.5, 0.0}, {0.5, 0.0}, {2.0, 0.0});
  CHECK(v.re == doctest::Approx(1.2732395447351626862).epsilon(1e-12));
  // a vanishing numerator kills every k >= 1 term
  check_close(gauss_sum_at_1({0.7, 1.0}, {0.0, 0.0}, {2.0, 0.0}), {1.0, 0.0}, 1e-11);
  DualReal dualized = gauss_sum_at_1({0.3, 1.0}, {0.4, 0.0}, {2.1, 0.0});
  SeriesResult series = gauss({0.3, 1.0}, {0.4, 0.0}, {2.1, 0.0}, {1.0, 0.0});
  CHECK(series.value.re == doctest::Approx(dualized.re).epsilon(1e-6));
  CHECK(series.value.du == doctest::Approx(dualized.du).epsilon(1e-6));
  CHECK_THROWS_AS(gauss_sum_at_1({1.0, 0.0}, {1.5, 0.0}, {2.0, 0.0}), DomainError);
  CHECK_THROWS_AS(gauss_sum_at_1({2.0, 0.0}, {-2.6, 0.0}, {2.0, 0.0}), PoleError);
}

TEST_CASE("pfaff and euler transformations") {
  auto [pl, pr] = pfaff_transform({0.5, 0.0}, {0.7, 0.0}, {1.9, 0.0}, {0.3, 0.0});
  CHECK(std::fabs(pl.re - pr.re) < 1e-10);
  auto [pl2, pr2] = pfaff_transform({0.5, 0.0}, {0.7, 0.0}, {1.9, 0.0}, {0.3, 2.0});
  CHECK(std::fabs(pl2.re - pr2.re) < 1e-9);
  CHECK(std::fabs(pl2.du - pr2.du) < 1e-9);

  auto [el, er] = euler_transform({0.4, 1.0}, {0.8, 0.0}, {2.2, 0.0}, {0.35, 0.0});
  CHECK(std::fabs(el.re - er.re) < 1e-9);
  CHECK(std::fabs(el.du - er.du) < 1e-9);
  // zero exponent makes the transform the identity
  auto [ez_l, ez_r] = euler_transform({1.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}, {0.5, 0.0});
  check_close(ez_l, ez_r, 1e-11);

  auto [z_l, z_r] = pfaff_transform({0.5, 0.0}, {0.7, 0.0}, {1.9, 0.0}, {0.0, 0.0});
  CHECK(z_l == DualReal{1.0, 0.0});
  CHECK(z_r == DualReal{1.0, 0.0});

  CHECK_THROWS_AS(pfaff_transform({0.5, 0.0}, {0.7, 0.0}, {1.9, 0.0}, {0.7, 0.0}),
                  DomainError);  // mapped argument leaves the disk
  CHECK_THROWS_AS(euler_transform({0.5, 0.0}, {0.7, 0.0}, {1.9, 0.0}, {1.1, 0.0}),
                  DomainError);
}

TEST_CASE("gauss differential equation residual") {
  CHECK(gauss_ode_residual({0.5, 1.0}, {1.5, 0.0}, {2.5, 0.0}, {0.0, 0.0}) ==
        DualReal{0.0, 0.0});
  DualReal r = gauss_ode_residual({0.5, 0.0}, {1.5, 0.0}, {2.5, 0.0}, {0.3, 0.0});
  CHECK(std::fabs(r.re) < 1e-9);
  DualReal rd = gauss_ode_residual({0.5, 1.0}, {1.5, 0.0}, {2.5, 0.0}, {0.3, 1.0});
  CHECK(std::fabs(rd.re) < 1e-8);
  CHECK(std::fabs(rd.du) < 1e-8);
  CHECK_THROWS_AS(gauss_ode_residual({0.5, 0.0}, {1.5, 0.0}, {2.5, 0.0}, {0.8, 0.0}),
                  DomainError);
}

TEST_CASE("gauss contiguous relations") {
  DualReal zero = gauss_contiguous_residual(1, {0.8, 1.0}, {0.8, 1.0}, {2.0, 0.0},
                                            {0.4, 0.0});
  CHECK(zero == DualReal{0.0, 0.0});
  DualReal r4 = gauss_contiguous_residual(4, {0.6, 0.0}, {1.1, 0.0}, {2.0, 0.0},
                                          {0.4, 0.0});
  CHECK(std::fabs(r4.re) < 1e-10);
  DualReal r3 = gauss_contiguous_residual(3, {0.6, 1.0}, {1.1, 0.0}, {2.0, 0.0},
                                          {0.4, 0.0});
  CHECK(std::fabs(r3.re) < 1e-9);
  CHECK(std::fabs(r3.du) < 1e-9);
}

TEST_CASE("gauss differential formulas") {
  auto [l1, r1] = gauss_diff_formula(1, 1, {1.0, 0.0}, {1.0, 0.0}, {2.0, 0.0},
                                     {0.25, 0.0});
  check_close(l1, r1, 1e-11);
  auto [l4, r4] = gauss_diff_formula(4, 0, {0.7, 0.0}, {1.3, 0.0}, {2.4, 0.0},
                                     {0.3, 0.0});
  check_close(l4, r4, 1e-11);
  auto [l2, r2] = gauss_diff_formula(2, 1, {0.8, 1.0}, {1.3, 0.0}, {2.1, 0.0},
                                     {0.3, 1.0});
  CHECK(std::fabs(l2.re - r2.re) < 1e-9 * (1.0 + std::fabs(r2.re)));
  CHECK(std::fabs(l2.du - r2.du) < 1e-9 * (1.0 + std::fabs(r2.du)));
}

TEST_CASE("elementary identities both sides") {
  auto [a0_l, a0_r] = elementary_identity(ElementaryIdentityId::Arcsin, {0.0, 0.0});
  CHECK(a0_l == DualReal{0.0, 0.0});
  CHECK(a0_r == DualReal{0.0, 0.0});

  auto [lr_l, lr_r] = elementary_identity(ElementaryIdentityId::LogRatio, {0.4, 0.0});
  CHECK(lr_l.re == doctest::Approx(0.8472978603872037).epsilon(1e-11));
  check_close(lr_l, lr_r, 1e-10);

  auto [b_l, b_r] = elementary_identity(ElementaryIdentityId::Binomial, {0.2, 1.0}, 3);
  check_close(b_r, {1.728, 4.32});
  check_close(b_l, b_r, 1e-12);

  auto [at_l, at_r] = elementary_identity(ElementaryIdentityId::Arctan, {0.5, 1.0});
  check_close(at_l, at_r, 1e-11);

  CHECK_THROWS_AS(elementary_identity(ElementaryIdentityId::Arcsin, {1.2, 0.0}),
                  DomainError);
}
