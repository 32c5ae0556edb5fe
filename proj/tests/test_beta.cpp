#include <cmath>

#include <doctest.h>

#include "dualfunc/beta.hpp"

using namespace dualfunc;

namespace {

void check_close(const DualReal& got, const DualReal& want, double tol = 1e-12) {
  CHECK(got.re == doctest::Approx(want.re).epsilon(tol));
  CHECK(got.du == doctest::Approx(want.du).epsilon(tol));
}

}  // namespace

TEST_CASE("beta_dual closed values") {
  check_close(beta_dual({1.0, 0.0}, {1.0, 0.0}), {1.0, 0.0});
  check_close(beta_dual({2.0, 0.0}, {3.0, 0.0}), {1.0 / 12.0, 0.0});
  // beta(a, 1) = 1/a carries the dual inverse rule
  check_close(beta_dual({2.0, 1.0}, {1.0, 0.0}), {0.5, -0.25});
}

TEST_CASE("beta_dual symmetry and functional relations") {
  DualReal a{1.3, 1.0}, c{2.6, -1.0}, e{0.9, 0.0};
  check_close(beta_dual(a, c), beta_dual(c, a));

  DualReal lhs = beta_dual(a, c + DualReal{1.0});
  check_close(c / a * beta_dual(a + DualReal{1.0}, c), lhs, 1e-11);
  check_close(c / (a + c) * beta_dual(a, c), lhs, 1e-11);

  check_close(beta_dual(a, c) * beta_dual(a + c, e),
              beta_dual(c, e) * beta_dual(c + e, a), 1e-10);
}

TEST_CASE("beta_dual pole reporting names the argument") {
  CHECK_THROWS_WITH_AS(beta_dual({0.0, 1.0}, {1.0, 0.0}),
                       "beta_dual: first argument at pole", PoleError);
  CHECK_THROWS_WITH_AS(beta_dual({1.0, 0.0}, {-2.0, 0.0}),
                       "beta_dual: second argument at pole", PoleError);
  CHECK_THROWS_WITH_AS(beta_dual({0.5, 0.0}, {-0.5, 0.0}),
                       "beta_dual: sum of argument at pole", PoleError);
}

TEST_CASE("quadrature path agrees with the gamma relation") {
  auto q = beta_dual_quadrature({1.0, 0.0}, {1.0, 0.0}, 1e-10);
  CHECK(q.value.re == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(q.nodes >= 1);

  auto half = beta_dual_quadrature({0.5, 0.0}, {0.5, 0.0}, 1e-10);
  CHECK(half.value.re == doctest::Approx(3.14159265358979323846).epsilon(1e-9));

  DualReal a{2.0, 1.0}, c{3.0, 0.0};
  auto mixed = beta_dual_quadrature(a, c, 1e-10);
  check_close(mixed.value, beta_dual(a, c), 1e-8);

  DualReal both{0.4, 1.0}, other{0.7, 2.0};
  check_close(beta_dual_quadrature(both, other, 1e-10).value,
              beta_dual(both, other), 1e-8);
}

TEST_CASE("quadrature path requires positive real parts") {
  CHECK_THROWS_AS(beta_dual_quadrature({-0.5, 0.0}, {1.0, 0.0}, 1e-8), DomainError);
  CHECK_THROWS_AS(beta_dual_quadrature({1.0, 0.0}, {0.0, 0.0}, 1e-8), DomainError);
}
