#include <cmath>
#include <limits>

#include <doctest.h>

#include "dualfunc/reference.hpp"

using namespace dualfunc;

TEST_CASE("gamma_real hits the classic values") {
  CHECK(gamma_real(1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(gamma_real(5.0) == doctest::Approx(24.0).epsilon(1e-14));
  CHECK(gamma_real(0.5) == doctest::Approx(1.7724538509055160273).epsilon(1e-13));
  // reflection region
  CHECK(gamma_real(-0.5) == doctest::Approx(-3.5449077018110320546).epsilon(1e-12));
  CHECK(gamma_real(-2.5) == doctest::Approx(-0.94530872048294188123).epsilon(1e-12));
}

TEST_CASE("gamma_real pole and overflow handling") {
  CHECK_THROWS_AS(gamma_real(0.0), PoleError);
  CHECK_THROWS_AS(gamma_real(-3.0), PoleError);
  CHECK_THROWS_AS(gamma_real(-3.0 + 1e-12), PoleError);
  CHECK_NOTHROW(gamma_real(-3.0 + 1e-6));
  CHECK_THROWS_AS(gamma_real(500.0), OverflowError);
  try {
    gamma_real(-7.0);
  } catch (const PoleError& e) {
    CHECK(e.nearest_pole() == -7);
  }
}

TEST_CASE("digamma and trigamma spot values") {
  const double euler = 0.5772156649015329;
  CHECK(digamma(1.0) == doctest::Approx(-euler).epsilon(1e-13));
  CHECK(digamma(2.0) == doctest::Approx(1.0 - euler).epsilon(1e-13));
  CHECK(digamma(5.0) ==
        doctest::Approx(-euler + 1.0 + 0.5 + 1.0 / 3.0 + 0.25).epsilon(1e-13));
  CHECK(trigamma(1.0) == doctest::Approx(1.6449340668482264365).epsilon(1e-13));
  CHECK_THROWS_AS(digamma(-1.0), PoleError);
  CHECK_THROWS_AS(trigamma(0.0), PoleError);
  // negative non-integer arguments go through the recurrence
  CHECK(digamma(-0.5) == doctest::Approx(0.036489973978576520559).epsilon(1e-11));
}

TEST_CASE("finite_diff on known derivatives") {
  CHECK(finite_diff([](double t) { return t * t; }, 3.0) ==
        doctest::Approx(6.0).epsilon(1e-9));
  CHECK(finite_diff([](double t) { return std::exp(t); }, 0.0) ==
        doctest::Approx(1.0).epsilon(1e-9));
  double second = finite_diff([](double t) { return std::sin(t); }, 0.0, {2, 0.0, 2});
  CHECK(std::fabs(second) < 1e-7);
  // order 2 wants a larger step than the order-1 default
  double curved = finite_diff([](double t) { return std::cos(t); }, 0.4, {2, 1e-3, 2});
  CHECK(curved == doctest::Approx(-std::cos(0.4)).epsilon(1e-8));
}

TEST_CASE("finite_diff validates its configuration") {
  auto f = [](double t) { return t; };
  CHECK_THROWS_AS(finite_diff(f, 0.0, {3, 0.0, 2}), DomainError);
  CHECK_THROWS_AS(finite_diff(f, 0.0, {1, 0.0, 9}), DomainError);
  CHECK_THROWS_AS(finite_diff(f, 0.0, {1, 1.5, 2}), DomainError);
  CHECK_THROWS_AS(finite_diff(f, 0.0, {1, -0.1, 2}), DomainError);
}

TEST_CASE("finite_diff propagates callback failures") {
  struct Boom {};
  CHECK_THROWS_AS(finite_diff([](double) -> double { throw Boom{}; }, 0.0), Boom);
}

TEST_CASE("quad_de integrates smooth and endpoint-singular integrands") {
  auto unit = quad_de([](double) { return DualReal{1.0}; }, 0.0, 1.0, 1e-12);
  CHECK(unit.value.re == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(unit.nodes >= 1);
  CHECK(unit.abs_error_estimate <= 1e-12);

  auto decay = quad_de([](double t) { return DualReal{std::exp(-t)}; }, 0.0,
                       std::numeric_limits<double>::infinity(), 1e-11);
  CHECK(decay.value.re == doctest::Approx(1.0).epsilon(1e-10));

  auto root = quad_de([](double t) { return DualReal{1.0 / std::sqrt(t)}; }, 0.0, 1.0,
                      1e-11);
  CHECK(root.value.re == doctest::Approx(2.0).epsilon(1e-9));

  auto logint = quad_de([](double t) { return DualReal{std::log(t)}; }, 0.0, 1.0,
                        1e-11);
  CHECK(logint.value.re == doctest::Approx(-1.0).epsilon(1e-10));

  // both channels integrate over the same node set
  auto dual = quad_de([](double t) { return DualReal{1.0, std::log(t)}; }, 0.0, 1.0,
                      1e-11);
  CHECK(dual.value.re == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(dual.value.du == doctest::Approx(-1.0).epsilon(1e-10));

  auto shifted = quad_de([](double t) { return DualReal{std::exp(-(t - 2.0))}; }, 2.0,
                         std::numeric_limits<double>::infinity(), 1e-11);
  CHECK(shifted.value.re == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("quad_de rejects bad limits and non-integrable inputs") {
  auto f = [](double) { return DualReal{1.0}; };
  CHECK_THROWS_AS(quad_de(f, 1.0, 0.0, 1e-10), DomainError);
  CHECK_THROWS_AS(quad_de(f, 0.0, 1.0, 0.0), DomainError);
  CHECK_THROWS_AS(
      quad_de(f, -std::numeric_limits<double>::infinity(), 1.0, 1e-10), DomainError);
  CHECK_THROWS_AS(
      quad_de([](double t) { return DualReal{1.0 / t}; }, 0.0, 1.0, 1e-10),
      NoConvergence);
}
