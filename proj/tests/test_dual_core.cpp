#include <cmath>

#include <doctest.h>

#include "dualfunc/dual.hpp"

using namespace dualfunc;
using Id = ElementaryFunctionId;

namespace {

void check_close(const DualReal& got, const DualReal& want, double tol = 1e-12) {
  CHECK(got.re == doctest::Approx(want.re).epsilon(tol));
  CHECK(got.du == doctest::Approx(want.du).epsilon(tol));
}

}  // namespace

TEST_CASE("arithmetic follows the dual algebra") {
  CHECK(DualReal{1.0, 2.0} * DualReal{3.0, 4.0} == DualReal{3.0, 10.0});
  CHECK(DualReal{0.0, 1.0} * DualReal{0.0, 1.0} == DualReal{0.0, 0.0});
  CHECK(DualReal{1.5, -2.0} + DualReal{0.5, 2.0} == DualReal{2.0, 0.0});
  CHECK(DualReal{1.5, -2.0} - DualReal{0.5, 2.0} == DualReal{1.0, -4.0});

  DualReal v{2.0, 4.0};
  check_close(v / v, {1.0, 0.0});
  check_close(inverse(v), {0.5, -1.0});
  check_close(inverse(v) * v, {1.0, 0.0});
}

TEST_CASE("division by a pure dual is rejected") {
  CHECK_THROWS_AS((DualReal{1.0, 1.0} / DualReal{0.0, 5.0}), DivisionByPureDual);
  CHECK_THROWS_AS(inverse(DualReal{0.0, 1.0}), DivisionByPureDual);
}

TEST_CASE("non-finite results are errors, not values") {
  CHECK_THROWS_AS((DualReal{1e308, 0.0} + DualReal{1e308, 0.0}), OverflowError);
  CHECK_THROWS_AS((DualReal{1e300, 0.0} * DualReal{1e300, 0.0}), OverflowError);
}

TEST_CASE("abs uses the real part only") {
  CHECK(abs(DualReal{-3.0, 50.0}) == 3.0);
  CHECK(abs(DualReal{0.0, 50.0}) == 0.0);
}

TEST_CASE("real-base power") {
  check_close(pow(2.0, {3.0, 1.0}), {8.0, 8.0 * std::log(2.0)});
  check_close(pow(5.0, {2.0, 0.0}), {25.0, 0.0});
  check_close(pow(1.0, {-2.3, 4.5}), {1.0, 0.0});
  CHECK_THROWS_AS(pow(0.0, DualReal{1.0, 1.0}), NonPositiveBase);
  CHECK_THROWS_AS(pow(-2.0, DualReal{1.0, 1.0}), NonPositiveBase);
}

TEST_CASE("dual power: logarithmic form and integer fallback agree") {
  DualReal root = pow(DualReal{4.0, 1.0}, DualReal{0.5});
  check_close(root, {2.0, 0.25});
  check_close(root * root, {4.0, 1.0});

  check_close(pow(DualReal{7.0, -3.0}, DualReal{1.0}), {7.0, -3.0});
  CHECK(pow_int({2.0, 3.0}, 3) == DualReal{8.0, 36.0});
  check_close(pow(DualReal{2.0, 3.0}, DualReal{3.0}), {8.0, 36.0});

  // negative real part only works through the integer path
  check_close(pow(DualReal{-2.0, 1.0}, DualReal{2.0}), {4.0, -4.0});
  CHECK_THROWS_AS(pow(DualReal{-2.0, 1.0}, DualReal{0.5}), NonPositiveBase);
  CHECK_THROWS_AS(pow_int(DualReal{0.0, 1.0}, -1), DivisionByPureDual);

  CHECK(pow_int({1.5, 2.0}, 0) == DualReal{1.0, 0.0});
  check_close(pow_int({2.0, 1.0}, -2), {0.25, -0.25});
}

TEST_CASE("lift applies f and seeds the dual channel with f'") {
  check_close(lift(Id::sin(), {0.0, 1.0}), {0.0, 1.0});
  check_close(lift(Id::log(), {1.0, 3.0}), {0.0, 3.0});
  double e1 = std::exp(1.0);
  check_close(lift(Id::exp(), {1.0, 2.0}), {e1, 2.0 * e1});
  check_close(lift(Id::power_k(3), {2.0, 1.0}), {8.0, 12.0});
  check_close(lift(Id::arctan(), {1.0, 2.0}), {std::atan(1.0), 1.0});
}

TEST_CASE("lift rejects out-of-domain arguments by name") {
  CHECK_THROWS_WITH_AS(lift(Id::log(), {-1.0, 0.0}), "log: requires re > 0",
                       DomainError);
  CHECK_THROWS_AS(lift(Id::log(), {0.0, 1.0}), DomainError);
  CHECK_THROWS_AS(lift(Id::arcsin(), {1.0, 0.0}), DomainError);
  CHECK_THROWS_AS(lift(Id::tan(), {std::numbers::pi / 2, 0.0}), DomainError);
  CHECK_THROWS_AS(lift(Id::sec(), {std::numbers::pi / 2 + 1e-12, 0.0}), DomainError);
  CHECK_THROWS_AS(lift(Id::cot(), {0.0, 0.0}), DomainError);
  CHECK_THROWS_AS(lift(Id::csc(), {std::numbers::pi, 0.0}), DomainError);
  CHECK_THROWS_AS(lift(Id::power_k(-2), {0.0, 1.0}), DomainError);
  // within the proximity threshold counts as on the lattice
  CHECK_THROWS_AS(lift(Id::tan(), {std::numbers::pi / 2 + 1e-9, 0.0}), DomainError);
  CHECK_NOTHROW(lift(Id::tan(), {std::numbers::pi / 2 + 1e-6, 0.0}));
}

TEST_CASE("dual derivative carries f' and f''") {
  check_close(dual_derivative(Id::power_k(3), {2.0, 1.0}), {12.0, 12.0});
  check_close(dual_derivative(Id::sin(), {0.0, 1.0}), {1.0, 0.0});
  DualReal x{0.7, 1.5};
  check_close(dual_derivative(Id::exp(), x), lift(Id::exp(), x));
}

TEST_CASE("antiderivative fixes C = 0 and inverts the derivative") {
  check_close(antiderivative(Id::power_k(1), {2.0, 3.0}), {2.0, 6.0});
  DualReal x{0.8, 1.0};
  check_close(antiderivative(Id::exp(), x), lift(Id::exp(), x));
  check_close(antiderivative(Id::cos(), {0.0, 5.0}), {0.0, 5.0});

  // du channel of the antiderivative at seed b is b * f(re)
  for (auto fn : {Id::sin(), Id::tan(), Id::sec(), Id::log(), Id::arctan(),
                  Id::power_k(-1), Id::power_k(4)}) {
    DualReal a = antiderivative(fn, {0.6, 2.0});
    CHECK(a.du / 2.0 == doctest::Approx(real_value(fn, 0.6)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(antiderivative(Id::tan(), {2.0, 0.0}), DomainError);  // sec < 0
  CHECK_THROWS_AS(antiderivative(Id::power_k(-1), {-1.0, 0.0}), DomainError);
}

TEST_CASE("parse_dual accepts the documented grammar") {
  CHECK(parse_dual("1.5+2eps") == DualReal{1.5, 2.0});
  CHECK(parse_dual("-3") == DualReal{-3.0, 0.0});
  CHECK(parse_dual("0-0.5eps") == DualReal{0.0, -0.5});
  CHECK(parse_dual("2eps") == DualReal{0.0, 2.0});
  CHECK(parse_dual("-0.5eps") == DualReal{0.0, -0.5});
  CHECK(parse_dual("+1.25e2") == DualReal{125.0, 0.0});
  CHECK(parse_dual("1e-3+1e-4eps") == DualReal{1e-3, 1e-4});
}

TEST_CASE("parse_dual reports the offending byte") {
  auto offset_of = [](const char* text) {
    try {
      parse_dual(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.offset());
    }
    return -1L;
  };
  CHECK(offset_of("") == 0);
  CHECK(offset_of("x") == 0);
  CHECK(offset_of("1.5+") == 3);
  CHECK(offset_of("1.5+2") == 5);
  CHECK(offset_of("1.5+2epsx") == 5);
  CHECK(offset_of("1.5~2eps") == 3);
  CHECK(offset_of("eps") == 0);
}

TEST_CASE("format_dual emits shortest round-trip forms") {
  CHECK(format_dual({1.5, 0.0}) == "1.5");
  CHECK(format_dual({1.5, 2.0}) == "1.5+2eps");
  CHECK(format_dual({1.5, -2.0}) == "1.5-2eps");
  CHECK(format_dual({0.0, -0.5}) == "0-0.5eps");
  CHECK(format_dual({-3.0, 0.0}) == "-3");
  CHECK(format_dual({0.1, 0.2}) == "0.1+0.2eps");
  // negative zero dual part counts as zero
  CHECK(format_dual({2.0, -0.0}) == "2");

  for (DualReal v : {DualReal{1.0 / 3.0, -2.0 / 7.0}, DualReal{1e300, 5e-300},
                     DualReal{-0.0, 0.0}, DualReal{6.02214076e23, 1.0}}) {
    CHECK(parse_dual(format_dual(v)) == v);
  }
}
