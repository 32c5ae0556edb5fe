#pragma once

#include <cmath>
#include <string>
#include <string_view>

#include "dualfunc/errors.hpp"

namespace dualfunc {

/// A dual real number re + eps*du with eps^2 = 0.
///
/// The dual part carries exact first-order sensitivity: lifting a function
/// f through a DualReal seeded with du = 1 leaves f'(re) in the dual part.
/// Nilpotency is structural - no operation forms a product of two dual
/// parts, so the eps^2 term is dropped exactly, never rounded away.
struct DualReal {
  double re = 0.0;
  double du = 0.0;

  constexpr DualReal() = default;
  constexpr DualReal(double real) : re(real) {}  // reals embed with zero dual part
  constexpr DualReal(double real, double dual) : re(real), du(dual) {}
};

namespace detail {
inline void ensure_finite(const DualReal& v, const char* op) {
  if (!std::isfinite(v.re) || !std::isfinite(v.du)) {
    throw OverflowError(std::string("non-finite result in dual ") + op);
  }
}
}  // namespace detail

constexpr bool operator==(const DualReal& x, const DualReal& y) {
  return x.re == y.re && x.du == y.du;
}
constexpr bool operator!=(const DualReal& x, const DualReal& y) { return !(x == y); }

constexpr DualReal operator-(const DualReal& x) { return {-x.re, -x.du}; }
constexpr DualReal operator+(const DualReal& x) { return x; }

inline DualReal operator+(const DualReal& x, const DualReal& y) {
  DualReal r{x.re + y.re, x.du + y.du};
  detail::ensure_finite(r, "addition");
  return r;
}

inline DualReal operator-(const DualReal& x, const DualReal& y) {
  DualReal r{x.re - y.re, x.du - y.du};
  detail::ensure_finite(r, "subtraction");
  return r;
}

inline DualReal operator*(const DualReal& x, const DualReal& y) {
  DualReal r{x.re * y.re, x.re * y.du + y.re * x.du};
  detail::ensure_finite(r, "multiplication");
  return r;
}

/// Quotient of dual numbers; requires y.re != 0 (pure duals are zero divisors).
inline DualReal operator/(const DualReal& x, const DualReal& y) {
  if (y.re == 0.0) {
    throw DivisionByPureDual("division by a dual number with zero real part");
  }
  DualReal r{x.re / y.re, (x.du * y.re - x.re * y.du) / (y.re * y.re)};
  detail::ensure_finite(r, "division");
  return r;
}

inline DualReal& operator+=(DualReal& x, const DualReal& y) { return x = x + y; }
inline DualReal& operator-=(DualReal& x, const DualReal& y) { return x = x - y; }
inline DualReal& operator*=(DualReal& x, const DualReal& y) { return x = x * y; }
inline DualReal& operator/=(DualReal& x, const DualReal& y) { return x = x / y; }

/// Multiplicative inverse 1/x; requires x.re != 0.
inline DualReal inverse(const DualReal& x) { return DualReal{1.0} / x; }

/// Absolute value |x| = |re(x)|. Note this discards the dual part entirely
/// (it is a seminorm, not a norm: |eps| = 0), matching the convention the
/// convergence classification is built on.
inline double abs(const DualReal& x) { return std::fabs(x.re); }

/// a^b for real a > 0 and dual exponent: a^{b.re} * (1 + eps * b.du * log a).
DualReal pow(double base, const DualReal& exponent);

/// Integer power by repeated multiplication; exact in the dual algebra and
/// valid for any base when k >= 0 (negative k inverts, needing base.re != 0).
DualReal pow_int(const DualReal& base, long long k);

/// General dual power. Uses the logarithmic form
///   base.re^{e.re} * (1 + eps*(base.du*e.re/base.re + e.du*log(base.re)))
/// when base.re > 0; a pure-integer exponent falls back to pow_int so bases
/// with non-positive real part still work.
DualReal pow(const DualReal& base, const DualReal& exponent);

/// sqrt shorthand for pow(x, 1/2); requires x.re > 0.
inline DualReal sqrt(const DualReal& x) { return pow(x, DualReal{0.5}); }

/// Identifies one function of the closed elementary set together with its
/// tabulated first and second derivatives. power_k carries the integer
/// exponent of x^k.
struct ElementaryFunctionId {
  enum class Tag { Exp, Sin, Cos, Tan, Cot, Sec, Csc, Log, Arcsin, Arctan, Power };

  Tag tag = Tag::Exp;
  long long power = 0;

  static constexpr ElementaryFunctionId exp() { return {Tag::Exp}; }
  static constexpr ElementaryFunctionId sin() { return {Tag::Sin}; }
  static constexpr ElementaryFunctionId cos() { return {Tag::Cos}; }
  static constexpr ElementaryFunctionId tan() { return {Tag::Tan}; }
  static constexpr ElementaryFunctionId cot() { return {Tag::Cot}; }
  static constexpr ElementaryFunctionId sec() { return {Tag::Sec}; }
  static constexpr ElementaryFunctionId csc() { return {Tag::Csc}; }
  static constexpr ElementaryFunctionId log() { return {Tag::Log}; }
  static constexpr ElementaryFunctionId arcsin() { return {Tag::Arcsin}; }
  static constexpr ElementaryFunctionId arctan() { return {Tag::Arctan}; }
  static constexpr ElementaryFunctionId power_k(long long k) { return {Tag::Power, k}; }

  const char* name() const;
};

/// The tabulated real f, f', f'' backing each ElementaryFunctionId.
double real_value(ElementaryFunctionId f, double x);
double real_derivative(ElementaryFunctionId f, double x);
double real_second_derivative(ElementaryFunctionId f, double x);

/// f(x) = f(x.re) + eps * x.du * f'(x.re). Throws DomainError naming the
/// violated constraint when x.re is outside the real domain of f.
DualReal lift(ElementaryFunctionId f, const DualReal& x);

/// d/dx f(x) = f'(x.re) + eps * x.du * f''(x.re).
DualReal dual_derivative(ElementaryFunctionId f, const DualReal& x);

/// Antiderivative F of f evaluated at x, with the integration constant
/// fixed to zero so the operation is a function. d/dx F reproduces lift(f, .).
DualReal antiderivative(ElementaryFunctionId f, const DualReal& x);

/// Parse a dual literal: `re`, `re+du eps`, `re-du eps`, or `du eps`
/// (no spaces; e.g. "1.5+2eps", "-3", "0-0.5eps", "2eps").
DualReal parse_dual(std::string_view text);

/// Shortest round-trip decimal form; emits `re` alone when du == 0, else
/// `re+du eps` with the sign absorbed into du.
std::string format_dual(const DualReal& x);

}  // namespace dualfunc
