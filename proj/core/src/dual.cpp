#include "dualfunc/dual.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>

namespace dualfunc {

namespace {

constexpr double kTrigPoleThreshold = 1e-8;

bool is_pure_integer(const DualReal& v) {
  return v.du == 0.0 && std::nearbyint(v.re) == v.re &&
         std::fabs(v.re) <= 9.007199254740992e15;  // 2^53
}

[[noreturn]] void throw_domain(ElementaryFunctionId f, const char* constraint) {
  throw DomainError(std::string(f.name()) + ": " + constraint);
}

// Rejects arguments within the absolute threshold of the singular lattice.
void check_domain(ElementaryFunctionId f, double x) {
  using Tag = ElementaryFunctionId::Tag;
  const double pi = std::numbers::pi;
  switch (f.tag) {
    case Tag::Log:
      if (!(x > 0.0)) throw_domain(f, "requires re > 0");
      break;
    case Tag::Arcsin:
      if (!(std::fabs(x) < 1.0)) throw_domain(f, "requires |re| < 1");
      break;
    case Tag::Tan:
    case Tag::Sec: {
      double k = std::nearbyint(x / pi - 0.5);
      if (std::fabs(x - (k + 0.5) * pi) < kTrigPoleThreshold)
        throw_domain(f, "re too close to an odd multiple of pi/2");
      break;
    }
    case Tag::Cot:
    case Tag::Csc: {
      double k = std::nearbyint(x / pi);
      if (std::fabs(x - k * pi) < kTrigPoleThreshold)
        throw_domain(f, "re too close to a multiple of pi");
      break;
    }
    case Tag::Power:
      if (f.power < 0 && x == 0.0) throw_domain(f, "zero base with negative exponent");
      break;
    default:
      break;
  }
}

}  // namespace

const char* ElementaryFunctionId::name() const {
  switch (tag) {
    case Tag::Exp: return "exp";
    case Tag::Sin: return "sin";
    case Tag::Cos: return "cos";
    case Tag::Tan: return "tan";
    case Tag::Cot: return "cot";
    case Tag::Sec: return "sec";
    case Tag::Csc: return "csc";
    case Tag::Log: return "log";
    case Tag::Arcsin: return "arcsin";
    case Tag::Arctan: return "arctan";
    case Tag::Power: return "power_k";
  }
  return "?";
}

DualReal pow(double base, const DualReal& exponent) {
  if (!(base > 0.0)) {
    throw NonPositiveBase("real base of a dual exponent must be positive");
  }
  double r = std::pow(base, exponent.re);
  DualReal out{r, r * exponent.du * std::log(base)};
  detail::ensure_finite(out, "power");
  return out;
}

DualReal pow_int(const DualReal& base, long long k) {
  if (k < 0) {
    return pow_int(inverse(base), -k);
  }
  DualReal acc{1.0, 0.0};
  for (long long i = 0; i < k; ++i) acc *= base;
  return acc;
}

DualReal pow(const DualReal& base, const DualReal& exponent) {
  if (base.re > 0.0) {
    double r = std::pow(base.re, exponent.re);
    DualReal out{r, r * (base.du * exponent.re / base.re +
                         exponent.du * std::log(base.re))};
    detail::ensure_finite(out, "power");
    return out;
  }
  if (is_pure_integer(exponent)) {
    return pow_int(base, static_cast<long long>(exponent.re));
  }
  throw NonPositiveBase("dual power needs base.re > 0 or a pure integer exponent");
}

double real_value(ElementaryFunctionId f, double x) {
  using Tag = ElementaryFunctionId::Tag;
  switch (f.tag) {
    case Tag::Exp: return std::exp(x);
    case Tag::Sin: return std::sin(x);
    case Tag::Cos: return std::cos(x);
    case Tag::Tan: return std::tan(x);
    case Tag::Cot: return std::cos(x) / std::sin(x);
    case Tag::Sec: return 1.0 / std::cos(x);
    case Tag::Csc: return 1.0 / std::sin(x);
    case Tag::Log: return std::log(x);
    case Tag::Arcsin: return std::asin(x);
    case Tag::Arctan: return std::atan(x);
    case Tag::Power: return std::pow(x, static_cast<double>(f.power));
  }
  return std::numeric_limits<double>::quiet_NaN();
}

double real_derivative(ElementaryFunctionId f, double x) {
  using Tag = ElementaryFunctionId::Tag;
  switch (f.tag) {
    case Tag::Exp: return std::exp(x);
    case Tag::Sin: return std::cos(x);
    case Tag::Cos: return -std::sin(x);
    case Tag::Tan: {
      double t = std::tan(x);
      return 1.0 + t * t;  // sec^2
    }
    case Tag::Cot: {
      double c = std::cos(x) / std::sin(x);
      return -(1.0 + c * c);  // -csc^2
    }
    case Tag::Sec: {
      double s = 1.0 / std::cos(x);
      return s * std::tan(x);
    }
    case Tag::Csc: {
      double c = 1.0 / std::sin(x);
      return -c * (std::cos(x) / std::sin(x));
    }
    case Tag::Log: return 1.0 / x;
    case Tag::Arcsin: return 1.0 / std::sqrt(1.0 - x * x);
    case Tag::Arctan: return 1.0 / (1.0 + x * x);
    case Tag::Power: {
      double k = static_cast<double>(f.power);
      if (f.power == 0) return 0.0;
      return k * std::pow(x, k - 1.0);
    }
  }
  return std::numeric_limits<double>::quiet_NaN();
}

double real_second_derivative(ElementaryFunctionId f, double x) {
  using Tag = ElementaryFunctionId::Tag;
  switch (f.tag) {
    case Tag::Exp: return std::exp(x);
    case Tag::Sin: return -std::sin(x);
    case Tag::Cos: return -std::cos(x);
    case Tag::Tan: {
      double t = std::tan(x);
      return 2.0 * t * (1.0 + t * t);
    }
    case Tag::Cot: {
      double c = std::cos(x) / std::sin(x);
      return 2.0 * c * (1.0 + c * c);
    }
    case Tag::Sec: {
      double s = 1.0 / std::cos(x);
      double t = std::tan(x);
      return s * (t * t + s * s);
    }
    case Tag::Csc: {
      double c = 1.0 / std::sin(x);
      double ct = std::cos(x) / std::sin(x);
      return c * (ct * ct + c * c);
    }
    case Tag::Log: return -1.0 / (x * x);
    case Tag::Arcsin: {
      double d = 1.0 - x * x;
      return x / (d * std::sqrt(d));
    }
    case Tag::Arctan: {
      double d = 1.0 + x * x;
      return -2.0 * x / (d * d);
    }
    case Tag::Power: {
      double k = static_cast<double>(f.power);
      if (f.power == 0 || f.power == 1) return 0.0;
      return k * (k - 1.0) * std::pow(x, k - 2.0);
    }
  }
  return std::numeric_limits<double>::quiet_NaN();
}

DualReal lift(ElementaryFunctionId f, const DualReal& x) {
  check_domain(f, x.re);
  DualReal out{real_value(f, x.re), x.du * real_derivative(f, x.re)};
  detail::ensure_finite(out, "lift");
  return out;
}

DualReal dual_derivative(ElementaryFunctionId f, const DualReal& x) {
  check_domain(f, x.re);
  DualReal out{real_derivative(f, x.re), x.du * real_second_derivative(f, x.re)};
  detail::ensure_finite(out, "derivative");
  return out;
}

DualReal antiderivative(ElementaryFunctionId f, const DualReal& x) {
  using Tag = ElementaryFunctionId::Tag;
  using Id = ElementaryFunctionId;
  check_domain(f, x.re);
  switch (f.tag) {
    case Tag::Exp: return lift(Id::exp(), x);
    case Tag::Sin: return -lift(Id::cos(), x);
    case Tag::Cos: return lift(Id::sin(), x);
    case Tag::Tan: {
      DualReal s = lift(Id::sec(), x);
      if (!(s.re > 0.0)) throw_domain(f, "log(sec) form requires sec(re) > 0");
      return lift(Id::log(), s);
    }
    case Tag::Cot: {
      DualReal c = lift(Id::csc(), x);
      if (!(c.re > 0.0)) throw_domain(f, "log(csc) form requires csc(re) > 0");
      return -lift(Id::log(), c);
    }
    case Tag::Sec: {
      DualReal s = lift(Id::sec(), x) + lift(Id::tan(), x);
      if (!(s.re > 0.0)) throw_domain(f, "log form requires sec(re) + tan(re) > 0");
      return lift(Id::log(), s);
    }
    case Tag::Csc: {
      DualReal s = lift(Id::csc(), x) - lift(Id::cot(), x);
      if (!(s.re > 0.0)) throw_domain(f, "log form requires csc(re) - cot(re) > 0");
      return lift(Id::log(), s);
    }
    case Tag::Log:
      // int log = x log x - x
      return x * lift(Id::log(), x) - x;
    case Tag::Arcsin: {
      // int arcsin = x arcsin x + sqrt(1 - x^2)
      DualReal d = DualReal{1.0} - x * x;
      if (!(d.re > 0.0)) throw_domain(f, "requires |re| < 1");
      return x * lift(Id::arcsin(), x) + sqrt(d);
    }
    case Tag::Arctan:
      // int arctan = x arctan x - log(1 + x^2)/2
      return x * lift(Id::arctan(), x) -
             lift(Id::log(), DualReal{1.0} + x * x) / DualReal{2.0};
    case Tag::Power:
      if (f.power == -1) {
        if (!(x.re > 0.0)) throw_domain(f, "log form requires re > 0");
        return lift(Id::log(), x);
      }
      return pow_int(x, f.power + 1) / DualReal{static_cast<double>(f.power) + 1.0};
  }
  throw DomainError("unknown elementary function");
}

// ---------------------------------------------------------------------------
// Dual literal grammar:
//   dual := real ( sign real "eps" )? | sign? real "eps"
//   real := decimal floating literal (optional sign, optional exponent)
// ---------------------------------------------------------------------------

namespace {

// Parses a decimal literal (optional sign) starting at `pos`; advances `pos`.
double parse_real_at(std::string_view text, std::size_t& pos) {
  std::size_t start = pos;
  std::size_t i = pos;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  double magnitude = 0.0;
  auto [end, ec] = std::from_chars(text.data() + i, text.data() + text.size(), magnitude);
  if (ec != std::errc() || end == text.data() + i) {
    throw ParseError("expected a decimal number", start);
  }
  pos = static_cast<std::size_t>(end - text.data());
  return negative ? -magnitude : magnitude;
}

}  // namespace

DualReal parse_dual(std::string_view text) {
  if (text.empty()) throw ParseError("empty dual literal", 0);
  std::size_t pos = 0;
  double first = parse_real_at(text, pos);

  if (pos == text.size()) return {first, 0.0};

  if (text.substr(pos) == "eps") return {0.0, first};

  if (text[pos] != '+' && text[pos] != '-') {
    throw ParseError("expected '+', '-' or 'eps' after real part", pos);
  }
  double second = parse_real_at(text, pos);
  if (text.substr(pos) != "eps") {
    throw ParseError("expected trailing 'eps' after dual part", pos);
  }
  return {first, second};
}

namespace {

std::string shortest_decimal(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, end);
}

}  // namespace

std::string format_dual(const DualReal& x) {
  if (x.du == 0.0) return shortest_decimal(x.re);
  std::string out = shortest_decimal(x.re);
  if (!std::signbit(x.du)) out += '+';
  out += shortest_decimal(x.du);
  out += "eps";
  return out;
}

}  // namespace dualfunc
