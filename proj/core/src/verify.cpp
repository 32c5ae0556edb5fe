#include "dualfunc/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <initializer_list>
#include <map>
#include <random>
#include <string_view>

#include "dualfunc/beta.hpp"
#include "dualfunc/dual.hpp"
#include "dualfunc/gamma.hpp"
#include "dualfunc/hypergeometric.hpp"
#include "dualfunc/reference.hpp"
#include "dualfunc/special.hpp"

namespace dualfunc::verify {

namespace {

// Deterministic across platforms: raw mt19937_64 bits mapped to [0,1) with a
// fixed 53-bit rule, never std::uniform_real_distribution.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) {
    double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
  }

  int range_int(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  double pick(std::initializer_list<double> values) {
    auto it = values.begin();
    std::advance(it, range_int(0, static_cast<int>(values.size()) - 1));
    return *it;
  }

  std::uint64_t bits() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t suite_seed(std::uint64_t seed, std::string_view name) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h ^ (seed * 0x9e3779b97f4a7c15ull);
}

double rel_err(double got, double want) {
  double d = std::fabs(got - want);
  if (d == 0.0) return 0.0;
  return d / std::max(std::fabs(want), 1e-300);
}

// channel-wise relative error with a cross-channel floor so a tiny channel of
// a large value is not judged at machine-noise scale
double dual_rel_err(const DualReal& got, const DualReal& want) {
  double big = std::max(std::fabs(want.re), std::fabs(want.du));
  double floor = std::max(1e-300, 1e-3 * big);
  double er = std::fabs(got.re - want.re) / std::max(std::fabs(want.re), floor);
  double ed = std::fabs(got.du - want.du) / std::max(std::fabs(want.du), floor);
  return std::max(er, ed);
}

// residual normalized by 1 + |F| with |F| the larger channel magnitude
double residual_norm(const DualReal& residual, const DualReal& reference) {
  double scale = 1.0 + std::max(std::fabs(reference.re), std::fabs(reference.du));
  return std::max(std::fabs(residual.re), std::fabs(residual.du)) / scale;
}

class Check {
 public:
  Check(std::string name, double tolerance)
      : result_{std::move(name), 0.0, tolerance, 0, true} {}

  void observe(double normalized) {
    result_.worst_residual = std::max(result_.worst_residual, normalized);
    ++result_.cases;
  }

  void observe_flag(bool ok) { observe(ok ? 0.0 : 1.0); }

  CheckResult finish() {
    result_.pass = result_.worst_residual <= result_.tolerance && result_.cases > 0;
    return result_;
  }

 private:
  CheckResult result_;
};

using Suite = std::vector<CheckResult> (*)(std::uint64_t);

constexpr double kEulerGammaLiteral = 0.5772156649015329;

// ---------------------------------------------------------------------------
// dual_core
// ---------------------------------------------------------------------------

struct FnDomain {
  ElementaryFunctionId fn;
  double lo;
  double hi;
};

std::vector<FnDomain> elementary_domains() {
  using Id = ElementaryFunctionId;
  return {
      {Id::exp(), -3.0, 3.0},     {Id::sin(), -3.0, 3.0},
      {Id::cos(), -3.0, 3.0},     {Id::tan(), -1.45, 1.45},
      {Id::cot(), 0.15, 2.95},    {Id::sec(), -1.45, 1.45},
      {Id::csc(), 0.15, 2.95},    {Id::log(), 0.05, 5.0},
      {Id::arcsin(), -0.9, 0.9},  {Id::arctan(), -3.0, 3.0},
      {Id::power_k(0), 0.2, 2.5}, {Id::power_k(1), 0.2, 2.5},
      {Id::power_k(2), 0.2, 2.5}, {Id::power_k(3), 0.2, 2.5},
      {Id::power_k(-1), 0.2, 2.5}, {Id::power_k(-3), 0.2, 2.5},
  };
}

std::vector<CheckResult> suite_dual_core(std::uint64_t seed) {
  Rng rng(suite_seed(seed, "dual_core"));
  std::vector<CheckResult> out;
  auto domains = elementary_domains();
  using Id = ElementaryFunctionId;

  {
    Check c("lift_matches_finite_difference", 1e-6);
    for (const auto& d : domains) {
      for (int i = 0; i < 15; ++i) {
        double x = rng.uniform(d.lo, d.hi);
        double fd = finite_diff([&](double t) { return real_value(d.fn, t); }, x);
        c.observe(rel_err(lift(d.fn, {x, 1.0}).du, fd));
      }
    }
    out.push_back(c.finish());
  }
  {
    // safe shared domain for pairwise combinations
    std::vector<ElementaryFunctionId> fns = {
        Id::exp(), Id::sin(),    Id::cos(),    Id::tan(),        Id::cot(),
        Id::sec(), Id::csc(),    Id::log(),    Id::arcsin(),     Id::arctan(),
        Id::power_k(2), Id::power_k(3)};
    Check c("product_rule", 1e-12);
    for (int i = 0; i < 200; ++i) {
      auto f = fns[static_cast<std::size_t>(rng.range_int(0, 11))];
      auto g = fns[static_cast<std::size_t>(rng.range_int(0, 11))];
      DualReal x{rng.uniform(0.25, 0.85), rng.pick({1.0, -2.0, 3.0})};
      DualReal got = dual_derivative(f, x) * lift(g, x) + lift(f, x) * dual_derivative(g, x);
      double fv = real_value(f, x.re), gv = real_value(g, x.re);
      double fd = real_derivative(f, x.re), gd = real_derivative(g, x.re);
      double fdd = real_second_derivative(f, x.re), gdd = real_second_derivative(g, x.re);
      DualReal want{fd * gv + fv * gd, x.du * (fdd * gv + 2.0 * fd * gd + fv * gdd)};
      // normalize by the ingredient magnitudes: H' and H'' may cancel to 0
      double scale = (std::fabs(fv) + std::fabs(fd) + std::fabs(fdd)) *
                     (std::fabs(gv) + std::fabs(gd) + std::fabs(gdd)) *
                     (1.0 + std::fabs(x.du));
      c.observe(std::max(std::fabs(got.re - want.re), std::fabs(got.du - want.du)) /
                scale);
    }
    out.push_back(c.finish());

    Check ch("chain_rule", 1e-12);
    int accepted = 0;
    while (accepted < 200) {
      auto f = fns[static_cast<std::size_t>(rng.range_int(0, 11))];
      auto g = fns[static_cast<std::size_t>(rng.range_int(0, 11))];
      DualReal x{rng.uniform(0.25, 0.85), rng.pick({1.0, -1.0, 2.0})};
      DualReal inner;
      DualReal composed;
      try {
        inner = lift(g, x);
        composed = lift(f, inner);
      } catch (const DomainError&) {
        continue;  // inner value left f's domain; draw again
      }
      double want = real_derivative(g, x.re) * real_derivative(f, inner.re) * x.du;
      ch.observe(rel_err(composed.du, want));
      ++accepted;
    }
    out.push_back(ch.finish());

    Check ibp("integration_by_parts_differentiated", 1e-12);
    for (int i = 0; i < 200; ++i) {
      // d/dx [f * int g] = f g + f' int g, the differentiated form of the
      // product integration identity; C-independent.
      auto f = fns[static_cast<std::size_t>(rng.range_int(0, 11))];
      auto g = fns[static_cast<std::size_t>(rng.range_int(0, 11))];
      double x = rng.uniform(0.25, 0.85);
      DualReal prod = lift(f, {x, 1.0}) * antiderivative(g, {x, 1.0});
      double want = real_value(f, x) * real_value(g, x) +
                    real_derivative(f, x) * antiderivative(g, {x, 0.0}).re;
      ibp.observe(rel_err(prod.du, want));
    }
    out.push_back(ibp.finish());
  }
  {
    Check c("nilpotency", 0.0);
    for (int i = 0; i < 100; ++i) {
      DualReal a{0.0, std::ldexp(rng.uniform(-1.0, 1.0), rng.range_int(-80, 80))};
      DualReal b{0.0, std::ldexp(rng.uniform(-1.0, 1.0), rng.range_int(-80, 80))};
      c.observe_flag(a * b == DualReal{0.0, 0.0});
    }
    out.push_back(c.finish());
  }
  {
    Check c("integer_pow_matches_log_form", 1e-12);
    for (int i = 0; i < 200; ++i) {
      DualReal base{rng.uniform(0.1, 4.0), rng.uniform(-2.0, 2.0)};
      int k = rng.range_int(-6, 6);
      DualReal log_form = pow(base, DualReal{static_cast<double>(k)});
      c.observe(dual_rel_err(pow_int(base, k), log_form));
    }
    out.push_back(c.finish());
  }
  {
    Check c("pow_real_base_sensitivity", 1e-6);
    for (int i = 0; i < 100; ++i) {
      double a = rng.uniform(0.3, 4.0);
      double b = rng.uniform(-2.0, 2.0);
      double fd = finite_diff([&](double t) { return std::pow(a, t); }, b);
      c.observe(rel_err(pow(a, DualReal{b, 1.0}).du, fd));
    }
    out.push_back(c.finish());
  }
  {
    Check value_check("antiderivative_roundtrip_value", 1e-10);
    Check slope_check("antiderivative_roundtrip_slope", 1e-6);
    for (const auto& d : domains) {
      double lo = d.lo, hi = d.hi;
      if (d.fn.tag == ElementaryFunctionId::Tag::Power && d.fn.power == -1) lo = 0.25;
      for (int i = 0; i < 10; ++i) {
        double x = rng.uniform(lo + 0.02 * (hi - lo), hi - 0.02 * (hi - lo));
        double b = rng.pick({1.0, 2.0, -1.0});
        DualReal a = antiderivative(d.fn, {x, b});
        value_check.observe(rel_err(a.du / b, real_value(d.fn, x)));
        double fd = finite_diff(
            [&](double t) { return antiderivative(d.fn, {t, b}).du; }, x,
            {1, 1e-5, 2});
        slope_check.observe(rel_err(fd, b * real_derivative(d.fn, x)));
      }
    }
    out.push_back(value_check.finish());
    out.push_back(slope_check.finish());
  }
  {
    Check c("parse_format_roundtrip", 0.0);
    for (int i = 0; i < 200; ++i) {
      DualReal x{std::ldexp(rng.uniform(-1.0, 1.0), rng.range_int(-60, 60)),
                 std::ldexp(rng.uniform(-1.0, 1.0), rng.range_int(-60, 60))};
      if (rng.range_int(0, 3) == 0) x.du = 0.0;
      c.observe_flag(parse_dual(format_dual(x)) == x);
    }
    out.push_back(c.finish());
  }
  {
    Check c("spot_values", 1e-12);
    c.observe(dual_rel_err(DualReal{1.0, 2.0} * DualReal{3.0, 4.0}, {3.0, 10.0}));
    DualReal self{2.0, 4.0};
    c.observe(dual_rel_err(self / self, {1.0, 0.0}));
    c.observe(dual_rel_err(inverse(self), {0.5, -1.0}));
    c.observe(dual_rel_err(inverse(self) * self, {1.0, 0.0}));
    c.observe(dual_rel_err(pow(2.0, DualReal{3.0, 1.0}),
                           {8.0, 8.0 * std::log(2.0)}));
    c.observe(dual_rel_err(pow(5.0, DualReal{2.0}), {25.0, 0.0}));
    c.observe(dual_rel_err(pow(1.0, DualReal{-2.3, 4.5}), {1.0, 0.0}));
    DualReal root = pow(DualReal{4.0, 1.0}, DualReal{0.5});
    c.observe(dual_rel_err(root, {2.0, 0.25}));
    c.observe(dual_rel_err(root * root, {4.0, 1.0}));
    c.observe(dual_rel_err(pow(DualReal{7.0, -3.0}, DualReal{1.0}), {7.0, -3.0}));
    c.observe(dual_rel_err(pow_int({2.0, 3.0}, 3), {8.0, 36.0}));
    c.observe(dual_rel_err(lift(ElementaryFunctionId::sin(), {0.0, 1.0}), {0.0, 1.0}));
    c.observe(dual_rel_err(lift(ElementaryFunctionId::log(), {1.0, 3.0}), {0.0, 3.0}));
    double e1 = std::exp(1.0);
    c.observe(dual_rel_err(lift(ElementaryFunctionId::exp(), {1.0, 2.0}), {e1, 2.0 * e1}));
    c.observe(dual_rel_err(dual_derivative(ElementaryFunctionId::power_k(3), {2.0, 1.0}),
                           {12.0, 12.0}));
    c.observe(dual_rel_err(dual_derivative(ElementaryFunctionId::sin(), {0.0, 1.0}),
                           {1.0, 0.0}));
    c.observe(dual_rel_err(antiderivative(ElementaryFunctionId::power_k(1), {2.0, 3.0}),
                           {2.0, 6.0}));
    c.observe(dual_rel_err(antiderivative(ElementaryFunctionId::cos(), {0.0, 5.0}),
                           {0.0, 5.0}));
    out.push_back(c.finish());
  }
  return out;
}

// ---------------------------------------------------------------------------
// reference
// ---------------------------------------------------------------------------

std::vector<CheckResult> suite_reference(std::uint64_t seed) {
  Rng rng(suite_seed(seed, "reference"));
  std::vector<CheckResult> out;
  {
    Check c("gamma_recurrence", 1e-12);
    for (int i = 0; i < 200; ++i) {
      double a = rng.uniform(0.1, 20.0);
      c.observe(rel_err(gamma_real(a + 1.0), a * gamma_real(a)));
    }
    out.push_back(c.finish());
  }
  {
    Check c("digamma_recurrence", 1e-12);
    for (int i = 0; i < 200; ++i) {
      double a = rng.uniform(0.1, 20.0);
      c.observe(rel_err(digamma(a + 1.0), digamma(a) + 1.0 / a));
    }
    out.push_back(c.finish());
  }
  {
    Check c("quad_reproduces_gamma", 1e-9);
    for (double a : {0.5, 1.0, 2.5, 7.0}) {
      auto integrand = [a](double t) {
        return DualReal{std::exp(-t) * std::pow(t, a - 1.0)};
      };
      double g = gamma_real(a);
      auto q = quad_de(integrand, 0.0, std::numeric_limits<double>::infinity(),
                       1e-11 * std::max(1.0, g));
      c.observe(rel_err(q.value.re, g));
    }
    out.push_back(c.finish());
  }
  {
    Check c("finite_diff_exp_self_test", 1e-8);
    for (int i = 0; i < 20; ++i) {
      double x = rng.uniform(-2.0, 3.0);
      c.observe(rel_err(finite_diff([](double t) { return std::exp(t); }, x),
                        std::exp(x)));
    }
    out.push_back(c.finish());
  }
  {
    Check c("trigamma_vs_digamma_slope", 1e-6);
    for (int i = 0; i < 50; ++i) {
      double a = rng.uniform(0.3, 12.0);
      c.observe(rel_err(trigamma(a), finite_diff([](double t) { return digamma(t); }, a)));
    }
    out.push_back(c.finish());
  }
  {
    Check c("spot_values", 1e-12);
    c.observe(rel_err(gamma_real(1.0), 1.0));
    c.observe(rel_err(gamma_real(5.0), 24.0));
    c.observe(rel_err(gamma_real(0.5), 1.7724538509055160273));
    c.observe(rel_err(digamma(1.0), -kEulerGammaLiteral));
    c.observe(rel_err(digamma(2.0), 1.0 - kEulerGammaLiteral));
    c.observe(rel_err(digamma(5.0), -kEulerGammaLiteral + 1.0 + 0.5 + 1.0 / 3.0 + 0.25));
    out.push_back(c.finish());
  }
  {
    // central differencing of a quadratic is exact in exact arithmetic; in
    // floating point the cancellation leaves ~1e-10
    Check c("finite_diff_spots", 1e-9);
    c.observe(rel_err(finite_diff([](double t) { return t * t; }, 3.0), 6.0));
    c.observe(rel_err(finite_diff([](double t) { return std::exp(t); }, 0.0), 1.0));
    c.observe(std::fabs(finite_diff([](double t) { return std::sin(t); }, 0.0,
                                    {2, 0.0, 2})) > 1e-7 ? 1.0 : 0.0);
    out.push_back(c.finish());
  }
  {
    Check c("quadrature_spots", 1e-9);
    auto one = quad_de([](double) { return DualReal{1.0}; }, 0.0, 1.0, 1e-12);
    c.observe(rel_err(one.value.re, 1.0));
    auto decay = quad_de([](double t) { return DualReal{std::exp(-t)}; }, 0.0,
                         std::numeric_limits<double>::infinity(), 1e-11);
    c.observe(rel_err(decay.value.re, 1.0));
    auto root = quad_de([](double t) { return DualReal{1.0 / std::sqrt(t)}; }, 0.0,
                        1.0, 1e-11);
    c.observe(rel_err(root.value.re, 2.0));
    out.push_back(c.finish());
  }
  return out;
}

// ---------------------------------------------------------------------------
// gamma (dual)
// ---------------------------------------------------------------------------

std::vector<CheckResult> suite_gamma(std::uint64_t seed) {
  Rng rng(suite_seed(seed, "gamma"));
  std::vector<CheckResult> out;
  const double g = -digamma(1.0);  // Euler-Mascheroni from the implementation
  {
    Check c("paper_spot_values", 1e-12);
    for (double b : {1.0, 2.0, -3.0}) {
      c.observe(dual_rel_err(gamma_dual({1.0, b}), {1.0, -b * g}));
      c.observe(dual_rel_err(gamma_dual({2.0, b}), {1.0, b * (1.0 - g)}));
      c.observe(dual_rel_err(gamma_dual({3.0, b}), {2.0, 2.0 * b * (1.5 - g)}));
    }
    c.observe(dual_rel_err(gamma_dual({0.5, 0.0}), {gamma_real(0.5), 0.0}));
    out.push_back(c.finish());
  }
  {
    Check c("functional_identity", 1e-11);
    for (int i = 0; i < 200; ++i) {
      DualReal a{rng.uniform(0.1, 15.0), rng.pick({-2.0, 0.0, 1.0, 3.0})};
      c.observe(dual_rel_err(gamma_dual(a + DualReal{1.0}), a * gamma_dual(a)));
    }
    out.push_back(c.finish());
  }
  {
    Check c("shifted_functional_identity", 1e-10);
    for (int i = 0; i < 200; ++i) {
      DualReal a{rng.uniform(0.1, 8.0), rng.pick({-2.0, 0.0, 1.0, 3.0})};
      long long k = rng.range_int(0, 12);
      c.observe(dual_rel_err(gamma_dual(a + DualReal{static_cast<double>(k)}),
                             pochhammer_dual(a, k) * gamma_dual(a)));
    }
    out.push_back(c.finish());
  }
  {
    Check c("integral_oracle", 1e-8);
    for (int i = 0; i < 50; ++i) {
      DualReal a{rng.uniform(0.3, 6.0), rng.pick({0.0, 1.0, 2.0, -1.0})};
      DualReal am1 = a - DualReal{1.0};
      auto integrand = [&](double t) {
        return lift(ElementaryFunctionId::exp(), DualReal{-t}) * pow(t, am1);
      };
      DualReal want = gamma_dual(a);
      double scale = std::max({1.0, std::fabs(want.re), std::fabs(want.du)});
      auto q = quad_de(integrand, 0.0, std::numeric_limits<double>::infinity(),
                       1e-10 * scale);
      c.observe(dual_rel_err(q.value, want));
    }
    for (double a : {0.5, 1.5, 3.0}) {
      for (double b : {0.0, 1.0}) {
        DualReal ad{a, b};
        DualReal am1 = ad - DualReal{1.0};
        auto integrand = [&](double t) {
          return lift(ElementaryFunctionId::exp(), DualReal{-t}) * pow(t, am1);
        };
        auto q = quad_de(integrand, 0.0, std::numeric_limits<double>::infinity(), 1e-10);
        c.observe(dual_rel_err(q.value, gamma_dual(ad)));
      }
    }
    out.push_back(c.finish());
  }
  {
    // closed forms of the truncated kernels behind the limit sequence:
    //   int_0^1 (1-u)^k u^{a-1} du       = k! / (a)_{k+1}
    //   int_0^k (1-u/k)^k u^{a-1} du     = k! k^a / (a)_{k+1}
    Check c("auxiliary_integral_oracle", 1e-8);
    for (int i = 0; i < 12; ++i) {
      DualReal a{rng.uniform(0.4, 3.0), rng.pick({0.0, 1.0, -1.0})};
      long long k = rng.range_int(2, 9);
      double kfact = 1.0;
      for (long long j = 2; j <= k; ++j) kfact *= static_cast<double>(j);
      DualReal rising = pochhammer_dual(a, k + 1);
      DualReal am1 = a - DualReal{1.0};
      auto beta_kernel = [&](double u) {
        return DualReal{std::pow(1.0 - u, static_cast<double>(k))} * pow(u, am1);
      };
      auto q1 = quad_de(beta_kernel, 0.0, 1.0, 1e-11);
      c.observe(dual_rel_err(q1.value, DualReal{kfact} / rising));
      double kd = static_cast<double>(k);
      auto scaled_kernel = [&](double u) {
        return DualReal{std::pow(1.0 - u / kd, kd)} * pow(u, am1);
      };
      auto q2 = quad_de(scaled_kernel, 0.0, kd, 1e-10);
      c.observe(dual_rel_err(q2.value, DualReal{kfact} * pow(kd, a) / rising));
    }
    out.push_back(c.finish());
  }
  {
    Check mono("limit_monotone_error", 0.0);
    Check final_err("limit_final_error", 1e-3);
    const std::array<DualReal, 3> points = {DualReal{0.5, 0.0}, DualReal{1.7, 1.0},
                                            DualReal{3.0, 2.0}};
    for (const DualReal& a : points) {
      DualReal want = gamma_dual(a);
      double prev = std::numeric_limits<double>::infinity();
      double err = 0.0;
      for (long long k : {100LL, 1000LL, 10000LL, 100000LL}) {
        err = dual_rel_err(gamma_limit_approx(a, k), want);
        mono.observe_flag(err < prev);
        prev = err;
      }
      final_err.observe(err);
    }
    out.push_back(mono.finish());
    out.push_back(final_err.finish());
  }
  {
    Check c("limit_spot_values", 0.0);
    for (long long k : {10LL, 137LL, 5000LL}) {
      c.observe_flag(rel_err(gamma_limit_approx({1.0, 0.0}, k).re, 1.0) < 1e-12);
    }
    c.observe_flag(rel_err(gamma_limit_approx({0.5, 0.0}, 100000).re,
                           gamma_real(0.5)) < 3e-6);
    c.observe_flag(dual_rel_err(gamma_limit_approx({2.0, 1.0}, 10000),
                                gamma_dual({2.0, 1.0})) < 1e-3);
    out.push_back(c.finish());
  }
  return out;
}

// ---------------------------------------------------------------------------
// pochhammer
// ---------------------------------------------------------------------------

std::vector<CheckResult> suite_pochhammer(std::uint64_t seed) {
  Rng rng(suite_seed(seed, "pochhammer"));
  std::vector<CheckResult> out;
  auto random_dual = [&](double lo, double hi) {
    return DualReal{rng.uniform(lo, hi), rng.pick({0.0, 1.0, -2.0, 3.0})};
  };
  {
    Check c("identity_1_integer_argument", 1e-6);
    for (int m = 1; m <= 10; ++m) {
      for (int k = 0; k <= 9; ++k) {
        for (double b : {1.0, -2.0, 3.0}) {
          DualReal got = pochhammer_dual({static_cast<double>(m), b}, k);
          double ratio = gamma_real(static_cast<double>(m + k)) /
                         gamma_real(static_cast<double>(m));
          double slope = finite_diff(
              [&](double t) { return gamma_real(t + k) / gamma_real(t); },
              static_cast<double>(m));
          c.observe(dual_rel_err(got, {ratio, b * slope}));
        }
      }
    }
    out.push_back(c.finish());
  }
  {
    Check c("identity_2_index_addition", 1e-12);
    for (int i = 0; i < 200; ++i) {
      DualReal a = random_dual(-3.0, 5.0);
      long long m = rng.range_int(0, 8), k = rng.range_int(0, 8);
      DualReal whole = pochhammer_dual(a, m + k);
      DualReal split1 =
          pochhammer_dual(a, m) * pochhammer_dual(a + DualReal{static_cast<double>(m)}, k);
      DualReal split2 =
          pochhammer_dual(a, k) * pochhammer_dual(a + DualReal{static_cast<double>(k)}, m);
      c.observe(dual_rel_err(split1, whole));
      c.observe(dual_rel_err(split2, whole));
    }
    out.push_back(c.finish());
  }
  {
    Check c("identity_3_negative_index", 1e-12);
    for (int i = 0; i < 200; ++i) {
      // independent oracle: (a)_{-k} = 1 / ((a-k)_k)
      DualReal a = random_dual(-2.0, 6.0);
      long long k = rng.range_int(1, 8);
      DualReal denom = pochhammer_dual(a - DualReal{static_cast<double>(k)}, k);
      if (std::fabs(denom.re) < 1e-6) continue;
      c.observe(dual_rel_err(pochhammer_dual(a, -k), DualReal{1.0} / denom));
    }
    out.push_back(c.finish());
  }
  {
    Check c("identity_4_index_reflection", 1e-11);
    for (int i = 0; i < 200; ++i) {
      DualReal a = random_dual(0.2, 4.0);
      int n = rng.range_int(0, 10);
      int k = rng.range_int(0, n);
      DualReal lhs = pochhammer_dual(a, n - k);
      double sign = (k % 2 == 0) ? 1.0 : -1.0;
      DualReal rhs = DualReal{sign} * pochhammer_dual(a, n) /
                     pochhammer_dual(DualReal{1.0} - a - DualReal{static_cast<double>(n)}, k);
      // relative to the value magnitude: the long quotient products leave
      // rounding noise in whichever channel partially cancels
      double scale = std::max({1.0, std::fabs(rhs.re), std::fabs(rhs.du)});
      c.observe(std::max(std::fabs(lhs.re - rhs.re), std::fabs(lhs.du - rhs.du)) /
                scale);
    }
    out.push_back(c.finish());
  }
  {
    Check c("identity_5_negated_argument", 1e-12);
    for (int i = 0; i < 200; ++i) {
      DualReal a = random_dual(-4.0, 4.0);
      long long k = rng.range_int(0, 9);
      double sign = (k % 2 == 0) ? 1.0 : -1.0;
      DualReal rhs = DualReal{sign} *
                     pochhammer_dual(DualReal{1.0} + a - DualReal{static_cast<double>(k)}, k);
      c.observe(dual_rel_err(pochhammer_dual(-a, k), rhs));
    }
    out.push_back(c.finish());
  }
  {
    Check c("identity_6_half_argument", 1e-12);
    int accepted = 0;
    while (accepted < 200) {
      DualReal a = random_dual(-7.0, 7.0);
      if (a.re <= 0.0 && std::fabs(std::fmod(a.re, 2.0)) < 0.05) continue;
      if (std::fabs(a.re) < 0.05) continue;
      long long k = rng.range_int(0, 8);
      DualReal half = a / DualReal{2.0};
      DualReal lhs = pochhammer_dual(half + DualReal{1.0}, k) / pochhammer_dual(half, k);
      DualReal rhs = (a + DualReal{2.0 * static_cast<double>(k)}) / a;
      // (a/2)_k vanishes when a/2 is a non-positive integer above -k
      double h = half.re;
      if (h <= 0.0 && h > -static_cast<double>(k) &&
          std::fabs(h - std::nearbyint(h)) < 0.025) continue;
      c.observe(dual_rel_err(lhs, rhs));
      ++accepted;
    }
    out.push_back(c.finish());
  }
  {
    Check c("spot_values", 1e-12);
    c.observe(dual_rel_err(pochhammer_dual({-7.0, 4.0}, 0), {1.0, 0.0}));
    c.observe(dual_rel_err(pochhammer_dual({2.0, 1.0}, 3), {24.0, 26.0}));
    c.observe(dual_rel_err(pochhammer_dual({3.0, 0.0}, -1), {0.5, 0.0}));
    out.push_back(c.finish());
  }
  return out;
}

// ---------------------------------------------------------------------------
// beta
// ---------------------------------------------------------------------------

std::vector<CheckResult> suite_beta(std::uint64_t seed) {
  Rng rng(suite_seed(seed, "beta"));
  std::vector<CheckResult> out;
  auto random_dual = [&](double lo, double hi) {
    return DualReal{rng.uniform(lo, hi), rng.pick({-1.0, 0.0, 2.0})};
  };
  {
    Check c("symmetry", 1e-12);
    for (int i = 0; i < 200; ++i) {
      DualReal a = random_dual(0.3, 8.0), b = random_dual(0.3, 8.0);
      c.observe(dual_rel_err(beta_dual(a, b), beta_dual(b, a)));
    }
    out.push_back(c.finish());
  }
  {
    Check c("relation_1_shift", 1e-11);
    for (int i = 0; i < 200; ++i) {
      DualReal a = random_dual(0.3, 8.0), cc = random_dual(0.3, 8.0);
      DualReal lhs = beta_dual(a, cc + DualReal{1.0});
      c.observe(dual_rel_err(cc / a * beta_dual(a + DualReal{1.0}, cc), lhs));
      c.observe(dual_rel_err(cc / (a + cc) * beta_dual(a, cc), lhs));
    }
    out.push_back(c.finish());
  }
  {
    Check c("relation_2_cycle", 1e-10);
    for (int i = 0; i < 200; ++i) {
      DualReal a = random_dual(0.3, 5.0), cc = random_dual(0.3, 5.0),
               e = random_dual(0.3, 5.0);
      DualReal p1 = beta_dual(a, cc) * beta_dual(a + cc, e);
      DualReal p2 = beta_dual(cc, e) * beta_dual(cc + e, a);
      DualReal p3 = beta_dual(e, a) * beta_dual(a + e, cc);
      c.observe(dual_rel_err(p2, p1));
      c.observe(dual_rel_err(p3, p1));
    }
    out.push_back(c.finish());
  }
  {
    Check c("relation_3_product", 1e-10);
    for (int i = 0; i < 200; ++i) {
      DualReal a = random_dual(0.3, 4.0), cc = random_dual(0.3, 4.0),
               e = random_dual(0.3, 4.0), h = random_dual(0.3, 4.0);
      DualReal lhs = beta_dual(a, cc) * beta_dual(a + cc, e) *
                     beta_dual(a + cc + e, h);
      DualReal rhs = gamma_dual(a) * gamma_dual(cc) * gamma_dual(e) * gamma_dual(h) /
                     gamma_dual(a + cc + e + h);
      c.observe(dual_rel_err(lhs, rhs));
    }
    out.push_back(c.finish());
  }
  {
    Check c("quadrature_agreement", 1e-8);
    for (int i = 0; i < 50; ++i) {
      DualReal a{rng.uniform(0.15, 4.0), rng.pick({-1.0, 0.0, 1.0, 2.0})};
      DualReal b{rng.uniform(0.15, 4.0), rng.pick({-1.0, 0.0, 1.0, 2.0})};
      DualReal want = beta_dual(a, b);
      auto q = beta_dual_quadrature(a, b, 1e-10);
      c.observe(dual_rel_err(q.value, want));
    }
    auto q = beta_dual_quadrature({0.5, 0.0}, {0.5, 0.0}, 1e-10);
    c.observe(rel_err(q.value.re, 3.14159265358979323846));
    out.push_back(c.finish());
  }
  {
    Check c("spot_values", 1e-12);
    c.observe(dual_rel_err(beta_dual({1.0, 0.0}, {1.0, 0.0}), {1.0, 0.0}));
    c.observe(dual_rel_err(beta_dual({2.0, 0.0}, {3.0, 0.0}), {1.0 / 12.0, 0.0}));
    c.observe(dual_rel_err(beta_dual({2.0, 1.0}, {1.0, 0.0}), {0.5, -0.25}));
    out.push_back(c.finish());
  }
  return out;
}

// ---------------------------------------------------------------------------
// randomized parameter helpers for the hypergeometric suites
// ---------------------------------------------------------------------------

HypergeometricParams random_params(Rng& rng, int p, int q, double dual_odds = 0.4) {
  HypergeometricParams params;
  for (int i = 0; i < p; ++i) {
    double du = rng.uniform(0.0, 1.0) < dual_odds ? rng.pick({1.0, -1.0, 2.0}) : 0.0;
    params.numerator.push_back({rng.uniform(0.2, 2.6), du});
  }
  double prev = 0.0;
  for (int j = 0; j < q; ++j) {
    double du = rng.uniform(0.0, 1.0) < dual_odds ? rng.pick({1.0, -1.0, 2.0}) : 0.0;
    // keep denominators separated so U/W coefficients stay well-conditioned
    prev = (j == 0 ? rng.uniform(0.5, 1.6) : prev + rng.uniform(0.35, 1.4));
    params.denominator.push_back({prev, du});
  }
  return params;
}

DualReal random_argument(Rng& rng, const HypergeometricParams& params,
                         double max_ratio_arg, double dual_odds = 0.5) {
  double bound = params.p() == params.q() + 1 ? max_ratio_arg : 2.0;
  double du = rng.uniform(0.0, 1.0) < dual_odds ? rng.pick({1.0, -1.0}) : 0.0;
  return {rng.uniform(-bound, bound), du};
}

// ---------------------------------------------------------------------------
// forward_mode
// ---------------------------------------------------------------------------

std::vector<CheckResult> suite_forward_mode(std::uint64_t seed) {
  Rng rng(suite_seed(seed, "forward_mode"));
  std::vector<CheckResult> out;
  {
    Check c("elementary_du_vs_fd", 1e-5);
    auto domains = elementary_domains();
    for (const auto& d : domains) {
      for (int i = 0; i < 200; ++i) {
        double x = rng.uniform(d.lo, d.hi);
        double fd = finite_diff([&](double t) { return real_value(d.fn, t); }, x);
        c.observe(rel_err(lift(d.fn, {x, 1.0}).du, fd));
      }
    }
    out.push_back(c.finish());
  }
  const std::array<std::pair<int, int>, 4> shapes = {
      std::pair{1, 1}, std::pair{2, 1}, std::pair{1, 2}, std::pair{2, 2}};
  {
    Check c("pfq_parameter_sensitivity", 1e-5);
    for (int i = 0; i < 200; ++i) {
      auto [p, q] = shapes[static_cast<std::size_t>(rng.range_int(0, 3))];
      HypergeometricParams params = random_params(rng, p, q, 0.0);
      double x = rng.uniform(-0.6, 0.6);
      bool on_numerator = params.p() > 0 && rng.range_int(0, 1) == 0;
      int slot = on_numerator ? rng.range_int(0, p - 1) : rng.range_int(0, q - 1);
      double b = rng.pick({1.0, -1.0, 2.0});
      HypergeometricParams seeded = params;
      (on_numerator ? seeded.numerator[slot] : seeded.denominator[slot]).du = b;
      double got = pfq(seeded, {x, 0.0}).value.du / b;
      double fd = finite_diff(
          [&](double t) {
            HypergeometricParams moved = params;
            (on_numerator ? moved.numerator[slot] : moved.denominator[slot]).re = t;
            return pfq(moved, {x, 0.0}).value.re;
          },
          on_numerator ? params.numerator[slot].re : params.denominator[slot].re);
      c.observe(rel_err(got, fd));
    }
    out.push_back(c.finish());
  }
  {
    Check c("pfq_argument_sensitivity", 1e-6);
    for (int i = 0; i < 200; ++i) {
      auto [p, q] = shapes[static_cast<std::size_t>(rng.range_int(0, 3))];
      HypergeometricParams params = random_params(rng, p, q, 0.0);
      double x = rng.uniform(-0.6, 0.6);
      double got = pfq(params, {x, 1.0}).value.du;
      double fd = finite_diff(
          [&](double t) { return pfq(params, {t, 0.0}).value.re; }, x);
      c.observe(rel_err(got, fd));
    }
    out.push_back(c.finish());
  }
  {
    Check c("pfq_derivative_vs_fd", 1e-6);
    for (int i = 0; i < 200; ++i) {
      auto [p, q] = shapes[static_cast<std::size_t>(rng.range_int(0, 3))];
      HypergeometricParams params = random_params(rng, p, q, 0.0);
      double x = rng.uniform(-0.55, 0.55);
      double got = pfq_derivative(params, {x, 0.0}, 1).re;
      double fd = finite_diff(
          [&](double t) { return pfq(params, {t, 0.0}).value.re; }, x);
      c.observe(rel_err(got, fd));
    }
    out.push_back(c.finish());
  }
  return out;
}

// ---------------------------------------------------------------------------
// pfq_core: classification + collapse + spots
// ---------------------------------------------------------------------------

std::vector<CheckResult> suite_pfq_core(std::uint64_t seed) {
  Rng rng(suite_seed(seed, "pfq_core"));
  std::vector<CheckResult> out;
  using Tag = ConvergenceClass::Tag;
  {
    Check c("classification_table", 0.0);
    auto expect = [&](const HypergeometricParams& params, const DualReal& x, Tag tag,
                      int degree = -1, int index = -1) {
      ConvergenceClass cls = classify_convergence(params, x);
      bool ok = cls.tag == tag;
      if (tag == Tag::TerminatesPolynomial) ok = ok && cls.degree == degree;
      if (tag == Tag::DenominatorPole) ok = ok && cls.index == index;
      c.observe_flag(ok);
    };
    expect({{DualReal{0.7, 1.0}}, {DualReal{1.3}}}, {100.0, 3.0}, Tag::ConvergesEverywhere);
    expect({{DualReal{0.7}, DualReal{1.1}}, {DualReal{1.3}}}, {0.5, 3.0},
           Tag::ConvergesOpenUnitDisk);
    expect({{DualReal{-3.0}, DualReal{0.7}, DualReal{1.1}}, {DualReal{1.3}}},
           {2.5, 0.0}, Tag::TerminatesPolynomial, 3);
    expect({{DualReal{0.7}, DualReal{1.1}}, {DualReal{1.3}}}, {1.5, 0.0}, Tag::Diverges);
    expect({{DualReal{0.2}, DualReal{0.3}}, {DualReal{2.0}}}, {1.0, 0.0},
           Tag::ConvergesOnBoundary);
    expect({{DualReal{1.2}, DualReal{1.3}}, {DualReal{2.0}}}, {1.0, 0.0}, Tag::Diverges);
    expect({{DualReal{0.5}}, {DualReal{-2.0}}}, {0.5, 0.0}, Tag::DenominatorPole, -1, 0);
    // termination before the denominator pole keeps the series legal
    expect({{DualReal{-2.0}}, {DualReal{-4.0}}}, {0.5, 0.0}, Tag::TerminatesPolynomial, 2);
    expect({{DualReal{-6.0}}, {DualReal{-4.0}}}, {0.5, 0.0}, Tag::DenominatorPole, -1, 0);
    // a dual part on the terminating parameter defeats termination
    expect({{DualReal{-3.0, 1.0}}, {DualReal{1.3}}}, {0.5, 0.0}, Tag::ConvergesEverywhere);
    expect({{DualReal{-3.0, 1.0}, DualReal{0.7}}, {DualReal{1.3}}}, {0.5, 0.0},
           Tag::ConvergesOpenUnitDisk);
    // p > q+1 diverges unless it terminates
    expect({{DualReal{0.5}, DualReal{0.6}, DualReal{0.7}}, {DualReal{1.0}}},
           {0.25, 0.0}, Tag::Diverges);
    out.push_back(c.finish());
  }
  {
    Check c("classification_pure", 0.0);
    for (int i = 0; i < 50; ++i) {
      HypergeometricParams params = random_params(rng, rng.range_int(0, 2),
                                                  rng.range_int(0, 2));
      DualReal x{rng.uniform(-1.2, 1.2), rng.pick({0.0, 1.0})};
      c.observe_flag(classify_convergence(params, x) == classify_convergence(params, x));
    }
    out.push_back(c.finish());
  }
  {
    Check c("zero_dual_collapse", 0.0);
    for (int i = 0; i < 50; ++i) {
      int p = rng.range_int(0, 2), q = rng.range_int(1, 2);
      HypergeometricParams params = random_params(rng, p, q, 0.0);
      double x = rng.uniform(-0.6, 0.6);
      SeriesResult dual_run = pfq(params, {x, 0.0});
      // plain-double replica of the same recurrence, same operation order
      double term = 1.0, sum = 0.0;
      for (int k = 0; k < dual_run.terms_used; ++k) {
        sum += term;
        double t = term;
        for (const DualReal& a : params.numerator) t *= a.re + k;
        for (const DualReal& b : params.denominator) t /= b.re + k;
        term = t * x / (k + 1);
      }
      c.observe_flag(dual_run.value.re == sum && dual_run.value.du == 0.0);
    }
    out.push_back(c.finish());
  }
  {
    Check c("spot_values", 1e-12);
    double e1 = std::exp(1.0);
    SeriesResult r = pfq({{}, {}}, {1.0, 2.0});
    c.observe(dual_rel_err(r.value, {e1, 2.0 * e1}));
    SeriesResult binom = pfq({{DualReal{-2.0}, DualReal{1.0}}, {DualReal{1.0}}},
                             {-1.0, -1.0});
    c.observe(dual_rel_err(binom.value, {4.0, 4.0}));
    SeriesResult geo = pfq({{DualReal{1.0}}, {}}, {0.5, 0.0});
    c.observe(dual_rel_err(geo.value, {2.0, 0.0}));
    c.observe(dual_rel_err(pfq_derivative({{DualReal{1.0}}, {DualReal{2.0}}},
                                          {0.7, 0.0}, 0),
                           pfq({{DualReal{1.0}}, {DualReal{2.0}}}, {0.7, 0.0}).value));
    out.push_back(c.finish());
  }
  {
    Check c("series_flags", 0.0);
    SeriesResult binom = pfq({{DualReal{-4.0}, DualReal{1.0}}, {DualReal{1.0}}},
                             {0.3, 1.0});
    c.observe_flag(binom.converged && binom.tail_bound == 0.0 && binom.terms_used == 5);
    SeriesResult exp_run = pfq({{}, {}}, {1.0, 0.0}, 1e-12, 10000);
    c.observe_flag(exp_run.converged && exp_run.tail_bound <= 1e-12);
    // converged implies the tail bound met the requested tolerance, and the
    // term budget was honored
    for (int i = 0; i < 60; ++i) {
      int p = rng.range_int(0, 2), q = rng.range_int(0, 2);
      HypergeometricParams params = random_params(rng, p, q);
      DualReal x = random_argument(rng, params, 0.8);
      double tol = rng.pick({1e-12, 1e-10, 1e-6});
      int max_terms = rng.range_int(60, 4000);
      try {
        SeriesResult r = pfq(params, x, tol, max_terms);
        double scale = std::max({1.0, std::fabs(r.value.re), std::fabs(r.value.du)});
        c.observe_flag(r.terms_used <= max_terms && r.tail_bound >= 0.0 &&
                       (!r.converged || r.tail_bound <= tol * scale));
      } catch (const NoConvergence&) {
        c.observe_flag(true);  // budget exhaustion is a legal outcome here
      }
    }
    out.push_back(c.finish());
  }
  return out;
}

// ---------------------------------------------------------------------------
// contiguous
// ---------------------------------------------------------------------------

std::vector<CheckResult> suite_contiguous(std::uint64_t seed) {
  Rng rng(suite_seed(seed, "contiguous"));
  std::vector<CheckResult> out;

  struct RelationCase {
    const char* name;
    RelationId id;
    std::vector<std::pair<int, int>> shapes;
    bool needs_index;
    bool index_on_denominator;
  };
  const std::vector<RelationCase> cases = {
      {"numerator_pair", RelationId::NumeratorPair, {{2, 1}, {3, 2}, {2, 2}}, true, false},
      {"numerator_denominator", RelationId::NumeratorDenominator,
       {{1, 1}, {2, 1}, {2, 2}}, true, true},
      {"raise_first_p_lt_q", RelationId::RaiseFirstNumeratorPLtQ, {{1, 2}, {2, 3}}, false, false},
      {"raise_first_p_eq_q", RelationId::RaiseFirstNumeratorPEqQ, {{1, 1}, {2, 2}}, false, false},
      {"raise_first_p_gt_q", RelationId::RaiseFirstNumeratorPGtQ, {{2, 1}, {3, 2}}, false, false},
      {"lower_numerator_p_le_q", RelationId::LowerNumeratorPLeQ,
       {{1, 1}, {1, 2}, {2, 2}}, true, false},
      {"lower_numerator_p_gt_q", RelationId::LowerNumeratorPGtQ, {{2, 1}, {3, 2}}, true, false},
  };

  for (const auto& rc : cases) {
    Check c(rc.name, 1e-8);
    for (int i = 0; i < 200; ++i) {
      auto [p, q] = rc.shapes[static_cast<std::size_t>(
          rng.range_int(0, static_cast<int>(rc.shapes.size()) - 1))];
      HypergeometricParams params = random_params(rng, p, q);
      DualReal x = random_argument(rng, params, 0.6);
      int index = 1;
      if (rc.needs_index) {
        index = rc.index_on_denominator ? rng.range_int(1, q)
                : rc.id == RelationId::NumeratorPair ? rng.range_int(2, p)
                                                     : rng.range_int(1, p);
      }
      DualReal f = pfq(params, x).value;
      DualReal residual = contiguous_residual(rc.id, params, x, index);
      c.observe(residual_norm(residual, f));
    }
    out.push_back(c.finish());
  }
  {
    Check c("spot_identical_numerators", 0.0);
    HypergeometricParams params{{DualReal{0.8, 1.0}, DualReal{0.8, 1.0}}, {DualReal{1.7}}};
    DualReal residual =
        contiguous_residual(RelationId::NumeratorPair, params, {0.4, 0.0}, 2);
    c.observe_flag(residual == DualReal{0.0, 0.0});
    out.push_back(c.finish());
  }
  return out;
}

// ---------------------------------------------------------------------------
// theta_ode
// ---------------------------------------------------------------------------

std::vector<CheckResult> suite_theta_ode(std::uint64_t seed) {
  Rng rng(suite_seed(seed, "theta_ode"));
  std::vector<CheckResult> out;
  const std::array<std::pair<int, int>, 5> shapes = {
      std::pair{1, 1}, std::pair{2, 1}, std::pair{1, 2}, std::pair{2, 2},
      std::pair{0, 1}};
  {
    Check c("residual_randomized", 1e-8);
    for (int i = 0; i < 200; ++i) {
      auto [p, q] = shapes[static_cast<std::size_t>(rng.range_int(0, 4))];
      HypergeometricParams params = random_params(rng, p, q);
      DualReal x = random_argument(rng, params, 0.7);
      DualReal f = pfq(params, x).value;
      c.observe(residual_norm(theta_ode_residual(params, x), f));
    }
    out.push_back(c.finish());
  }
  {
    Check c("residual_spots", 1e-9);
    HypergeometricParams gauss_params{{DualReal{0.5}, DualReal{1.5}}, {DualReal{2.5}}};
    c.observe(residual_norm(theta_ode_residual(gauss_params, {0.3, 0.0}),
                            pfq(gauss_params, {0.3, 0.0}).value));
    HypergeometricParams kummer{{DualReal{1.0}}, {DualReal{2.0}}};
    c.observe(residual_norm(theta_ode_residual(kummer, {0.5, 1.0}),
                            pfq(kummer, {0.5, 1.0}).value));
    c.observe_flag(theta_ode_residual(gauss_params, {0.0, 0.0}) == DualReal{0.0, 0.0});
    out.push_back(c.finish());
  }
  return out;
}

// ---------------------------------------------------------------------------
// pfq_integrals
// ---------------------------------------------------------------------------

HypergeometricParams random_integral_params(Rng& rng, int p, int q) {
  HypergeometricParams params = random_params(rng, p, q, 0.35);
  // enforce Re(a1) > 0 and Re(b1 - a1) > 0 with margins that keep the
  // kernel singularities integrable at quadrature accuracy
  params.numerator[0].re = rng.uniform(0.3, 1.6);
  params.denominator[0].re = params.numerator[0].re + rng.uniform(0.35, 2.2);
  return params;
}

std::vector<CheckResult> suite_pfq_integrals(std::uint64_t seed) {
  Rng rng(suite_seed(seed, "pfq_integrals"));
  std::vector<CheckResult> out;
  const std::array<std::pair<int, int>, 3> shapes = {std::pair{2, 1}, std::pair{1, 1},
                                                     std::pair{2, 2}};
  auto run_form = [&](const char* name, IntegralForm form, int fixed_shape) {
    Check c(name, 1e-7);
    for (int i = 0; i < 50; ++i) {
      auto [p, q] = shapes[static_cast<std::size_t>(
          fixed_shape >= 0 ? fixed_shape : rng.range_int(0, 2))];
      HypergeometricParams params = random_integral_params(rng, p, q);
      double du = rng.pick({0.0, 0.0, 1.0});
      DualReal x{rng.uniform(-0.55, 0.55), du};
      DualReal series = pfq(params, x).value;
      QuadratureResult quad = pfq_integral_rep(params, x, form, 1e-9);
      c.observe(dual_rel_err(quad.value, series));
    }
    out.push_back(c.finish());
  };
  // the Gauss shape of the interval kernel is the classical Euler integral
  run_form("euler_kernel_vs_series", IntegralForm::euler_01(), 0);
  run_form("euler_kernel_other_shapes", IntegralForm::euler_01(), -1);
  run_form("infinite_kernel_vs_series", IntegralForm::infinite(), -1);
  run_form("scaled_kernel_vs_series", IntegralForm::scaled(2.5), -1);
  {
    Check c("scaled_reduces_to_infinite", 1e-9);
    for (int i = 0; i < 10; ++i) {
      HypergeometricParams params = random_integral_params(rng, 2, 1);
      DualReal x{rng.uniform(-0.5, 0.5), rng.pick({0.0, 1.0})};
      QuadratureResult a = pfq_integral_rep(params, x, IntegralForm::infinite(), 1e-9);
      QuadratureResult b = pfq_integral_rep(params, x, IntegralForm::scaled(1.0), 1e-9);
      c.observe(dual_rel_err(b.value, a.value));
    }
    out.push_back(c.finish());
  }
  {
    Check c("closed_form_spot", 1e-9);
    // 1F1(1; 2; 1) = e - 1 through the kernel with unit prefactor
    HypergeometricParams params{{DualReal{1.0}}, {DualReal{2.0}}};
    QuadratureResult q = pfq_integral_rep(params, {1.0, 0.0}, IntegralForm::euler_01(),
                                          1e-10);
    c.observe(rel_err(q.value.re, std::exp(1.0) - 1.0));
    out.push_back(c.finish());
  }
  return out;
}

// ---------------------------------------------------------------------------
// confluent
// ---------------------------------------------------------------------------

std::vector<CheckResult> suite_confluent(std::uint64_t seed) {
  Rng rng(suite_seed(seed, "confluent"));
  std::vector<CheckResult> out;
  auto random_dual = [&](double lo, double hi, double odds = 0.5) {
    double du = rng.uniform(0.0, 1.0) < odds ? rng.pick({1.0, -1.0, 2.0}) : 0.0;
    return DualReal{rng.uniform(lo, hi), du};
  };

  for (int id = 1; id <= 3; ++id) {
    Check c("contiguous_" + std::to_string(id), 1e-8);
    for (int i = 0; i < 200; ++i) {
      DualReal a = random_dual(0.3, 2.5);
      DualReal b = random_dual(1.4, 3.5);
      DualReal x = random_dual(-2.0, 2.0);
      DualReal f = confluent(a, b, x).value;
      c.observe(residual_norm(confluent_contiguous_residual(id, a, b, x), f));
    }
    out.push_back(c.finish());
  }
  for (int id = 1; id <= 6; ++id) {
    Check c("differential_" + std::to_string(id), 1e-8);
    for (int i = 0; i < 200; ++i) {
      DualReal a = random_dual(0.3, 2.2);
      DualReal b = random_dual(2.3, 4.0);
      DualReal x = random_dual(0.15, 1.8);  // dual powers of x need x.re > 0
      int r = rng.range_int(0, 2);
      auto [lhs, rhs] = confluent_diff_formula(id, r, a, b, x);
      c.observe(residual_norm(lhs - rhs, rhs));
    }
    out.push_back(c.finish());
  }
  for (int id = 1; id <= 4; ++id) {
    Check c("integral_formula_" + std::to_string(id), 1e-8);
    for (int i = 0; i < 50; ++i) {
      DualReal a = random_dual(1.3, 2.5);
      DualReal b = a + DualReal{rng.uniform(0.4, 1.6), rng.pick({0.0, 1.0})};
      DualReal x = random_dual(0.15, 1.6);
      auto [value, derivative] = confluent_integral_formula(id, a, b, x);
      (void)value;
      DualReal f = confluent(a, b, x).value;
      DualReal integrand;
      switch (id) {
        case 1: integrand = f; break;
        case 2: integrand = pow(x, b - DualReal{1.0}) * f; break;
        case 3: integrand = pow(x, a - DualReal{2.0}) * f; break;
        default:
          integrand = lift(ElementaryFunctionId::exp(), -x) * f;
      }
      c.observe(residual_norm(derivative - integrand, integrand));
    }
    out.push_back(c.finish());
  }
  {
    Check c("spot_values", 1e-10);
    double e1 = std::exp(1.0);
    // numerator equals denominator: F collapses to exp
    c.observe(dual_rel_err(confluent({1.3, 0.0}, {1.3, 0.0}, {1.0, 2.0}).value,
                           {e1, 2.0 * e1}));
    c.observe(rel_err(confluent({1.0, 0.0}, {2.0, 0.0}, {1.0, 0.0}).value.re, e1 - 1.0));
    c.observe(std::fabs(confluent({0.5, 0.0}, {1.5, 0.0}, {0.0, 0.0}).value.re - 1.0));
    auto [lhs1, rhs1] = confluent_diff_formula(1, 1, {1.0, 0.0}, {2.0, 0.0}, {0.5, 0.0});
    c.observe(dual_rel_err(lhs1, rhs1));
    auto [lhs4, rhs4] = confluent_diff_formula(4, 0, {0.8, 0.0}, {1.9, 0.0}, {0.4, 0.0});
    c.observe(dual_rel_err(lhs4, rhs4));
    c.observe(residual_norm(confluent_contiguous_residual(3, {0.9, 0.0}, {1.7, 0.0},
                                                          {0.0, 0.0}),
                            DualReal{1.0}));
    out.push_back(c.finish());
  }
  return out;
}

// ---------------------------------------------------------------------------
// confluent_integrals
// ---------------------------------------------------------------------------

std::vector<CheckResult> suite_confluent_integrals(std::uint64_t seed) {
  Rng rng(suite_seed(seed, "confluent_integrals"));
  std::vector<CheckResult> out;
  for (int form = 1; form <= 5; ++form) {
    Check c("representation_" + std::to_string(form), 1e-7);
    for (int i = 0; i < 50; ++i) {
      double a_du = rng.pick({0.0, 0.0, 1.0, -1.0});
      double b_du = rng.pick({0.0, 0.0, 1.0});
      double x_du = rng.pick({0.0, 0.0, 1.0});
      DualReal a{rng.uniform(0.3, 1.8), a_du};
      double gap_lo = (form == 2 && x_du != 0.0) ? 1.15 : 0.35;
      DualReal b = a + DualReal{rng.uniform(gap_lo, gap_lo + 1.6), b_du};
      double xlo = form == 2 ? 0.2 : -1.6;
      DualReal x{rng.uniform(xlo, 1.8), x_du};
      DualReal series = confluent(a, b, x).value;
      QuadratureResult q = confluent_integral_rep(form, a, b, x, 1e-9);
      c.observe(dual_rel_err(q.value, series));
    }
    out.push_back(c.finish());
  }
  {
    Check c("form4_equals_form5", 1e-9);
    for (int i = 0; i < 20; ++i) {
      DualReal a{rng.uniform(0.4, 1.6), rng.pick({0.0, 1.0})};
      DualReal b = a + DualReal{rng.uniform(0.4, 1.5), 0.0};
      DualReal x{rng.uniform(-1.2, 1.2), rng.pick({0.0, 1.0})};
      QuadratureResult q4 = confluent_integral_rep(4, a, b, x, 1e-9);
      QuadratureResult q5 = confluent_integral_rep(5, a, b, x, 1e-9);
      c.observe(dual_rel_err(q5.value, q4.value));
    }
    out.push_back(c.finish());
  }
  {
    Check c("closed_form_spots", 1e-9);
    QuadratureResult q1 = confluent_integral_rep(1, {1.0, 0.0}, {2.0, 0.0}, {1.0, 0.0},
                                                 1e-10);
    c.observe(rel_err(q1.value.re, std::exp(1.0) - 1.0));
    QuadratureResult q3 = confluent_integral_rep(3, {1.0, 0.0}, {2.0, 0.0}, {1.0, 0.0},
                                                 1e-10);
    c.observe(rel_err(q3.value.re, std::exp(1.0) - 1.0));
    out.push_back(c.finish());
  }
  return out;
}

// ---------------------------------------------------------------------------
// gauss
// ---------------------------------------------------------------------------

std::vector<CheckResult> suite_gauss(std::uint64_t seed) {
  Rng rng(suite_seed(seed, "gauss"));
  std::vector<CheckResult> out;
  auto random_dual = [&](double lo, double hi, double odds = 0.5) {
    double du = rng.uniform(0.0, 1.0) < odds ? rng.pick({1.0, -1.0, 2.0}) : 0.0;
    return DualReal{rng.uniform(lo, hi), du};
  };

  for (int id = 1; id <= 5; ++id) {
    Check c("contiguous_" + std::to_string(id), 1e-8);
    for (int i = 0; i < 200; ++i) {
      DualReal a1 = random_dual(0.3, 2.2);
      DualReal a2 = random_dual(0.3, 2.2);
      DualReal b1 = random_dual(1.6, 3.6);
      DualReal x = random_dual(-0.6, 0.6);
      DualReal f = gauss(a1, a2, b1, x).value;
      c.observe(residual_norm(gauss_contiguous_residual(id, a1, a2, b1, x), f));
    }
    out.push_back(c.finish());
  }
  for (int id = 1; id <= 4; ++id) {
    Check c("differential_" + std::to_string(id), 1e-8);
    for (int i = 0; i < 200; ++i) {
      DualReal a1 = random_dual(0.3, 2.0);
      DualReal a2 = random_dual(0.3, 2.0);
      DualReal b1 = random_dual(2.3, 3.8);
      DualReal x = random_dual(0.1, 0.7);
      int r = rng.range_int(0, 2);
      auto [lhs, rhs] = gauss_diff_formula(id, r, a1, a2, b1, x);
      c.observe(residual_norm(lhs - rhs, rhs));
    }
    out.push_back(c.finish());
  }
  {
    Check c("ode_residual", 1e-8);
    for (int i = 0; i < 200; ++i) {
      DualReal a1 = random_dual(0.3, 2.0);
      DualReal a2 = random_dual(0.3, 2.0);
      DualReal b1 = random_dual(1.6, 3.6);
      DualReal x = random_dual(-0.7, 0.7);
      DualReal f = gauss(a1, a2, b1, x).value;
      c.observe(residual_norm(gauss_ode_residual(a1, a2, b1, x), f));
    }
    Check spot("ode_residual_origin", 0.0);
    spot.observe_flag(gauss_ode_residual({0.5, 1.0}, {1.5, 0.0}, {2.5, 0.0},
                                         {0.0, 0.0}) == DualReal{0.0, 0.0});
    out.push_back(c.finish());
    out.push_back(spot.finish());
  }
  {
    const std::array<std::pair<ElementaryIdentityId, const char*>, 5> ids = {
        std::pair{ElementaryIdentityId::Arcsin, "elementary_arcsin"},
        std::pair{ElementaryIdentityId::Arctan, "elementary_arctan"},
        std::pair{ElementaryIdentityId::Log1p, "elementary_log1p"},
        std::pair{ElementaryIdentityId::LogRatio, "elementary_log_ratio"},
        std::pair{ElementaryIdentityId::Binomial, "elementary_binomial"}};
    for (auto [id, name] : ids) {
      Check c(name, 1e-9);
      for (int i = 0; i < 50; ++i) {
        double du = rng.pick({0.0, 1.0, -2.0});
        DualReal x{rng.uniform(-0.72, 0.72), du};
        int n = rng.range_int(0, 6);
        auto [lhs, rhs] = elementary_identity(id, x, n);
        double scale = 1.0 + std::max(std::fabs(rhs.re), std::fabs(rhs.du));
        c.observe(std::max(std::fabs(lhs.re - rhs.re), std::fabs(lhs.du - rhs.du)) /
                  scale);
      }
      out.push_back(c.finish());
    }
  }
  {
    Check c("spot_values", 1e-7);
    DualReal x{0.2, 0.1};
    DualReal lhs = x * gauss({1.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}, -x).value;
    c.observe(dual_rel_err(lhs, {std::log(1.2), 0.1 / 1.2}));
    DualReal at = DualReal{0.5, 0.0};
    DualReal arct = at * gauss({0.5, 0.0}, {1.0, 0.0}, {1.5, 0.0}, -(at * at)).value;
    c.observe(rel_err(arct.re, std::atan(0.5)));
    DualReal lr{0.4, 0.0};
    DualReal logr = DualReal{2.0} * lr *
                    gauss({0.5, 0.0}, {1.0, 0.0}, {1.5, 0.0}, lr * lr).value;
    c.observe(rel_err(logr.re, 0.8472978603872037));
    c.observe(rel_err(gauss({0.7, 0.0}, {1.9, 0.0}, {2.4, 0.0}, {0.0, 0.0}).value.re, 1.0));
    out.push_back(c.finish());
  }
  return out;
}

// ---------------------------------------------------------------------------
// gauss_summation
// ---------------------------------------------------------------------------

std::vector<CheckResult> suite_gauss_summation(std::uint64_t seed) {
  Rng rng(suite_seed(seed, "gauss_summation"));
  std::vector<CheckResult> out;
  {
    Check c("closed_form_vs_boundary_series", 1e-6);
    for (int i = 0; i < 50; ++i) {
      DualReal a1{rng.uniform(0.2, 1.4), rng.pick({0.0, 1.0, -1.0})};
      DualReal a2{rng.uniform(0.2, 1.4), rng.pick({0.0, 1.0})};
      double gap = rng.uniform(0.5, 2.8);
      DualReal b1{a1.re + a2.re + gap, rng.pick({0.0, 1.0, 2.0})};
      DualReal closed = gauss_sum_at_1(a1, a2, b1);
      SeriesResult series = gauss(a1, a2, b1, {1.0, 0.0});
      c.observe(dual_rel_err(series.value, closed));
    }
    out.push_back(c.finish());
  }
  {
    Check c("four_over_pi_spot", 1e-9);
    DualReal v = gauss_sum_at_1({0.5, 0.0}, {0.5, 0.0}, {2.0, 0.0});
    c.observe(rel_err(v.re, 1.2732395447351626862));
    c.observe(dual_rel_err(gauss_sum_at_1({0.7, 1.0}, {0.0, 0.0}, {2.0, 0.0}),
                           {1.0, 0.0}));
    out.push_back(c.finish());
  }
  return out;
}

// ---------------------------------------------------------------------------
// transformations
// ---------------------------------------------------------------------------

std::vector<CheckResult> suite_transformations(std::uint64_t seed) {
  Rng rng(suite_seed(seed, "transformations"));
  std::vector<CheckResult> out;
  auto random_dual = [&](double lo, double hi, double odds = 0.5) {
    double du = rng.uniform(0.0, 1.0) < odds ? rng.pick({1.0, -1.0, 2.0}) : 0.0;
    return DualReal{rng.uniform(lo, hi), du};
  };
  {
    Check c("pfaff_residual", 1e-9);
    for (int i = 0; i < 200; ++i) {
      DualReal a1 = random_dual(0.3, 2.0);
      DualReal a2 = random_dual(0.3, 2.0);
      DualReal b1 = random_dual(1.6, 3.4);
      DualReal x = random_dual(-0.45, 0.45);
      auto [lhs, rhs] = pfaff_transform(a1, a2, b1, x);
      c.observe(residual_norm(lhs - rhs, lhs));
    }
    out.push_back(c.finish());
  }
  {
    Check c("euler_residual", 1e-9);
    for (int i = 0; i < 200; ++i) {
      DualReal a1 = random_dual(0.3, 2.0);
      DualReal a2 = random_dual(0.3, 2.0);
      DualReal b1 = random_dual(1.6, 3.4);
      DualReal x = random_dual(-0.45, 0.45);
      auto [lhs, rhs] = euler_transform(a1, a2, b1, x);
      c.observe(residual_norm(lhs - rhs, lhs));
    }
    out.push_back(c.finish());
  }
  {
    Check c("pfaff_composition_is_euler", 1e-9);
    for (int i = 0; i < 50; ++i) {
      DualReal a1 = random_dual(0.3, 1.8);
      DualReal a2 = random_dual(0.3, 1.8);
      DualReal b1 = random_dual(1.8, 3.2);
      DualReal x = random_dual(-0.4, 0.4);
      DualReal one{1.0};
      DualReal y = -x / (one - x);
      // second application on the swapped slot; the involution y -> x
      DualReal inner = pow(one - y, -(b1 - a2)) *
                       gauss(b1 - a2, b1 - a1, b1, -y / (one - y)).value;
      DualReal composed = pow(one - x, -a1) * inner;
      DualReal euler_rhs = euler_transform(a1, a2, b1, x).second;
      c.observe(residual_norm(composed - euler_rhs, euler_rhs));
    }
    out.push_back(c.finish());
  }
  return out;
}

// ---------------------------------------------------------------------------
// registry
// ---------------------------------------------------------------------------

const std::vector<std::pair<std::string, Suite>>& registry() {
  static const std::vector<std::pair<std::string, Suite>> table = {
      {"dual_core", suite_dual_core},
      {"reference", suite_reference},
      {"gamma", suite_gamma},
      {"pochhammer", suite_pochhammer},
      {"beta", suite_beta},
      {"forward_mode", suite_forward_mode},
      {"pfq_core", suite_pfq_core},
      {"contiguous", suite_contiguous},
      {"theta_ode", suite_theta_ode},
      {"pfq_integrals", suite_pfq_integrals},
      {"confluent", suite_confluent},
      {"confluent_integrals", suite_confluent_integrals},
      {"gauss", suite_gauss},
      {"gauss_summation", suite_gauss_summation},
      {"transformations", suite_transformations},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

bool has_suite(const std::string& name) {
  for (const auto& [n, fn] : registry()) {
    if (n == name) return true;
  }
  return false;
}

std::vector<CheckResult> run_suite(const std::string& name, std::uint64_t seed) {
  for (const auto& [n, fn] : registry()) {
    if (n == name) return fn(seed);
  }
  throw DomainError("unknown verification suite: " + name);
}

}  // namespace dualfunc::verify
