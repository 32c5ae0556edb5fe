#include "dualfunc/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dualfunc {

namespace {

HypergeometricParams params_1f1(const DualReal& a, const DualReal& b) {
  return {{a}, {b}};
}

HypergeometricParams params_2f1(const DualReal& a1, const DualReal& a2,
                                const DualReal& b1) {
  return {{a1, a2}, {b1}};
}

DualReal series_value(const HypergeometricParams& params, const DualReal& x,
                      double tol, int max_terms) {
  return pfq(params, x, tol, max_terms).value;
}

DualReal falling_factorial(const DualReal& z, int count) {
  DualReal acc{1.0};
  for (int m = 0; m < count; ++m) acc *= z - DualReal{static_cast<double>(m)};
  return acc;
}

long long binomial_coefficient(int n, int k) {
  long long acc = 1;
  for (int i = 1; i <= k; ++i) acc = acc * (n - k + i) / i;
  return acc;
}

// d^r/dx^r [ e^{sigma x} x^mu sum_k c_k x^k ] with c_k the coefficients of
// the pFq series, differentiated term by term (Leibniz across the factors).
// mu_is_zero selects the pure-integer-power path, valid for any x; the dual
// mu path needs x.re > 0.
DualReal product_series_derivative(const HypergeometricParams& params,
                                   const DualReal& mu, bool mu_is_zero,
                                   double sigma, int r, const DualReal& x,
                                   double tol, int max_terms) {
  if (r < 0) throw DomainError("differential formula: r must be >= 0");
  DualReal total{0.0};

  if (mu_is_zero) {
    // D_i = sum_k c_k k(k-1)...(k-i+1) x^{k-i}, one running pass per i
    for (int i = 0; i <= r; ++i) {
      double sig_pow = (sigma == 0.0 && r - i > 0) ? 0.0 : std::pow(sigma, r - i);
      if (sig_pow == 0.0 && !(r == i)) continue;
      DualReal coeff{1.0};
      // coeff starts at k = i: c_i * i!
      {
        DualReal ci{1.0};
        for (int k = 0; k < i; ++k) {
          DualReal step{1.0};
          for (const DualReal& a : params.numerator) step *= a + DualReal{static_cast<double>(k)};
          for (const DualReal& b : params.denominator) step /= b + DualReal{static_cast<double>(k)};
          ci = ci * step / DualReal{static_cast<double>(k + 1)};
        }
        double ifact = 1.0;
        for (int m = 2; m <= i; ++m) ifact *= m;
        coeff = ci * DualReal{ifact};
      }
      DualReal xpow{1.0};
      DualReal sum{0.0};
      int streak = 0;
      for (int k = i;; ++k) {
        DualReal term = coeff * xpow;
        sum += term;
        double scale = std::max(1.0, std::max(std::fabs(sum.re), std::fabs(sum.du)));
        double mag = std::max(std::fabs(term.re), std::fabs(term.du));
        if (mag <= tol * scale) {
          if (++streak >= 3) break;
        } else {
          streak = 0;
        }
        if (k - i + 1 >= max_terms) {
          throw NoConvergence("differential formula: series did not settle");
        }
        // coeff_{k+1} = coeff_k prod(a+k)/prod(b+k) / (k+1-i)
        DualReal step{1.0};
        for (const DualReal& a : params.numerator) step *= a + DualReal{static_cast<double>(k)};
        for (const DualReal& b : params.denominator) step /= b + DualReal{static_cast<double>(k)};
        coeff = coeff * step / DualReal{static_cast<double>(k + 1 - i)};
        xpow *= x;
      }
      total += DualReal{static_cast<double>(binomial_coefficient(r, i)) * sig_pow} * sum;
    }
  } else {
    if (!(x.re > 0.0)) {
      throw DomainError("differential formula: dual power of x requires x.re > 0");
    }
    // single pass accumulating S_i = sum_k c_k (k+mu)(k+mu-1)...(k+mu-i+1) x^k
    std::vector<DualReal> sums(static_cast<std::size_t>(r) + 1, DualReal{0.0});
    DualReal term{1.0};  // c_k x^k
    int streak = 0;
    for (int k = 0;; ++k) {
      DualReal shift = mu + DualReal{static_cast<double>(k)};
      double mag = 0.0;
      for (int i = 0; i <= r; ++i) {
        DualReal add = term * falling_factorial(shift, i);
        sums[static_cast<std::size_t>(i)] += add;
        mag = std::max(mag, std::max(std::fabs(add.re), std::fabs(add.du)));
      }
      double scale = 1.0;
      for (const DualReal& s : sums) {
        scale = std::max({scale, std::fabs(s.re), std::fabs(s.du)});
      }
      if (mag <= tol * scale) {
        if (++streak >= 3) break;
      } else {
        streak = 0;
      }
      if (k + 1 >= max_terms) {
        throw NoConvergence("differential formula: series did not settle");
      }
      DualReal step{1.0};
      for (const DualReal& a : params.numerator) step *= a + DualReal{static_cast<double>(k)};
      for (const DualReal& b : params.denominator) step /= b + DualReal{static_cast<double>(k)};
      term = term * step * x / DualReal{static_cast<double>(k + 1)};
    }
    for (int i = 0; i <= r; ++i) {
      double sig_pow = (sigma == 0.0 && r - i > 0) ? 0.0 : std::pow(sigma, r - i);
      if (sig_pow == 0.0 && r != i) continue;
      total += DualReal{static_cast<double>(binomial_coefficient(r, i)) * sig_pow} *
               pow(x, mu - DualReal{static_cast<double>(i)}) *
               sums[static_cast<std::size_t>(i)];
    }
  }

  if (sigma != 0.0) total *= lift(ElementaryFunctionId::exp(), DualReal{sigma} * x);
  return total;
}

}  // namespace

SeriesResult confluent(const DualReal& a, const DualReal& b, const DualReal& x,
                       double tol, int max_terms) {
  return pfq(params_1f1(a, b), x, tol, max_terms);
}

SeriesResult gauss(const DualReal& a1, const DualReal& a2, const DualReal& b1,
                   const DualReal& x, double tol, int max_terms) {
  return pfq(params_2f1(a1, a2, b1), x, tol, max_terms);
}

std::pair<DualReal, DualReal> confluent_diff_formula(int id, int r, const DualReal& a,
                                                     const DualReal& b,
                                                     const DualReal& x, double tol,
                                                     int max_terms) {
  const DualReal one{1.0};
  const DualReal rr{static_cast<double>(r)};
  double sign = (r % 2 == 0) ? 1.0 : -1.0;
  auto series = [&](const DualReal& na, const DualReal& nb, const DualReal& nx) {
    return series_value(params_1f1(na, nb), nx, tol, max_terms);
  };
  switch (id) {
    case 1: {
      DualReal lhs = product_series_derivative(params_1f1(a, b), {}, true, 0.0, r, x,
                                               tol, max_terms);
      DualReal rhs = pochhammer_dual(a, r) / pochhammer_dual(b, r) *
                     series(a + rr, b + rr, x);
      return {lhs, rhs};
    }
    case 2: {
      DualReal lhs = product_series_derivative(params_1f1(a, b), a + rr - one, false,
                                               0.0, r, x, tol, max_terms);
      DualReal rhs = pochhammer_dual(a, r) * pow(x, a - one) * series(a + rr, b, x);
      return {lhs, rhs};
    }
    case 3: {
      DualReal lhs = product_series_derivative(params_1f1(a, b), b - one, false, 0.0,
                                               r, x, tol, max_terms);
      DualReal rhs = DualReal{sign} * pochhammer_dual(one - b, r) *
                     pow(x, b - one - rr) * series(a, b - rr, x);
      return {lhs, rhs};
    }
    case 4: {
      DualReal lhs = product_series_derivative(params_1f1(a, b), {}, true, -1.0, r, x,
                                               tol, max_terms);
      DualReal rhs = DualReal{sign} * pochhammer_dual(b - a, r) /
                     pochhammer_dual(b, r) * series(b - a + rr, b + rr, -x);
      return {lhs, rhs};
    }
    case 5: {
      DualReal lhs = product_series_derivative(params_1f1(a, b), b - a + rr - one,
                                               false, -1.0, r, x, tol, max_terms);
      DualReal rhs = pochhammer_dual(b - a, r) * pow(x, b - a - one) *
                     series(b - a + rr, b, -x);
      return {lhs, rhs};
    }
    case 6: {
      DualReal lhs = product_series_derivative(params_1f1(a, b), b - one, false, -1.0,
                                               r, x, tol, max_terms);
      DualReal rhs = DualReal{sign} * pochhammer_dual(one - b, r) *
                     pow(x, b - rr - one) * series(b - a, b - rr, -x);
      return {lhs, rhs};
    }
    default:
      throw DomainError("confluent_diff_formula: id must be 1..6");
  }
}

DualReal confluent_contiguous_residual(int id, const DualReal& a, const DualReal& b,
                                       const DualReal& x, double tol, int max_terms) {
  const DualReal one{1.0};
  auto series = [&](const DualReal& na, const DualReal& nb) {
    return series_value(params_1f1(na, nb), x, tol, max_terms);
  };
  switch (id) {
    case 1:
      return (a - b + one) * series(a, b) -
             (a * series(a + one, b) - (b - one) * series(a, b - one));
    case 2:
      return b * (a + x) * series(a, b) -
             (a * b * series(a + one, b) - (a - b) * x * series(a, b + one));
    case 3:
      return b * series(a, b) - (b * series(a - one, b) + x * series(a, b + one));
    default:
      throw DomainError("confluent_contiguous_residual: id must be 1..3");
  }
}

QuadratureResult confluent_integral_rep(int form, const DualReal& a,
                                        const DualReal& b, const DualReal& x,
                                        double tol) {
  const DualReal one{1.0};
  const DualReal gap = b - a;
  if (!(a.re > 0.0 && gap.re > 0.0)) {
    throw DomainError("confluent_integral_rep: requires Re(a) > 0, Re(b-a) > 0");
  }
  DualReal prefactor = gamma_dual(b) / (gamma_dual(a) * gamma_dual(gap));
  double prefactor_mag = std::fabs(prefactor.re) + std::fabs(prefactor.du);
  double quad_tol =
      std::max(std::max(tol, 1e-7) * 0.02 / std::max(1.0, prefactor_mag), 1e-13);
  auto expx = [&](const DualReal& e) { return lift(ElementaryFunctionId::exp(), e); };

  auto finish = [&](const DualReal& front, const QuadratureResult& q1,
                    const QuadratureResult& q2) {
    QuadratureResult out;
    DualReal full = prefactor * front;
    out.value = full * (q1.value + q2.value);
    out.abs_error_estimate = (std::fabs(full.re) + std::fabs(full.du)) *
                             (q1.abs_error_estimate + q2.abs_error_estimate);
    out.nodes = q1.nodes + q2.nodes;
    return out;
  };

  switch (form) {
    case 1: {
      DualReal am1 = a - one, gm1 = gap - one;
      auto left = [&](double u) {
        return pow(u, am1) * pow(1.0 - u, gm1) * expx(DualReal{u} * x);
      };
      auto right = [&](double v) {
        return pow(v, gm1) * pow(1.0 - v, am1) * expx(DualReal{1.0 - v} * x);
      };
      return finish(one, quad_de(left, 0.0, 0.5, quad_tol),
                    quad_de(right, 0.0, 0.5, quad_tol));
    }
    case 2: {
      // real path [0, x.re]; the moving endpoint makes the pointwise dual
      // channel non-integrable unless Re(b-a) > 1
      if (!(x.re > 0.0)) throw DomainError("confluent_integral_rep: form 2 needs x.re > 0");
      if (x.du != 0.0 && !(gap.re > 1.0)) {
        throw DomainError(
            "confluent_integral_rep: form 2 with x.du != 0 needs Re(b-a) > 1");
      }
      DualReal am1 = a - one, gm1 = gap - one;
      double xm = x.re;
      auto left = [&](double v) {
        // v near 0
        return pow(v, am1) * pow(DualReal{xm - v, x.du}, gm1) *
               lift(ElementaryFunctionId::exp(), DualReal{v});
      };
      auto right = [&](double w) {
        // w = x.re - v near 0
        return pow(xm - w, am1) * pow(DualReal{w, x.du}, gm1) *
               lift(ElementaryFunctionId::exp(), DualReal{xm - w});
      };
      return finish(pow(x, one - b), quad_de(left, 0.0, xm / 2.0, quad_tol),
                    quad_de(right, 0.0, xm / 2.0, quad_tol));
    }
    case 3: {
      DualReal am1 = a - one, gm1 = gap - one;
      auto left = [&](double v) {
        return pow(v, gm1) * pow(1.0 - v, am1) * expx(DualReal{-v} * x);
      };
      auto right = [&](double s) {
        return pow(s, am1) * pow(1.0 - s, gm1) * expx(DualReal{s - 1.0} * x);
      };
      return finish(expx(x), quad_de(left, 0.0, 0.5, quad_tol),
                    quad_de(right, 0.0, 0.5, quad_tol));
    }
    case 4:
    case 5: {
      // form 4: (1-v)^{a-1} (1+v)^{b-a-1} e^{-vx/2}; form 5 mirrors v -> -v.
      // Each piece substitutes t = distance to the singular endpoint.
      bool mirrored = form == 5;
      DualReal am1 = a - one, gm1 = gap - one;
      DualReal halfx = DualReal{0.5} * x;
      auto near_minus1 = [&](double t) {
        // v = -1 + t
        DualReal kernel = mirrored ? pow(t, am1) * pow(2.0 - t, gm1)
                                   : pow(2.0 - t, am1) * pow(t, gm1);
        double v = -1.0 + t;
        return kernel * expx(DualReal{mirrored ? v : -v} * halfx);
      };
      auto near_plus1 = [&](double t) {
        // v = 1 - t
        DualReal kernel = mirrored ? pow(2.0 - t, am1) * pow(t, gm1)
                                   : pow(t, am1) * pow(2.0 - t, gm1);
        double v = 1.0 - t;
        return kernel * expx(DualReal{mirrored ? v : -v} * halfx);
      };
      DualReal front = pow(2.0, one - b) * expx(halfx);
      return finish(front, quad_de(near_minus1, 0.0, 1.0, quad_tol),
                    quad_de(near_plus1, 0.0, 1.0, quad_tol));
    }
    default:
      throw DomainError("confluent_integral_rep: form must be 1..5");
  }
}

std::pair<DualReal, DualReal> confluent_integral_formula(int id, const DualReal& a,
                                                         const DualReal& b,
                                                         const DualReal& x, double tol,
                                                         int max_terms) {
  const DualReal one{1.0};
  auto series = [&](const DualReal& na, const DualReal& nb) {
    return series_value(params_1f1(na, nb), x, tol, max_terms);
  };
  switch (id) {
    case 1: {
      if ((a - one).re == 0.0) {
        throw DegenerateParameters("confluent_integral_formula: needs a != 1");
      }
      DualReal kappa = (b - one) / (a - one);
      DualReal value = kappa * series(a - one, b - one);
      DualReal derivative =
          kappa * product_series_derivative(params_1f1(a - one, b - one), {}, true,
                                            0.0, 1, x, tol, max_terms);
      return {value, derivative};
    }
    case 2: {
      DualReal kappa = one / b;
      DualReal value = kappa * pow(x, b) * series(a, b + one);
      DualReal derivative =
          kappa * product_series_derivative(params_1f1(a, b + one), b, false, 0.0, 1,
                                            x, tol, max_terms);
      return {value, derivative};
    }
    case 3: {
      if ((a - one).re == 0.0) {
        throw DegenerateParameters("confluent_integral_formula: needs a != 1");
      }
      DualReal kappa = one / (a - one);
      DualReal value = kappa * pow(x, a - one) * series(a - one, b);
      DualReal derivative =
          kappa * product_series_derivative(params_1f1(a - one, b), a - one, false,
                                            0.0, 1, x, tol, max_terms);
      return {value, derivative};
    }
    case 4: {
      DualReal denom = one + a - b;
      if (denom.re == 0.0) {
        throw DegenerateParameters("confluent_integral_formula: needs 1 + a - b != 0");
      }
      DualReal kappa = (b - one) / denom;
      DualReal value =
          kappa * lift(ElementaryFunctionId::exp(), -x) * series(a, b - one);
      DualReal derivative =
          kappa * product_series_derivative(params_1f1(a, b - one), {}, true, -1.0, 1,
                                            x, tol, max_terms);
      return {value, derivative};
    }
    default:
      throw DomainError("confluent_integral_formula: id must be 1..4");
  }
}

DualReal gauss_sum_at_1(const DualReal& a1, const DualReal& a2, const DualReal& b1) {
  DualReal gap = b1 - a1 - a2;
  if (!(gap.re > 0.0)) {
    throw DomainError("gauss_sum_at_1: requires Re(b1 - a1 - a2) > 0");
  }
  return gamma_dual(b1) * gamma_dual(gap) /
         (gamma_dual(b1 - a1) * gamma_dual(b1 - a2));
}

namespace {

void check_unit_disk(const DualReal& x) {
  if (!(std::fabs(x.re) < 1.0)) {
    throw DomainError("transformation: requires |x.re| < 1");
  }
}

}  // namespace

std::pair<DualReal, DualReal> pfaff_transform(const DualReal& a1, const DualReal& a2,
                                              const DualReal& b1, const DualReal& x,
                                              double tol, int max_terms) {
  check_unit_disk(x);
  DualReal one_minus_x = DualReal{1.0} - x;
  if (!(one_minus_x.re > 0.0)) {
    throw DomainError("pfaff_transform: requires (1-x).re > 0");
  }
  DualReal mapped = -x / one_minus_x;
  if (!(std::fabs(mapped.re) < 1.0)) {
    throw DomainError("pfaff_transform: requires |x/(1-x)| < 1");
  }
  DualReal lhs = series_value(params_2f1(a1, a2, b1), x, tol, max_terms);
  DualReal rhs = pow(one_minus_x, -a1) *
                 series_value(params_2f1(a1, b1 - a2, b1), mapped, tol, max_terms);
  return {lhs, rhs};
}

std::pair<DualReal, DualReal> euler_transform(const DualReal& a1, const DualReal& a2,
                                              const DualReal& b1, const DualReal& x,
                                              double tol, int max_terms) {
  check_unit_disk(x);
  DualReal one_minus_x = DualReal{1.0} - x;
  if (!(one_minus_x.re > 0.0)) {
    throw DomainError("euler_transform: requires (1-x).re > 0");
  }
  DualReal lhs = series_value(params_2f1(a1, a2, b1), x, tol, max_terms);
  DualReal rhs = pow(one_minus_x, b1 - a1 - a2) *
                 series_value(params_2f1(b1 - a1, b1 - a2, b1), x, tol, max_terms);
  return {lhs, rhs};
}

DualReal gauss_ode_residual(const DualReal& a1, const DualReal& a2,
                            const DualReal& b1, const DualReal& x, double tol,
                            int max_terms) {
  if (std::fabs(x.re) > 0.75) {
    throw DomainError("gauss_ode_residual: requires |x.re| <= 0.75");
  }
  HypergeometricParams params = params_2f1(a1, a2, b1);
  DualReal z = pfq(params, x, tol, max_terms).value;
  DualReal dz = pfq_derivative(params, x, 1, tol, max_terms);
  DualReal ddz = pfq_derivative(params, x, 2, tol, max_terms);
  DualReal one{1.0};
  return x * (one - x) * ddz +
         (b1 - (one + a1 + a2) * x) * dz - a1 * a2 * z;
}

DualReal gauss_contiguous_residual(int id, const DualReal& a1, const DualReal& a2,
                                   const DualReal& b1, const DualReal& x, double tol,
                                   int max_terms) {
  const DualReal one{1.0};
  auto series = [&](const DualReal& u, const DualReal& v, const DualReal& w) {
    return series_value(params_2f1(u, v, w), x, tol, max_terms);
  };
  switch (id) {
    case 1:
      return (a1 - a2) * series(a1, a2, b1) -
             (a1 * series(a1 + one, a2, b1) - a2 * series(a1, a2 + one, b1));
    case 2:
      return (a1 - b1 + one) * series(a1, a2, b1) -
             (a1 * series(a1 + one, a2, b1) - (b1 - one) * series(a1, a2, b1 - one));
    case 3:
      return (a1 + (a2 - b1) * x) * series(a1, a2, b1) -
             (a1 * (one - x) * series(a1 + one, a2, b1) -
              x * (b1 - a1) * (b1 - a2) / b1 * series(a1, a2, b1 + one));
    case 4:
      return (one - x) * series(a1, a2, b1) -
             (series(a1 - one, a2, b1) - (b1 - a2) / b1 * x * series(a1, a2, b1 + one));
    case 5:
      return (one - x) * series(a1, a2, b1) -
             (series(a1, a2 - one, b1) - (b1 - a1) / b1 * x * series(a1, a2, b1 + one));
    default:
      throw DomainError("gauss_contiguous_residual: id must be 1..5");
  }
}

std::pair<DualReal, DualReal> gauss_diff_formula(int id, int r, const DualReal& a1,
                                                 const DualReal& a2, const DualReal& b1,
                                                 const DualReal& x, double tol,
                                                 int max_terms) {
  const DualReal one{1.0};
  const DualReal rr{static_cast<double>(r)};
  auto series = [&](const DualReal& u, const DualReal& v, const DualReal& w) {
    return series_value(params_2f1(u, v, w), x, tol, max_terms);
  };
  HypergeometricParams base = params_2f1(a1, a2, b1);
  switch (id) {
    case 1: {
      DualReal lhs =
          product_series_derivative(base, {}, true, 0.0, r, x, tol, max_terms);
      DualReal rhs = pochhammer_dual(a1, r) * pochhammer_dual(a2, r) /
                     pochhammer_dual(b1, r) * series(a1 + rr, a2 + rr, b1 + rr);
      return {lhs, rhs};
    }
    case 2: {
      DualReal lhs = product_series_derivative(base, a1 + rr - one, false, 0.0, r, x,
                                               tol, max_terms);
      DualReal rhs = pochhammer_dual(a1, r) * pow(x, a1 - one) * series(a1 + rr, a2, b1);
      return {lhs, rhs};
    }
    case 3: {
      DualReal lhs = product_series_derivative(base, a2 + rr - one, false, 0.0, r, x,
                                               tol, max_terms);
      DualReal rhs = pochhammer_dual(a2, r) * pow(x, a2 - one) * series(a1, a2 + rr, b1);
      return {lhs, rhs};
    }
    case 4: {
      DualReal lhs = product_series_derivative(base, b1 - one, false, 0.0, r, x, tol,
                                               max_terms);
      DualReal rhs = pochhammer_dual(b1 - rr, r) * pow(x, b1 - rr - one) *
                     series(a1, a2, b1 - rr);
      return {lhs, rhs};
    }
    default:
      throw DomainError("gauss_diff_formula: id must be 1..4");
  }
}

std::pair<DualReal, DualReal> elementary_identity(ElementaryIdentityId id,
                                                  const DualReal& x, int n, double tol,
                                                  int max_terms) {
  using Id = ElementaryFunctionId;
  check_unit_disk(x);
  const DualReal one{1.0}, half{0.5};
  switch (id) {
    case ElementaryIdentityId::Arcsin:
      return {x * series_value(params_2f1(half, half, DualReal{1.5}), x * x, tol, max_terms),
              lift(Id::arcsin(), x)};
    case ElementaryIdentityId::Arctan:
      return {x * series_value(params_2f1(half, one, DualReal{1.5}), -(x * x), tol, max_terms),
              lift(Id::arctan(), x)};
    case ElementaryIdentityId::Log1p:
      return {x * series_value(params_2f1(one, one, DualReal{2.0}), -x, tol, max_terms),
              lift(Id::log(), one + x)};
    case ElementaryIdentityId::LogRatio:
      return {DualReal{2.0} * x *
                  series_value(params_2f1(half, one, DualReal{1.5}), x * x, tol, max_terms),
              lift(Id::log(), (one + x) / (one - x))};
    case ElementaryIdentityId::Binomial: {
      if (n < 0) throw DomainError("elementary_identity: binomial degree must be >= 0");
      DualReal lhs = series_value(
          params_2f1(DualReal{static_cast<double>(-n)}, one, one), -x, tol, max_terms);
      return {lhs, pow_int(one + x, n)};
    }
  }
  throw DomainError("elementary_identity: unknown id");
}

}  // namespace dualfunc
