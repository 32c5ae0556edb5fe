#include "dualfunc/gamma.hpp"

#include <cmath>

namespace dualfunc {

DualReal gamma_dual(const DualReal& a) {
  double g = gamma_real(a.re);  // pole check happens here
  DualReal out{g, a.du * g * digamma(a.re)};
  detail::ensure_finite(out, "gamma");
  return out;
}

DualReal pochhammer_dual(const DualReal& a, long long k) {
  if (k == 0) return DualReal{1.0};
  if (k > 0) {
    DualReal acc{1.0};
    for (long long j = 0; j < k; ++j) {
      acc *= a + DualReal{static_cast<double>(j)};
    }
    return acc;
  }
  // (a)_{-m} = (-1)^m / (1-a)_m
  long long m = -k;
  DualReal one_minus_a = DualReal{1.0} - a;
  DualReal denom{1.0};
  for (long long j = 0; j < m; ++j) {
    DualReal factor = one_minus_a + DualReal{static_cast<double>(j)};
    if (factor.re == 0.0) {
      throw ZeroFactor("pochhammer_dual: zero real part in reciprocal factor");
    }
    denom *= factor;
  }
  double sign = (m % 2 == 0) ? 1.0 : -1.0;
  return DualReal{sign} / denom;
}

DualReal gamma_limit_approx(const DualReal& a, long long k) {
  if (k < 1) throw DomainError("gamma_limit_approx: k must be >= 1");
  double nearest = std::nearbyint(a.re);
  if (nearest <= 0.0 && std::fabs(a.re - nearest) < 1e-10) {
    throw PoleError("gamma_limit_approx: argument at non-positive integer pole",
                    static_cast<long>(nearest));
  }
  // log |(k-1)! / prod_j (a.re + j)| with Neumaier-compensated summation;
  // the running harmonic sum feeds the dual channel.
  double log_acc = 0.0, comp = 0.0;
  auto add = [&](double term) {
    double t = log_acc + term;
    comp += (std::fabs(log_acc) >= std::fabs(term)) ? (log_acc - t) + term
                                                    : (term - t) + log_acc;
    log_acc = t;
  };
  double sign = 1.0;
  double harmonic = 0.0;
  for (long long j = 0; j < k; ++j) {
    double factor = a.re + static_cast<double>(j);
    if (factor == 0.0) {
      throw PoleError("gamma_limit_approx: zero factor in shifted factorial",
                      static_cast<long>(-j));
    }
    if (factor < 0.0) sign = -sign;
    add(std::log(j > 0 ? static_cast<double>(j) : 1.0) - std::log(std::fabs(factor)));
    harmonic += 1.0 / factor;
  }
  double log_k = std::log(static_cast<double>(k));
  double log_mag = log_acc + comp + a.re * log_k;
  if (log_mag >= 709.0) {
    throw OverflowError("gamma_limit_approx: magnitude exceeds double range");
  }
  double re = sign * std::exp(log_mag);
  // d/d(eps) of (k-1)! k^a / (a)_k = value * a.du * (log k - sum 1/(a+j))
  DualReal out{re, re * a.du * (log_k - harmonic)};
  detail::ensure_finite(out, "gamma limit approximant");
  return out;
}

}  // namespace dualfunc
