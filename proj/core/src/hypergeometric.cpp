#include "dualfunc/hypergeometric.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

namespace dualfunc {

namespace {

constexpr double kPoleThreshold = 1e-10;
constexpr double kDistinctDenominatorThreshold = 1e-8;

// Smallest n >= 0 with a numerator at -n (within threshold) and exactly zero
// dual part; -1 when none. A nonzero dual part defeats termination:
// (-n + eps b)_{n+1} is a nonzero pure dual.
int termination_degree(const HypergeometricParams& params) {
  int best = -1;
  for (const DualReal& a : params.numerator) {
    double nearest = std::nearbyint(a.re);
    if (nearest <= 0.0 && std::fabs(a.re - nearest) < kPoleThreshold && a.du == 0.0) {
      int n = static_cast<int>(-nearest);
      if (best < 0 || n < best) best = n;
    }
  }
  return best;
}

struct DenominatorPole {
  int index = -1;
  int order = -1;  // the pole integer -m
};

std::optional<DenominatorPole> first_denominator_pole(const HypergeometricParams& params) {
  std::optional<DenominatorPole> hit;
  for (int j = 0; j < params.q(); ++j) {
    double nearest = std::nearbyint(params.denominator[j].re);
    if (nearest <= 0.0 &&
        std::fabs(params.denominator[j].re - nearest) < kPoleThreshold) {
      int m = static_cast<int>(-nearest);
      if (!hit || m < hit->order) hit = DenominatorPole{j, m};
    }
  }
  return hit;
}

double re_sum_gap(const HypergeometricParams& params) {
  double s = 0.0;
  for (const DualReal& b : params.denominator) s += b.re;
  for (const DualReal& a : params.numerator) s -= a.re;
  return s;
}

}  // namespace

ConvergenceClass classify_convergence(const HypergeometricParams& params,
                                      const DualReal& x) {
  int degree = termination_degree(params);
  auto pole = first_denominator_pole(params);
  // terminating wins if the last formed term never touches the pole factor
  if (degree >= 0 && (!pole || degree <= pole->order)) {
    return {ConvergenceClass::Tag::TerminatesPolynomial, degree, -1};
  }
  if (pole) {
    return {ConvergenceClass::Tag::DenominatorPole, -1, pole->index};
  }
  int p = params.p(), q = params.q();
  if (p <= q) return {ConvergenceClass::Tag::ConvergesEverywhere, -1, -1};
  double ax = std::fabs(x.re);
  if (p == q + 1) {
    if (ax < 1.0) return {ConvergenceClass::Tag::ConvergesOpenUnitDisk, -1, -1};
    if (ax == 1.0 && re_sum_gap(params) > 0.0) {
      return {ConvergenceClass::Tag::ConvergesOnBoundary, -1, -1};
    }
  }
  return {ConvergenceClass::Tag::Diverges, -1, -1};
}

// ---------------------------------------------------------------------------
// series evaluation
// ---------------------------------------------------------------------------

namespace {

// One step of the term recurrence: t_{k+1} = t_k prod(a+k)/prod(b+k) x/(k+1).
DualReal next_term(const HypergeometricParams& params, const DualReal& term,
                   const DualReal& x, int k) {
  DualReal t = term;
  for (const DualReal& a : params.numerator) t *= a + DualReal{static_cast<double>(k)};
  for (const DualReal& b : params.denominator) t /= b + DualReal{static_cast<double>(k)};
  return t * x / DualReal{static_cast<double>(k + 1)};
}

SeriesResult sum_terminating(const HypergeometricParams& params, const DualReal& x,
                             int degree) {
  DualReal term{1.0}, sum{0.0};
  for (int k = 0;; ++k) {
    sum += term;
    if (k == degree) return {sum, k + 1, true, 0.0};
    term = next_term(params, term, x, k);
  }
}

SeriesResult sum_interior(const HypergeometricParams& params, const DualReal& x,
                          double tol, int max_terms) {
  DualReal term{1.0}, sum{0.0};
  double mag = 1.0, prev_mag = 0.0;
  int streak = 0;
  for (int k = 0; k < max_terms; ++k) {
    sum += term;
    prev_mag = mag;
    mag = std::max(std::fabs(term.re), std::fabs(term.du));
    term = next_term(params, term, x, k);
    double scale_re = std::max(1.0, std::fabs(sum.re));
    double scale_du = std::max(1.0, std::fabs(sum.du));
    if (std::fabs(term.re) <= tol * scale_re && std::fabs(term.du) <= tol * scale_du) {
      if (++streak >= 3) {
        sum += term;
        prev_mag = mag;
        mag = std::max(std::fabs(term.re), std::fabs(term.du));
        double rho = prev_mag > 0.0 ? mag / prev_mag : 0.0;
        double tail = (rho < 1.0) ? mag * rho / (1.0 - rho)
                                  : std::numeric_limits<double>::infinity();
        double scale = std::max({1.0, std::fabs(sum.re), std::fabs(sum.du)});
        return {sum, std::min(k + 2, max_terms), tail <= tol * scale, tail};
      }
    } else {
      streak = 0;
    }
  }
  throw NoConvergence("pfq: max_terms reached before the stopping rule");
}

// Gaussian elimination with partial pivoting; returns the solution of Ac = y.
std::vector<double> solve_dense(std::vector<std::vector<double>> A,
                                std::vector<double> y) {
  const int n = static_cast<int>(y.size());
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::fabs(A[r][col]) > std::fabs(A[pivot][col])) pivot = r;
    }
    std::swap(A[pivot], A[col]);
    std::swap(y[pivot], y[col]);
    if (A[col][col] == 0.0) throw NoConvergence("boundary extrapolation: singular fit");
    for (int r = col + 1; r < n; ++r) {
      double f = A[r][col] / A[col][col];
      for (int c = col; c < n; ++c) A[r][c] -= f * A[col][c];
      y[r] -= f * y[col];
    }
  }
  std::vector<double> c(n);
  for (int r = n - 1; r >= 0; --r) {
    double acc = y[r];
    for (int cc = r + 1; cc < n; ++cc) acc -= A[r][cc] * c[cc];
    c[r] = acc / A[r][r];
  }
  return c;
}

// Fits S + sum_i c_i basis_i(n) through the sampled partial sums and returns S.
double extrapolate_limit(const std::vector<long long>& lengths,
                         const std::vector<double>& partials,
                         const std::vector<std::function<double(double)>>& basis) {
  const int n = static_cast<int>(basis.size()) + 1;
  std::vector<std::vector<double>> A(n, std::vector<double>(n));
  std::vector<double> y(n);
  const double nmax = static_cast<double>(lengths.back());
  for (int i = 0; i < n; ++i) {
    double ni = static_cast<double>(lengths[lengths.size() - n + i]);
    A[i][0] = 1.0;
    for (int j = 0; j < n - 1; ++j) {
      A[i][j + 1] = basis[j](ni) / basis[j](nmax);  // column scaling
    }
    y[i] = partials[partials.size() - n + i];
  }
  return solve_dense(std::move(A), std::move(y))[0];
}

// Boundary |x.re| = 1: partial sums at geometrically spaced even lengths,
// then Richardson extrapolation in the known algebraic decay basis. The
// re-channel tail is a power series in n^{-s}; parameter dual parts add
// log n factors; a dual part on x itself raises the power by one (handled
// only when it still converges, s > 1).
SeriesResult sum_boundary(const HypergeometricParams& params, const DualReal& x,
                          double tol, int max_terms) {
  const double s = re_sum_gap(params);
  const bool dual_x = x.du != 0.0;
  if (dual_x && s <= 1.0) {
    throw DivergentInput(
        "pfq: du channel of the boundary series diverges for this parameter gap");
  }
  if (s >= 8.0) {
    // decay is fast enough for the plain stopping rule
    return sum_interior(params, x, tol, max_terms);
  }

  const long long budget =
      std::min<long long>(1000000, std::max<long long>(max_terms, 200000));
  const int samples = dual_x ? 6 : 5;
  std::vector<long long> lengths(samples);
  for (int i = 0; i < samples; ++i) {
    long long n = budget >> (samples - 1 - i);
    lengths[i] = n - (n % 2);  // even, keeps x = -1 samples on one parity
  }

  std::vector<double> partial_re(samples), partial_du(samples);
  DualReal term{1.0}, sum{0.0};
  int next_sample = 0;
  for (long long k = 0; k < lengths.back(); ++k) {
    sum += term;
    if (k + 1 == lengths[next_sample]) {
      partial_re[next_sample] = sum.re;
      partial_du[next_sample] = sum.du;
      ++next_sample;
    }
    term = next_term(params, term, x, static_cast<int>(k));
  }

  auto power = [](double e) {
    return std::function<double(double)>([e](double n) { return std::pow(n, e); });
  };
  auto power_log = [](double e) {
    return std::function<double(double)>(
        [e](double n) { return std::pow(n, e) * std::log(n); });
  };

  std::vector<std::function<double(double)>> basis_re = {
      power(-s), power(-s - 1.0), power(-s - 2.0), power(-s - 3.0)};
  std::vector<std::function<double(double)>> basis_du;
  if (dual_x) {
    basis_du = {power_log(1.0 - s), power(1.0 - s), power_log(-s), power(-s),
                power(-s - 1.0)};
  } else {
    basis_du = {power_log(-s), power(-s), power_log(-s - 1.0), power(-s - 1.0)};
  }

  double re_full = extrapolate_limit(lengths, partial_re, basis_re);
  double du_full = extrapolate_limit(lengths, partial_du, basis_du);
  // uncertainty: redo with the lowest-order basis dropped
  std::vector<std::function<double(double)>> reduced_re(basis_re.begin(),
                                                        basis_re.end() - 1);
  std::vector<std::function<double(double)>> reduced_du(basis_du.begin(),
                                                        basis_du.end() - 1);
  double re_red = extrapolate_limit(lengths, partial_re, reduced_re);
  double du_red = extrapolate_limit(lengths, partial_du, reduced_du);

  double tail = 2.0 * std::max(std::fabs(re_full - re_red), std::fabs(du_full - du_red));
  DualReal value{re_full, du_full};
  detail::ensure_finite(value, "boundary series");
  double scale = std::max({1.0, std::fabs(value.re), std::fabs(value.du)});
  return {value, static_cast<int>(lengths.back()), tail <= tol * scale, tail};
}

void check_series_preconditions(const HypergeometricParams& params,
                                const ConvergenceClass& cls) {
  if (cls.tag == ConvergenceClass::Tag::Diverges) {
    throw DivergentInput("pfq: series diverges at this argument");
  }
  if (cls.tag == ConvergenceClass::Tag::DenominatorPole) {
    throw PoleError("pfq: denominator parameter " + std::to_string(cls.index) +
                        " at a non-positive integer",
                    static_cast<long>(std::nearbyint(
                        params.denominator[cls.index].re)));
  }
}

}  // namespace

SeriesResult pfq(const HypergeometricParams& params, const DualReal& x, double tol,
                 int max_terms) {
  if (!(tol > 0.0)) throw DomainError("pfq: tol must be positive");
  if (max_terms < 1) throw DomainError("pfq: max_terms must be >= 1");
  ConvergenceClass cls = classify_convergence(params, x);
  check_series_preconditions(params, cls);
  if (cls.tag == ConvergenceClass::Tag::TerminatesPolynomial) {
    return sum_terminating(params, x, cls.degree);
  }
  if (cls.tag == ConvergenceClass::Tag::ConvergesOnBoundary) {
    return sum_boundary(params, x, tol, max_terms);
  }
  return sum_interior(params, x, tol, max_terms);
}

DualReal pfq_derivative(const HypergeometricParams& params, const DualReal& x,
                        int r, double tol, int max_terms) {
  if (r < 0) throw DomainError("pfq_derivative: r must be >= 0");
  if (r == 0) return pfq(params, x, tol, max_terms).value;
  DualReal prefactor{1.0};
  for (const DualReal& a : params.numerator) prefactor *= pochhammer_dual(a, r);
  for (const DualReal& b : params.denominator) {
    DualReal pb = pochhammer_dual(b, r);
    if (pb.re == 0.0) {
      throw PoleError("pfq_derivative: denominator shifted factorial vanishes",
                      static_cast<long>(std::nearbyint(b.re)));
    }
    prefactor /= pb;
  }
  HypergeometricParams shifted = params;
  for (DualReal& a : shifted.numerator) a += DualReal{static_cast<double>(r)};
  for (DualReal& b : shifted.denominator) b += DualReal{static_cast<double>(r)};
  return prefactor * pfq(shifted, x, tol, max_terms).value;
}

DualReal theta_ode_residual(const HypergeometricParams& params, const DualReal& x,
                            double tol, int max_terms) {
  ConvergenceClass cls = classify_convergence(params, x);
  check_series_preconditions(params, cls);
  if (params.p() == params.q() + 1 && std::fabs(x.re) > 0.75 &&
      cls.tag != ConvergenceClass::Tag::TerminatesPolynomial) {
    throw DomainError("theta_ode_residual: requires |x.re| <= 0.75 when p = q+1");
  }

  DualReal term{1.0};  // c_k x^k
  DualReal theta_side{0.0}, shift_side{0.0};
  int streak = 0;
  const int terminate_at =
      cls.tag == ConvergenceClass::Tag::TerminatesPolynomial ? cls.degree : -1;
  const int limit = terminate_at >= 0 ? terminate_at + 3 : max_terms;
  for (int k = 0; k < limit; ++k) {
    // theta prod(theta + b_j - 1) acts on c_k x^k as k prod(b_j + k - 1)
    if (k > 0) {
      DualReal m{static_cast<double>(k)};
      for (const DualReal& b : params.denominator) {
        m *= b + DualReal{static_cast<double>(k - 1)};
      }
      theta_side += m * term;
    }
    DualReal numerator_shift{1.0};
    for (const DualReal& a : params.numerator) {
      numerator_shift *= a + DualReal{static_cast<double>(k)};
    }
    DualReal added = numerator_shift * term;
    shift_side += added;

    if (terminate_at >= 0 && k > terminate_at + 1) break;
    double mag = std::max(std::fabs(added.re), std::fabs(added.du)) *
                 std::max(1.0, static_cast<double>(k));
    double scale = std::max({1.0, std::fabs(theta_side.re), std::fabs(theta_side.du),
                             std::fabs(shift_side.re), std::fabs(shift_side.du)});
    if (mag <= tol * scale) {
      if (++streak >= 3 && terminate_at < 0) break;
    } else {
      streak = 0;
    }
    if (k + 1 == max_terms && terminate_at < 0) {
      throw NoConvergence("theta_ode_residual: max_terms reached");
    }

    DualReal denominator_shift{1.0};
    for (const DualReal& b : params.denominator) {
      denominator_shift *= b + DualReal{static_cast<double>(k)};
    }
    term = term * numerator_shift / denominator_shift * x /
           DualReal{static_cast<double>(k + 1)};
  }
  return theta_side - x * shift_side;
}

// ---------------------------------------------------------------------------
// contiguous relations
// ---------------------------------------------------------------------------

namespace {

HypergeometricParams with_numerator_shift(HypergeometricParams params, int i,
                                          double delta) {
  params.numerator[i] += DualReal{delta};
  return params;
}

HypergeometricParams with_denominator_shift(HypergeometricParams params, int j,
                                            double delta) {
  params.denominator[j] += DualReal{delta};
  return params;
}

void check_distinct_denominators(const HypergeometricParams& params) {
  for (int j = 0; j < params.q(); ++j) {
    for (int s = j + 1; s < params.q(); ++s) {
      if (std::fabs(params.denominator[j].re - params.denominator[s].re) <
          kDistinctDenominatorThreshold) {
        throw DegenerateParameters(
            "contiguous_residual: denominator real parts coincide");
      }
    }
  }
}

// U_j = prod_s (a_s - b_j) / (b_j prod_{s != j} (b_s - b_j))
DualReal u_coefficient(const HypergeometricParams& params, int j) {
  const DualReal& bj = params.denominator[j];
  DualReal num{1.0};
  for (const DualReal& a : params.numerator) num *= a - bj;
  DualReal den = bj;
  for (int s = 0; s < params.q(); ++s) {
    if (s != j) den *= params.denominator[s] - bj;
  }
  return num / den;
}

// W_{j,k} = prod_{s != k} (a_s - b_j) / (b_j prod_{s != j} (b_s - b_j))
DualReal w_coefficient(const HypergeometricParams& params, int j, int k) {
  const DualReal& bj = params.denominator[j];
  DualReal num{1.0};
  for (int s = 0; s < params.p(); ++s) {
    if (s != k) num *= params.numerator[s] - bj;
  }
  DualReal den = bj;
  for (int s = 0; s < params.q(); ++s) {
    if (s != j) den *= params.denominator[s] - bj;
  }
  return num / den;
}

}  // namespace

DualReal contiguous_residual(RelationId relation, const HypergeometricParams& params,
                             const DualReal& x, int k_or_j, double tol,
                             int max_terms) {
  const int p = params.p(), q = params.q();
  auto value = [&](const HypergeometricParams& pp) {
    return pfq(pp, x, tol, max_terms).value;
  };
  auto raise_family = [&](const DualReal& lhs_coeff, bool damp_raise) {
    check_distinct_denominators(params);
    DualReal rhs = params.numerator[0] * value(with_numerator_shift(params, 0, 1.0));
    if (damp_raise) rhs *= DualReal{1.0} - x;
    DualReal pole_sum{0.0};
    for (int j = 0; j < q; ++j) {
      pole_sum += u_coefficient(params, j) * value(with_denominator_shift(params, j, 1.0));
    }
    return lhs_coeff * value(params) - (rhs - x * pole_sum);
  };

  switch (relation) {
    case RelationId::NumeratorPair: {
      if (p < 2) throw InapplicableRelation("NumeratorPair needs p >= 2");
      if (k_or_j < 2 || k_or_j > p) {
        throw InapplicableRelation("NumeratorPair index must be in 2..p");
      }
      int k = k_or_j - 1;
      const DualReal& a1 = params.numerator[0];
      const DualReal& ak = params.numerator[k];
      DualReal lhs = (a1 - ak) * value(params);
      DualReal rhs = a1 * value(with_numerator_shift(params, 0, 1.0)) -
                     ak * value(with_numerator_shift(params, k, 1.0));
      return lhs - rhs;
    }
    case RelationId::NumeratorDenominator: {
      if (p < 1 || q < 1) throw InapplicableRelation("NumeratorDenominator needs p, q >= 1");
      if (k_or_j < 1 || k_or_j > q) {
        throw InapplicableRelation("NumeratorDenominator index must be in 1..q");
      }
      int k = k_or_j - 1;
      const DualReal& a1 = params.numerator[0];
      const DualReal& bk = params.denominator[k];
      DualReal lhs = (a1 - bk + DualReal{1.0}) * value(params);
      DualReal rhs = a1 * value(with_numerator_shift(params, 0, 1.0)) -
                     (bk - DualReal{1.0}) * value(with_denominator_shift(params, k, -1.0));
      return lhs - rhs;
    }
    case RelationId::RaiseFirstNumeratorPLtQ: {
      if (p < 1 || p >= q) throw InapplicableRelation("this relation needs 1 <= p < q");
      return raise_family(params.numerator[0], false);
    }
    case RelationId::RaiseFirstNumeratorPEqQ: {
      if (p < 1 || p != q) throw InapplicableRelation("this relation needs p = q >= 1");
      return raise_family(params.numerator[0] + x, false);
    }
    case RelationId::RaiseFirstNumeratorPGtQ: {
      if (p != q + 1) throw InapplicableRelation("this relation needs p = q + 1");
      DualReal gap{0.0};
      for (const DualReal& a : params.numerator) gap += a;
      for (const DualReal& b : params.denominator) gap -= b;
      DualReal lhs_coeff = (DualReal{1.0} - x) * params.numerator[0] + gap * x;
      return raise_family(lhs_coeff, true);
    }
    case RelationId::LowerNumeratorPLeQ:
    case RelationId::LowerNumeratorPGtQ: {
      bool top_heavy = relation == RelationId::LowerNumeratorPGtQ;
      if (top_heavy ? (p != q + 1) : (p < 1 || p > q)) {
        throw InapplicableRelation(top_heavy ? "this relation needs p = q + 1"
                                             : "this relation needs 1 <= p <= q");
      }
      if (k_or_j < 1 || k_or_j > p) {
        throw InapplicableRelation("numerator index must be in 1..p");
      }
      check_distinct_denominators(params);
      int k = k_or_j - 1;
      DualReal lhs = value(params);
      if (top_heavy) lhs *= DualReal{1.0} - x;
      DualReal rhs = value(with_numerator_shift(params, k, -1.0));
      DualReal pole_sum{0.0};
      for (int j = 0; j < q; ++j) {
        pole_sum += w_coefficient(params, j, k) *
                    value(with_denominator_shift(params, j, 1.0));
      }
      return lhs - (rhs + x * pole_sum);
    }
  }
  throw InapplicableRelation("unknown relation");
}

// ---------------------------------------------------------------------------
// integral representations
// ---------------------------------------------------------------------------

QuadratureResult pfq_integral_rep(const HypergeometricParams& params,
                                  const DualReal& x, const IntegralForm& form,
                                  double tol) {
  if (params.p() < 1 || params.q() < 1) {
    throw DomainError("pfq_integral_rep: needs p >= 1 and q >= 1");
  }
  const DualReal a1 = params.numerator[0];
  const DualReal b1 = params.denominator[0];
  const DualReal gap = b1 - a1;
  if (!(a1.re > 0.0 && b1.re > 0.0 && gap.re > 0.0)) {
    throw DomainError("pfq_integral_rep: requires Re(a1), Re(b1), Re(b1 - a1) > 0");
  }
  HypergeometricParams inner;
  inner.numerator.assign(params.numerator.begin() + 1, params.numerator.end());
  inner.denominator.assign(params.denominator.begin() + 1, params.denominator.end());

  DualReal prefactor = gamma_dual(b1) / (gamma_dual(a1) * gamma_dual(gap));
  double prefactor_mag = std::fabs(prefactor.re) + std::fabs(prefactor.du);
  double quad_tol =
      std::max(std::max(tol, 1e-7) * 0.02 / std::max(1.0, prefactor_mag), 1e-13);
  double inner_tol = 1e-13;

  auto inner_value = [&](const DualReal& arg) {
    return pfq(inner, arg, inner_tol, 10000).value;
  };

  QuadratureResult out;
  switch (form.kind) {
    case IntegralForm::Kind::Euler01: {
      DualReal am1 = a1 - DualReal{1.0};
      DualReal gm1 = gap - DualReal{1.0};
      // split at 1/2 so each endpoint singularity sits at a lower limit
      auto left = [&](double u) {
        return pow(u, am1) * pow(1.0 - u, gm1) * inner_value(DualReal{u} * x);
      };
      auto right = [&](double v) {
        return pow(v, gm1) * pow(1.0 - v, am1) * inner_value(DualReal{1.0 - v} * x);
      };
      QuadratureResult l = quad_de(left, 0.0, 0.5, quad_tol);
      QuadratureResult r = quad_de(right, 0.0, 0.5, quad_tol);
      out.value = prefactor * (l.value + r.value);
      out.abs_error_estimate =
          prefactor_mag * (l.abs_error_estimate + r.abs_error_estimate);
      out.nodes = l.nodes + r.nodes;
      return out;
    }
    case IntegralForm::Kind::Infinite:
    case IntegralForm::Kind::Scaled: {
      double scale = form.kind == IntegralForm::Kind::Scaled ? form.b : 1.0;
      if (!(scale > 0.0)) throw DomainError("pfq_integral_rep: scale must be > 0");
      DualReal am1 = a1 - DualReal{1.0};
      auto integrand = [&](double u) {
        double su = scale * u;
        return pow(u, am1) * pow(1.0 + su, -b1) *
               inner_value(DualReal{su / (1.0 + su)} * x);
      };
      QuadratureResult q = quad_de(integrand, 0.0,
                                   std::numeric_limits<double>::infinity(), quad_tol);
      DualReal front = prefactor;
      if (form.kind == IntegralForm::Kind::Scaled) front *= pow(scale, a1);
      out.value = front * q.value;
      out.abs_error_estimate =
          (std::fabs(front.re) + std::fabs(front.du)) * q.abs_error_estimate;
      out.nodes = q.nodes;
      return out;
    }
  }
  throw DomainError("pfq_integral_rep: unknown form");
}

}  // namespace dualfunc
