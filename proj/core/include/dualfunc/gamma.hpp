#pragma once

#include "dualfunc/dual.hpp"
#include "dualfunc/reference.hpp"

namespace dualfunc {

/// Dual gamma function: Gamma(a.re) + eps * a.du * Gamma'(a.re), with the
/// derivative realized as Gamma * digamma. Throws PoleError (carrying the
/// nearest pole) within 1e-10 of a non-positive integer.
DualReal gamma_dual(const DualReal& a);

/// Dual shifted factorial (a)_k. k >= 1 is the explicit product
/// a (a+1) ... (a+k-1) in dual arithmetic, so it stays finite at the gamma
/// poles (needed for terminating hypergeometric series); k = 0 gives 1;
/// k < 0 uses (a)_{-m} = (-1)^m / (1-a)_m and throws ZeroFactor when a
/// reciprocal factor has zero real part.
DualReal pochhammer_dual(const DualReal& a, long long k);

/// k-th element of the limit sequence (k-1)! k^a / (a)_k whose limit is the
/// dual gamma function. Accumulated in log space (both channels) so large k
/// does not overflow; throws OverflowError if the final magnitude would.
DualReal gamma_limit_approx(const DualReal& a, long long k);

}  // namespace dualfunc
