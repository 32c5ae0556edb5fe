#pragma once

// Umbrella header for the dual-valued special function library.

#include "dualfunc/beta.hpp"
#include "dualfunc/dual.hpp"
#include "dualfunc/errors.hpp"
#include "dualfunc/gamma.hpp"
#include "dualfunc/hypergeometric.hpp"
#include "dualfunc/reference.hpp"
#include "dualfunc/special.hpp"
#include "dualfunc/verify.hpp"
