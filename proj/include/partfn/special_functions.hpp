#pragma once

#include "partfn/precision.hpp"

namespace partfn {

/// I_nu(x) from its power series (x/2)^nu sum_j (x/2)^{2j} / (j! Gamma(nu+j+1)).
///
/// Summation stops once a term drops below 2^-(bits+8) of the running sum.
/// For half-integer nu the Gamma values come from the exact double-factorial
/// identity Gamma(m + 1/2) = sqrt(pi) (2m-1)!! / 2^m, so the only irrational
/// factor is a single sqrt(pi); other nu use MPFR's Gamma for the leading
/// coefficient. Requires x >= 0 and nu > -1 (x = 0 with nu < 0 is rejected).
Real bessel_i_series(double nu, const Real& x, const PrecisionContext& ctx);

/// I_{3/2}(x) = sqrt(2x/pi) (x cosh x - sinh x) / x^2, i.e.
/// sqrt(2x/pi) d/dx (sinh x / x). Requires x > 0.
Real bessel_i_3_2_closed(const Real& x, const PrecisionContext& ctx);

/// (u cosh u - sinh u) / u^2 for u > 0, with enough guard bits to absorb the
/// cancellation near u = 0.
Real sinhc_derivative_kernel(const Real& u, const PrecisionContext& ctx);

}  // namespace partfn
