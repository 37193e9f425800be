#include "partfn/special_functions.hpp"

#include "partfn/rational.hpp"

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>

namespace partfn {

namespace {

constexpr unsigned kGuardBits = 8;
constexpr unsigned kWorkGuard = 24;

bool is_half_integer(double nu) {
    const double twice = 2.0 * nu;
    return std::floor(twice) == twice && std::fmod(std::fabs(twice), 2.0) == 1.0;
}

// (2M - 1)!! with (-1)!! = 1.
mpz_class odd_double_factorial(long M) {
    mpz_class out = 1;
    for (long f = 2 * M - 1; f > 1; f -= 2) out *= f;
    return out;
}

}  // namespace

Real bessel_i_series(double nu, const Real& x, const PrecisionContext& ctx) {
    if (!(nu > -1.0)) throw std::invalid_argument("bessel_i_series: nu must be > -1");
    if (x.sign() < 0) throw std::domain_error("bessel_i_series: x must be >= 0");
    if (x.is_zero()) {
        if (nu > 0) return Real(0L, ctx.bits());
        if (nu == 0) return Real(1L, ctx.bits());
        throw std::domain_error("bessel_i_series: I_nu(0) is unbounded for nu < 0");
    }

    const unsigned work = ctx.bits() + kWorkGuard;
    const Real half_x = x.rounded_to(work) / 2L;
    const Real y = half_x * half_x;
    const Real nu_w(nu, work);

    Real term(work);
    if (is_half_integer(nu)) {
        // nu = m + 1/2; Gamma(nu + 1) = Gamma(M + 1/2) with M = m + 1.
        const long M = std::lround(nu - 0.5) + 1;
        const mpq_class inv_gamma_scaled =
            make_fraction(mpz_class(1) << static_cast<mp_bitcnt_t>(M), odd_double_factorial(M));
        term = pow(half_x, nu_w) * Real(inv_gamma_scaled, work) / sqrt(pi(work));
    } else {
        Real gamma(work);
        const Real arg = nu_w + Real(1L, work);
        mpfr_gamma(gamma.get(), arg.get(), MPFR_RNDN);
        term = pow(half_x, nu_w) / gamma;
    }

    const Real tolerance = exp2i(-static_cast<long>(ctx.bits() + kGuardBits), work);
    Real sum = term;
    for (long j = 0;; ++j) {
        // term_{j+1} = term_j * (x/2)^2 / ((j+1)(nu+j+1))
        term *= y;
        term /= Real(j + 1, work) * (nu_w + Real(j + 1, work));
        sum += term;
        if (term < sum * tolerance) break;
    }
    return sum.rounded_to(ctx.bits());
}

Real sinhc_derivative_kernel(const Real& u, const PrecisionContext& ctx) {
    if (u.sign() <= 0) throw std::domain_error("sinhc_derivative_kernel: u must be > 0");
    // u cosh u - sinh u ~ u^3/3 while each part is ~u: about 2 log2(1/u) bits cancel.
    const long exponent = mpfr_get_exp(u.get());
    const unsigned cancel = exponent < 1 ? static_cast<unsigned>(2 * (1 - exponent)) : 0U;
    const unsigned work = ctx.bits() + kWorkGuard + cancel;
    const Real uw = u.rounded_to(work);
    const Real kernel = (uw * cosh(uw) - sinh(uw)) / (uw * uw);
    return kernel.rounded_to(ctx.bits());
}

Real bessel_i_3_2_closed(const Real& x, const PrecisionContext& ctx) {
    if (x.sign() <= 0) throw std::domain_error("bessel_i_3_2_closed: x must be > 0");
    const PrecisionContext work = ctx.widened(kWorkGuard);
    const Real xw = x.rounded_to(work.bits());
    const Real scale = sqrt(xw * 2L / pi(work.bits()));
    return (scale * sinhc_derivative_kernel(xw, work)).rounded_to(ctx.bits());
}

}  // namespace partfn
