#include "partfn/series.hpp"

#include "partfn/dedekind.hpp"
#include "partfn/errors.hpp"
#include "partfn/rational.hpp"
#include "partfn/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace partfn {

namespace {

constexpr unsigned kWorkGuard = 16;
constexpr unsigned kRetryBits = 32;

void require_positive_n(std::uint64_t n, const char* where) {
    if (n < 1) throw std::invalid_argument(std::string(where) + ": n must be >= 1");
}

// Quantities shared by every term at a fixed n and precision.
class TermEvaluator {
public:
    TermEvaluator(std::uint64_t n, const PrecisionContext& ctx)
        : n_(n), ctx_(ctx), work_(ctx.widened(kWorkGuard)), alpha_(alpha(n, work_).alpha), scale_(work_.bits()) {
        const unsigned b = work_.bits();
        // pi / (3 sqrt 2 sqrt(n - 1/24))
        const Real shifted(make_fraction(mpz_class(24) * n - 1, 24), b);
        scale_ = pi(b) / (Real(3L, b) * sqrt(Real(2L, b)) * sqrt(shifted));
    }

    SeriesTerm operator()(std::int64_t k) const {
        if (k < 1) throw std::invalid_argument("r_k: k must be >= 1");
        const unsigned b = work_.bits();
        const Real k_real(k, b);
        const Real u = alpha_ / k_real;
        // ((alpha/k) cosh(alpha/k) - sinh(alpha/k)) / alpha^2 = kernel(u) / k^2
        const Real bracket = sinhc_derivative_kernel(u, work_) / (k_real * k_real);
        Real ak = a_k(k, n_, work_).value;
        Real rk = scale_ * sqrt(k_real) * ak * bracket;
        return {k, ak.rounded_to(ctx_.bits()), rk.rounded_to(ctx_.bits())};
    }

private:
    std::uint64_t n_;
    PrecisionContext ctx_;
    PrecisionContext work_;
    Real alpha_;
    Real scale_;
};

std::int64_t ceil_sqrt_times(std::uint64_t n, double factor) {
    return static_cast<std::int64_t>(std::ceil(factor * std::sqrt(static_cast<double>(n))));
}

}  // namespace

AlphaValue alpha(std::uint64_t n, const PrecisionContext& ctx) {
    require_positive_n(n, "alpha");
    const unsigned b = ctx.bits() + kWorkGuard;
    // pi sqrt((2/3)(n - 1/24)) = pi sqrt(24n - 1) / 6
    const Real value = pi(b) * sqrt(Real(mpz_class(mpz_class(24) * n - 1), b)) / 6L;
    return {n, value.rounded_to(ctx.bits())};
}

unsigned series_precision_bits(std::uint64_t n) {
    require_positive_n(n, "series_precision_bits");
    const double a = std::numbers::pi * std::sqrt((24.0 * static_cast<double>(n) - 1.0)) / 6.0;
    const auto magnitude = static_cast<unsigned>(std::ceil(a * std::numbers::log2e));
    return std::max(PrecisionContext::kMinBits, magnitude + 64U);
}

SeriesTerm r_k(std::uint64_t n, std::int64_t k, const PrecisionContext& ctx) {
    require_positive_n(n, "r_k");
    return TermEvaluator(n, ctx)(k);
}

SeriesReport p_series(std::uint64_t n, const SeriesOptions& opts) {
    require_positive_n(n, "p_series");
    unsigned bits = series_precision_bits(n);
    if (opts.prec) bits = std::max(bits, *opts.prec);

    std::int64_t terms = std::max<std::int64_t>(5, ceil_sqrt_times(n, 2.0));
    if (opts.initial_terms) {
        if (*opts.initial_terms < 1) throw std::invalid_argument("p_series: initial_terms must be >= 1");
        terms = *opts.initial_terms;
    }
    const std::int64_t limit = std::max<std::int64_t>(terms, ceil_sqrt_times(n, 64.0));
    for (;;) {
        if (terms > limit) {
            throw CertificationError("p_series: no certified rounding for n = " + std::to_string(n) + " with up to " +
                                     std::to_string(limit) + " terms at " + std::to_string(bits) + " bits");
        }
        const PrecisionContext ctx(bits);
        const Real quarter = Real(1L, bits) / 4L;
        const TermEvaluator eval(n, ctx);
        const std::int64_t doubled = 2 * terms;

        SeriesReport report{n, bits, {}, Real(0L, bits), PartitionValue(0), Real(bits), doubled};
        report.terms.reserve(static_cast<std::size_t>(doubled));
        Real half_sum(0L, bits);
        for (std::int64_t k = 1; k <= doubled; ++k) {
            report.terms.push_back(eval(k));
            report.partial_sum += report.terms.back().r_k;
            if (k == terms) half_sum = report.partial_sum;
        }

        report.rounded = report.partial_sum.round_to_integer();
        report.gap = abs(report.partial_sum - Real(report.rounded, bits));
        const bool near_integer = report.gap < quarter;
        const bool stable = abs(report.partial_sum - half_sum) < quarter && half_sum.round_to_integer() == report.rounded;
        if (near_integer && stable) return report;

        terms = doubled;
        bits += kRetryBits;
    }
}

Real remainder_constant_c0(const PrecisionContext& ctx) {
    const unsigned b = ctx.bits() + kWorkGuard;
    const Real x = exp(-(pi(b) / 48L));
    return (eval_F(x, ctx.widened(kWorkGuard)) - Real(1L, b)).rounded_to(ctx.bits());
}

Real remainder_bound_log(std::uint64_t n, std::uint64_t terms, const PrecisionContext& ctx) {
    require_positive_n(n, "remainder_bound_log");
    if (terms < 1) throw std::invalid_argument("remainder_bound_log: N must be >= 1");
    const PrecisionContext work = ctx.widened(kWorkGuard);
    const unsigned b = work.bits();
    const Real ln2 = log(Real(2L, b));
    const Real pi_b = pi(b);
    // C = e^{2 pi n} (2^{7/4} C0 + 2^{3/4} pi e^{pi/12})
    const Real first = exp(ln2 * Real(make_fraction(7, 4), b)) * remainder_constant_c0(work);
    const Real second = exp(ln2 * Real(make_fraction(3, 4), b)) * pi_b * exp(pi_b / 12L);
    const Real log_c = pi_b * 2L * Real(mpz_class(n), b) + log(first + second);
    const Real result = log_c - log(Real(mpz_class(terms), b)) / 2L;
    return result.rounded_to(ctx.bits());
}

}  // namespace partfn
