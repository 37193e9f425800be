#include "partfn/asymptotics.hpp"

#include "partfn/rational.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace partfn {

namespace {

constexpr unsigned kWorkGuard = 16;
constexpr unsigned long kZetaTerms = 1'000'000;

Real compute_zeta_three_halves(unsigned bits) {
    // sum_{k < M} k^{-3/2} + [2/sqrt(M) + M^{-3/2}/2 + (3/2)/12 M^{-5/2}
    //                         - (3/2)(5/2)(7/2)/720 M^{-9/2}]
    Real sum(0L, bits);
    Real term(bits);
    for (unsigned long k = kZetaTerms - 1; k >= 1; --k) {  // small terms first
        mpfr_sqrt_ui(term.get(), k, MPFR_RNDN);
        mpfr_mul_ui(term.get(), term.get(), k, MPFR_RNDN);
        mpfr_ui_div(term.get(), 1, term.get(), MPFR_RNDN);
        mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
    }
    const Real m(static_cast<long>(kZetaTerms), bits);
    const Real root = sqrt(m);
    const Real m_pow = m * root;  // M^{3/2}
    Real tail = Real(2L, bits) / root;
    tail += Real(1L, bits) / (m_pow * 2L);
    tail += Real(make_fraction(1, 8), bits) / (m_pow * m);
    tail -= Real(make_fraction(105, 5760), bits) / (m_pow * m * m * m);
    return sum + tail;
}

}  // namespace

Real l_n(std::uint64_t n, const PrecisionContext& ctx) {
    if (n < 1) throw std::invalid_argument("l_n: n must be >= 1");
    const unsigned b = ctx.bits() + kWorkGuard;
    const Real nr(mpz_class(n), b);
    const Real exponent = pi(b) * sqrt(nr * 2L / 3L);
    const Real value = exp(exponent) / (nr * 4L * sqrt(Real(3L, b)));
    return value.rounded_to(ctx.bits());
}

std::string AsymptoticRow::eps_display() const {
    Real scaled = eps_percent * 100L;
    mpfr_round(scaled.get(), scaled.get());  // halves away from zero
    const mpz_class hundredths = scaled.round_to_integer();
    mpz_class magnitude = abs(hundredths);
    const mpz_class whole = magnitude / 100;
    const mpz_class frac = magnitude % 100;
    std::string out = hundredths < 0 ? "-" : "";
    out += whole.get_str() + "." + (frac < 10 ? "0" : "") + frac.get_str();
    return out;
}

std::vector<AsymptoticRow> relative_error_table(const std::vector<std::uint64_t>& ns, PartitionCache& cache,
                                                const PrecisionContext& ctx) {
    std::vector<AsymptoticRow> rows;
    if (ns.empty()) return rows;
    cache.extend_to(*std::max_element(ns.begin(), ns.end()));
    rows.reserve(ns.size());
    const unsigned b = ctx.bits() + kWorkGuard;
    for (std::uint64_t n : ns) {
        const PartitionValue& p = cache.at(n);
        const Real approx = l_n(n, ctx.widened(kWorkGuard));
        const Real exact(p, b);
        const Real eps = (exact - approx) / exact * 100L;
        rows.push_back({n, p, approx.rounded_to(ctx.bits()), eps.rounded_to(ctx.bits())});
    }
    return rows;
}

const std::vector<std::uint64_t>& reference_table_ns() {
    static const std::vector<std::uint64_t> ns{10,   50,   100,  200,  500,  1000, 2000,  3000, 4000,
                                               5000, 6000, 7000, 8000, 9000, 10000, 12000, 15000};
    return ns;
}

Real zeta_three_halves(const PrecisionContext& ctx) {
    static std::mutex mutex;
    static std::map<unsigned, Real> computed;
    // Cached in 64-bit steps so nearby precisions share one evaluation.
    const unsigned key = (ctx.bits() + 63) / 64 * 64;
    const std::lock_guard lock(mutex);
    auto it = computed.find(key);
    if (it == computed.end()) it = computed.emplace(key, compute_zeta_three_halves(key + kWorkGuard)).first;
    return it->second.rounded_to(ctx.bits());
}

Real tail_ratio_bound(std::uint64_t n, const PrecisionContext& ctx) {
    if (n < 1) throw std::invalid_argument("tail_ratio_bound: n must be >= 1");
    const PrecisionContext work = ctx.widened(kWorkGuard);
    const unsigned b = work.bits();
    const Real nr(mpz_class(n), b);
    const Real c = zeta_three_halves(work) - Real(1L, b);
    const Real pi_b = pi(b);
    const Real coefficient = c * pi_b * pi_b * nr * 2L / 3L;
    const Real decay = exp(-(pi_b / 2L * sqrt(nr * 2L / 3L)));
    return (coefficient * decay).rounded_to(ctx.bits());
}

}  // namespace partfn
