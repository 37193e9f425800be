#include "partfn/dedekind.hpp"

#include "partfn/rational.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace partfn {

namespace {

constexpr unsigned kGuardBits = 8;
constexpr unsigned kWorkGuard = 32;

using wide = __int128;

mpz_class to_mpz(wide v) {
    const bool negative = v < 0;
    unsigned __int128 u = negative ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    mpz_class hi(static_cast<unsigned long>(u >> 64));
    mpz_class lo(static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFULL));
    mpz_class out = (hi << 64) + lo;
    return negative ? mpz_class(-out) : out;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

// 2k^2 s(h, k) = sum_{r=1}^{k-1} r (2 (hr mod k) - k), an exact integer.
wide dedekind_numerator(std::int64_t h, std::int64_t k) {
    const wide hk = mod_floor(h, k);
    wide total = 0;
    wide residue = 0;  // h r mod k, advanced incrementally
    for (std::int64_t r = 1; r < k; ++r) {
        residue += hk;
        if (residue >= k) residue -= k;
        total += static_cast<wide>(r) * (2 * residue - k);
    }
    return total;
}

void require_positive_k(std::int64_t k, const char* where) {
    if (k < 1) throw std::invalid_argument(std::string(where) + ": k must be >= 1, got " + std::to_string(k));
}

// Stopping threshold 2^-(bits + 8) for the truncated products.
Real product_threshold(unsigned bits, unsigned work) { return exp2i(-static_cast<long>(bits + kGuardBits), work); }

// prod_{m>=1} (1 - q^m) given q and |q|.
Complex euler_product(const Complex& q, const Real& q_abs, unsigned bits, unsigned work) {
    const Real threshold = product_threshold(bits, work);
    const Complex one(Real(1L, work));
    Complex product = one;
    Complex power = q;
    Real power_abs = q_abs;
    while (power_abs >= threshold) {
        product *= one - power;
        power *= q;
        power_abs *= q_abs;
    }
    return product;
}

}  // namespace

ExactRational dedekind_sum(std::int64_t h, std::int64_t k) {
    require_positive_k(k, "dedekind_sum");
    if (k == 1) return ExactRational(0L);
    const mpz_class den = mpz_class(2) * k * k;
    return ExactRational(to_mpz(dedekind_numerator(h, k)), den);
}

ExactRational dedekind_reciprocity_defect(std::int64_t h, std::int64_t k) {
    if (h < 1 || k < 1) throw std::invalid_argument("dedekind_reciprocity_defect: h and k must be positive");
    if (std::gcd(h, k) != 1) {
        throw std::invalid_argument("dedekind_reciprocity_defect: gcd(" + std::to_string(h) + ", " +
                                    std::to_string(k) + ") != 1");
    }
    const ExactRational hr(h), kr(k);
    const ExactRational rhs = ExactRational(mpq_class(-1, 4)) +
                              (hr / kr + kr / hr + ExactRational(1L) / (hr * kr)) / ExactRational(12L);
    return dedekind_sum(h, k) + dedekind_sum(k, h) - rhs;
}

mpq_class a_k_phase(std::int64_t h, std::int64_t k, std::uint64_t n) {
    require_positive_k(k, "a_k_phase");
    // phase = (2k^2 s(h,k) - 4k (nh mod k)) / (2k^2), reduced mod 2, i.e. the
    // numerator is reduced mod 4k^2.
    const wide kk = k;
    const wide modulus = 4 * kk * kk;
    const wide nh = (static_cast<wide>(n % static_cast<std::uint64_t>(k)) * mod_floor(h, k)) % kk;
    wide numerator = (k == 1 ? 0 : dedekind_numerator(h, k)) - 4 * kk * nh;
    numerator %= modulus;
    if (numerator < 0) numerator += modulus;
    return make_fraction(to_mpz(numerator), to_mpz(2 * kk * kk));
}

AkValue a_k(std::int64_t k, std::uint64_t n, const PrecisionContext& ctx) {
    require_positive_k(k, "a_k");
    if (n < 1) throw std::invalid_argument("a_k: n must be >= 1");
    const unsigned work = ctx.bits() + kGuardBits;
    Real sum(0L, work);
    for (std::int64_t h = 1; h <= k; ++h) {
        if (std::gcd(h, k) != 1) continue;
        const std::int64_t twice = 2 * h;
        if (twice > k && h != k) continue;  // conjugate of k - h, already counted
        const Real c = cos_pi(a_k_phase(h, k, n), work);
        if (twice < k) {
            sum += c * 2L;
        } else {
            sum += c;  // h = k/2 (k = 2) or h = k (k = 1): real on its own
        }
    }
    return {k, n, sum.rounded_to(ctx.bits())};
}

Complex a_k_complex(std::int64_t k, std::uint64_t n, const PrecisionContext& ctx) {
    require_positive_k(k, "a_k_complex");
    const unsigned work = ctx.bits() + kGuardBits;
    // Phase taken as s(h,k) - 2nh/k without the mod-2 reduction.
    Complex sum(Real(0L, work));
    const Real pi_w = pi(work);
    for (std::int64_t h = 1; h <= k; ++h) {
        if (std::gcd(h, k) != 1) continue;
        const mpq_class raw = dedekind_sum(h, k).get() - make_fraction(mpz_class(2) * n * h, k);
        const Real angle = pi_w * Real(raw, work);
        sum += Complex(cos(angle), sin(angle));
    }
    return sum.rounded_to(ctx.bits());
}

Real eval_F(const Real& x, const PrecisionContext& ctx) {
    if (x.sign() <= 0 || x >= Real(1L, x.bits())) {
        throw std::domain_error("eval_F: argument must lie in (0, 1), got " + x.to_scientific(10));
    }
    const unsigned work = ctx.bits() + kWorkGuard;
    const Real xw = x.rounded_to(work);
    const Real threshold = product_threshold(ctx.bits(), work);
    const Real one(1L, work);
    Real product = one;
    Real power = xw;
    while (power >= threshold) {
        product *= one - power;
        power *= xw;
    }
    return (one / product).rounded_to(ctx.bits());
}

Complex eval_F(const Complex& w, const PrecisionContext& ctx) {
    const unsigned work = ctx.bits() + kWorkGuard;
    const Complex ww = w.rounded_to(work);
    const Real modulus = abs(ww);
    if (modulus >= Real(1L, work)) throw std::domain_error("eval_F: |w| must be < 1");
    if (modulus.is_zero()) return Complex(Real(1L, ctx.bits()));
    const Complex one(Real(1L, work));
    return (one / euler_product(ww, modulus, ctx.bits(), work)).rounded_to(ctx.bits());
}

Complex dedekind_eta(const Complex& tau, const PrecisionContext& ctx) {
    if (tau.im().sign() <= 0) throw std::domain_error("dedekind_eta: Im tau must be > 0");
    const unsigned work = ctx.bits() + kWorkGuard;
    const Complex t = tau.rounded_to(work);
    const Real two_pi = pi(work) * 2L;
    // q = e^{2 pi i tau}, |q| = e^{-2 pi Im tau}
    const Complex q = exp(Complex(-(two_pi * t.im()), two_pi * t.re()));
    const Real q_abs = exp(-(two_pi * t.im()));
    const Complex prefactor = exp(Complex(-(pi(work) * t.im()) / 12L, pi(work) * t.re() / 12L));
    return (prefactor * euler_product(q, q_abs, ctx.bits(), work)).rounded_to(ctx.bits());
}

EtaCheckReport verify_eta(const ModularMatrix& m, const Complex& tau, const PrecisionContext& ctx) {
    if (static_cast<wide>(m.a) * m.d - static_cast<wide>(m.b) * m.c != 1) {
        throw std::invalid_argument("verify_eta: matrix must satisfy ad - bc = 1");
    }
    if (m.c <= 0) throw std::invalid_argument("verify_eta: c must be > 0");
    if (tau.im().sign() <= 0) throw std::domain_error("verify_eta: Im tau must be > 0");

    const PrecisionContext work(ctx.bits() + kWorkGuard);
    const unsigned wb = work.bits();
    const Complex t = tau.rounded_to(wb);
    const Complex ct_d = Complex(Real(m.c, wb)) * t + Complex(Real(m.d, wb));
    const Complex image = (Complex(Real(m.a, wb)) * t + Complex(Real(m.b, wb))) / ct_d;

    const Complex lhs = dedekind_eta(image, work);
    const mpq_class phase = make_fraction(m.a + m.d, 12 * m.c) + dedekind_sum(-m.d, m.c).get();
    // -i (c tau + d) has real part c Im tau > 0, so the principal root applies.
    const Complex rotated(ct_d.im(), -ct_d.re());
    const Complex rhs = exp_i_pi(phase, wb) * sqrt(rotated) * dedekind_eta(t, work);

    return {m, tau, lhs.rounded_to(ctx.bits()), rhs.rounded_to(ctx.bits()), abs(lhs - rhs).rounded_to(ctx.bits())};
}

std::int64_t inverse_for_transform(std::int64_t h, std::int64_t k) {
    require_positive_k(k, "inverse_for_transform");
    if (std::gcd(h, k) != 1) throw std::invalid_argument("inverse_for_transform: gcd(h, k) != 1");
    if (k == 1) return 1;
    // Extended Euclid for h^{-1} mod k.
    std::int64_t old_r = mod_floor(h, k), r = k;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        std::int64_t tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    const std::int64_t inverse = mod_floor(old_s, k);
    const std::int64_t H = mod_floor(-inverse, k);
    return H == 0 ? k : H;
}

ModularMatrix complete_modular_matrix(std::int64_t c, std::int64_t d) {
    if (c < 1) throw std::invalid_argument("complete_modular_matrix: c must be > 0");
    if (std::gcd(c, d) != 1) throw std::invalid_argument("complete_modular_matrix: gcd(c, d) != 1");
    // a d = 1 (mod c), i.e. a = -H for the (d, c) transform inverse.
    const std::int64_t a = c == 1 ? 0 : mod_floor(-inverse_for_transform(d, c), c);
    const std::int64_t b = (a * d - 1) / c;
    return {a, b, c, d};
}

Real verify_F_transform(std::int64_t h, std::int64_t k, const Complex& z, const PrecisionContext& ctx) {
    require_positive_k(k, "verify_F_transform");
    if (h < 1 || h > k) throw std::invalid_argument("verify_F_transform: need 1 <= h <= k");
    if (std::gcd(h, k) != 1) throw std::invalid_argument("verify_F_transform: gcd(h, k) != 1");
    if (z.re().sign() <= 0) throw std::domain_error("verify_F_transform: Re z must be > 0");

    const PrecisionContext work(ctx.bits() + kWorkGuard);
    const unsigned wb = work.bits();
    const std::int64_t H = inverse_for_transform(h, k);
    const Complex zw = z.rounded_to(wb);
    const Real pi_w = pi(wb);
    const Real k_real(k, wb);
    const Real k2 = k_real * k_real;

    const Complex w = exp_i_pi(make_fraction(2 * h, k), wb) * exp(Complex(-(pi_w * 2L * zw.re()) / k2, -(pi_w * 2L * zw.im()) / k2));
    const Complex inv_z = Complex(Real(1L, wb)) / zw;
    const Complex w_prime = exp_i_pi(make_fraction(2 * H, k), wb) * exp(Complex(-(pi_w * 2L * inv_z.re()), -(pi_w * 2L * inv_z.im())));

    const Complex lhs = eval_F(w, work);
    const Complex exponent = Complex(pi_w / 12L) * inv_z - Complex(pi_w / (k2 * 12L)) * zw;
    const Complex rhs = exp_i_pi(dedekind_sum(h, k).get(), wb) * sqrt(zw / Complex(k_real)) * exp(exponent) *
                        eval_F(w_prime, work);
    return abs(lhs - rhs).rounded_to(ctx.bits());
}

}  // namespace partfn
