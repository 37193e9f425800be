#include "partfn/precision.hpp"

#include <stdexcept>
#include <utility>

namespace partfn {

namespace {

constexpr mpfr_rnd_t kRound = MPFR_RNDN;
constexpr unsigned kTrigGuard = 16;

void widen_to(mpfr_ptr x, mpfr_prec_t bits) {
    if (mpfr_get_prec(x) < bits) mpfr_prec_round(x, bits, kRound);
}

std::string take_string(char* s) {
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

template <typename Fn>
Real unary(const Real& x, Fn fn) {
    Real out(x.bits());
    fn(out.get(), x.get(), kRound);
    return out;
}

}  // namespace

PrecisionContext::PrecisionContext(unsigned bits) : bits_(bits) {
    if (bits < kMinBits) {
        throw std::invalid_argument("precision must be at least " + std::to_string(kMinBits) +
                                    " bits, got " + std::to_string(bits));
    }
}

Real::Real(unsigned bits) {
    mpfr_init2(value_, bits);
    mpfr_set_zero(value_, 1);
}

Real::Real(long value, unsigned bits) {
    mpfr_init2(value_, bits);
    mpfr_set_si(value_, value, kRound);
}

Real::Real(double value, unsigned bits) {
    mpfr_init2(value_, bits);
    mpfr_set_d(value_, value, kRound);
}

Real::Real(const mpz_class& value, unsigned bits) {
    mpfr_init2(value_, bits);
    mpfr_set_z(value_, value.get_mpz_t(), kRound);
}

Real::Real(const mpq_class& value, unsigned bits) {
    mpfr_init2(value_, bits);
    mpfr_set_q(value_, value.get_mpq_t(), kRound);
}

Real Real::parse(std::string_view text, unsigned bits) {
    Real out(bits);
    const std::string owned(text);
    if (owned.empty() || mpfr_set_str(out.value_, owned.c_str(), 10, kRound) != 0) {
        throw std::invalid_argument("not a decimal number: '" + owned + "'");
    }
    return out;
}

Real::Real(const Real& other) {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, kRound);
}

Real::Real(Real&& other) noexcept {
    // Leave the source as a valid minimal-precision zero.
    mpfr_init2(value_, PrecisionContext::kMinBits);
    mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
    if (this != &other) {
        mpfr_set_prec(value_, mpfr_get_prec(other.value_));
        mpfr_set(value_, other.value_, kRound);
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept {
    mpfr_swap(value_, other.value_);
    return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::rounded_to(unsigned bits) const {
    Real out(bits);
    mpfr_set(out.value_, value_, kRound);
    return out;
}

mpz_class Real::round_to_integer() const {
    if (!is_finite()) throw std::domain_error("cannot round a non-finite value");
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), value_, kRound);
    return z;
}

std::string Real::to_scientific(int significant) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Re", significant > 1 ? significant - 1 : 0, value_);
    return take_string(s);
}

std::string Real::to_fixed(int decimals) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rf", decimals, value_);
    return take_string(s);
}

Real& Real::operator+=(const Real& rhs) {
    widen_to(value_, mpfr_get_prec(rhs.value_));
    mpfr_add(value_, value_, rhs.value_, kRound);
    return *this;
}

Real& Real::operator-=(const Real& rhs) {
    widen_to(value_, mpfr_get_prec(rhs.value_));
    mpfr_sub(value_, value_, rhs.value_, kRound);
    return *this;
}

Real& Real::operator*=(const Real& rhs) {
    widen_to(value_, mpfr_get_prec(rhs.value_));
    mpfr_mul(value_, value_, rhs.value_, kRound);
    return *this;
}

Real& Real::operator/=(const Real& rhs) {
    widen_to(value_, mpfr_get_prec(rhs.value_));
    mpfr_div(value_, value_, rhs.value_, kRound);
    return *this;
}

Real Real::operator-() const {
    Real out(*this);
    mpfr_neg(out.value_, out.value_, kRound);
    return out;
}

Real operator*(Real lhs, long rhs) {
    mpfr_mul_si(lhs.value_, lhs.value_, rhs, kRound);
    return lhs;
}

Real operator/(Real lhs, long rhs) {
    mpfr_div_si(lhs.value_, lhs.value_, rhs, kRound);
    return lhs;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
    if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
    const int c = mpfr_cmp(a.value_, b.value_);
    if (c < 0) return std::partial_ordering::less;
    if (c > 0) return std::partial_ordering::greater;
    return std::partial_ordering::equivalent;
}

Real pi(unsigned bits) {
    Real out(bits);
    mpfr_const_pi(out.get(), kRound);
    return out;
}

Real euler_e(unsigned bits) { return exp(Real(1L, bits)); }

Real sqrt(const Real& x) { return unary(x, mpfr_sqrt); }
Real exp(const Real& x) { return unary(x, mpfr_exp); }
Real log(const Real& x) { return unary(x, mpfr_log); }
Real log2(const Real& x) { return unary(x, mpfr_log2); }
Real cosh(const Real& x) { return unary(x, mpfr_cosh); }
Real sinh(const Real& x) { return unary(x, mpfr_sinh); }
Real cos(const Real& x) { return unary(x, mpfr_cos); }
Real sin(const Real& x) { return unary(x, mpfr_sin); }
Real abs(const Real& x) { return unary(x, mpfr_abs); }

Real atan2(const Real& y, const Real& x) {
    Real out(y.bits() > x.bits() ? y.bits() : x.bits());
    mpfr_atan2(out.get(), y.get(), x.get(), kRound);
    return out;
}

Real pow(const Real& base, const Real& exponent) {
    Real out(base.bits() > exponent.bits() ? base.bits() : exponent.bits());
    mpfr_pow(out.get(), base.get(), exponent.get(), kRound);
    return out;
}

Real exp2i(long e, unsigned bits) {
    Real out(1L, bits);
    mpfr_mul_2si(out.get(), out.get(), e, kRound);
    return out;
}

mpq_class reduce_mod2(const mpq_class& r) {
    // r - 2 * floor(r / 2)
    mpz_class twice_den = 2 * r.get_den();
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), twice_den.get_mpz_t());
    mpq_class out = r - mpq_class(2 * q);
    out.canonicalize();
    return out;
}

Real cos_pi(const mpq_class& r, unsigned bits) {
    mpq_class t = reduce_mod2(r);
    if (t > 1) t = 2 - t;  // cos(pi t) = cos(pi (2 - t))
    bool negate = false;
    if (t > mpq_class(1, 2)) {  // cos(pi t) = -cos(pi (1 - t))
        t = 1 - t;
        negate = true;
    }
    // t now lies in [0, 1/2].
    Real out(bits);
    if (t == 0) {
        mpfr_set_ui(out.get(), 1, kRound);
    } else if (t == mpq_class(1, 2)) {
        mpfr_set_zero(out.get(), 1);
    } else {
        const unsigned work = bits + kTrigGuard;
        Real angle = pi(work) * Real(t, work);
        out = cos(angle).rounded_to(bits);
    }
    return negate ? -out : out;
}

Real sin_pi(const mpq_class& r, unsigned bits) { return cos_pi(r - mpq_class(1, 2), bits); }

Complex& Complex::operator+=(const Complex& rhs) {
    re_ += rhs.re_;
    im_ += rhs.im_;
    return *this;
}

Complex& Complex::operator-=(const Complex& rhs) {
    re_ -= rhs.re_;
    im_ -= rhs.im_;
    return *this;
}

Complex& Complex::operator*=(const Complex& rhs) {
    Real re = re_ * rhs.re_ - im_ * rhs.im_;
    Real im = re_ * rhs.im_ + im_ * rhs.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Complex& Complex::operator/=(const Complex& rhs) {
    const Real denom = rhs.re_ * rhs.re_ + rhs.im_ * rhs.im_;
    Real re = (re_ * rhs.re_ + im_ * rhs.im_) / denom;
    Real im = (im_ * rhs.re_ - re_ * rhs.im_) / denom;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Real abs(const Complex& z) {
    Real out(z.bits());
    mpfr_hypot(out.get(), z.re().get(), z.im().get(), kRound);
    return out;
}

Real arg(const Complex& z) { return atan2(z.im(), z.re()); }

Complex exp(const Complex& z) {
    const Real modulus = exp(z.re());
    return {modulus * cos(z.im()), modulus * sin(z.im())};
}

Complex log(const Complex& z) { return {log(abs(z)), arg(z)}; }

Complex sqrt(const Complex& z) {
    // sqrt(z) = sqrt((|z| + x) / 2) + i sign(y) sqrt((|z| - x) / 2)
    const Real r = abs(z);
    Real re = sqrt((r + z.re()) / 2L);
    Real im = sqrt((r - z.re()) / 2L);
    if (z.im().sign() < 0) im = -im;
    return {std::move(re), std::move(im)};
}

Complex exp_i_pi(const mpq_class& r, unsigned bits) { return {cos_pi(r, bits), sin_pi(r, bits)}; }

}  // namespace partfn
