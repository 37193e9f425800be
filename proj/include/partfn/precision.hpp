#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>
#include <utility>

namespace partfn {

/// Working precision for floating evaluation. Rounding is always
/// round-to-nearest-even.
class PrecisionContext {
public:
    static constexpr unsigned kMinBits = 64;

    explicit PrecisionContext(unsigned bits = 128);

    unsigned bits() const noexcept { return bits_; }

    /// Same context with `extra` additional bits.
    PrecisionContext widened(unsigned extra) const { return PrecisionContext(bits_ + extra); }

    friend bool operator==(const PrecisionContext&, const PrecisionContext&) = default;

private:
    unsigned bits_;
};

/// An MPFR value that owns its precision. Binary operations produce a result
/// at the larger of the two operand precisions.
class Real {
public:
    explicit Real(unsigned bits = PrecisionContext::kMinBits);
    Real(int value, unsigned bits) : Real(static_cast<long>(value), bits) {}
    Real(long value, unsigned bits);
    Real(double value, unsigned bits);
    Real(const mpz_class& value, unsigned bits);
    Real(const mpq_class& value, unsigned bits);

    /// Parses a decimal string ("12", "-0.5", "1e-3"). Throws
    /// std::invalid_argument on malformed input.
    static Real parse(std::string_view text, unsigned bits);

    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    unsigned bits() const noexcept { return static_cast<unsigned>(mpfr_get_prec(value_)); }
    mpfr_srcptr get() const noexcept { return value_; }
    mpfr_ptr get() noexcept { return value_; }

    /// Copy rounded to a different precision.
    Real rounded_to(unsigned bits) const;

    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
    mpz_class round_to_integer() const;
    int sign() const noexcept { return mpfr_sgn(value_); }
    bool is_finite() const noexcept { return mpfr_number_p(value_) != 0; }
    bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }

    /// Scientific notation with `significant` digits, e.g. "1.2345e+02".
    std::string to_scientific(int significant) const;
    /// Fixed notation with `decimals` digits after the point.
    std::string to_fixed(int decimals) const;

    Real& operator+=(const Real& rhs);
    Real& operator-=(const Real& rhs);
    Real& operator*=(const Real& rhs);
    Real& operator/=(const Real& rhs);
    Real operator-() const;

    friend Real operator+(Real lhs, const Real& rhs) { return lhs += rhs; }
    friend Real operator-(Real lhs, const Real& rhs) { return lhs -= rhs; }
    friend Real operator*(Real lhs, const Real& rhs) { return lhs *= rhs; }
    friend Real operator/(Real lhs, const Real& rhs) { return lhs /= rhs; }
    friend Real operator*(Real lhs, long rhs);
    friend Real operator/(Real lhs, long rhs);

    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
    friend std::partial_ordering operator<=>(const Real& a, const Real& b);

private:
    mpfr_t value_;
};

Real pi(unsigned bits);
Real euler_e(unsigned bits);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real log2(const Real& x);
Real cosh(const Real& x);
Real sinh(const Real& x);
Real cos(const Real& x);
Real sin(const Real& x);
Real abs(const Real& x);
Real atan2(const Real& y, const Real& x);
Real pow(const Real& base, const Real& exponent);
/// 2^e exactly.
Real exp2i(long e, unsigned bits);

/// cos(pi * r) and sin(pi * r) for an exact rational r. The argument is first
/// reduced modulo 2 in exact arithmetic.
Real cos_pi(const mpq_class& r, unsigned bits);
Real sin_pi(const mpq_class& r, unsigned bits);

/// Reduces r into [0, 2) exactly.
mpq_class reduce_mod2(const mpq_class& r);

class Complex {
public:
    Complex() = default;
    explicit Complex(Real re) : re_(std::move(re)), im_(0L, re_.bits()) {}
    Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}

    const Real& re() const noexcept { return re_; }
    const Real& im() const noexcept { return im_; }
    unsigned bits() const noexcept { return re_.bits() > im_.bits() ? re_.bits() : im_.bits(); }

    Complex& operator+=(const Complex& rhs);
    Complex& operator-=(const Complex& rhs);
    Complex& operator*=(const Complex& rhs);
    Complex& operator/=(const Complex& rhs);
    Complex operator-() const { return {-re_, -im_}; }

    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
    friend Complex operator/(Complex a, const Complex& b) { return a /= b; }

    Complex rounded_to(unsigned bits) const { return {re_.rounded_to(bits), im_.rounded_to(bits)}; }

private:
    Real re_;
    Real im_;
};

Real abs(const Complex& z);
Real arg(const Complex& z);
Complex exp(const Complex& z);
/// Principal branch.
Complex log(const Complex& z);
/// Principal branch.
Complex sqrt(const Complex& z);
/// exp(i * pi * r) for an exact rational r.
Complex exp_i_pi(const mpq_class& r, unsigned bits);

}  // namespace partfn
