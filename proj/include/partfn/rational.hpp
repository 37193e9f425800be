#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace partfn {

/// num/den as a canonical mpq_class. den must be nonzero.
inline mpq_class make_fraction(const mpz_class& num, const mpz_class& den) {
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

/// Exact fraction num/den in canonical form: gcd(|num|, den) = 1, den >= 1.
class ExactRational {
public:
    ExactRational() = default;
    ExactRational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    ExactRational(const mpz_class& num, const mpz_class& den);
    explicit ExactRational(mpq_class value);

    /// Parses "num/den" or an integer literal.
    static ExactRational parse(std::string_view text);

    mpz_class num() const { return value_.get_num(); }
    mpz_class den() const { return value_.get_den(); }
    const mpq_class& get() const noexcept { return value_; }

    /// Always "num/den", including den = 1.
    std::string to_string() const;

    ExactRational& operator+=(const ExactRational& rhs);
    ExactRational& operator-=(const ExactRational& rhs);
    ExactRational& operator*=(const ExactRational& rhs);
    ExactRational& operator/=(const ExactRational& rhs);
    ExactRational operator-() const { return ExactRational(mpq_class(-value_)); }

    friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
    friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
    friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
    friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }

    friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_;
};

/// A point re + i*im of the complex plane with exact rational coordinates.
struct ExactComplex {
    ExactRational re;
    ExactRational im;

    ExactRational norm_squared() const { return re * re + im * im; }

    friend ExactComplex operator+(const ExactComplex& a, const ExactComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ExactComplex operator-(const ExactComplex& a, const ExactComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend bool operator==(const ExactComplex&, const ExactComplex&) = default;
};

}  // namespace partfn
