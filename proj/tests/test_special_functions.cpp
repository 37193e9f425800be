#include <doctest.h>

#include "partfn/rational.hpp"
#include "partfn/special_functions.hpp"

using namespace partfn;

namespace {

Real rel_diff(const Real& a, const Real& b) { return abs(a - b) / abs(b); }

const char* const kSamplePoints[] = {"0.1", "0.5", "1", "2", "5", "10", "30"};

}  // namespace

TEST_SUITE("special-functions") {

TEST_CASE("precision context") {
    CHECK(PrecisionContext().bits() == 128);
    CHECK(PrecisionContext(64).bits() == 64);
    CHECK(PrecisionContext(64).widened(10).bits() == 74);
    CHECK_THROWS_AS(PrecisionContext(63), std::invalid_argument);
}

TEST_CASE("real arithmetic keeps the wider precision") {
    const Real a(1L, 64), b(3L, 200);
    const Real q = a / b;
    CHECK(q.bits() == 200);
    CHECK(q.to_scientific(10) == "3.333333333e-01");
    CHECK(Real(mpq_class(1, 4), 64).to_fixed(3) == "0.250");
    CHECK(Real(-2.5, 64).round_to_integer() == -2);  // nearest even
    CHECK(Real(3.5, 64).round_to_integer() == 4);
}

TEST_CASE("decimal parsing") {
    const Real big = Real::parse("123456789012345678901234567890", 128);
    CHECK(big.round_to_integer() == mpz_class("123456789012345678901234567890"));
    CHECK(Real::parse("-0.5", 64) == Real(-0.5, 64));
    CHECK(Real::parse("1e-3", 64) == Real(mpq_class(1, 1000), 64));
    CHECK_THROWS_AS(Real::parse("abc", 64), std::invalid_argument);
    CHECK_THROWS_AS(Real::parse("1.5x", 64), std::invalid_argument);
    CHECK_THROWS_AS(Real::parse("", 64), std::invalid_argument);
}

TEST_CASE("trigonometry of rational multiples of pi") {
    const unsigned b = 128;
    const Real tol = exp2i(-120, b);
    CHECK(cos_pi(0, b) == Real(1L, b));
    CHECK(cos_pi(1, b) == Real(-1L, b));
    CHECK(cos_pi(667, b) == Real(-1L, b));
    CHECK(cos_pi(make_fraction(1, 2), b).is_zero());
    CHECK(sin_pi(make_fraction(-1, 2), b) == Real(-1L, b));
    CHECK(abs(cos_pi(make_fraction(1, 3), b) - Real(0.5, b)) < tol);
    CHECK(abs(cos_pi(make_fraction(2002, 3), b) - Real(-0.5, b)) < tol);
    CHECK(reduce_mod2(make_fraction(-1, 3)) == make_fraction(5, 3));
    CHECK(reduce_mod2(7) == 1);
    for (int num = -50; num <= 50; ++num) {
        const mpq_class r = make_fraction(num, 17);
        const Real direct_c = cos(pi(b + 20) * Real(r, b + 20)).rounded_to(b);
        const Real direct_s = sin(pi(b + 20) * Real(r, b + 20)).rounded_to(b);
        REQUIRE(abs(cos_pi(r, b) - direct_c) < tol);
        REQUIRE(abs(sin_pi(r, b) - direct_s) < tol);
    }
}

TEST_CASE("complex helpers") {
    const unsigned b = 128;
    const Complex minus_one(Real(-1L, b), Real(0L, b));
    const Complex root = sqrt(minus_one);
    CHECK(abs(root.re()) < exp2i(-120, b));
    CHECK(abs(root.im() - Real(1L, b)) < exp2i(-120, b));
    const Complex z(Real(0.3, b), Real(-1.7, b));
    const Complex back = log(exp(z));
    CHECK(abs(back.re() - z.re()) < exp2i(-120, b));
    CHECK(abs(back.im() - z.im()) < exp2i(-120, b));
    const Complex e = exp_i_pi(make_fraction(1, 4), b);
    CHECK(abs(e.re() - e.im()) < exp2i(-120, b));
}

TEST_CASE("bessel series at zero and domain") {
    const PrecisionContext ctx(128);
    CHECK(bessel_i_series(1.5, Real(0L, 128), ctx).is_zero());
    CHECK(bessel_i_series(0.0, Real(0L, 128), ctx) == Real(1L, 128));
    CHECK_THROWS(bessel_i_series(1.5, Real(-1L, 128), ctx));
    CHECK_THROWS(bessel_i_series(-1.5, Real(1L, 128), ctx));
    CHECK_THROWS(bessel_i_3_2_closed(Real(0L, 128), ctx));
    CHECK_THROWS(bessel_i_3_2_closed(Real(-2L, 128), ctx));
}

TEST_CASE("I_{3/2}(1) = sqrt(2/pi)/e") {
    const PrecisionContext ctx(128);
    const Real expected = sqrt(Real(2L, 128) / pi(128)) / euler_e(128);
    CHECK(rel_diff(bessel_i_series(1.5, Real(1L, 128), ctx), expected) < exp2i(-118, 128));
    CHECK(rel_diff(bessel_i_3_2_closed(Real(1L, 128), ctx), expected) < exp2i(-118, 128));
    CHECK(bessel_i_series(1.5, Real(1L, 128), ctx).to_scientific(7) == "2.935253e-01");
}

TEST_CASE("series and closed form agree") {
    for (unsigned bits : {128U, 256U}) {
        const PrecisionContext ctx(bits);
        const Real tol = exp2i(-static_cast<long>(bits / 2), bits);
        for (const char* text : kSamplePoints) {
            const Real x = Real::parse(text, bits);
            INFO("x=" << text << " bits=" << bits);
            CHECK(rel_diff(bessel_i_series(1.5, x, ctx), bessel_i_3_2_closed(x, ctx)) < tol);
        }
    }
    const PrecisionContext ctx(128);
    const Real x10(10L, 128);
    CHECK(abs(bessel_i_series(1.5, x10, ctx) - bessel_i_3_2_closed(x10, ctx)) < Real(1e-20, 128));
}

TEST_CASE("other orders against MPFR and closed forms") {
    const PrecisionContext ctx(128);
    const Real x(2.5, 128);
    // I_{1/2}(x) = sqrt(2/(pi x)) sinh x
    const Real half = sqrt(Real(2L, 128) / (pi(128) * x)) * sinh(x);
    CHECK(rel_diff(bessel_i_series(0.5, x, ctx), half) < exp2i(-118, 128));
    // I_{-1/2}(x) = sqrt(2/(pi x)) cosh x
    const Real minus_half = sqrt(Real(2L, 128) / (pi(128) * x)) * cosh(x);
    CHECK(rel_diff(bessel_i_series(-0.5, x, ctx), minus_half) < exp2i(-118, 128));
    // I_0 and I_1 via J_n(ix): compare against the integer-order recurrence
    // I_0 - I_2 = (2/x) I_1.
    const Real i0 = bessel_i_series(0.0, x, ctx);
    const Real i1 = bessel_i_series(1.0, x, ctx);
    const Real i2 = bessel_i_series(2.0, x, ctx);
    CHECK(rel_diff(i0 - i2, i1 * Real(2L, 128) / x) < exp2i(-110, 128));
}

TEST_CASE("small-x behaviour of the closed form") {
    const PrecisionContext ctx(128);
    Real previous_gap(1L, 128);
    for (long e = 4; e <= 24; e += 4) {
        const Real x = exp2i(-e, 128);
        const Real leading = pow(x / 2L, Real(1.5, 128)) * Real(4L, 128) / (sqrt(pi(128)) * 3L);
        const Real gap = abs(bessel_i_3_2_closed(x, ctx) / leading - Real(1L, 128));
        CHECK(gap < previous_gap);
        previous_gap = gap;
    }
    CHECK(previous_gap < Real(1e-12, 128));
}

TEST_CASE("kernel inequality (u cosh u - sinh u)/u^2 <= u cosh u / 2") {
    const PrecisionContext ctx(128);
    for (int i = 1; i <= 200; ++i) {
        const Real u(make_fraction(i, 10), 128);
        REQUIRE(sinhc_derivative_kernel(u, ctx) <= u * cosh(u) / 2L);
        REQUIRE(sinhc_derivative_kernel(u, ctx).sign() > 0);
    }
    // Near zero the kernel tends to u/3.
    const Real tiny = exp2i(-40, 128);
    CHECK(rel_diff(sinhc_derivative_kernel(tiny, ctx), tiny / 3L) < exp2i(-70, 128));
}

TEST_CASE("doubling precision keeps the leading digits") {
    for (const char* text : kSamplePoints) {
        const Real a = bessel_i_series(1.5, Real::parse(text, 128), PrecisionContext(128));
        const Real b = bessel_i_series(1.5, Real::parse(text, 256), PrecisionContext(256));
        CHECK(a.to_scientific(15) == b.to_scientific(15));
    }
}

}  // TEST_SUITE
