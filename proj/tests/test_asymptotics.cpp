#include <doctest.h>

#include "partfn/asymptotics.hpp"
#include "partfn/rational.hpp"
#include "partfn/series.hpp"

using namespace partfn;

TEST_SUITE("asymptotics") {

TEST_CASE("leading term") {
    const PrecisionContext ctx(128);
    const Real l10 = l_n(10, ctx);
    CHECK(l10.to_scientific(3) == "4.81e+01");
    const Real direct = exp(pi(128) * sqrt(Real(make_fraction(20, 3), 128))) / (sqrt(Real(3L, 128)) * 40L);
    CHECK(abs(l10 - direct) < exp2i(-115, 128));
    for (std::uint64_t n = 1; n <= 100; ++n) REQUIRE(l_n(n, ctx).sign() > 0);
    // L(400)/L(100) = exp(pi sqrt(2/3) * 10) / 4
    const Real ratio = l_n(400, ctx) / l_n(100, ctx);
    const Real expected = exp(pi(128) * sqrt(Real(make_fraction(2, 3), 128)) * 10L) / 4L;
    CHECK(abs(ratio / expected - Real(1L, 128)) < exp2i(-110, 128));
    CHECK_THROWS(l_n(0, ctx));
}

TEST_CASE("relative error rows") {
    PartitionCache cache;
    const auto rows = relative_error_table({10, 100, 1000}, cache, PrecisionContext(128));
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].eps_display() == "-14.53");
    CHECK(rows[1].eps_display() == "-4.57");
    CHECK(rows[2].eps_display() == "-1.42");
    CHECK(rows[0].p_n == 42);
    CHECK(cache.max_n() >= 1000);
    for (const auto& r : rows) {
        CHECK(r.eps_percent.is_finite());
        const Real recomputed = (Real(r.p_n, 128) - r.l_n) / Real(r.p_n, 128) * 100L;
        CHECK(abs(recomputed - r.eps_percent) < exp2i(-100, 128));
    }
    CHECK(relative_error_table({}, cache, PrecisionContext(128)).empty());
}

TEST_CASE("display rounding is half away from zero") {
    AsymptoticRow row{1, 1, Real(1L, 128), Real(make_fraction(-5, 1000), 128)};
    CHECK(row.eps_display() == "-0.01");
    row.eps_percent = Real(make_fraction(5, 1000), 128);
    CHECK(row.eps_display() == "0.01");
    row.eps_percent = Real(make_fraction(-3, 1000), 128);
    CHECK(row.eps_display() == "0.00");
    row.eps_percent = Real(make_fraction(-3199, 1000), 128);
    CHECK(row.eps_display() == "-3.20");
    row.eps_percent = Real(12L, 128);
    CHECK(row.eps_display() == "12.00");
}

TEST_CASE("error shrinks across the reference grid and stays negative") {
    PartitionCache cache;
    const auto rows = relative_error_table(reference_table_ns(), cache, PrecisionContext(128));
    REQUIRE(rows.size() == 17);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        REQUIRE(rows[i].eps_percent.sign() < 0);
        if (i > 0) REQUIRE(abs(rows[i].eps_percent) < abs(rows[i - 1].eps_percent));
    }
}

TEST_CASE("zeta(3/2) against MPFR") {
    const PrecisionContext ctx(128);
    Real reference(128);
    Real s(1.5, 128);
    mpfr_zeta(reference.get(), s.get(), MPFR_RNDN);
    CHECK(abs(zeta_three_halves(ctx) - reference) < exp2i(-110, 128));
    CHECK(zeta_three_halves(ctx).bits() == 128);
}

TEST_CASE("tail bound") {
    const PrecisionContext ctx(128);
    for (std::uint64_t n = 10; n < 400; ++n) REQUIRE(tail_ratio_bound(n + 1, ctx) < tail_ratio_bound(n, ctx));
    CHECK(tail_ratio_bound(10000, ctx) < tail_ratio_bound(100, ctx) * Real(1e-6, 128));

    PartitionCache cache;
    cache.extend_to(200);
    for (std::uint64_t n = 10; n <= 200; ++n) {
        const unsigned bits = series_precision_bits(n) + 64;
        const PrecisionContext work(bits);
        const Real r1 = r_k(n, 1, work).r_k;
        const Real ratio = abs(Real(cache.at(n), bits) - r1) / l_n(n, work);
        INFO("n=" << n);
        REQUIRE(ratio <= tail_ratio_bound(n, work));
    }
}

TEST_CASE("R_1 / L tends to 1") {
    const PrecisionContext ctx(series_precision_bits(10000));
    const Real ratio = r_k(10000, 1, ctx).r_k / l_n(10000, ctx);
    CHECK(abs(ratio - Real(1L, ctx.bits())) < Real(1e-2, 64));
}

}  // TEST_SUITE
