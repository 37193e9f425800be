// Acceptance checks: one PASS/FAIL line per criterion.
#include "partfn/asymptotics.hpp"
#include "partfn/dedekind.hpp"
#include "partfn/exact_partition.hpp"
#include "partfn/farey.hpp"
#include "partfn/series.hpp"
#include "partfn/special_functions.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace partfn;

namespace {

struct Outcome {
    bool ok;
    std::string detail;
};

const std::vector<std::pair<std::uint64_t, const char*>> kTable2 = {
    {10, "42"},
    {50, "204226"},
    {100, "190569292"},
    {200, "3972999029388"},
    {500, "2300165032574323995027"},
    {1000, "24061467864032622473692149727991"},
    {2000, "4720819175619413888601432406799959512200344166"},
    {3000, "496025142797537184410324879054927095334462742231683423624"},
    {4000, "1024150064776551375119256307915896842122498030313150910234889093895"},
    {5000, "169820168825442121851975101689306431361757683049829233322203824652329144349"},
    {6000, "4671727531970209092971024643973690643364629153270037033856605528925072405349246129"},
    {7000, "32856930803440615786280925635924166861950151574532240659699032157432236394374450791229199"},
    {8000, "78360264351568349490593145013364599719010769352985864331118600209417827764524450990388402844164"},
    {9000, "77133638117808884907320791427403134961639798322072034262647713694605367979684296948790335590435626459"},
    {10000, "36167251325636293988820471890953695495016030339315650422081868605887952568754066420592310556052906916435144"},
    {12000, "1294107667757322067493842620367467386268131006205640080126511905905017060058126929125027069901623662251809128853180610"},
    {15000, "262633793640379084137102319165906698802932055965437249406588587971375120081791056718639088570913175942816125969709246029351672130266"},
};

const std::vector<std::pair<std::uint64_t, double>> kTable1 = {
    {10, -14.53}, {50, -6.54},  {100, -4.57},  {200, -3.2},   {500, -2.01},  {1000, -1.42},
    {2000, -1},   {3000, -0.81}, {4000, -0.7},  {5000, -0.63}, {6000, -0.57}, {7000, -0.53},
    {8000, -0.5}, {9000, -0.47}, {10000, -0.44}, {12000, -0.41}, {15000, -0.36},
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Outcome exact_table() {
    const auto start = std::chrono::steady_clock::now();
    PartitionCache cache;
    int mismatches = 0;
    for (const auto& [n, digits] : kTable2) {
        if (p_exact(n, cache).get_str() != digits) {
            ++mismatches;
            std::printf("    mismatch at n=%llu\n", static_cast<unsigned long long>(n));
        }
    }
    const double t = seconds_since(start);
    std::ostringstream d;
    d << kTable2.size() << " rows, " << mismatches << " mismatches, " << t << " s (budget 30 s)";
    return {mismatches == 0 && t < 30.0, d.str()};
}

Outcome oracle_equivalence() {
    const auto start = std::chrono::steady_clock::now();
    PartitionCache cache;
    cache.extend_to(2000);
    const auto oracle = p_oracle_dp_table(2000);
    std::uint64_t first_bad = 0;
    bool ok = true;
    for (std::uint64_t n = 0; n <= 2000 && ok; ++n) {
        if (cache.at(n) != oracle[n]) {
            ok = false;
            first_bad = n;
        }
    }
    const double t = seconds_since(start);
    std::ostringstream d;
    d << "n <= 2000, " << (ok ? "all equal" : "first mismatch at n=" + std::to_string(first_bad)) << ", " << t
      << " s (budget 60 s)";
    return {ok && t < 60.0, d.str()};
}

Outcome series_certification() {
    const auto start = std::chrono::steady_clock::now();
    std::vector<std::uint64_t> ns;
    for (std::uint64_t n = 1; n <= 50; ++n) ns.push_back(n);
    for (std::uint64_t n : {100, 200, 500, 1000, 2000}) ns.push_back(n);
    PartitionCache cache;
    cache.extend_to(2000);
    const Real quarter(0.25, 64);
    int failures = 0;
    double worst_gap = 0;
    for (std::uint64_t n : ns) {
        const SeriesReport r = p_series(n);
        const bool ok = r.rounded == cache.at(n) && r.gap < quarter;
        if (!ok) {
            ++failures;
            std::printf("    n=%llu rounded=%s gap=%s\n", static_cast<unsigned long long>(n), r.rounded.get_str().c_str(),
                        r.gap.to_scientific(6).c_str());
        }
        worst_gap = std::max(worst_gap, r.gap.to_double());
    }
    const double t = seconds_since(start);
    std::ostringstream d;
    d << ns.size() << " values, " << failures << " failures, max gap " << worst_gap << ", " << t
      << " s (budget 60 s)";
    return {failures == 0 && t < 60.0, d.str()};
}

Outcome asymptotic_errors() {
    PartitionCache cache;
    std::vector<std::uint64_t> ns;
    for (const auto& row : kTable1) ns.push_back(row.first);
    const auto rows = relative_error_table(ns, cache, PrecisionContext(128));
    double worst = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const double shown = std::stod(rows[i].eps_display());
        const double dev = std::abs(shown - kTable1[i].second);
        worst = std::max(worst, dev);
        if (dev > 0.01 + 1e-9) {
            std::printf("    n=%llu eps=%s expected %.2f\n", static_cast<unsigned long long>(rows[i].n),
                        rows[i].eps_display().c_str(), kTable1[i].second);
        }
    }
    std::ostringstream d;
    d << rows.size() << " rows, max |deviation| " << worst << " (tolerance 0.01)";
    return {worst <= 0.01 + 1e-9, d.str()};
}

Outcome dedekind_suite() {
    int bad_exact = 0;
    int pairs = 0;
    for (long k = 2; k <= 50; ++k) {
        for (long h = 1; h < k; ++h) {
            if (std::gcd(h, k) != 1) continue;
            ++pairs;
            if (dedekind_reciprocity_defect(h, k) != ExactRational(0)) ++bad_exact;
            if (dedekind_sum(k - h, k) != -dedekind_sum(h, k)) ++bad_exact;
        }
    }
    const PrecisionContext ctx(128);
    const Real slack = exp2i(-64, 128);
    int bad_bound = 0;
    double worst_ratio = 0;
    for (long k = 1; k <= 100; ++k) {
        for (std::uint64_t n = 1; n <= 50; ++n) {
            const Real v = abs(a_k(k, n, ctx).value);
            if (v > Real(k, 128) + slack) ++bad_bound;
            worst_ratio = std::max(worst_ratio, v.to_double() / static_cast<double>(k));
        }
    }
    std::ostringstream d;
    d << pairs << " coprime pairs, " << bad_exact << " exact failures; |A_k(n)| <= k over k<=100, n<=50: "
      << bad_bound << " violations (max |A_k|/k = " << worst_ratio << ")";
    return {bad_exact == 0 && bad_bound == 0, d.str()};
}

std::int64_t phi(std::int64_t n) {
    std::int64_t result = n;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

Outcome farey_suite() {
    int failures = 0;
    std::size_t previous = 0;
    for (std::int64_t n = 1; n <= 100; ++n) {
        std::vector<Fraction> brute;
        for (std::int64_t k = 1; k <= n; ++k) {
            for (std::int64_t h = 0; h <= k; ++h) {
                if (std::gcd(h, k) == 1) brute.push_back({h, k});
            }
        }
        std::sort(brute.begin(), brute.end(), [](const Fraction& a, const Fraction& b) { return a.h * b.k < b.h * a.k; });
        const FareySequence seq = farey(n);
        if (seq.entries != brute) ++failures;
        for (std::size_t i = 0; i + 1 < seq.entries.size(); ++i) {
            if (farey_determinant(seq.entries[i], seq.entries[i + 1]) != 1) ++failures;
        }
        if (n > 1 && static_cast<std::int64_t>(seq.entries.size() - previous) != phi(n)) ++failures;
        previous = seq.entries.size();
    }
    int off_circle = 0;
    for (std::int64_t n = 1; n <= 30; ++n) {
        for (const TangencyPair& arc : path(n)) {
            const FordCircle c = ford_circle(arc.frac);
            const ExactRational r2 = c.radius * c.radius;
            if ((arc.alpha1 - c.center).norm_squared() != r2) ++off_circle;
            if ((arc.alpha2 - c.center).norm_squared() != r2) ++off_circle;
        }
    }
    int chord_failures = 0;
    std::size_t chord_count = 0;
    for (std::int64_t n = 1; n <= 50; ++n) {
        for (const WChord& c : chords(n)) {
            ++chord_count;
            if (!chord_bounds_check(c)) ++chord_failures;
        }
    }
    std::ostringstream d;
    d << "farey/det/phi failures " << failures << " (N<=100); off-circle tangency points " << off_circle
      << " (N<=30); chord bound failures " << chord_failures << " of " << chord_count << " (N<=50)";
    return {failures == 0 && off_circle == 0 && chord_failures == 0, d.str()};
}

Outcome bessel_suite() {
    const PrecisionContext ctx(128);
    double worst = 0;
    for (const char* text : {"0.1", "0.5", "1", "2", "5", "10", "30"}) {
        const Real x = Real::parse(text, 128);
        const Real s = bessel_i_series(1.5, x, ctx);
        const Real c = bessel_i_3_2_closed(x, ctx);
        worst = std::max(worst, (abs(s - c) / abs(c)).to_double());
    }
    const Real expected = sqrt(Real(2L, 128) / pi(128)) / euler_e(128);
    const double at_one = abs(bessel_i_series(1.5, Real(1L, 128), ctx) - expected).to_double();
    std::ostringstream d;
    d << "max relative series/closed difference " << worst << " (tolerance 1e-12); |I(1) - sqrt(2/pi)/e| = " << at_one;
    return {worst <= 1e-12 && at_one <= 1e-12, d.str()};
}

Outcome eta_suite() {
    constexpr unsigned kBits = 128;
    constexpr int kSamples = 24;
    const PrecisionContext ctx(kBits);
    std::mt19937_64 rng(20240917);
    const auto uniform = [&](long lo, long hi) {
        return mpq_class(std::uniform_int_distribution<long>(lo, hi)(rng), 1000);
    };
    const auto integer = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };

    double worst_eta = 0;
    for (int i = 0; i < kSamples; ++i) {
        long c = 0, d = 0;
        do {
            c = integer(1, 5);
            d = integer(-6, 6);
        } while (std::gcd(c, d) != 1);
        const ModularMatrix m = complete_modular_matrix(c, d);
        mpq_class tx = uniform(-1000, 1000), ty = uniform(500, 2000);
        tx.canonicalize();
        ty.canonicalize();
        const Complex tau(Real(tx, kBits), Real(ty, kBits));
        worst_eta = std::max(worst_eta, verify_eta(m, tau, ctx).residual.to_double());
    }
    double worst_f = 0;
    for (int i = 0; i < kSamples; ++i) {
        long h = 0, k = 0;
        do {
            k = integer(1, 7);
            h = integer(1, k);
        } while (std::gcd(h, k) != 1);
        mpq_class zx = uniform(400, 2500), zy = uniform(-1200, 1200);
        zx.canonicalize();
        zy.canonicalize();
        const Complex z(Real(zx, kBits), Real(zy, kBits));
        worst_f = std::max(worst_f, verify_F_transform(h, k, z, ctx).to_double());
    }
    std::ostringstream d;
    d << kSamples << " eta cases, max residual " << worst_eta << "; " << kSamples
      << " F-transform cases, max residual " << worst_f << " (tolerance 1e-10 at 128 bits)";
    return {worst_eta < 1e-10 && worst_f < 1e-10, d.str()};
}

Outcome tail_behaviour() {
    PartitionCache cache;
    cache.extend_to(200);
    int violations = 0;
    double worst_fraction = 0;
    for (std::uint64_t n = 10; n <= 200; ++n) {
        const PrecisionContext work(series_precision_bits(n) + 64);
        const Real r1 = r_k(n, 1, work).r_k;
        const Real ratio = abs(Real(cache.at(n), work.bits()) - r1) / l_n(n, work);
        const Real bound = tail_ratio_bound(n, work);
        if (ratio > bound) ++violations;
        worst_fraction = std::max(worst_fraction, (ratio / bound).to_double());
    }
    const PrecisionContext big(series_precision_bits(10000));
    const double dev = abs(r_k(10000, 1, big).r_k / l_n(10000, big) - Real(1L, big.bits())).to_double();
    std::ostringstream d;
    d << "n in 10..200: " << violations << " bound violations (max ratio/bound " << worst_fraction
      << "); |R_1(10^4)/L(10^4) - 1| = " << dev << " (tolerance 1e-2)";
    return {violations == 0 && dev < 1e-2, d.str()};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"exact engine reproduces the reference p(n) table", exact_table},
        {"recurrence equals the coin-counting oracle", oracle_equivalence},
        {"series rounding is certified and exact", series_certification},
        {"asymptotic relative errors match the reference table", asymptotic_errors},
        {"Dedekind sums and A_k(n) bounds", dedekind_suite},
        {"Farey sequences and Ford geometry", farey_suite},
        {"Bessel series against the closed form", bessel_suite},
        {"eta and F transformation residuals", eta_suite},
        {"tail behaviour of the leading term", tail_behaviour},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome result{false, ""};
        try {
            result = criteria[i].second();
        } catch (const std::exception& e) {
            result = {false, std::string("exception: ") + e.what()};
        }
        if (!result.ok) ++failed;
        std::printf("[%s] criterion %zu: %s -- %s\n", result.ok ? "PASS" : "FAIL", i + 1, criteria[i].first,
                    result.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
