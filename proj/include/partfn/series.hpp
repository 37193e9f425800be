#pragma once

#include "partfn/exact_partition.hpp"
#include "partfn/precision.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace partfn {

/// alpha(n) = pi sqrt((2/3)(n - 1/24)).
struct AlphaValue {
    std::uint64_t n;
    Real alpha;
};

AlphaValue alpha(std::uint64_t n, const PrecisionContext& ctx);

/// Default working precision for the series at n:
/// max(64, ceil(alpha(n) log2 e) + 64) bits.
unsigned series_precision_bits(std::uint64_t n);

struct SeriesTerm {
    std::int64_t k;
    Real a_k;
    Real r_k;
};

/// R_k(n) = pi sqrt(k) / (3 sqrt(2) sqrt(n - 1/24)) * A_k(n)
///          * ((alpha/k) cosh(alpha/k) - sinh(alpha/k)) / alpha^2.
SeriesTerm r_k(std::uint64_t n, std::int64_t k, const PrecisionContext& ctx);

struct SeriesOptions {
    std::optional<std::int64_t> initial_terms;
    /// Raises the working precision; never lowers it below the default policy.
    std::optional<unsigned> prec;
};

struct SeriesReport {
    std::uint64_t n;
    unsigned prec;
    std::vector<SeriesTerm> terms;
    Real partial_sum;
    PartitionValue rounded;
    Real gap;
    std::int64_t n_terms_used;
};

/// p(n) from the convergent series with certified rounding.
///
/// Starts at N = max(5, ceil(2 sqrt n)) terms and doubles N (adding 32 bits of
/// precision on each retry) until the partial sum at 2N lies within 1/4 of an
/// integer, differs from the sum at N by less than 1/4, and both round to the
/// same integer. Throws CertificationError if N would exceed 64 sqrt(n).
SeriesReport p_series(std::uint64_t n, const SeriesOptions& opts = {});

/// log(C / sqrt(N)) with
/// C = 2^{7/4} (F(e^{-pi/48}) - 1) e^{2 pi n} + 2^{3/4} pi e^{pi/12 + 2 pi n},
/// the absolute-convergence bound on the tail after N terms. Evaluated in log
/// space; e^{2 pi n} is never formed.
Real remainder_bound_log(std::uint64_t n, std::uint64_t terms, const PrecisionContext& ctx);

/// F(e^{-pi/48}) - 1.
Real remainder_constant_c0(const PrecisionContext& ctx);

}  // namespace partfn
