#pragma once

#include "partfn/exact_partition.hpp"
#include "partfn/precision.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace partfn {

/// Leading term L(n) = exp(pi sqrt(2n/3)) / (4 n sqrt 3).
Real l_n(std::uint64_t n, const PrecisionContext& ctx);

struct AsymptoticRow {
    std::uint64_t n;
    PartitionValue p_n;
    Real l_n;
    /// (p(n) - L(n)) / p(n) * 100 at full precision.
    Real eps_percent;

    /// eps_percent rounded half away from zero to two decimals, e.g. "-14.53".
    std::string eps_display() const;
};

/// Rows for each n, computing any missing exact values into `cache`.
std::vector<AsymptoticRow> relative_error_table(const std::vector<std::uint64_t>& ns, PartitionCache& cache,
                                                const PrecisionContext& ctx);

/// The n grid of the reference table: 10, 50, 100, 200, 500, 1000, 2000,
/// 3000, ..., 10000, 12000, 15000.
const std::vector<std::uint64_t>& reference_table_ns();

/// zeta(3/2) from 10^6 direct terms plus an Euler-Maclaurin tail.
Real zeta_three_halves(const PrecisionContext& ctx);

/// (2 C pi^2 n / 3) exp(-(pi/2) sqrt(2n/3)) with C = zeta(3/2) - 1; bounds
/// |p(n) - R_1(n)| / L(n).
Real tail_ratio_bound(std::uint64_t n, const PrecisionContext& ctx);

}  // namespace partfn
