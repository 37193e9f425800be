#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

namespace partfn {

/// p(n) as an exact nonnegative integer.
using PartitionValue = mpz_class;

/// The generalized pentagonal numbers for one index k >= 1:
/// first = (3k^2 - k)/2, second = (3k^2 + k)/2.
struct PentagonalPair {
    std::uint64_t k;
    std::uint64_t first;
    std::uint64_t second;

    friend bool operator==(const PentagonalPair&, const PentagonalPair&) = default;
};

/// Throws std::invalid_argument for k = 0.
PentagonalPair pentagonal(std::uint64_t k);

/// Values p(0), p(1), ..., p(max_n), contiguous from 0.
class PartitionCache {
public:
    /// A cache holding only p(0) = 1.
    PartitionCache();

    /// Validates that values[0] == 1; the vector is taken as p(0..size-1).
    explicit PartitionCache(std::vector<PartitionValue> values,
                            std::optional<std::filesystem::path> source = std::nullopt);

    std::size_t size() const noexcept { return values_.size(); }
    std::uint64_t max_n() const noexcept { return values_.size() - 1; }
    bool contains(std::uint64_t n) const noexcept { return n < values_.size(); }
    const PartitionValue& at(std::uint64_t n) const { return values_.at(n); }
    const std::vector<PartitionValue>& values() const noexcept { return values_; }
    const std::optional<std::filesystem::path>& source_path() const noexcept { return source_; }

    /// Extends the table with the pentagonal recurrence through n.
    void extend_to(std::uint64_t n);

    friend bool operator==(const PartitionCache& a, const PartitionCache& b) { return a.values_ == b.values_; }

private:
    std::vector<PartitionValue> values_;
    std::optional<std::filesystem::path> source_;
};

/// p(n) from Euler's pentagonal recurrence, extending `cache` through n.
/// Terms p(m) with m < 0 are taken as 0.
const PartitionValue& p_exact(std::uint64_t n, PartitionCache& cache);

/// Convenience overload with a throwaway cache.
PartitionValue p_exact(std::uint64_t n);

inline constexpr std::uint64_t kOracleMaxN = 5000;

/// Independent check: coin-counting expansion of prod 1/(1 - x^m) over
/// parts 1..n. O(n^2) big-integer additions. Throws for n > kOracleMaxN.
PartitionValue p_oracle_dp(std::uint64_t n);

/// The full oracle table p(0..n).
std::vector<PartitionValue> p_oracle_dp_table(std::uint64_t n);

/// Writes `n,p(n)` lines in ascending n, LF endings, no header.
/// Throws IoError on failure.
void cache_save(const PartitionCache& cache, const std::filesystem::path& path);

/// Reads and validates a cache file. Throws IoError, ParseError (with the
/// 1-based line number) or GapError.
PartitionCache cache_load(const std::filesystem::path& path);

}  // namespace partfn
