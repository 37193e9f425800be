#include "partfn/exact_partition.hpp"

#include "partfn/errors.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace partfn {

PentagonalPair pentagonal(std::uint64_t k) {
    if (k == 0) throw std::invalid_argument("pentagonal: k must be >= 1");
    const std::uint64_t three_k2 = 3 * k * k;
    return {k, (three_k2 - k) / 2, (three_k2 + k) / 2};
}

PartitionCache::PartitionCache() : values_{PartitionValue(1)} {}

PartitionCache::PartitionCache(std::vector<PartitionValue> values,
                               std::optional<std::filesystem::path> source)
    : values_(std::move(values)), source_(std::move(source)) {
    if (values_.empty() || values_.front() != 1) {
        throw std::invalid_argument("partition cache must start with p(0) = 1");
    }
}

void PartitionCache::extend_to(std::uint64_t n) {
    if (n < values_.size()) return;
    values_.reserve(n + 1);
    PartitionValue acc;
    for (std::uint64_t m = values_.size(); m <= n; ++m) {
        acc = 0;
        for (std::uint64_t k = 1;; ++k) {
            const PentagonalPair w = pentagonal(k);
            if (w.first > m) break;
            // (-1)^(k+1): add for odd k, subtract for even k. The second
            // index may exceed m while the first does not; it contributes 0.
            const bool add = (k & 1U) != 0;
            if (add) {
                acc += values_[m - w.first];
                if (w.second <= m) acc += values_[m - w.second];
            } else {
                acc -= values_[m - w.first];
                if (w.second <= m) acc -= values_[m - w.second];
            }
        }
        values_.push_back(acc);
    }
}

const PartitionValue& p_exact(std::uint64_t n, PartitionCache& cache) {
    cache.extend_to(n);
    return cache.at(n);
}

PartitionValue p_exact(std::uint64_t n) {
    PartitionCache cache;
    return p_exact(n, cache);
}

std::vector<PartitionValue> p_oracle_dp_table(std::uint64_t n) {
    if (n > kOracleMaxN) {
        throw std::invalid_argument("p_oracle_dp: n = " + std::to_string(n) + " exceeds oracle limit " +
                                    std::to_string(kOracleMaxN));
    }
    std::vector<PartitionValue> ways(n + 1, PartitionValue(0));
    ways[0] = 1;
    for (std::uint64_t part = 1; part <= n; ++part) {
        for (std::uint64_t total = part; total <= n; ++total) ways[total] += ways[total - part];
    }
    return ways;
}

PartitionValue p_oracle_dp(std::uint64_t n) { return p_oracle_dp_table(n).back(); }

void cache_save(const PartitionCache& cache, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError(path, "cannot open for writing");
    const auto& values = cache.values();
    for (std::size_t n = 0; n < values.size(); ++n) out << n << ',' << values[n].get_str() << '\n';
    out.flush();
    if (!out) throw IoError(path, "write failed");
}

namespace {

bool is_decimal_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

}  // namespace

PartitionCache cache_load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(path, "cannot open for reading");

    std::vector<PartitionValue> values;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw ParseError(line_no, "expected 'n,value'");
        const std::string_view index_text(line.data(), comma);
        const std::string_view value_text(line.data() + comma + 1, line.size() - comma - 1);
        if (!is_decimal_digits(index_text)) throw ParseError(line_no, "malformed index '" + std::string(index_text) + "'");
        if (!is_decimal_digits(value_text)) throw ParseError(line_no, "malformed value '" + std::string(value_text) + "'");

        long long index = 0;
        const auto [ptr, ec] = std::from_chars(index_text.data(), index_text.data() + index_text.size(), index);
        if (ec != std::errc{} || ptr != index_text.data() + index_text.size()) {
            throw ParseError(line_no, "index out of range");
        }
        const auto expected = static_cast<long long>(values.size());
        if (index != expected) throw GapError(line_no, expected, index);
        values.emplace_back(std::string(value_text), 10);
    }
    if (in.bad()) throw IoError(path, "read failed");
    if (values.empty()) throw ParseError(1, "empty cache file");
    if (values.front() != 1) throw ParseError(1, "p(0) must be 1");
    return PartitionCache(std::move(values), path);
}

}  // namespace partfn
