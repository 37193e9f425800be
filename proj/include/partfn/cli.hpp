#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace partfn::cli {

enum class OutputFormat { automatic, plain, csv, json };

struct CliConfig {
    std::optional<unsigned> precision_bits;
    std::optional<std::filesystem::path> cache_path;
    OutputFormat output_format = OutputFormat::automatic;
};

/// Environment variable naming the default cache file for `exact`.
inline constexpr const char* kCacheEnvVar = "PARTFN_CACHE";

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name). Returns the
/// process exit code: 0 on success, 1 on verification or certification
/// failure, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace partfn::cli
