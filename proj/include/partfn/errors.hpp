#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>

namespace partfn {

// Precondition violations (k = 0, non-coprime input, x outside the domain...)
// are reported as std::invalid_argument or std::domain_error. The types
// below cover the failures that carry extra context.

class IoError : public std::runtime_error {
public:
    IoError(const std::filesystem::path& path, const std::string& what)
        : std::runtime_error(path.string() + ": " + what), path_(path) {}

    const std::filesystem::path& path() const noexcept { return path_; }

private:
    std::filesystem::path path_;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Raised when a cache file skips an index or is not in ascending order.
class GapError : public std::runtime_error {
public:
    GapError(std::size_t line, long long expected, long long found)
        : std::runtime_error("line " + std::to_string(line) + ": expected n=" +
                             std::to_string(expected) + ", found n=" + std::to_string(found)),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// The series evaluation could not round its partial sum with confidence.
class CertificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace partfn
