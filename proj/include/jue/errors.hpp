#pragma once

#include <stdexcept>
#include <string>

namespace jue {

// Numeric specialization hit a zero denominator (CLI exit code 4).
struct PoleError : std::runtime_error {
    explicit PoleError(const std::string& m) : std::runtime_error(m) {}
};

// Enumeration size guard exceeded (CLI exit code 3).
struct GuardError : std::runtime_error {
    explicit GuardError(const std::string& m) : std::runtime_error(m) {}
};

// Malformed input text (CLI exit code 2).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace jue
