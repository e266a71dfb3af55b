#pragma once

#include <stdexcept>
#include <string>

namespace mwsn {

// Well-formed input that violates a semantic rule (exit code 1 in the CLI).
struct ValidationError : std::invalid_argument {
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// Unreadable, unwritable, or malformed files (exit code 2 in the CLI).
struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mwsn
