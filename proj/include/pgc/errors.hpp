#pragma once

#include <stdexcept>
#include <string>

namespace pgc {

// Input validation failures when building graphs from edge lists.
struct InvalidEdgeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SelfLoopError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed graph6 / edge-list input.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An operation was asked to run above its documented vertex cap.
// The message always names the cap that was exceeded.
struct SizeLimitError : std::runtime_error {
    SizeLimitError(const std::string& op, int n, int cap)
        : std::runtime_error(op + ": graph has " + std::to_string(n) +
                             " vertices, cap is " + std::to_string(cap)) {}
};

struct FileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace pgc
