#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tcw {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text (regex or workspace document). Positions are 1-based.
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t line, std::size_t col)
        : Error(msg + " (line " + std::to_string(line) + ", column " + std::to_string(col) + ")"),
          line(line),
          col(col) {}
    std::size_t line;
    std::size_t col;
};

// A configured cap (state budget, search node budget) was exceeded.
struct ResourceError : Error {
    using Error::Error;
};

// A value violates a structural invariant (alphabet mismatch, bad rule shape, ...).
struct ValidationError : Error {
    using Error::Error;
};

}  // namespace tcw
