#pragma once

#include <stdexcept>
#include <string>

namespace sullivan {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Operands over different generator universes, malformed objects.
struct StructuralError : Error {
    using Error::Error;
};

// Inhomogeneous or wrong-codegree data where a graded object is required.
struct DegreeError : Error {
    using Error::Error;
};

// A move or operation precondition failed; carries the witness in the message.
struct PreconditionError : Error {
    using Error::Error;
};

// Query outside a computed window.
struct RangeError : Error {
    using Error::Error;
};

struct ParseError : Error {
    int line;
    int column;
    ParseError(const std::string& msg, int l, int c)
        : Error("line " + std::to_string(l) + ", col " + std::to_string(c) + ": " + msg),
          line(l),
          column(c) {}
};

}  // namespace sullivan
