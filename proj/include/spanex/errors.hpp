#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spanex {

// Input exceeds a documented desk-scale limit (isomorphism order, exact
// search order, subset-scan order, ...). CLI maps this to exit code 4.
struct ScopeError : std::runtime_error {
    explicit ScopeError(const std::string& what) : std::runtime_error(what) {}
};

struct Graph6ParseError : std::runtime_error {
    std::size_t offset;  // byte position of the offending character
    Graph6ParseError(const std::string& what, std::size_t off)
        : std::runtime_error(what + " (byte " + std::to_string(off) + ")"), offset(off) {}
};

// Iterative eigenvalue routine hit its iteration cap. Carries the best
// bracket known for the dominant eigenvalue.
struct ConvergenceError : std::runtime_error {
    double bracket_lo;
    double bracket_hi;
    ConvergenceError(const std::string& what, double lo, double hi)
        : std::runtime_error(what + " [bracket " + std::to_string(lo) + ", " +
                             std::to_string(hi) + "]"),
          bracket_lo(lo),
          bracket_hi(hi) {}
};

}  // namespace spanex
