#pragma once
#include <cstddef>
#include <stdexcept>
#include <string>

namespace qse {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

// expansion of a z-Laurent element left a nonzero coefficient at negative order
struct NegativeOrderResidual : Error {
    explicit NegativeOrderResidual(const std::string& what) : Error(what) {}
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& what) : Error(what) {}
};

struct SyntaxError : Error {
    std::size_t offset;
    SyntaxError(const std::string& what, std::size_t off)
        : Error(what + " (offset " + std::to_string(off) + ")"), offset(off) {}
};

struct IllegalExponent : SyntaxError {
    IllegalExponent(const std::string& what, std::size_t off) : SyntaxError(what, off) {}
};

struct UnresolvableToken : Error {
    explicit UnresolvableToken(const std::string& what) : Error(what) {}
};

struct FactorizationMismatch : Error {
    explicit FactorizationMismatch(const std::string& what) : Error(what) {}
};

struct NotASolution : Error {
    explicit NotASolution(const std::string& what) : Error(what) {}
};

struct UnsupportedOperator : Error {
    explicit UnsupportedOperator(const std::string& what) : Error(what) {}
};

struct InvalidStep : Error {
    explicit InvalidStep(const std::string& what) : Error(what) {}
};

} // namespace qse
