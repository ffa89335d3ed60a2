#pragma once

#include <stdexcept>
#include <string>

namespace cremona {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Grammar-level failure; `pos` is a byte offset into the input text.
struct ParseError : Error {
    ParseError(std::size_t pos, const std::string& msg)
        : Error("parse error at " + std::to_string(pos) + ": " + msg), pos(pos) {}
    std::size_t pos;
};

struct DomainError : Error {
    using Error::Error;
};

struct SingularMatrixError : Error {
    using Error::Error;
};

// Raised when a Groebner computation exceeds its S-pair reduction cap.
struct BudgetExceeded : Error {
    explicit BudgetExceeded(std::uint64_t cap)
        : Error("budget exceeded: S-pair reduction cap " + std::to_string(cap)), cap(cap) {}
    std::uint64_t cap;
};

// A certification routine could not reach a verdict (bad samples, prime
// escalation exhausted, ...). Distinct from a refusal, which is a verdict.
struct CertificationError : Error {
    using Error::Error;
};

} // namespace cremona
