#pragma once

#include <stdexcept>
#include <string>

namespace goldenmean {

// Precondition violation (n < 2, zero argument, bad target, ...).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// An exact division left a remainder. This signals a broken internal
// invariant (Fuss-Catalan-type integrality), never a user error.
class InexactDivision : public std::logic_error {
public:
    explicit InexactDivision(const std::string& what) : std::logic_error(what) {}
};

// Consecutive-term ratio used by the tail bound is >= 1.
class RatioNotContracting : public std::runtime_error {
public:
    explicit RatioNotContracting(const std::string& what) : std::runtime_error(what) {}
};

// An input interval is too wide to meet the requested output bound.
class PrecisionExhausted : public std::runtime_error {
public:
    explicit PrecisionExhausted(const std::string& what) : std::runtime_error(what) {}
};

// The reference value is not sharp enough to pin a digit count.
class OraclePrecisionInsufficient : public std::runtime_error {
public:
    explicit OraclePrecisionInsufficient(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace goldenmean
