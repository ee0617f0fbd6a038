#pragma once

#include <stdexcept>
#include <string>

namespace qecc {

// Malformed input file; the message names the offending line.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid generator or experiment parameters.
class ParameterError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Out-of-range vertices, self-pairs, mismatched label vectors.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A charged query was attempted with no budget left.
class BudgetExhaustedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Instance too large for an exact routine.
class SizeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace qecc
