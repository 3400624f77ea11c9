#pragma once

#include <stdexcept>
#include <string>

namespace turaev {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input data: bad Cayley table, bad bundle document, shape mismatch.
struct DataError : Error {
    using Error::Error;
};

// A construction or check was invoked on data violating its hypothesis
// (non-commutative grading, weight != 0, failed pair law, ...).
struct PreconditionError : Error {
    using Error::Error;
};

// Arithmetic failure: division by zero, non-prime modulus, unassigned parameter.
struct ArithmeticError : Error {
    using Error::Error;
};

// A search or retry budget was exhausted.
struct BudgetError : Error {
    using Error::Error;
};

} // namespace turaev
