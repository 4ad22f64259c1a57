#pragma once

#include <stdexcept>
#include <string>

namespace qpl {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// invert_unit: the constant term of the series is not +1 or -1.
class NotAUnit : public Error {
public:
    explicit NotAUnit(const std::string& what) : Error(what) {}
};

// coefficient(): requested exponent lies outside [min_exp, valid_to].
class OutOfValidRange : public Error {
public:
    explicit OutOfValidRange(const std::string& what) : Error(what) {}
};

// pochhammer / term builders: a factor would carry a negative q-power.
class NegativeExponentFactor : public Error {
public:
    explicit NegativeExponentFactor(const std::string& what) : Error(what) {}
};

// Enumeration oracles: n exceeds the configured enumeration bound.
class BudgetExceeded : public Error {
public:
    explicit BudgetExceeded(const std::string& what) : Error(what) {}
};

// Numeric series evaluation: neither termination nor |z| < 1 holds,
// or the term cap was hit before the tail settled.
class NonConvergent : public Error {
public:
    explicit NonConvergent(const std::string& what) : Error(what) {}
};

// Numeric evaluation: a denominator factor fell below the magnitude floor.
class DegenerateDenominator : public Error {
public:
    explicit DegenerateDenominator(const std::string& what) : Error(what) {}
};

}  // namespace qpl
