#pragma once

#include <stdexcept>
#include <string>

namespace spinboost {

// Bad arguments or violated type invariants. CLI exit code 1.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Numerical breakdown: non-convergence, NaN in an integrand, solver failure.
// CLI exit code 2.
class NumericalFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Linear system without a usable solution (rank-deficient state set).
class SingularSystem : public NumericalFailure {
public:
    using NumericalFailure::NumericalFailure;
};

// Profile evaluated before its normalization constant was fixed.
class UnnormalizedProfile : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace spinboost
