#pragma once

#include <stdexcept>
#include <string>

namespace scatter {

// Numeric failures carried across module boundaries; the CLI maps any of
// these to exit code 3.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Series hit the term budget before reaching the requested tolerance.
struct NotConverged : NumericError {
    explicit NotConverged(const std::string& what) : NumericError(what) {}
};

// Hyperexponential coefficient update would divide by a near-zero
// difference of two Lambda values.
struct SingularConfiguration : NumericError {
    explicit SingularConfiguration(const std::string& what) : NumericError(what) {}
};

// Adaptive quadrature exhausted its evaluation budget above target error.
struct QuadratureBudgetExceeded : NumericError {
    explicit QuadratureBudgetExceeded(const std::string& what) : NumericError(what) {}
};

// Masking-term denominator vanished where the limit is not removable.
struct NearDegenerate : NumericError {
    explicit NearDegenerate(const std::string& what) : NumericError(what) {}
};

} // namespace scatter
