#pragma once

#include <stdexcept>
#include <string>

namespace leonard {

enum class Errc {
    // field construction / arithmetic
    CompositeP,
    ReducibleModulus,
    NonMonicModulus,
    CtxMismatch,
    DivisionByZero,
    ParseError,
    OutOfRange,
    // matrices
    OrderMismatch,
    Singular,
    RepeatedEigenvalue,
    NotAnEigenvalue,
    // recurrences
    NotRecurrent,
    ZeroDenominator,
    InconsistentFit,
    NoQSupplied,
    VerificationFailed,
    // parameter arrays
    StructuralError,
    PostValidationFailed,
    PA2Failure,
    PrereqFailure,
    // realizations
    InvalidParameterArray,
    CrossCheckFailed,
    PatternViolation,
    NotLeonard,
    TDNonzero,
    PreconditionD,
    // intersection numbers
    MethodPrecondition,
    // families
    ConstraintViolated,
    Inadmissible,
    ExhaustedSearch,
};

const char* errc_name(Errc c);

/// Exception carrying a machine-readable code alongside the message.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace leonard
