#pragma once

#include <stdexcept>
#include <string>

namespace curvelab {

// Every failure mode the library can signal. Codes are stable strings in
// reports, so renaming one is a format change.
enum class errc {
    not_prime,
    reducible_modulus,
    division_by_zero,
    spec_mismatch,
    cap_exceeded,
    not_on_curve,
    singular_point,
    precision_too_small,
    precision_exhausted,
    not_unique,
    contract_violation,
    classicality_guard_failed,
    empty_sample,
    bad_parameters,
    bad_lambda,
    wrong_inflexion_count,
    no_triangle,
    not_diagonal,
    no_scaling,
    not_coprime,
    not_an_inflexion,
    parse_error,
    not_homogeneous,
    bad_coefficient,
    bound_violated,
    internal,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::not_prime: return "NotPrime";
        case errc::reducible_modulus: return "ReducibleModulus";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::spec_mismatch: return "SpecMismatch";
        case errc::cap_exceeded: return "CapExceeded";
        case errc::not_on_curve: return "NotOnCurve";
        case errc::singular_point: return "SingularPoint";
        case errc::precision_too_small: return "PrecisionTooSmall";
        case errc::precision_exhausted: return "PrecisionExhausted";
        case errc::not_unique: return "NotUnique";
        case errc::contract_violation: return "ContractViolation";
        case errc::classicality_guard_failed: return "ClassicalityGuardFailed";
        case errc::empty_sample: return "EmptySample";
        case errc::bad_parameters: return "BadParameters";
        case errc::bad_lambda: return "BadLambda";
        case errc::wrong_inflexion_count: return "WrongInflexionCount";
        case errc::no_triangle: return "NoTriangle";
        case errc::not_diagonal: return "NotDiagonal";
        case errc::no_scaling: return "NoScaling";
        case errc::not_coprime: return "NotCoprime";
        case errc::not_an_inflexion: return "NotAnInflexion";
        case errc::parse_error: return "ParseError";
        case errc::not_homogeneous: return "NotHomogeneous";
        case errc::bad_coefficient: return "BadCoefficient";
        case errc::bound_violated: return "BoundViolated";
        case errc::internal: return "Internal";
    }
    return "Unknown";
}

class CurveError : public std::runtime_error {
public:
    CurveError(errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw CurveError(code, msg); }

}  // namespace curvelab
