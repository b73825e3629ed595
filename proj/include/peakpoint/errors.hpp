#pragma once

#include <stdexcept>
#include <string>

namespace pk {

// Every failure mode the library reports. The C API maps these 1:1 to
// status codes, so keep the order stable.
enum class Err {
    BranchCutViolation,
    DomainViolation,
    PointOnCurve,
    Undersampled,
    Degenerate,
    ParameterOutOfRange,
    CoincidentPoints,
    SearchFailed,
    NotInDomain,
    ResolutionDisagreement,
    NoExteriorPointFound,
    NotLinked,
    NotWeakChain,
    NoPath,
    DegenerateChain,
    IntersectionNotFound,
    NumericalBreakdown,
    NotOnCurve,
    BetaSearchFailed,
    RhoSearchFailed,
    ScheduleInvalid,
    TypeIIUnsupported,
    ConePrecondViolated,
    RhoNotBelowOne,
    SurrogateFailed,
    CounterexampleFound,
    ParseError,
    InvalidRegion,
    PoleEvaluation,
    NonFinite,
    Internal,
};

const char* err_name(Err e);

class PkError : public std::runtime_error {
public:
    PkError(Err code, const std::string& what)
        : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}

    Err code() const { return code_; }

private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw PkError(code, what); }

} // namespace pk
