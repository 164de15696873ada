#pragma once

#include <stdexcept>
#include <string>

namespace hitreal {

// Stable machine-readable error codes. The CLI maps these to exit status 1
// and a JSON error object; oracle disagreement uses exit status 2 instead.
enum class Errc {
    ParseError,
    OddDegree,
    UnsupportedGenus,
    NonSquareFree,
    NotConjugationClosed,
    NonSimpleZeros,
    RealityViolation,
    NoSuchInvolution,
    OddU,
    NotApplicable,
    NotPowerOfTwoForm,
    InvalidCaseParams,
    OddOvalAssignment,
    NoFixedBranchPoint,
    SampleDegeneracy,
    InvalidQuery,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::ParseError: return "ParseError";
        case Errc::OddDegree: return "OddDegree";
        case Errc::UnsupportedGenus: return "UnsupportedGenus";
        case Errc::NonSquareFree: return "NonSquareFree";
        case Errc::NotConjugationClosed: return "NotConjugationClosed";
        case Errc::NonSimpleZeros: return "NonSimpleZeros";
        case Errc::RealityViolation: return "RealityViolation";
        case Errc::NoSuchInvolution: return "NoSuchInvolution";
        case Errc::OddU: return "OddU";
        case Errc::NotApplicable: return "NotApplicable";
        case Errc::NotPowerOfTwoForm: return "NotPowerOfTwoForm";
        case Errc::InvalidCaseParams: return "InvalidCaseParams";
        case Errc::OddOvalAssignment: return "OddOvalAssignment";
        case Errc::NoFixedBranchPoint: return "NoFixedBranchPoint";
        case Errc::SampleDegeneracy: return "SampleDegeneracy";
        case Errc::InvalidQuery: return "InvalidQuery";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) { throw Error(code, message); }

}  // namespace hitreal
