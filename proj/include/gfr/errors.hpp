#ifndef GFR_ERRORS_HPP
#define GFR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gfr {

enum class Errc {
    OverlappingDisks,
    MismatchedRadii,
    DetachedLambda,
    CurveCollision,
    EdgeCrossing,
    NotGeneralPosition,
    TooManyCrossings,
    Disconnected,
    EdgeNotOnWalk,
    NoFurtherCrossing,
    StepBudgetExceeded,
    SharedArc,
    NoDualCurve,
    GenerationExhausted,
    ParseError,
    VersionMismatch,
    InvalidInstance,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::OverlappingDisks: return "OverlappingDisks";
        case Errc::MismatchedRadii: return "MismatchedRadii";
        case Errc::DetachedLambda: return "DetachedLambda";
        case Errc::CurveCollision: return "CurveCollision";
        case Errc::EdgeCrossing: return "EdgeCrossing";
        case Errc::NotGeneralPosition: return "NotGeneralPosition";
        case Errc::TooManyCrossings: return "TooManyCrossings";
        case Errc::Disconnected: return "Disconnected";
        case Errc::EdgeNotOnWalk: return "EdgeNotOnWalk";
        case Errc::NoFurtherCrossing: return "NoFurtherCrossing";
        case Errc::StepBudgetExceeded: return "StepBudgetExceeded";
        case Errc::SharedArc: return "SharedArc";
        case Errc::NoDualCurve: return "NoDualCurve";
        case Errc::GenerationExhausted: return "GenerationExhausted";
        case Errc::ParseError: return "ParseError";
        case Errc::VersionMismatch: return "VersionMismatch";
        case Errc::InvalidInstance: return "InvalidInstance";
    }
    return "UnknownError";
}

class gfr_error : public std::runtime_error {
public:
    gfr_error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

}  // namespace gfr

#endif  // GFR_ERRORS_HPP
