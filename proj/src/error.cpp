#include "quiver/error.hpp"

namespace quiver {

std::string_view errc_name(Errc code) {
    switch (code) {
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidVertex: return "InvalidVertex";
    case Errc::LoopArrow: return "LoopArrow";
    case Errc::DuplicateArrowName: return "DuplicateArrowName";
    case Errc::CycleDetected: return "CycleDetected";
    case Errc::Disconnected: return "Disconnected";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::NotPrime: return "NotPrime";
    case Errc::ContextMismatch: return "ContextMismatch";
    case Errc::NegativeDimension: return "NegativeDimension";
    case Errc::NotASink: return "NotASink";
    case Errc::NotASource: return "NotASource";
    case Errc::ProjectiveSummandPresent: return "ProjectiveSummandPresent";
    case Errc::InjectiveSummandPresent: return "InjectiveSummandPresent";
    case Errc::NotRegularInput: return "NotRegularInput";
    case Errc::NoPositiveT: return "NoPositiveT";
    case Errc::NonPositiveInput: return "NonPositiveInput";
    case Errc::NotWild: return "NotWild";
    case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

} // namespace quiver
