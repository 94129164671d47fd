#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace quiver {

enum class Errc {
    ParseError,
    InvalidVertex,
    LoopArrow,
    DuplicateArrowName,
    CycleDetected,
    Disconnected,
    DimensionMismatch,
    ShapeMismatch,
    SingularMatrix,
    NotPrime,
    ContextMismatch,
    NegativeDimension,
    NotASink,
    NotASource,
    ProjectiveSummandPresent,
    InjectiveSummandPresent,
    NotRegularInput,
    NoPositiveT,
    NonPositiveInput,
    NotWild,
    InvalidArgument,
};

std::string_view errc_name(Errc code);

// Every domain failure is reported through this type; `code()` is stable and
// the CLI prints `errc_name(code())` verbatim.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace quiver
