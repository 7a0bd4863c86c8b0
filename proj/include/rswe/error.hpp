#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rswe {

enum class Errc {
    InvalidArgument,
    NotPrimitive,
    BadDegree,
    LengthNotPowerOfTwo,
    LengthMismatch,
    WrongMode,
    ValueOutOfRange,
    EmptyReceivedSet,
    StackFieldMismatch,
    PointInReceivedSet,
    DuplicatePoint,
    BadLength,
    SymbolOutOfRange,
    NotEnoughSymbols,
    DuplicatePosition,
    PositionOutOfRange,
    BadParams,
    IoFailure,
    HeaderMismatch,
    NotEnoughShards,
    CorruptHeader,
};

std::string_view errc_name(Errc code) noexcept;

// All library failures are reported through this exception type; code()
// identifies the failure class, what() carries a one-line diagnostic.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace rswe
