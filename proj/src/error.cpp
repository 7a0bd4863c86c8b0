#include "rswe/error.hpp"

namespace rswe {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::NotPrimitive: return "NotPrimitive";
        case Errc::BadDegree: return "BadDegree";
        case Errc::LengthNotPowerOfTwo: return "LengthNotPowerOfTwo";
        case Errc::LengthMismatch: return "LengthMismatch";
        case Errc::WrongMode: return "WrongMode";
        case Errc::ValueOutOfRange: return "ValueOutOfRange";
        case Errc::EmptyReceivedSet: return "EmptyReceivedSet";
        case Errc::StackFieldMismatch: return "StackFieldMismatch";
        case Errc::PointInReceivedSet: return "PointInReceivedSet";
        case Errc::DuplicatePoint: return "DuplicatePoint";
        case Errc::BadLength: return "BadLength";
        case Errc::SymbolOutOfRange: return "SymbolOutOfRange";
        case Errc::NotEnoughSymbols: return "NotEnoughSymbols";
        case Errc::DuplicatePosition: return "DuplicatePosition";
        case Errc::PositionOutOfRange: return "PositionOutOfRange";
        case Errc::BadParams: return "BadParams";
        case Errc::IoFailure: return "IoFailure";
        case Errc::HeaderMismatch: return "HeaderMismatch";
        case Errc::NotEnoughShards: return "NotEnoughShards";
        case Errc::CorruptHeader: return "CorruptHeader";
    }
    return "Unknown";
}

}  // namespace rswe
