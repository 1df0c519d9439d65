#include "kronlift/error.hpp"

namespace kronlift {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::NoRealRootIsolated: return "NoRealRootIsolated";
    case Errc::NonMonic: return "NonMonic";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ReducibleMinimalPolynomial: return "ReducibleMinimalPolynomial";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::NotASublattice: return "NotASublattice";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::NotABasis: return "NotABasis";
    case Errc::NotConnected: return "NotConnected";
    case Errc::NotRationallyDefined: return "NotRationallyDefined";
    case Errc::InvalidDescriptor: return "InvalidDescriptor";
    case Errc::NotGenerating: return "NotGenerating";
    case Errc::FieldTooSmall: return "FieldTooSmall";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::GreedyExtensionFailed: return "GreedyExtensionFailed";
    case Errc::SelectionFailed: return "SelectionFailed";
    case Errc::RankTooSmall: return "RankTooSmall";
    case Errc::NotDense: return "NotDense";
    case Errc::InternalVerificationFailed: return "InternalVerificationFailed";
    case Errc::EmptyModule: return "EmptyModule";
    case Errc::InvalidStructure: return "InvalidStructure";
    case Errc::MalformedInput: return "MalformedInput";
    }
    return "Unknown";
}

} // namespace kronlift
