#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kronlift {

enum class Errc {
    NoRealRootIsolated,
    NonMonic,
    FieldMismatch,
    DivisionByZero,
    ReducibleMinimalPolynomial,
    SingularMatrix,
    NotASublattice,
    ShapeMismatch,
    NotABasis,
    NotConnected,
    NotRationallyDefined,
    InvalidDescriptor,
    NotGenerating,
    FieldTooSmall,
    PreconditionViolated,
    GreedyExtensionFailed,
    SelectionFailed,
    RankTooSmall,
    NotDense,
    InternalVerificationFailed,
    EmptyModule,
    InvalidStructure,
    MalformedInput,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string &what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what),
          code_(code) {}

    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

} // namespace kronlift
