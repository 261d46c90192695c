#pragma once

#include <stdexcept>
#include <string>

namespace auslab {

/// Base of every error raised by the library. `kind()` is a stable tag used by
/// the CLI and tests; `what()` carries the human-readable detail.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& detail)
        : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define AUSLAB_DEFINE_ERROR(Name)                                              \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string& detail) : Error(#Name, detail) {}     \
    };

AUSLAB_DEFINE_ERROR(ZeroInverse)
AUSLAB_DEFINE_ERROR(NotPrime)
AUSLAB_DEFINE_ERROR(DimensionMismatch)
AUSLAB_DEFINE_ERROR(NotASubspacePair)
AUSLAB_DEFINE_ERROR(InvalidAlgebra)
AUSLAB_DEFINE_ERROR(InvalidBimodule)
AUSLAB_DEFINE_ERROR(InvalidModule)
AUSLAB_DEFINE_ERROR(AlgebraMismatch)
AUSLAB_DEFINE_ERROR(BlockMismatch)
AUSLAB_DEFINE_ERROR(CapExceeded)
AUSLAB_DEFINE_ERROR(Inconclusive)
AUSLAB_DEFINE_ERROR(RouteMismatch)
AUSLAB_DEFINE_ERROR(HypothesisViolation)
AUSLAB_DEFINE_ERROR(NotEpic)
AUSLAB_DEFINE_ERROR(ParseError)

#undef AUSLAB_DEFINE_ERROR

}  // namespace auslab
