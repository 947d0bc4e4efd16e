#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tropadic {

enum class ErrorKind {
    EmptyPolyhedron,
    NotPointed,
    NotAdmissible,
    DimensionMismatch,
    DenominatorMismatch,
    ZeroPolynomial,
    NonRationalPoint,
    ExponentOutsideSublattice,
    SupportMismatch,
    NotARefinement,
    FamilyNotSupported,
    NotACover,
    EmbeddingMismatch,
    InvalidFan,
    Overflow,
    Parse,
    InvalidArgument,
};

std::string_view error_kind_name(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace tropadic
