#pragma once

#include <stdexcept>
#include <string>

namespace gridlock {

enum class ErrorKind {
    // grid_core
    NotAPermutation,
    SharedCell,
    SizeTooSmall,
    MultiComponent,
    BadIndex,
    Interleaved,
    ZeroZero,
    NotADestabilization,
    // chain_complex
    BudgetExceeded,
    WindowTooNarrow,
    NotDeconvolvable,
    // f2_linalg
    DimMismatch,
    NotAComplex,
    // legendrian_invariants
    IncomparableUnknowns,
    // cobordism_dsl
    SyntaxError,
    UnknownMove,
    UndeclaredComponent,
    LedgerMismatch,
    MultiEnd,
    EndpointMismatch,
    // io
    ParseError,
    IO,
};

inline const char* to_string(ErrorKind k)
{
    switch (k) {
    case ErrorKind::NotAPermutation: return "NotAPermutation";
    case ErrorKind::SharedCell: return "SharedCell";
    case ErrorKind::SizeTooSmall: return "SizeTooSmall";
    case ErrorKind::MultiComponent: return "MultiComponent";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::Interleaved: return "Interleaved";
    case ErrorKind::ZeroZero: return "ZeroZero";
    case ErrorKind::NotADestabilization: return "NotADestabilization";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::WindowTooNarrow: return "WindowTooNarrow";
    case ErrorKind::NotDeconvolvable: return "NotDeconvolvable";
    case ErrorKind::DimMismatch: return "DimMismatch";
    case ErrorKind::NotAComplex: return "NotAComplex";
    case ErrorKind::IncomparableUnknowns: return "IncomparableUnknowns";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownMove: return "UnknownMove";
    case ErrorKind::UndeclaredComponent: return "UndeclaredComponent";
    case ErrorKind::LedgerMismatch: return "LedgerMismatch";
    case ErrorKind::MultiEnd: return "MultiEnd";
    case ErrorKind::EndpointMismatch: return "EndpointMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IO: return "IO";
    }
    return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error
{
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what)
        , kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace gridlock
