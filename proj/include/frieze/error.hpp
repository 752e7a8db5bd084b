#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace frieze {

enum class ErrorKind {
    Syntax,
    SqrtMismatch,
    DivisionByZero,
    DescriptorMismatch,
    InvalidDescriptor,
    ZeroEntry,
    WindowExceeded,
    IndexOutOfRange,
    InvalidMatrix,
    InvalidTriangulation,
    OrderViolation,
    ZeroMinor,
    FactorizationImpossible,
    InvalidInput,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::Syntax: return "Syntax";
    case ErrorKind::SqrtMismatch: return "SqrtMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::DescriptorMismatch: return "DescriptorMismatch";
    case ErrorKind::InvalidDescriptor: return "InvalidDescriptor";
    case ErrorKind::ZeroEntry: return "ZeroEntry";
    case ErrorKind::WindowExceeded: return "WindowExceeded";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::InvalidMatrix: return "InvalidMatrix";
    case ErrorKind::InvalidTriangulation: return "InvalidTriangulation";
    case ErrorKind::OrderViolation: return "OrderViolation";
    case ErrorKind::ZeroMinor: return "ZeroMinor";
    case ErrorKind::FactorizationImpossible: return "FactorizationImpossible";
    case ErrorKind::InvalidInput: return "InvalidInput";
    }
    return "Unknown";
}

/// Every failure in the library is reported through this type. `indices`
/// carries the offending position (1-based for matrices, raw integers for
/// ℤ-indexed friezes) when one exists.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, std::vector<std::int64_t> indices = {})
        : std::runtime_error(compose(kind, message, indices)), kind_(kind), indices_(std::move(indices))
    {
    }

    ErrorKind kind() const noexcept { return kind_; }
    const std::vector<std::int64_t>& indices() const noexcept { return indices_; }

private:
    static std::string compose(ErrorKind kind, const std::string& message,
                               const std::vector<std::int64_t>& indices)
    {
        std::ostringstream os;
        os << to_string(kind) << ": " << message;
        if (!indices.empty()) {
            os << " at (";
            for (std::size_t k = 0; k < indices.size(); ++k)
                os << (k ? "," : "") << indices[k];
            os << ")";
        }
        return os.str();
    }

    ErrorKind kind_;
    std::vector<std::int64_t> indices_;
};

}  // namespace frieze
