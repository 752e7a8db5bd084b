#pragma once

#include "frieze/error.hpp"
#include "frieze/field.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace frieze {

/// Dense n×n matrix of field elements over a fixed field.
///
/// Indexing is 1-based throughout, the way matrix entries m_{i,j} are
/// written; `(1,1)` is the top-left entry.
class SquareMatrix {
public:
    SquareMatrix() = default;

    explicit SquareMatrix(std::size_t n, FieldDescriptor field = {})
        : n_(n), field_(field), entries_(n * n, FieldElement(Rational(0), Rational(0), field))
    {
    }

    std::size_t size() const noexcept { return n_; }
    const FieldDescriptor& field() const noexcept { return field_; }

    const FieldElement& operator()(std::size_t i, std::size_t j) const { return entries_[offset(i, j)]; }

    /// Stores `value` at (i,j); its field must embed into the matrix field.
    void set(std::size_t i, std::size_t j, const FieldElement& value) { entries_[offset(i, j)] = value.in(field_); }

    void set_symmetric(std::size_t i, std::size_t j, const FieldElement& value)
    {
        set(i, j, value);
        set(j, i, value);
    }

    void swap_rows(std::size_t r, std::size_t s)
    {
        for (std::size_t j = 1; j <= n_; ++j)
            std::swap(entries_[offset(r, j)], entries_[offset(s, j)]);
    }

    /// R_target ← R_target − factor·R_source.
    void subtract_row_multiple(std::size_t target, std::size_t source, const FieldElement& factor)
    {
        for (std::size_t j = 1; j <= n_; ++j) {
            FieldElement delta = factor * (*this)(source, j);
            entries_[offset(target, j)] = ((*this)(target, j) - delta).in(field_);
        }
    }

    friend bool operator==(const SquareMatrix& lhs, const SquareMatrix& rhs)
    {
        if (lhs.n_ != rhs.n_)
            return false;
        for (std::size_t k = 0; k < lhs.entries_.size(); ++k)
            if (!(lhs.entries_[k] == rhs.entries_[k]))
                return false;
        return true;
    }

private:
    std::size_t offset(std::size_t i, std::size_t j) const
    {
        if (i < 1 || j < 1 || i > n_ || j > n_)
            throw Error(ErrorKind::IndexOutOfRange, "matrix index outside 1.." + std::to_string(n_),
                        {static_cast<std::int64_t>(i), static_cast<std::int64_t>(j)});
        return (i - 1) * n_ + (j - 1);
    }

    std::size_t n_ = 0;
    FieldDescriptor field_{};
    std::vector<FieldElement> entries_;
};

}  // namespace frieze
