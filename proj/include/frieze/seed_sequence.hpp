#pragma once

#include "frieze/error.hpp"
#include "frieze/field.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace frieze {

/// Closed index range [first, last].
struct IndexWindow {
    std::int64_t first;
    std::int64_t last;

    bool contains(std::int64_t i) const noexcept { return first <= i && i <= last; }
};

/// A ℤ-indexed row of field elements, given either as a periodic cycle
/// (value at i is cycle[i mod L], defined everywhere) or as a finite table
/// starting at a declared index. Reading outside a table's window throws
/// WindowExceeded; tables are never extended implicitly.
class SeedSequence {
public:
    static SeedSequence cycle(std::vector<FieldElement> values)
    {
        if (values.empty())
            throw Error(ErrorKind::InvalidInput, "empty cycle");
        return SeedSequence(std::move(values), 0, true);
    }

    static SeedSequence table(std::int64_t start, std::vector<FieldElement> values)
    {
        if (values.empty())
            throw Error(ErrorKind::InvalidInput, "empty table");
        return SeedSequence(std::move(values), start, false);
    }

    static SeedSequence constant(FieldElement value) { return cycle({std::move(value)}); }

    bool is_cycle() const noexcept { return periodic_; }
    const std::vector<FieldElement>& values() const noexcept { return values_; }
    std::int64_t start() const noexcept { return start_; }

    /// Defined indices; empty for cycles, which are total.
    std::optional<IndexWindow> window() const
    {
        if (periodic_)
            return std::nullopt;
        return IndexWindow{start_, start_ + static_cast<std::int64_t>(values_.size()) - 1};
    }

    const FieldElement& operator()(std::int64_t i) const
    {
        const auto size = static_cast<std::int64_t>(values_.size());
        if (periodic_)
            return values_[static_cast<std::size_t>(((i % size) + size) % size)];
        if (i < start_ || i >= start_ + size)
            throw Error(ErrorKind::WindowExceeded,
                        "index outside table window [" + std::to_string(start_) + ", " +
                            std::to_string(start_ + size - 1) + "]",
                        {i});
        return values_[static_cast<std::size_t>(i - start_)];
    }

private:
    SeedSequence(std::vector<FieldElement> values, std::int64_t start, bool periodic)
        : values_(std::move(values)), start_(start), periodic_(periodic)
    {
    }

    std::vector<FieldElement> values_;
    std::int64_t start_ = 0;
    bool periodic_ = true;
};

}  // namespace frieze
