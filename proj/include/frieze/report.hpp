#pragma once

#include "frieze/field.hpp"

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

namespace frieze {

enum class Rule {
    Symmetry,
    ZeroDiagonal,
    NonzeroOffDiagonal,
    Diamond,
    Ptolemy,
    TraceEntry,
    TraceSum,
    TriangularZeroDiamond,
    TriangularDiagonal,
    ZeroDiamond,
    NonzeroEntry,
};

constexpr std::string_view to_string(Rule rule) noexcept
{
    switch (rule) {
    case Rule::Symmetry: return "Symmetry";
    case Rule::ZeroDiagonal: return "ZeroDiagonal";
    case Rule::NonzeroOffDiagonal: return "NonzeroOffDiagonal";
    case Rule::Diamond: return "Diamond";
    case Rule::Ptolemy: return "Ptolemy";
    case Rule::TraceEntry: return "TraceEntry";
    case Rule::TraceSum: return "TraceSum";
    case Rule::TriangularZeroDiamond: return "TriangularZeroDiamond";
    case Rule::TriangularDiagonal: return "TriangularDiagonal";
    case Rule::ZeroDiamond: return "ZeroDiamond";
    case Rule::NonzeroEntry: return "NonzeroEntry";
    }
    return "Unknown";
}

/// One failed identity: `lhs` and `rhs` are the two sides that should agree.
struct Violation {
    Rule rule;
    std::vector<std::int64_t> indices;
    FieldElement lhs;
    FieldElement rhs;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }

    void add(Rule rule, std::vector<std::int64_t> indices, FieldElement lhs, FieldElement rhs)
    {
        violations.push_back({rule, std::move(indices), std::move(lhs), std::move(rhs)});
    }

    /// Records a violation unless the two sides agree.
    void expect_equal(Rule rule, std::vector<std::int64_t> indices, const FieldElement& lhs, const FieldElement& rhs)
    {
        if (!(lhs == rhs))
            add(rule, std::move(indices), lhs, rhs);
    }

    bool has(Rule rule, const std::vector<std::int64_t>& indices) const
    {
        for (const auto& v : violations)
            if (v.rule == rule && v.indices == indices)
                return true;
        return false;
    }
};

}  // namespace frieze
