#pragma once

// Row reduction of a frieze matrix M to the explicit upper triangular
// matrix T_M, with det(T_M) = −det(M).
//
// The reduction is the fixed sequence M_0, …, M_{n−1}:
//   M_0      rows 1 and 2 of M swapped;
//   M_1      R_i − (m_{1,i}/m_{1,2})·R_1 → R_i   for 3 ≤ i ≤ n;
//   M_2      R_i − (m_{2,i}/m_{1,2})·R_2 → R_i   for 3 ≤ i ≤ n;
//   M_k      R_i − (m_{1,i}/m_{1,k})·R_k → R_i   for k+1 ≤ i ≤ n, k ≥ 3.
// The multipliers are taken from M itself, not from the current matrix.
// M_{n−1} = T_M, whose rows are
//   t_{1,j} = m_{2,j},  t_{2,j} = m_{1,j},
//   t_{i,j} = −2·m_{1,j}·m_{i−1,i} / m_{1,i−1}   (i ≥ 3, j ≥ i), 0 below.

#include "frieze/error.hpp"
#include "frieze/field.hpp"
#include "frieze/frieze_matrix.hpp"
#include "frieze/matrix.hpp"
#include "frieze/report.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace frieze {

class TriangularMatrix {
public:
    /// Throws InvalidMatrix if any entry below the diagonal is nonzero.
    explicit TriangularMatrix(SquareMatrix t) : t_(std::move(t))
    {
        for (std::size_t i = 2; i <= t_.size(); ++i)
            for (std::size_t j = 1; j < i; ++j)
                if (!t_(i, j).is_zero())
                    throw Error(ErrorKind::InvalidMatrix, "nonzero entry below the diagonal", detail::at(i, j));
    }

    std::size_t size() const noexcept { return t_.size(); }
    const FieldElement& operator()(std::size_t i, std::size_t j) const { return t_(i, j); }
    const SquareMatrix& matrix() const noexcept { return t_; }

    FieldElement diagonal_product() const
    {
        FieldElement p = FieldElement(1).in(t_.field());
        for (std::size_t i = 1; i <= t_.size(); ++i)
            p *= t_(i, i);
        return p;
    }

    friend bool operator==(const TriangularMatrix& lhs, const TriangularMatrix& rhs) { return lhs.t_ == rhs.t_; }

private:
    SquareMatrix t_;
};

struct RowOperation {
    enum class Kind { Swap, Subtract };

    Kind kind;
    std::size_t target;
    std::size_t source;
    FieldElement factor;  // unused for swaps

    std::string describe() const
    {
        const std::string t = "R" + std::to_string(target);
        const std::string s = "R" + std::to_string(source);
        if (kind == Kind::Swap)
            return t + " <-> " + s;
        return t + " - (" + format_element(factor) + ")*" + s + " -> " + t;
    }
};

/// M_0 … M_{n−1} and, for each step, the row operations that produced it.
struct EliminationTrace {
    std::vector<SquareMatrix> matrices;
    std::vector<std::vector<RowOperation>> operations;
};

struct TriangulatedForm {
    TriangularMatrix t;
    std::optional<EliminationTrace> trace;
};

/// T_M straight from its entry formula, without any elimination.
inline TriangularMatrix triangular_closed_form(const FriezeMatrix& m)
{
    const std::size_t n = m.size();
    SquareMatrix t(n, m.field());
    for (std::size_t j = 1; j <= n; ++j) {
        t.set(1, j, m(2, j));
        t.set(2, j, m(1, j));
    }
    for (std::size_t i = 3; i <= n; ++i)
        for (std::size_t j = i; j <= n; ++j)
            t.set(i, j, FieldElement(-2) * m(1, j) * m(i - 1, i) / m(1, i - 1));
    return TriangularMatrix(std::move(t));
}

/// Performs the row operations M → M_0 → … → M_{n−1}. Throws
/// DivisionByZero if a multiplier denominator m_{1,k} vanishes, which can
/// only happen for corrupted input.
inline TriangulatedForm triangulate(const FriezeMatrix& m, bool keep_trace = false)
{
    const std::size_t n = m.size();
    SquareMatrix current = m.matrix();
    EliminationTrace trace;

    current.swap_rows(1, 2);
    if (keep_trace) {
        trace.matrices.push_back(current);
        trace.operations.push_back({RowOperation{RowOperation::Kind::Swap, 1, 2, FieldElement(0)}});
    }

    for (std::size_t k = 1; k < n; ++k) {
        std::vector<RowOperation> ops;
        const std::size_t first = k <= 2 ? 3 : k + 1;
        const std::size_t pivot_column = k <= 2 ? 2 : k;  // denominator m_{1,pivot_column}
        if (m(1, pivot_column).is_zero())
            throw Error(ErrorKind::DivisionByZero, "zero multiplier denominator", detail::at(1, pivot_column));
        for (std::size_t i = first; i <= n; ++i) {
            const FieldElement& numerator = k == 2 ? m(2, i) : m(1, i);
            FieldElement factor = numerator / m(1, pivot_column);
            current.subtract_row_multiple(i, k, factor);
            if (keep_trace)
                ops.push_back({RowOperation::Kind::Subtract, i, k, std::move(factor)});
        }
        if (keep_trace) {
            trace.matrices.push_back(current);
            trace.operations.push_back(std::move(ops));
        }
    }

    TriangulatedForm out{TriangularMatrix(std::move(current)), std::nullopt};
    if (keep_trace)
        out.trace = std::move(trace);
    return out;
}

/// Entry m^k_{i,j} of M_k from closed forms in the entries of M alone.
///
/// k = 0, 1, 2 use the defining expressions; for k ≥ 3:
///   (i)   i ∈ {1,2}:                 m^2_{i,j}
///   (ii)  i ≥ 3, j ≤ min(i−1, k):    0
///   (iii) 3 ≤ i ≤ k+1, j ≥ i:        −2·m_{1,j}·m_{i−1,i} / m_{1,i−1}
///   (iv)  i ≥ k+2, j ≥ k+1:          m^2_{i,j} − Σ_{t=3..k} (m_{1,i}/m_{1,t})·m^{t−1}_{t,j}
/// where in (iv) each m^{t−1}_{t,j} is itself an instance of (iii).
inline FieldElement intermediate_closed_form(const FriezeMatrix& m, std::size_t k, std::size_t i, std::size_t j)
{
    const std::size_t n = m.size();
    if (k >= n || i < 1 || j < 1 || i > n || j > n)
        throw Error(ErrorKind::IndexOutOfRange, "no such intermediate entry",
                    {static_cast<std::int64_t>(k), static_cast<std::int64_t>(i), static_cast<std::int64_t>(j)});

    auto zero_step = [&](std::size_t r, std::size_t c) -> FieldElement {
        if (r == 1)
            return m(2, c);
        if (r == 2)
            return m(1, c);
        return m(r, c);
    };
    auto first_step = [&](std::size_t r, std::size_t c) -> FieldElement {
        if (r <= 2)
            return zero_step(r, c);
        return m(r, c) - m(1, r) / m(1, 2) * m(2, c);
    };
    auto second_step = [&](std::size_t r, std::size_t c) -> FieldElement {
        if (r <= 2)
            return zero_step(r, c);
        return m(r, c) - m(1, r) / m(1, 2) * m(2, c) - m(2, r) / m(1, 2) * m(1, c);
    };
    auto pivot_row = [&](std::size_t r, std::size_t c) -> FieldElement {
        return FieldElement(-2) * m(1, c) / m(1, r - 1) * m(r - 1, r);
    };

    FieldElement value;
    if (k == 0)
        value = zero_step(i, j);
    else if (k == 1)
        value = first_step(i, j);
    else if (k == 2 || i <= 2)
        value = second_step(i, j);
    else if (j <= std::min(i - 1, k))
        value = FieldElement(0);
    else if (i <= k + 1)
        value = pivot_row(i, j);
    else {
        value = second_step(i, j);
        for (std::size_t t = 3; t <= k; ++t)
            value -= m(1, i) / m(1, t) * pivot_row(t, j);
    }
    return value.in(m.field());
}

/// Compares every recorded M_k against `intermediate_closed_form`, checks
/// the partial-sum recursion
///   m^k_{i,j} = m^2_{i,j} − Σ_{t=3..min(i−1,k)} (m_{1,i}/m_{1,t})·m^{t−1}_{t,j}   (i ≥ 4, k ≥ 3)
/// against the recorded matrices themselves, and checks M_{n−1} = T_M.
inline ValidationReport check_trace(const EliminationTrace& trace, const FriezeMatrix& m)
{
    ValidationReport report;
    const std::size_t n = m.size();
    if (trace.matrices.size() != n)
        throw Error(ErrorKind::InvalidInput, "trace must hold M_0 .. M_{n-1}");

    for (std::size_t k = 0; k < n; ++k) {
        const SquareMatrix& mk = trace.matrices[k];
        for (std::size_t i = 1; i <= n; ++i) {
            for (std::size_t j = 1; j <= n; ++j) {
                std::vector<std::int64_t> where{static_cast<std::int64_t>(k), static_cast<std::int64_t>(i),
                                                static_cast<std::int64_t>(j)};
                report.expect_equal(Rule::TraceEntry, where, mk(i, j), intermediate_closed_form(m, k, i, j));

                if (k >= 3 && i >= 4) {
                    FieldElement sum = trace.matrices[2](i, j);
                    for (std::size_t t = 3; t <= std::min(i - 1, k); ++t)
                        sum -= m(1, i) / m(1, t) * trace.matrices[t - 1](t, j);
                    report.expect_equal(Rule::TraceSum, where, mk(i, j), sum);
                } else if (k >= 3) {
                    report.expect_equal(Rule::TraceSum, where, mk(i, j), trace.matrices[2](i, j));
                }
            }
        }
    }

    const SquareMatrix closed = triangular_closed_form(m).matrix();
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            report.expect_equal(Rule::TraceEntry,
                                {static_cast<std::int64_t>(n), static_cast<std::int64_t>(i),
                                 static_cast<std::int64_t>(j)},
                                trace.matrices.back()(i, j), closed(i, j));
    return report;
}

/// The two identities of T_M:
///   (a) t_{i,j}t_{i+1,j+1} − t_{i+1,j}t_{i,j+1} = 0       for i ≥ 2, j ≥ i+1;
///   (b) t_{i,i}t_{i+1,i+1} + 2·m_{i,i+1}·t_{i,i+1} = 0    for 2 ≤ i ≤ n−1.
inline ValidationReport check_t_properties(const TriangularMatrix& t, const FriezeMatrix& m)
{
    ValidationReport report;
    const std::size_t n = t.size();
    const FieldElement zero(0);
    for (std::size_t i = 2; i + 1 <= n; ++i) {
        for (std::size_t j = i + 1; j + 1 <= n; ++j)
            report.expect_equal(Rule::TriangularZeroDiamond, detail::at(i, j),
                                t(i, j) * t(i + 1, j + 1) - t(i + 1, j) * t(i, j + 1), zero);
        report.expect_equal(Rule::TriangularDiagonal, detail::at(i, i + 1),
                            t(i, i) * t(i + 1, i + 1) + FieldElement(2) * m(i, i + 1) * t(i, i + 1), zero);
    }
    return report;
}

}  // namespace frieze
