#pragma once

// Frieze matrices: symmetric matrices, zero exactly on the diagonal, whose
// entries obey the generalized diamond rule
//
//     m_{i,j}·m_{i+1,j+1} − m_{i+1,j}·m_{i,j+1} = m_{i,i+1}·m_{j,j+1}
//
// for 1 ≤ i, i+1 ≤ j ≤ n−1. Such a matrix is determined by its first two
// superdiagonals x_i = m_{i,i+1} and y_i = m_{i,i+2}.

#include "frieze/error.hpp"
#include "frieze/field.hpp"
#include "frieze/matrix.hpp"
#include "frieze/report.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace frieze {

namespace detail {

inline std::vector<std::int64_t> at(std::size_t i, std::size_t j)
{
    return {static_cast<std::int64_t>(i), static_cast<std::int64_t>(j)};
}

}  // namespace detail

/// First two superdiagonals of a frieze matrix: x has n−1 entries, y has n−2.
struct SeedData {
    std::vector<FieldElement> x;
    std::vector<FieldElement> y;
};

/// Checks every defining condition and reports each failure with both sides.
inline ValidationReport validate(const SquareMatrix& m)
{
    ValidationReport report;
    const std::size_t n = m.size();

    for (std::size_t i = 1; i <= n; ++i) {
        if (!m(i, i).is_zero())
            report.add(Rule::ZeroDiagonal, detail::at(i, i), m(i, i), FieldElement(0));
        for (std::size_t j = i + 1; j <= n; ++j) {
            report.expect_equal(Rule::Symmetry, detail::at(i, j), m(i, j), m(j, i));
            if (m(i, j).is_zero())
                report.add(Rule::NonzeroOffDiagonal, detail::at(i, j), m(i, j), FieldElement(0));
        }
    }

    for (std::size_t i = 1; i + 2 <= n; ++i) {
        for (std::size_t j = i + 1; j + 1 <= n; ++j) {
            FieldElement lhs = m(i, j) * m(i + 1, j + 1) - m(i + 1, j) * m(i, j + 1);
            FieldElement rhs = m(i, i + 1) * m(j, j + 1);
            report.expect_equal(Rule::Diamond, detail::at(i, j), lhs, rhs);
        }
    }
    return report;
}

/// A square matrix that has passed `validate`. Only obtainable through
/// `from_matrix` or the constructors built on it.
class FriezeMatrix {
public:
    /// Throws InvalidMatrix, naming the first violation, unless `m` is a
    /// frieze matrix of size at least 2.
    static FriezeMatrix from_matrix(SquareMatrix m)
    {
        if (m.size() < 2)
            throw Error(ErrorKind::InvalidMatrix, "a frieze matrix needs n >= 2");
        ValidationReport report = validate(m);
        if (!report.ok()) {
            const Violation& v = report.violations.front();
            throw Error(ErrorKind::InvalidMatrix,
                        std::string(to_string(v.rule)) + " violated: " + format_element(v.lhs) +
                            " != " + format_element(v.rhs),
                        v.indices);
        }
        return FriezeMatrix(std::move(m));
    }

    std::size_t size() const noexcept { return m_.size(); }
    const FieldDescriptor& field() const noexcept { return m_.field(); }
    const FieldElement& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    const SquareMatrix& matrix() const noexcept { return m_; }

    /// m_{i,i+1}
    const FieldElement& x(std::size_t i) const { return m_(i, i + 1); }
    /// m_{i,i+2}
    const FieldElement& y(std::size_t i) const { return m_(i, i + 2); }

private:
    explicit FriezeMatrix(SquareMatrix m) : m_(std::move(m)) {}

    SquareMatrix m_;
};

/// Fills anti-diagonals d = j − i in increasing order with
/// m_{i,j+1} = (m_{i,j}·m_{i+1,j+1} − x_i·x_j) / m_{i+1,j}.
///
/// Throws ZeroEntry with the 1-based position of the first vanishing entry:
/// such seeds generate no frieze matrix.
inline FriezeMatrix build_from_seeds(const SeedData& seeds, const FieldDescriptor& field)
{
    const std::size_t n = seeds.x.size() + 1;
    if (seeds.x.empty())
        throw Error(ErrorKind::InvalidInput, "x must have at least one entry");
    if (seeds.y.size() + 2 != n)
        throw Error(ErrorKind::InvalidInput, "y must have exactly one entry fewer than x");

    SquareMatrix m(n, field);
    for (std::size_t i = 1; i < n; ++i) {
        if (seeds.x[i - 1].is_zero())
            throw Error(ErrorKind::ZeroEntry, "x seed is zero", detail::at(i, i + 1));
        m.set_symmetric(i, i + 1, seeds.x[i - 1]);
    }
    for (std::size_t i = 1; i + 2 <= n; ++i) {
        if (seeds.y[i - 1].is_zero())
            throw Error(ErrorKind::ZeroEntry, "y seed is zero", detail::at(i, i + 2));
        m.set_symmetric(i, i + 2, seeds.y[i - 1]);
    }

    for (std::size_t d = 3; d < n; ++d) {
        for (std::size_t i = 1; i + d <= n; ++i) {
            const std::size_t j = i + d - 1;  // computing m_{i,j+1}
            const FieldElement& divisor = m(i + 1, j);
            if (divisor.is_zero())
                throw Error(ErrorKind::DivisionByZero, "zero divisor in the diamond recurrence",
                            detail::at(i + 1, j));
            FieldElement value = (m(i, j) * m(i + 1, j + 1) - m(i, i + 1) * m(j, j + 1)) / divisor;
            if (value.is_zero())
                throw Error(ErrorKind::ZeroEntry, "seeds force a zero off-diagonal entry", detail::at(i, j + 1));
            m.set_symmetric(i, j + 1, value);
        }
    }
    return FriezeMatrix::from_matrix(std::move(m));
}

/// Checks the Ptolemy relation m_{i,k}·m_{j,l} = m_{i,j}·m_{k,l} + m_{i,l}·m_{j,k}
/// on one quadruple i ≤ j ≤ k ≤ l, or on all of them when `quad` is empty.
inline ValidationReport check_ptolemy(const FriezeMatrix& m,
                                      std::optional<std::array<std::size_t, 4>> quad = std::nullopt)
{
    ValidationReport report;
    const std::size_t n = m.size();
    auto check = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
        FieldElement lhs = m(i, k) * m(j, l);
        FieldElement rhs = m(i, j) * m(k, l) + m(i, l) * m(j, k);
        report.expect_equal(Rule::Ptolemy,
                            {static_cast<std::int64_t>(i), static_cast<std::int64_t>(j),
                             static_cast<std::int64_t>(k), static_cast<std::int64_t>(l)},
                            lhs, rhs);
    };

    if (quad) {
        auto [i, j, k, l] = *quad;
        if (!(1 <= i && i <= j && j <= k && k <= l && l <= n))
            throw Error(ErrorKind::IndexOutOfRange, "need 1 <= i <= j <= k <= l <= " + std::to_string(n),
                        {static_cast<std::int64_t>(i), static_cast<std::int64_t>(j),
                         static_cast<std::int64_t>(k), static_cast<std::int64_t>(l)});
        check(i, j, k, l);
        return report;
    }
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i; j <= n; ++j)
            for (std::size_t k = j; k <= n; ++k)
                for (std::size_t l = k; l <= n; ++l)
                    check(i, j, k, l);
    return report;
}

/// det(M) = −(−2)^{n−2} · m_{1,n} · x_1 ⋯ x_{n−1}.
inline FieldElement det_closed_form(const FriezeMatrix& m)
{
    const std::size_t n = m.size();
    FieldElement det = -m(1, n);
    for (std::size_t k = 2; k < n; ++k)
        det *= FieldElement(-2);
    for (std::size_t i = 1; i < n; ++i)
        det *= m.x(i);
    return det.in(m.field());
}

/// Recovers m_{i,j} (3 ≤ i ≤ j ≤ n) from the first two rows and the x_t:
///
///   m_{1,i}m_{2,j}/m_{1,2} + m_{2,i}m_{1,j}/m_{1,2}
///     − 2·Σ_{t=3..i} m_{1,i}m_{1,j}·m_{t−1,t} / (m_{1,t}m_{1,t−1}).
inline FieldElement reconstruct_entry(const FriezeMatrix& m, std::size_t i, std::size_t j)
{
    const std::size_t n = m.size();
    if (!(3 <= i && i <= j && j <= n))
        throw Error(ErrorKind::IndexOutOfRange, "need 3 <= i <= j <= " + std::to_string(n), detail::at(i, j));

    FieldElement value = (m(1, i) * m(2, j) + m(2, i) * m(1, j)) / m(1, 2);
    FieldElement sum(0);
    for (std::size_t t = 3; t <= i; ++t)
        sum += m(t - 1, t) / (m(1, t) * m(1, t - 1));
    value -= FieldElement(2) * m(1, i) * m(1, j) * sum;
    return value.in(m.field());
}

}  // namespace frieze
