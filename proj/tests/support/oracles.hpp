#pragma once

// Reference computations that share no code with the library algorithms
// beyond field arithmetic.

#include "frieze/frieze.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

namespace frieze::testing {

/// Laplace expansion along rows, memoised on the set of used columns.
inline FieldElement det_cofactor(const SquareMatrix& m)
{
    const std::size_t n = m.size();
    const FieldElement zero = FieldElement(0).in(m.field());
    std::vector<FieldElement> minor(std::size_t{1} << n, zero);
    std::vector<bool> known(minor.size(), false);
    minor[0] = FieldElement(1).in(m.field());
    known[0] = true;
    // minor[S] = det of rows n-|S|+1..n restricted to columns S
    for (std::uint32_t s = 1; s < minor.size(); ++s) {
        const std::size_t row = n - static_cast<std::size_t>(std::popcount(s)) + 1;
        FieldElement acc = zero;
        int sign = 1;
        for (std::size_t c = 0; c < n; ++c) {
            if (!(s & (1u << c)))
                continue;
            const FieldElement& entry = m(row, c + 1);
            if (!entry.is_zero()) {
                FieldElement term = entry * minor[s & ~(1u << c)];
                acc += sign > 0 ? term : -term;
            }
            sign = -sign;
        }
        minor[s] = acc;
    }
    return minor.back();
}

/// The diamond rule for every i >= 1, i+1 <= j <= n-1, evaluated directly.
inline bool diamonds_hold(const SquareMatrix& m)
{
    const std::size_t n = m.size();
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j + 1 <= n; ++j)
            if (!(m(i, j) * m(i + 1, j + 1) - m(i + 1, j) * m(i, j + 1) == m(i, i + 1) * m(j, j + 1)))
                return false;
    return true;
}

/// Conway-Coxeter matrix as determinants m_{i,j} = det(w_i, w_j) of the
/// integer vectors w_1 = (1,0), w_2 = (0,1), w_{j+1} = a_{j-1} w_j - w_{j-1}.
/// Indexed 1..k in both coordinates, symmetric, zero diagonal.
inline std::vector<std::vector<Integer>> cc_reference(const std::vector<std::int64_t>& a)
{
    const std::size_t k = a.size();
    std::vector<std::array<Integer, 2>> w(k + 1);
    w[1] = {1, 0};
    w[2] = {0, 1};
    for (std::size_t j = 2; j < k; ++j)
        for (int c = 0; c < 2; ++c)
            w[j + 1][c] = a[j - 2] * w[j][c] - w[j - 1][c];
    std::vector<std::vector<Integer>> m(k + 1, std::vector<Integer>(k + 1, 0));
    for (std::size_t i = 1; i <= k; ++i)
        for (std::size_t j = i + 1; j <= k; ++j)
            m[i][j] = m[j][i] = w[i][0] * w[j][1] - w[i][1] * w[j][0];
    return m;
}

}  // namespace frieze::testing
