#pragma once

#include "frieze/field.hpp"
#include "frieze/matrix.hpp"

#include <utility>
#include <vector>

namespace frieze {

/// Exact determinant by Bareiss fraction-free elimination.
///
/// Every update a_ij ← (a_ij·a_kk − a_ik·a_kj) / p divides by the previous
/// pivot p, and that division is exact, so intermediate entries stay minors
/// of the input instead of accumulating nested fractions. A zero pivot is
/// replaced by the first nonzero entry below it; each swap flips the sign.
inline FieldElement det_elimination(const SquareMatrix& m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return FieldElement(Rational(1), Rational(0), m.field());

    std::vector<std::vector<FieldElement>> a(n, std::vector<FieldElement>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = m(i + 1, j + 1);

    bool negate = false;
    FieldElement previous(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && a[r][k].is_zero())
                ++r;
            if (r == n)
                return FieldElement(Rational(0), Rational(0), m.field());
            std::swap(a[k], a[r]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / previous;
            a[i][k] = FieldElement(0);
        }
        previous = a[k][k];
    }
    FieldElement det = a[n - 1][n - 1].in(m.field());
    return negate ? -det : det;
}

}  // namespace frieze
