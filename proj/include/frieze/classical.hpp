#pragma once

// Two classical families of frieze matrices and their determinants:
//  - Conway–Coxeter friezes of order k, from a quiddity sequence (or from a
//    triangulated k-gon, which produces one), with det = −(−2)^{k−2};
//  - symmetric matrices of 2×2 minors Δ_{ij} of a 2×n matrix, with
//    det = −(−2)^{n−2}·Δ_{1n}·Δ_{12}Δ_{23}⋯Δ_{n−1,n}.

#include "frieze/determinant.hpp"
#include "frieze/error.hpp"
#include "frieze/field.hpp"
#include "frieze/frieze_matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

namespace frieze {

/// Diagonals of a triangulated convex k-gon with vertices 1..k.
struct Triangulation {
    std::size_t k = 3;
    std::vector<std::pair<std::size_t, std::size_t>> diagonals;
};

struct QuiddityData {
    std::vector<std::int64_t> a;

    std::size_t k() const noexcept { return a.size(); }
};

namespace detail {

inline std::pair<std::size_t, std::size_t> ordered(std::pair<std::size_t, std::size_t> d)
{
    return d.first < d.second ? d : std::make_pair(d.second, d.first);
}

inline bool crosses(std::pair<std::size_t, std::size_t> d, std::pair<std::size_t, std::size_t> e)
{
    auto [p, q] = ordered(d);
    auto [r, s] = ordered(e);
    return (p < r && r < q && q < s) || (r < p && p < s && s < q);
}

}  // namespace detail

/// Throws InvalidTriangulation unless the diagonals are k−3 distinct,
/// pairwise non-crossing chords that are not polygon sides.
inline void validate_triangulation(const Triangulation& t)
{
    if (t.k < 3)
        throw Error(ErrorKind::InvalidTriangulation, "polygon needs k >= 3");
    if (t.diagonals.size() + 3 != t.k)
        throw Error(ErrorKind::InvalidTriangulation,
                    "expected " + std::to_string(t.k - 3) + " diagonals, got " + std::to_string(t.diagonals.size()));
    for (std::size_t a = 0; a < t.diagonals.size(); ++a) {
        auto [p, q] = detail::ordered(t.diagonals[a]);
        std::vector<std::int64_t> where{static_cast<std::int64_t>(p), static_cast<std::int64_t>(q)};
        if (p < 1 || q > t.k)
            throw Error(ErrorKind::InvalidTriangulation, "vertex outside 1..k", where);
        if (q - p <= 1 || (p == 1 && q == t.k))
            throw Error(ErrorKind::InvalidTriangulation, "not a diagonal", where);
        for (std::size_t b = 0; b < a; ++b) {
            if (detail::ordered(t.diagonals[b]) == std::make_pair(p, q))
                throw Error(ErrorKind::InvalidTriangulation, "repeated diagonal", where);
            if (detail::crosses(t.diagonals[a], t.diagonals[b]))
                throw Error(ErrorKind::InvalidTriangulation, "crossing diagonals", where);
        }
    }
}

/// a_i = number of triangles at vertex i, which is one more than the number
/// of diagonals ending there. The counts sum to 3(k−2).
inline QuiddityData quiddity_from_triangulation(const Triangulation& t)
{
    validate_triangulation(t);
    QuiddityData q{std::vector<std::int64_t>(t.k, 1)};
    for (auto [p, r] : t.diagonals) {
        ++q.a[p - 1];
        ++q.a[r - 1];
    }
    return q;
}

/// Repeatedly cuts off a uniformly chosen ear of the remaining polygon.
template <class Rng>
Triangulation random_triangulation(std::size_t k, Rng& rng)
{
    if (k < 3)
        throw Error(ErrorKind::InvalidInput, "polygon needs k >= 3");
    std::vector<std::size_t> polygon(k);
    std::iota(polygon.begin(), polygon.end(), std::size_t{1});
    Triangulation t{k, {}};
    while (polygon.size() > 3) {
        std::uniform_int_distribution<std::size_t> pick(0, polygon.size() - 1);
        const std::size_t ear = pick(rng);
        const std::size_t before = polygon[(ear + polygon.size() - 1) % polygon.size()];
        const std::size_t after = polygon[(ear + 1) % polygon.size()];
        t.diagonals.push_back(detail::ordered({before, after}));
        polygon.erase(polygon.begin() + static_cast<std::ptrdiff_t>(ear));
    }
    return t;
}

/// The frieze matrix of the fundamental region: x_i = 1, y_i = a_i.
/// Throws OrderViolation when `q` is not a quiddity sequence of a frieze
/// of order k: m_{1,k} ≠ 1, or the sequence fails to close up cyclically.
inline FriezeMatrix cc_matrix(const QuiddityData& q)
{
    const std::size_t k = q.k();
    if (k < 3)
        throw Error(ErrorKind::InvalidInput, "quiddity sequence needs k >= 3");
    if (std::any_of(q.a.begin(), q.a.end(), [](std::int64_t v) { return v < 1; }))
        throw Error(ErrorKind::InvalidInput, "quiddity entries must be positive");

    SeedData seeds;
    seeds.x.assign(k - 1, FieldElement(1));
    for (std::size_t i = 0; i + 2 < k; ++i)
        seeds.y.emplace_back(q.a[i]);
    FriezeMatrix m = build_from_seeds(seeds, FieldDescriptor::rational());
    if (!(m(1, k) == FieldElement(1)))
        throw Error(ErrorKind::OrderViolation, "m_{1,k} = " + format_element(m(1, k)) + ", expected 1",
                    {1, static_cast<std::int64_t>(k)});
    // the sequence must also close up cyclically: ∏ [[a_i, −1], [1, 0]] = −I
    Integer p00 = 1, p01 = 0, p10 = 0, p11 = 1;
    for (std::int64_t a : q.a) {
        Integer n00 = p00 * a + p01, n10 = p10 * a + p11;
        p01 = -p00;
        p11 = -p10;
        p00 = n00;
        p10 = n10;
    }
    if (!(p00 == -1 && p01 == 0 && p10 == 0 && p11 == -1))
        throw Error(ErrorKind::OrderViolation, "sequence does not close up to a frieze of order " + std::to_string(k));
    return m;
}

/// True when every m_{i,j} with i < j is a positive integer.
inline bool has_positive_integer_region(const FriezeMatrix& m)
{
    for (std::size_t i = 1; i <= m.size(); ++i)
        for (std::size_t j = i + 1; j <= m.size(); ++j) {
            const FieldElement& v = m(i, j);
            if (!v.is_rational() || boost::multiprecision::denominator(v.a()) != 1 || v.a() <= 0)
                return false;
        }
    return true;
}

struct CcReport {
    FieldElement det_closed;
    FieldElement det_elimination;
    FieldElement expected;
    bool positive_integers = false;
    bool ok = false;
};

inline FieldElement minus_minus_two_power(std::size_t exponent)
{
    FieldElement v(-1);
    for (std::size_t e = 0; e < exponent; ++e)
        v *= FieldElement(-2);
    return v;
}

inline CcReport cc_det_check(const QuiddityData& q)
{
    FriezeMatrix m = cc_matrix(q);
    CcReport r;
    r.det_closed = det_closed_form(m);
    r.det_elimination = det_elimination(m.matrix());
    r.expected = minus_minus_two_power(q.k() - 2);
    r.positive_integers = has_positive_integer_region(m);
    r.ok = r.det_closed == r.expected && r.det_elimination == r.expected;
    return r;
}

/// A 2×n matrix with rows (a_1..a_n) and (b_1..b_n).
struct TwoRowMatrix {
    FieldDescriptor field;
    std::vector<FieldElement> top;
    std::vector<FieldElement> bottom;

    std::size_t size() const noexcept { return top.size(); }

    /// Δ_{ij} = a_i·b_j − a_j·b_i (1-based).
    FieldElement delta(std::size_t i, std::size_t j) const
    {
        return (top.at(i - 1) * bottom.at(j - 1) - top.at(j - 1) * bottom.at(i - 1)).in(field);
    }
};

/// A_{ij} = Δ_{min(i,j),max(i,j)}; throws ZeroMinor at the first vanishing Δ.
inline FriezeMatrix delta_minor_matrix(const TwoRowMatrix& x)
{
    const std::size_t n = x.size();
    if (x.bottom.size() != n || n < 2)
        throw Error(ErrorKind::InvalidInput, "need two rows of equal length n >= 2");
    SquareMatrix a(n, x.field);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) {
            FieldElement d = x.delta(i, j);
            if (d.is_zero())
                throw Error(ErrorKind::ZeroMinor, "vanishing 2x2 minor", detail::at(i, j));
            a.set_symmetric(i, j, d);
        }
    return FriezeMatrix::from_matrix(std::move(a));
}

struct BmReport {
    FieldElement det;
    FieldElement det_closed;
    FieldElement expected;
    bool ok = false;
};

inline BmReport baur_marsh_det_check(const TwoRowMatrix& x)
{
    FriezeMatrix a = delta_minor_matrix(x);
    const std::size_t n = x.size();
    BmReport r;
    r.det = det_elimination(a.matrix());
    r.det_closed = det_closed_form(a);
    r.expected = minus_minus_two_power(n - 2) * x.delta(1, n);
    for (std::size_t i = 1; i < n; ++i)
        r.expected *= x.delta(i, i + 1);
    r.expected = r.expected.in(x.field);
    r.ok = r.det == r.expected && r.det_closed == r.expected;
    return r;
}

}  // namespace frieze
