#pragma once

// Infinite frieze patterns with coefficients: arrays f_{i,j} (i ≤ j in ℤ)
// with f_{i,i} = 0, f_{i,j} ≠ 0 otherwise, and
//
//     f_{i,j}·f_{i+1,j+1} − f_{i+1,j}·f_{i,j+1} = f_{i,i+1}·f_{j,j+1}.
//
// The pattern is generated from its first two nontrivial rows
// x_i = f_{i,i+1} and y_i = f_{i,i+2}.

#include "frieze/error.hpp"
#include "frieze/field.hpp"
#include "frieze/frieze_matrix.hpp"
#include "frieze/matrix.hpp"
#include "frieze/report.hpp"
#include "frieze/seed_sequence.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

namespace frieze {

/// The entry set {f_{x,y} : i ≤ x ≤ y ≤ j}.
struct ConeSpec {
    std::int64_t i;
    std::int64_t j;
};

struct ConeEntry {
    std::int64_t x;
    std::int64_t y;
    FieldElement value;
};

/// Lazily evaluated frieze. Entries are memoized in a cache shared between
/// copies; the cache is guarded by a mutex and filled idempotently, so the
/// object behaves as a pure function and may be read from several threads.
class InfiniteFrieze {
public:
    InfiniteFrieze(SeedSequence x, SeedSequence y, FieldDescriptor field = {})
        : state_(std::make_shared<State>(std::move(x), std::move(y), field))
    {
    }

    const SeedSequence& x_seeds() const noexcept { return state_->x; }
    const SeedSequence& y_seeds() const noexcept { return state_->y; }
    const FieldDescriptor& field() const noexcept { return state_->field; }

    /// x_i = f_{i,i+1}
    FieldElement x(std::int64_t i) const { return entry(i, i + 1); }

    /// f_{i,j}. Rows beyond the seeds follow
    /// f_{i,j} = (f_{i,j−1}·f_{i+1,j} − x_i·x_{j−1}) / f_{i+1,j−1}.
    ///
    /// Throws ZeroEntry when an entry off the zero row vanishes,
    /// WindowExceeded when a seed table is read outside its window.
    FieldElement entry(std::int64_t i, std::int64_t j) const
    {
        if (j < i)
            throw Error(ErrorKind::IndexOutOfRange, "frieze entries need j >= i", {i, j});
        if (j == i)
            return FieldElement(Rational(0), Rational(0), state_->field);
        if (j == i + 1)
            return nonzero(state_->x(i), i, j);
        if (j == i + 2)
            return nonzero(state_->y(i), i, j);

        if (auto cached = lookup(i, j))
            return *cached;

        FieldElement divisor = entry(i + 1, j - 1);
        if (divisor.is_zero())
            throw Error(ErrorKind::DivisionByZero, "zero divisor in the diamond recurrence", {i + 1, j - 1});
        FieldElement value =
            (entry(i, j - 1) * entry(i + 1, j) - entry(i, i + 1) * entry(j - 1, j)) / divisor;
        value = nonzero(value.in(state_->field), i, j);
        store(i, j, value);
        return value;
    }

    /// Checks the diamond rule on every diamond (i,j) with first ≤ i < last
    /// whose deepest entry f_{i,j+1} lies within `rows` rows, by
    /// re-multiplying evaluated entries rather than re-running the recurrence.
    ValidationReport check_diamonds(std::int64_t first, std::int64_t last, std::int64_t rows) const
    {
        ValidationReport report;
        for (std::int64_t i = first; i < last; ++i)
            for (std::int64_t j = i + 1; j + 1 - i <= rows; ++j) {
                FieldElement lhs = entry(i, j) * entry(i + 1, j + 1) - entry(i + 1, j) * entry(i, j + 1);
                FieldElement rhs = entry(i, i + 1) * entry(j, j + 1);
                report.expect_equal(Rule::Diamond, {i, j}, lhs, rhs);
            }
        return report;
    }

private:
    struct State {
        State(SeedSequence xs, SeedSequence ys, FieldDescriptor f) : x(std::move(xs)), y(std::move(ys)), field(f) {}

        SeedSequence x;
        SeedSequence y;
        FieldDescriptor field;
        std::mutex mutex;
        std::map<std::pair<std::int64_t, std::int64_t>, FieldElement> cache;
    };

    FieldElement nonzero(const FieldElement& v, std::int64_t i, std::int64_t j) const
    {
        if (v.is_zero())
            throw Error(ErrorKind::ZeroEntry, "frieze entry off the zero row is 0", {i, j});
        return v.in(state_->field);
    }

    std::optional<FieldElement> lookup(std::int64_t i, std::int64_t j) const
    {
        std::lock_guard lock(state_->mutex);
        auto it = state_->cache.find({i, j});
        if (it == state_->cache.end())
            return std::nullopt;
        return it->second;
    }

    void store(std::int64_t i, std::int64_t j, const FieldElement& v) const
    {
        std::lock_guard lock(state_->mutex);
        state_->cache.emplace(std::make_pair(i, j), v);
    }

    std::shared_ptr<State> state_;
};

/// All (j−i+1)(j−i+2)/2 entries of the cone, ordered by x then y.
inline std::vector<ConeEntry> cone_entries(const InfiniteFrieze& f, const ConeSpec& cone)
{
    if (cone.j < cone.i)
        throw Error(ErrorKind::IndexOutOfRange, "cone needs j >= i", {cone.i, cone.j});
    std::vector<ConeEntry> out;
    for (std::int64_t x = cone.i; x <= cone.j; ++x)
        for (std::int64_t y = x; y <= cone.j; ++y)
            out.push_back({x, y, f.entry(x, y)});
    return out;
}

/// M⁺(k,n): lower triangle m_{i,j} = f_{k+j−1, k+i−1} (1 ≤ j ≤ i ≤ n),
/// i.e. the cone of f_{k,k+n−1}, mirrored.
inline FriezeMatrix extract_m_plus(const InfiniteFrieze& f, std::int64_t k, std::size_t n)
{
    if (n < 2)
        throw Error(ErrorKind::InvalidInput, "M+(k,n) needs n >= 2");
    SquareMatrix m(n, f.field());
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j < i; ++j)
            m.set_symmetric(i, j, f.entry(k + static_cast<std::int64_t>(j) - 1, k + static_cast<std::int64_t>(i) - 1));
    return FriezeMatrix::from_matrix(std::move(m));
}

/// M⁻(k,n): upper triangle m̂_{i,j} = f_{k−j+2, k−i+2} (1 ≤ i ≤ j ≤ n),
/// i.e. the cone of f_{k−n+2,k+1}, mirrored.
inline FriezeMatrix extract_m_minus(const InfiniteFrieze& f, std::int64_t k, std::size_t n)
{
    if (n < 2)
        throw Error(ErrorKind::InvalidInput, "M-(k,n) needs n >= 2");
    SquareMatrix m(n, f.field());
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
            m.set_symmetric(i, j, f.entry(k - static_cast<std::int64_t>(j) + 2, k - static_cast<std::int64_t>(i) + 2));
    return FriezeMatrix::from_matrix(std::move(m));
}

/// First column index of the seed window: the later of the two table
/// starts, or 0 when both rows are cycles.
inline std::int64_t window_origin(const InfiniteFrieze& f)
{
    std::int64_t origin = 0;
    bool any = false;
    for (const SeedSequence* s : {&f.x_seeds(), &f.y_seeds()}) {
        if (auto w = s->window()) {
            origin = any ? std::max(origin, w->first) : w->first;
            any = true;
        }
    }
    return origin;
}

/// Smallest P ≤ max_period with f_{i,j} = f_{i+P,j+P} for the rows
/// j − i = 1..depth over one full period of columns starting at the window
/// origin. This certifies periodicity on that finite window only.
inline std::optional<std::int64_t> detect_period(const InfiniteFrieze& f, std::int64_t max_period, std::int64_t depth)
{
    if (max_period < 1 || depth < 1)
        throw Error(ErrorKind::InvalidInput, "max_period and depth must be positive");
    const std::int64_t origin = window_origin(f);
    for (std::int64_t p = 1; p <= max_period; ++p) {
        bool periodic = true;
        for (std::int64_t r = 1; r <= depth && periodic; ++r)
            for (std::int64_t c = origin; c < origin + p && periodic; ++c)
                periodic = f.entry(c, c + r) == f.entry(c + p, c + p + r);
        if (periodic)
            return p;
    }
    return std::nullopt;
}

}  // namespace frieze
