#pragma once

// 0-frieze patterns: arrays t_{i,j} (j ≥ i−1) of nonzero elements with
//
//     t_{i,j}·t_{i+1,j+1} − t_{i+1,j}·t_{i,j+1} = 0     for all j ≥ i,
//
// generated by the first two rows u_i = t_{i,i−1} and v_i = t_{i,i}.
// Display row r holds the entries t_{i,i+r−2}.

#include "frieze/error.hpp"
#include "frieze/field.hpp"
#include "frieze/infinite_frieze.hpp"
#include "frieze/report.hpp"
#include "frieze/seed_sequence.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>

namespace frieze {

using IndexedRow = std::function<FieldElement(std::int64_t)>;

/// Rows 1..rows of the display (t_{i,i+r−2}) for columns
/// i = first .. first+columns−1.
struct DiagonalWindow {
    std::int64_t first;
    std::int64_t columns;
    std::int64_t rows;
};

/// Rectangle of matrix positions row_first ≤ i ≤ row_last,
/// col_first ≤ j ≤ col_last. Every position must satisfy j ≥ i−1.
struct BlockWindow {
    std::int64_t row_first;
    std::int64_t row_last;
    std::int64_t col_first;
    std::int64_t col_last;
};

/// A finite set of 0-frieze positions and their values.
struct ZeroGrid {
    FieldDescriptor field;
    std::map<std::pair<std::int64_t, std::int64_t>, FieldElement> cells;

    const FieldElement* find(std::int64_t i, std::int64_t j) const
    {
        auto it = cells.find({i, j});
        return it == cells.end() ? nullptr : &it->second;
    }
};

class ZeroFrieze {
public:
    ZeroFrieze(IndexedRow u, IndexedRow v, FieldDescriptor field = {})
        : state_(std::make_shared<State>(std::move(u), std::move(v), field))
    {
    }

    ZeroFrieze(SeedSequence u, SeedSequence v, FieldDescriptor field = {})
        : ZeroFrieze(IndexedRow([u](std::int64_t i) { return u(i); }),
                     IndexedRow([v](std::int64_t i) { return v(i); }), field)
    {
    }

    const FieldDescriptor& field() const noexcept { return state_->field; }

    /// t_{i,j} for j ≥ i−1; deeper rows via t_{i,j} = t_{i,j−1}·t_{i+1,j} / t_{i+1,j−1}.
    FieldElement entry(std::int64_t i, std::int64_t j) const
    {
        if (j < i - 1)
            throw Error(ErrorKind::IndexOutOfRange, "0-frieze entries need j >= i-1", {i, j});
        if (j == i - 1)
            return nonzero(state_->u(i), i, j);
        if (j == i)
            return nonzero(state_->v(i), i, j);

        {
            std::lock_guard lock(state_->mutex);
            if (auto it = state_->cache.find({i, j}); it != state_->cache.end())
                return it->second;
        }
        FieldElement divisor = entry(i + 1, j - 1);
        FieldElement value = nonzero(entry(i, j - 1) * entry(i + 1, j) / divisor, i, j);
        std::lock_guard lock(state_->mutex);
        state_->cache.emplace(std::make_pair(i, j), value);
        return value;
    }

private:
    struct State {
        State(IndexedRow us, IndexedRow vs, FieldDescriptor f) : u(std::move(us)), v(std::move(vs)), field(f) {}

        IndexedRow u;
        IndexedRow v;
        FieldDescriptor field;
        std::mutex mutex;
        std::map<std::pair<std::int64_t, std::int64_t>, FieldElement> cache;
    };

    FieldElement nonzero(const FieldElement& value, std::int64_t i, std::int64_t j) const
    {
        if (value.is_zero())
            throw Error(ErrorKind::ZeroEntry, "0-frieze entries must be nonzero", {i, j});
        return value.in(state_->field);
    }

    std::shared_ptr<State> state_;
};

inline ZeroGrid evaluate(const ZeroFrieze& t, const DiagonalWindow& w)
{
    if (w.columns < 1 || w.rows < 1)
        throw Error(ErrorKind::InvalidInput, "window needs at least one row and column");
    ZeroGrid grid{t.field(), {}};
    for (std::int64_t r = 1; r <= w.rows; ++r)
        for (std::int64_t i = w.first; i < w.first + w.columns; ++i)
            grid.cells.emplace(std::make_pair(i, i + r - 2), t.entry(i, i + r - 2));
    return grid;
}

inline ZeroGrid evaluate(const ZeroFrieze& t, const BlockWindow& w)
{
    if (w.row_last < w.row_first || w.col_last < w.col_first || w.col_first < w.row_last - 1)
        throw Error(ErrorKind::InvalidInput, "block must be nonempty and satisfy col_first >= row_last - 1");
    ZeroGrid grid{t.field(), {}};
    for (std::int64_t i = w.row_first; i <= w.row_last; ++i)
        for (std::int64_t j = w.col_first; j <= w.col_last; ++j)
            grid.cells.emplace(std::make_pair(i, j), t.entry(i, j));
    return grid;
}

/// The k-th 0-frieze of a frieze F:
///   u_i = t_{i,i−1} = −2·x_{k+i−3} (i ≤ 2),  −2·x_{k+i−2} (i ≥ 3);
///   v_i = t_{i,i}   = −2·f_{k+i−2,k+1}·x_{k+i−2} / f_{k+i−1,k+1}  (i ≤ 1),
///                     x_k                                          (i = 2),
///                     −2·f_{k,k+i−1}·x_{k+i−2} / f_{k,k+i−2}      (i ≥ 3).
inline ZeroFrieze from_frieze(const InfiniteFrieze& f, std::int64_t k)
{
    IndexedRow u = [f, k](std::int64_t i) {
        return FieldElement(-2) * f.x(i <= 2 ? k + i - 3 : k + i - 2);
    };
    IndexedRow v = [f, k](std::int64_t i) -> FieldElement {
        if (i <= 1)
            return FieldElement(-2) * f.entry(k + i - 2, k + 1) * f.x(k + i - 2) / f.entry(k + i - 1, k + 1);
        if (i == 2)
            return f.x(k);
        return FieldElement(-2) * f.entry(k, k + i - 1) * f.x(k + i - 2) / f.entry(k, k + i - 2);
    };
    return ZeroFrieze(std::move(u), std::move(v), f.field());
}

/// Re-checks nonzero-ness of every cell and the zero diamond rule on every
/// diamond whose four cells are all present in the grid.
inline ValidationReport check_zero_diamond(const ZeroGrid& grid)
{
    ValidationReport report;
    const FieldElement zero(0);
    for (const auto& [pos, value] : grid.cells) {
        auto [i, j] = pos;
        if (value.is_zero())
            report.add(Rule::NonzeroEntry, {i, j}, value, zero);
        if (j < i)
            continue;
        const FieldElement* se = grid.find(i + 1, j + 1);
        const FieldElement* below = grid.find(i + 1, j);
        const FieldElement* right = grid.find(i, j + 1);
        if (se && below && right)
            report.expect_equal(Rule::ZeroDiamond, {i, j}, value * *se - *below * *right, zero);
    }
    return report;
}

inline ValidationReport check_zero_diamond(const ZeroFrieze& t, const DiagonalWindow& w)
{
    return check_zero_diamond(evaluate(t, w));
}

struct Rank1Factors {
    std::map<std::int64_t, FieldElement> a;
    std::map<std::int64_t, FieldElement> b;
};

/// Writes the block as t_{i,j} = a_i·b_j with a_{row_first} = 1.
///
/// Throws FactorizationImpossible at the first (i,j) where the product
/// disagrees, i.e. where some 2×2 minor t_{i,j}t_{k,l} − t_{i,l}t_{k,j}
/// does not vanish.
inline Rank1Factors rank1_factorize(const ZeroGrid& grid, const BlockWindow& w)
{
    if (w.row_last < w.row_first || w.col_last < w.col_first || w.col_first < w.row_last - 1)
        throw Error(ErrorKind::InvalidInput, "block must be nonempty and satisfy col_first >= row_last - 1");
    auto cell = [&](std::int64_t i, std::int64_t j) -> const FieldElement& {
        const FieldElement* v = grid.find(i, j);
        if (!v)
            throw Error(ErrorKind::WindowExceeded, "block cell missing from grid", {i, j});
        if (v->is_zero())
            throw Error(ErrorKind::ZeroEntry, "block cell is zero", {i, j});
        return *v;
    };

    Rank1Factors f;
    f.a.emplace(w.row_first, FieldElement(1).in(grid.field));
    for (std::int64_t j = w.col_first; j <= w.col_last; ++j)
        f.b.emplace(j, cell(w.row_first, j));
    for (std::int64_t i = w.row_first + 1; i <= w.row_last; ++i)
        f.a.emplace(i, cell(i, w.col_first) / f.b.at(w.col_first));

    for (std::int64_t i = w.row_first; i <= w.row_last; ++i)
        for (std::int64_t j = w.col_first; j <= w.col_last; ++j)
            if (!(f.a.at(i) * f.b.at(j) == cell(i, j)))
                throw Error(ErrorKind::FactorizationImpossible, "entry is not a_i*b_j", {i, j});
    return f;
}

inline Rank1Factors rank1_factorize(const ZeroFrieze& t, const BlockWindow& w)
{
    return rank1_factorize(evaluate(t, w), w);
}

}  // namespace frieze
