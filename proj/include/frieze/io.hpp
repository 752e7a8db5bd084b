#pragma once

// JSON and plain-text encodings. Field elements are always carried as
// strings in the element grammar of field.hpp.

#include "frieze/classical.hpp"
#include "frieze/error.hpp"
#include "frieze/field.hpp"
#include "frieze/infinite_frieze.hpp"
#include "frieze/matrix.hpp"
#include "frieze/report.hpp"
#include "frieze/seed_sequence.hpp"
#include "frieze/zero_frieze.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace frieze::io {

using nlohmann::json;

namespace detail {

template <class T>
T required(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw Error(ErrorKind::InvalidInput, std::string("missing key '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw Error(ErrorKind::InvalidInput, std::string("bad value for '") + key + "': " + e.what());
    }
}

}  // namespace detail

inline json to_json(const FieldDescriptor& f)
{
    if (f.is_quadratic())
        return {{"kind", "quadratic"}, {"d", f.d()}};
    return {{"kind", "rational"}};
}

inline FieldDescriptor descriptor_from_json(const json& j)
{
    const auto kind = detail::required<std::string>(j, "kind");
    if (kind == "rational")
        return FieldDescriptor::rational();
    if (kind == "quadratic")
        return FieldDescriptor::quadratic(detail::required<std::int64_t>(j, "d"));
    throw Error(ErrorKind::InvalidInput, "unknown field kind '" + kind + "'");
}

inline FieldDescriptor field_of(const json& j)
{
    return j.contains("field") ? descriptor_from_json(j.at("field")) : FieldDescriptor::rational();
}

inline FieldElement element_from_json(const json& j, const FieldDescriptor& f)
{
    if (j.is_string())
        return parse_element(j.get<std::string>(), f);
    if (j.is_number_integer())
        return FieldElement(j.get<std::int64_t>()).in(f);
    throw Error(ErrorKind::InvalidInput, "field elements are encoded as strings");
}

inline std::vector<FieldElement> elements_from_json(const json& j, const FieldDescriptor& f)
{
    if (!j.is_array())
        throw Error(ErrorKind::InvalidInput, "expected an array of elements");
    std::vector<FieldElement> out;
    for (const auto& e : j)
        out.push_back(element_from_json(e, f));
    return out;
}

inline json to_json(const std::vector<FieldElement>& xs)
{
    json arr = json::array();
    for (const auto& x : xs)
        arr.push_back(format_element(x));
    return arr;
}

// Matrices

inline json to_json(const SquareMatrix& m)
{
    json rows = json::array();
    for (std::size_t i = 1; i <= m.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 1; j <= m.size(); ++j)
            row.push_back(format_element(m(i, j)));
        rows.push_back(std::move(row));
    }
    return {{"field", to_json(m.field())}, {"n", m.size()}, {"entries", std::move(rows)}};
}

inline SquareMatrix matrix_from_json(const json& j)
{
    const FieldDescriptor f = field_of(j);
    const auto rows = detail::required<json>(j, "entries");
    if (!rows.is_array())
        throw Error(ErrorKind::InvalidInput, "'entries' must be an array of rows");
    const std::size_t n = rows.size();
    if (j.contains("n") && detail::required<std::size_t>(j, "n") != n)
        throw Error(ErrorKind::InvalidInput, "'n' disagrees with the number of rows");
    SquareMatrix m(n, f);
    for (std::size_t i = 0; i < n; ++i) {
        if (!rows[i].is_array() || rows[i].size() != n)
            throw Error(ErrorKind::InvalidInput, "row " + std::to_string(i + 1) + " is not of length n");
        for (std::size_t c = 0; c < n; ++c)
            m.set(i + 1, c + 1, element_from_json(rows[i][c], f));
    }
    return m;
}

/// Whitespace-separated grid, one matrix row per line, each element written
/// without spaces. The first line names the field: `field rational` or
/// `field quadratic <d>`. Lines starting with '#' are comments.
inline std::string to_grid(const SquareMatrix& m)
{
    std::ostringstream os;
    if (m.field().is_quadratic())
        os << "field quadratic " << m.field().d() << "\n";
    else
        os << "field rational\n";
    std::size_t width = 1;
    for (std::size_t i = 1; i <= m.size(); ++i)
        for (std::size_t j = 1; j <= m.size(); ++j)
            width = std::max(width, format_element(m(i, j), true).size());
    for (std::size_t i = 1; i <= m.size(); ++i) {
        for (std::size_t j = 1; j <= m.size(); ++j) {
            std::string s = format_element(m(i, j), true);
            os << (j > 1 ? "  " : "") << std::string(width - s.size(), ' ') << s;
        }
        os << "\n";
    }
    return os.str();
}

inline SquareMatrix matrix_from_grid(std::string_view text)
{
    FieldDescriptor f;
    std::vector<std::vector<std::string>> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        std::istringstream words(line);
        std::vector<std::string> tokens;
        for (std::string w; words >> w;)
            tokens.push_back(w);
        if (tokens.empty() || tokens.front().starts_with("#"))
            continue;
        if (first && tokens.front() == "field") {
            if (tokens.size() == 2 && tokens[1] == "rational")
                f = FieldDescriptor::rational();
            else if (tokens.size() == 3 && tokens[1] == "quadratic" &&
                     tokens[2].find_first_not_of("-0123456789") == std::string::npos)
                f = FieldDescriptor::quadratic(std::stoll(tokens[2]));
            else
                throw Error(ErrorKind::InvalidInput, "bad field line: " + line);
            first = false;
            continue;
        }
        first = false;
        rows.push_back(std::move(tokens));
    }
    SquareMatrix m(rows.size(), f);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size())
            throw Error(ErrorKind::InvalidInput, "grid row " + std::to_string(i + 1) + " is not of length n");
        for (std::size_t j = 0; j < rows.size(); ++j)
            m.set(i + 1, j + 1, parse_element(rows[i][j], f));
    }
    return m;
}

/// Accepts either encoding; JSON is recognised by a leading '{'.
inline SquareMatrix read_matrix(std::string_view text)
{
    auto pos = text.find_first_not_of(" \t\r\n");
    if (pos != std::string_view::npos && text[pos] == '{') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::parse_error& e) {
            throw Error(ErrorKind::Syntax, std::string("malformed JSON: ") + e.what());
        }
        return matrix_from_json(j);
    }
    return matrix_from_grid(text);
}

// Seeds

inline json to_json(const SeedSequence& s)
{
    if (s.is_cycle())
        return {{"cycle", to_json(s.values())}};
    return {{"table", {{"start", s.start()}, {"values", to_json(s.values())}}}};
}

inline SeedSequence seed_sequence_from_json(const json& j, const FieldDescriptor& f)
{
    if (j.is_object() && j.contains("cycle"))
        return SeedSequence::cycle(elements_from_json(j.at("cycle"), f));
    if (j.is_object() && j.contains("table")) {
        const json& t = j.at("table");
        return SeedSequence::table(detail::required<std::int64_t>(t, "start"),
                                   elements_from_json(detail::required<json>(t, "values"), f));
    }
    throw Error(ErrorKind::InvalidInput, "seed rows are {\"cycle\": [...]} or {\"table\": {...}}");
}

/// {"field": ..., "x": row, "y": row}
inline InfiniteFrieze frieze_from_json(const json& j)
{
    const FieldDescriptor f = field_of(j);
    return InfiniteFrieze(seed_sequence_from_json(detail::required<json>(j, "x"), f),
                          seed_sequence_from_json(detail::required<json>(j, "y"), f), f);
}

/// {"field": ..., "u": row, "v": row}
inline ZeroFrieze zero_frieze_from_json(const json& j)
{
    const FieldDescriptor f = field_of(j);
    return ZeroFrieze(seed_sequence_from_json(detail::required<json>(j, "u"), f),
                      seed_sequence_from_json(detail::required<json>(j, "v"), f), f);
}

// Row grids: display rows of a frieze or 0-frieze, each a run of entries
// starting at some column index.

struct RowRun {
    std::int64_t row;
    std::int64_t start;
    std::vector<FieldElement> values;
};

struct RowGrid {
    FieldDescriptor field;
    std::vector<RowRun> rows;
};

inline json to_json(const RowGrid& g)
{
    json rows = json::array();
    for (const auto& r : g.rows)
        rows.push_back({{"row", r.row}, {"start", r.start}, {"values", to_json(r.values)}});
    return {{"field", to_json(g.field)}, {"rows", std::move(rows)}};
}

inline RowGrid row_grid_from_json(const json& j)
{
    RowGrid g{field_of(j), {}};
    for (const auto& r : detail::required<json>(j, "rows"))
        g.rows.push_back({detail::required<std::int64_t>(r, "row"), detail::required<std::int64_t>(r, "start"),
                          elements_from_json(detail::required<json>(r, "values"), g.field)});
    return g;
}

/// Rows r = 0..rows−1 of a frieze (entries f_{i,i+r}), columns first..first+columns−1.
inline RowGrid frieze_rows(const InfiniteFrieze& f, std::int64_t first, std::int64_t columns, std::int64_t rows)
{
    RowGrid g{f.field(), {}};
    for (std::int64_t r = 0; r < rows; ++r) {
        RowRun run{r, first, {}};
        for (std::int64_t i = first; i < first + columns; ++i)
            run.values.push_back(f.entry(i, i + r));
        g.rows.push_back(std::move(run));
    }
    return g;
}

/// Rows r = 1..rows of a 0-frieze (entries t_{i,i+r−2}).
inline RowGrid zero_frieze_rows(const ZeroFrieze& t, const DiagonalWindow& w)
{
    RowGrid g{t.field(), {}};
    for (std::int64_t r = 1; r <= w.rows; ++r) {
        RowRun run{r, w.first, {}};
        for (std::int64_t i = w.first; i < w.first + w.columns; ++i)
            run.values.push_back(t.entry(i, i + r - 2));
        g.rows.push_back(std::move(run));
    }
    return g;
}

/// Cells of a 0-frieze row grid: row r, column i is t_{i,i+r−2}.
inline ZeroGrid zero_grid_from_rows(const RowGrid& g)
{
    ZeroGrid z{g.field, {}};
    for (const auto& run : g.rows)
        for (std::size_t c = 0; c < run.values.size(); ++c) {
            const std::int64_t i = run.start + static_cast<std::int64_t>(c);
            z.cells.emplace(std::make_pair(i, i + run.row - 2), run.values[c]);
        }
    return z;
}

/// Plain text with each row shifted half a cell against the previous one,
/// so every entry sits between the two entries above it.
inline std::string render_offset(const RowGrid& g)
{
    std::size_t width = 1;
    std::int64_t min_slot = 0;
    bool any = false;
    for (const auto& run : g.rows) {
        for (const auto& v : run.values)
            width = std::max(width, format_element(v, true).size());
        const std::int64_t slot = 2 * run.start + run.row;
        min_slot = any ? std::min(min_slot, slot) : slot;
        any = true;
    }
    const std::size_t half = (width + 2) / 2;
    std::ostringstream os;
    for (const auto& run : g.rows) {
        std::string line;
        for (std::size_t c = 0; c < run.values.size(); ++c) {
            const auto slot = 2 * (run.start + static_cast<std::int64_t>(c)) + run.row - min_slot;
            const std::string s = format_element(run.values[c], true);
            const std::size_t centre = static_cast<std::size_t>(slot) * half + width / 2;
            const std::size_t column = centre - std::min(centre, s.size() / 2);
            if (line.size() < column)
                line.append(column - line.size(), ' ');
            else if (!line.empty())
                line += ' ';
            line += s;
        }
        os << line << "\n";
    }
    return os.str();
}

// Classical inputs

inline TwoRowMatrix two_row_from_json(const json& j)
{
    TwoRowMatrix x;
    x.field = field_of(j);
    const auto rows = detail::required<json>(j, "rows");
    if (!rows.is_array() || rows.size() != 2)
        throw Error(ErrorKind::InvalidInput, "'rows' must hold exactly two rows");
    x.top = elements_from_json(rows[0], x.field);
    x.bottom = elements_from_json(rows[1], x.field);
    if (x.top.size() != x.bottom.size())
        throw Error(ErrorKind::InvalidInput, "rows differ in length");
    return x;
}

inline json to_json(const TwoRowMatrix& x)
{
    return {{"field", to_json(x.field)}, {"rows", {to_json(x.top), to_json(x.bottom)}}};
}

inline Triangulation triangulation_from_json(const json& j)
{
    Triangulation t;
    t.k = detail::required<std::size_t>(j, "k");
    for (const auto& d : detail::required<json>(j, "diagonals")) {
        if (!d.is_array() || d.size() != 2)
            throw Error(ErrorKind::InvalidInput, "diagonals are pairs of vertices");
        t.diagonals.emplace_back(d[0].get<std::size_t>(), d[1].get<std::size_t>());
    }
    return t;
}

inline json to_json(const Triangulation& t)
{
    json diagonals = json::array();
    for (auto [p, q] : t.diagonals)
        diagonals.push_back({p, q});
    return {{"k", t.k}, {"diagonals", std::move(diagonals)}};
}

/// Comma-separated positive integers, e.g. "1,2,1,2".
inline QuiddityData quiddity_from_string(std::string_view text)
{
    QuiddityData q;
    std::istringstream in{std::string(text)};
    for (std::string item; std::getline(in, item, ',');) {
        std::size_t used = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            throw Error(ErrorKind::Syntax, "bad quiddity entry '" + item + "'");
        }
        if (item.find_first_not_of(" \t", used) != std::string::npos)
            throw Error(ErrorKind::Syntax, "bad quiddity entry '" + item + "'");
        q.a.push_back(v);
    }
    return q;
}

// Reports

inline json to_json(const ValidationReport& r)
{
    json violations = json::array();
    for (const auto& v : r.violations)
        violations.push_back({{"rule", std::string(to_string(v.rule))},
                              {"indices", v.indices},
                              {"lhs", format_element(v.lhs)},
                              {"rhs", format_element(v.rhs)}});
    return {{"ok", r.ok()}, {"violations", std::move(violations)}};
}

}  // namespace frieze::io
