#include "cli.hpp"

#include "frieze/frieze.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace frieze::cli {
namespace {

using io::json;

constexpr std::uint64_t kDefaultSeed = 20240611;

struct Channels {
    std::ostream& out;
    std::ostream& err;
    std::istream& in;
    bool quiet = false;

    void emit(const json& j) const { out << j.dump(2) << "\n"; }

    std::ostream& note() const
    {
        static std::ostream null(nullptr);
        return quiet ? null : err;
    }
};

std::string slurp(const std::string& path, std::istream& in)
{
    if (path == "-")
        return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    std::ifstream file(path);
    if (!file)
        throw Error(ErrorKind::InvalidInput, "cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

json read_json(const std::string& path, std::istream& in)
{
    try {
        return json::parse(slurp(path, in));
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::Syntax, "malformed JSON in '" + path + "': " + e.what());
    }
}

int exit_code_for(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::Syntax:
    case ErrorKind::SqrtMismatch:
    case ErrorKind::DescriptorMismatch:
    case ErrorKind::InvalidDescriptor:
    case ErrorKind::InvalidInput:
    case ErrorKind::IndexOutOfRange:
    case ErrorKind::WindowExceeded:
        return kExitUsage;
    default:
        return kExitCheckFailed;
    }
}

json error_json(const Error& e)
{
    return {{"ok", false},
            {"error", {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}, {"indices", e.indices()}}}};
}

std::vector<std::string> matrix_rows_text(const SquareMatrix& m)
{
    std::vector<std::string> lines;
    std::istringstream grid(io::to_grid(m));
    for (std::string line; std::getline(grid, line);)
        lines.push_back(line);
    return lines;
}

void describe_violations(const ValidationReport& r, std::ostream& os)
{
    for (const auto& v : r.violations) {
        os << "  " << to_string(v.rule) << " at (";
        for (std::size_t k = 0; k < v.indices.size(); ++k)
            os << (k ? "," : "") << v.indices[k];
        os << "): " << format_element(v.lhs) << " != " << format_element(v.rhs) << "\n";
    }
}

// Matrix commands

int cmd_validate(const Channels& io, const std::string& path)
{
    SquareMatrix m = io::read_matrix(slurp(path, io.in));
    ValidationReport r = validate(m);
    io.emit(io::to_json(r));
    if (r.ok()) {
        io.note() << "frieze matrix: ok (n=" << m.size() << ")\n";
        return kExitOk;
    }
    io.note() << "not a frieze matrix: " << r.violations.size() << " violation(s)\n";
    describe_violations(r, io.note());
    return kExitCheckFailed;
}

int cmd_det(const Channels& io, const std::string& path, const std::string& method)
{
    SquareMatrix m = io::read_matrix(slurp(path, io.in));
    json result{{"n", m.size()}, {"method", method}};

    std::optional<FieldElement> closed;
    std::optional<FieldElement> eliminated;
    if (method != "eliminate") {
        ValidationReport r = validate(m);
        if (!r.ok() || m.size() < 2) {
            result["ok"] = false;
            result["validation"] = io::to_json(r);
            io.emit(result);
            io.note() << "closed form needs a frieze matrix; validation failed\n";
            describe_violations(r, io.note());
            return kExitCheckFailed;
        }
        closed = det_closed_form(FriezeMatrix::from_matrix(m));
        result["closed"] = format_element(*closed);
    }
    if (method != "closed") {
        eliminated = det_elimination(m);
        result["elimination"] = format_element(*eliminated);
    }
    bool ok = true;
    if (closed && eliminated) {
        ok = *closed == *eliminated;
        result["agree"] = ok;
    }
    result["ok"] = ok;
    io.emit(result);
    if (closed)
        io.note() << "det (closed form) = " << *closed << "\n";
    if (eliminated)
        io.note() << "det (elimination) = " << *eliminated << "\n";
    if (!ok)
        io.note() << "DISAGREEMENT between closed form and elimination\n";
    return ok ? kExitOk : kExitCheckFailed;
}

int cmd_triangulate(const Channels& io, const std::string& path, bool with_trace)
{
    FriezeMatrix m = FriezeMatrix::from_matrix(io::read_matrix(slurp(path, io.in)));
    TriangulatedForm form = triangulate(m, with_trace);

    const bool closed_match = form.t == triangular_closed_form(m);
    const bool det_relation = form.t.diagonal_product() == -det_elimination(m.matrix());
    ValidationReport properties = check_t_properties(form.t, m);

    json result{{"t", io::to_json(form.t.matrix())},
                {"closed_form_match", closed_match},
                {"det_relation", det_relation},
                {"properties", io::to_json(properties)}};
    bool ok = closed_match && det_relation && properties.ok();
    if (form.trace) {
        json steps = json::array();
        for (std::size_t k = 0; k < form.trace->matrices.size(); ++k) {
            json ops = json::array();
            for (const auto& op : form.trace->operations[k])
                ops.push_back(op.describe());
            steps.push_back({{"step", k}, {"operations", ops}, {"matrix", io::to_json(form.trace->matrices[k])}});
        }
        ValidationReport trace_report = check_trace(*form.trace, m);
        result["trace"] = std::move(steps);
        result["trace_check"] = io::to_json(trace_report);
        ok = ok && trace_report.ok();
    }
    result["ok"] = ok;
    io.emit(result);
    io.note() << "T_M:\n";
    for (const auto& line : matrix_rows_text(form.t.matrix()))
        io.note() << "  " << line << "\n";
    io.note() << "closed form " << (closed_match ? "matches" : "DIFFERS") << ", det(T) = -det(M) "
              << (det_relation ? "holds" : "FAILS") << "\n";
    return ok ? kExitOk : kExitCheckFailed;
}

int cmd_reconstruct(const Channels& io, const std::string& path, std::size_t i, std::size_t j)
{
    FriezeMatrix m = FriezeMatrix::from_matrix(io::read_matrix(slurp(path, io.in)));
    FieldElement value = reconstruct_entry(m, i, j);
    const bool ok = value == m(i, j);
    io.emit({{"i", i}, {"j", j}, {"value", format_element(value)}, {"stored", format_element(m(i, j))}, {"ok", ok}});
    io.note() << "m_{" << i << "," << j << "} from the first two rows = " << value << (ok ? " (matches)" : " (MISMATCH)")
              << "\n";
    return ok ? kExitOk : kExitCheckFailed;
}

// Frieze commands

std::int64_t default_start(const InfiniteFrieze& f) { return window_origin(f); }

int emit_rows(const Channels& io, const io::RowGrid& grid, bool as_grid)
{
    if (as_grid)
        io.out << io::render_offset(grid);
    else
        io.emit(io::to_json(grid));
    return kExitOk;
}

int cmd_frieze_gen(const Channels& io, const std::string& seeds, std::int64_t rows, std::int64_t cols,
                   std::optional<std::int64_t> start, bool as_grid)
{
    InfiniteFrieze f = io::frieze_from_json(read_json(seeds, io.in));
    const std::int64_t first = start.value_or(default_start(f));
    io::RowGrid grid = io::frieze_rows(f, first, cols, rows);
    ValidationReport diamonds = f.check_diamonds(first, first + cols - 1, rows - 1);
    if (!diamonds.ok()) {
        io.emit(io::to_json(diamonds));
        return kExitCheckFailed;
    }
    io.note() << "frieze rows 0.." << rows - 1 << ", columns " << first << ".." << first + cols - 1 << "\n";
    return emit_rows(io, grid, as_grid);
}

int cmd_frieze_cone(const Channels& io, const std::string& seeds, std::int64_t i, std::int64_t j)
{
    InfiniteFrieze f = io::frieze_from_json(read_json(seeds, io.in));
    json entries = json::array();
    for (const auto& e : cone_entries(f, {i, j}))
        entries.push_back({{"x", e.x}, {"y", e.y}, {"value", format_element(e.value)}});
    io.note() << "cone of f_{" << i << "," << j << "}: " << entries.size() << " entries\n";
    io.emit({{"i", i}, {"j", j}, {"entries", std::move(entries)}});
    return kExitOk;
}

int cmd_frieze_extract(const Channels& io, const std::string& seeds, std::int64_t k, std::size_t n,
                       const std::string& sign)
{
    InfiniteFrieze f = io::frieze_from_json(read_json(seeds, io.in));
    FriezeMatrix m = sign == "plus" ? extract_m_plus(f, k, n) : extract_m_minus(f, k, n);
    io.emit(io::to_json(m.matrix()));
    io.note() << "M" << (sign == "plus" ? "+" : "-") << "(" << k << "," << n << "):\n";
    for (const auto& line : matrix_rows_text(m.matrix()))
        io.note() << "  " << line << "\n";
    return kExitOk;
}

int cmd_frieze_period(const Channels& io, const std::string& seeds, std::int64_t max_period, std::int64_t depth)
{
    InfiniteFrieze f = io::frieze_from_json(read_json(seeds, io.in));
    std::optional<std::int64_t> p = detect_period(f, max_period, depth);
    io.emit({{"period", p ? json(*p) : json(nullptr)}, {"max", max_period}, {"depth", depth}});
    if (p)
        io.note() << "period " << *p << " on rows 1.." << depth << "\n";
    else
        io.note() << "no period <= " << max_period << " on rows 1.." << depth << "\n";
    return kExitOk;
}

// Zero-frieze commands

int cmd_zero_gen(const Channels& io, const ZeroFrieze& t, const DiagonalWindow& w, bool as_grid)
{
    io::RowGrid grid = io::zero_frieze_rows(t, w);
    ValidationReport r = check_zero_diamond(io::zero_grid_from_rows(grid));
    if (!r.ok()) {
        io.emit(io::to_json(r));
        return kExitCheckFailed;
    }
    io.note() << "0-frieze rows 1.." << w.rows << ", columns " << w.first << ".." << w.first + w.columns - 1 << "\n";
    return emit_rows(io, grid, as_grid);
}

std::optional<BlockWindow> parse_block(const std::string& text)
{
    if (text.empty())
        return std::nullopt;
    std::vector<std::int64_t> v;
    std::istringstream in(text);
    for (std::string item; std::getline(in, item, ',');)
        v.push_back(std::stoll(item));
    if (v.size() != 4)
        throw Error(ErrorKind::InvalidInput, "--block takes row_first,row_last,col_first,col_last");
    return BlockWindow{v[0], v[1], v[2], v[3]};
}

int cmd_zero_check(const Channels& io, const std::string& path, const DiagonalWindow& w, const std::string& block)
{
    json j = read_json(path, io.in);
    ZeroGrid grid = j.contains("rows") && j.at("rows").is_array()
                        ? io::zero_grid_from_rows(io::row_grid_from_json(j))
                        : evaluate(io::zero_frieze_from_json(j), w);
    ValidationReport r = check_zero_diamond(grid);
    json result = io::to_json(r);
    bool ok = r.ok();
    if (auto b = parse_block(block)) {
        try {
            Rank1Factors factors = rank1_factorize(grid, *b);
            json a = json::object();
            json bs = json::object();
            for (const auto& [i, v] : factors.a)
                a[std::to_string(i)] = format_element(v);
            for (const auto& [i, v] : factors.b)
                bs[std::to_string(i)] = format_element(v);
            result["factorization"] = {{"a", a}, {"b", bs}};
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::FactorizationImpossible)
                throw;
            result["factorization"] = error_json(e)["error"];
            ok = false;
        }
    }
    result["ok"] = ok;
    io.emit(result);
    io.note() << (r.ok() ? "zero diamond rule holds on " : "zero diamond rule FAILS on ") << grid.cells.size()
              << " cells\n";
    describe_violations(r, io.note());
    return ok ? kExitOk : kExitCheckFailed;
}

// Classical commands

json cc_json(const QuiddityData& q, const CcReport& r)
{
    return {{"quiddity", q.a},
            {"det", format_element(r.det_elimination)},
            {"det_closed", format_element(r.det_closed)},
            {"expected", format_element(r.expected)},
            {"positive_integers", r.positive_integers},
            {"ok", r.ok && r.positive_integers}};
}

int cmd_cc_check(const Channels& io, const std::string& quiddity, const std::string& triangulation)
{
    if (quiddity.empty() == triangulation.empty())
        throw Error(ErrorKind::InvalidInput, "give exactly one of --quiddity or --triangulation");
    QuiddityData q = quiddity.empty()
                         ? quiddity_from_triangulation(io::triangulation_from_json(read_json(triangulation, io.in)))
                         : io::quiddity_from_string(quiddity);
    CcReport r = cc_det_check(q);
    json result = cc_json(q, r);
    io.emit(result);
    io.note() << "k=" << q.k() << ": det = " << r.det_elimination << ", expected " << r.expected << "\n";
    return result["ok"].get<bool>() ? kExitOk : kExitCheckFailed;
}

int cmd_cc_random(const Channels& io, std::size_t k, std::size_t count, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    json samples = json::array();
    bool all_ok = true;
    for (std::size_t s = 0; s < count; ++s) {
        Triangulation t = random_triangulation(k, rng);
        QuiddityData q = quiddity_from_triangulation(t);
        json entry = cc_json(q, cc_det_check(q));
        entry["triangulation"] = io::to_json(t);
        all_ok = all_ok && entry["ok"].get<bool>();
        samples.push_back(std::move(entry));
    }
    io.emit({{"seed", seed}, {"k", k}, {"count", count}, {"ok", all_ok}, {"samples", std::move(samples)}});
    io.note() << count << " random triangulations of a " << k << "-gon (seed " << seed << "): "
              << (all_ok ? "all ok" : "FAILURES") << "\n";
    return all_ok ? kExitOk : kExitCheckFailed;
}

json bm_json(const BmReport& r)
{
    return {{"det", format_element(r.det)},
            {"det_closed", format_element(r.det_closed)},
            {"expected", format_element(r.expected)},
            {"ok", r.ok}};
}

int cmd_bm_check(const Channels& io, const std::string& path)
{
    TwoRowMatrix x = io::two_row_from_json(read_json(path, io.in));
    BmReport r = baur_marsh_det_check(x);
    io.emit(bm_json(r));
    io.note() << "det(A) = " << r.det << ", expected " << r.expected << "\n";
    return r.ok ? kExitOk : kExitCheckFailed;
}

int cmd_bm_random(const Channels& io, std::size_t n, std::size_t count, std::uint64_t seed)
{
    if (n < 2)
        throw Error(ErrorKind::InvalidInput, "--n must be at least 2");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> entry(-9, 9);
    json samples = json::array();
    bool all_ok = true;
    std::size_t rejected = 0;
    while (samples.size() < count) {
        TwoRowMatrix x;
        for (std::size_t c = 0; c < n; ++c) {
            x.top.emplace_back(entry(rng));
            x.bottom.emplace_back(entry(rng));
        }
        BmReport r;
        try {
            r = baur_marsh_det_check(x);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::ZeroMinor)
                throw;
            ++rejected;
            continue;
        }
        json s = bm_json(r);
        s["matrix"] = io::to_json(x);
        all_ok = all_ok && r.ok;
        samples.push_back(std::move(s));
    }
    io.emit({{"seed", seed}, {"n", n}, {"count", count}, {"rejected", rejected}, {"ok", all_ok},
             {"samples", std::move(samples)}});
    io.note() << count << " random 2x" << n << " matrices (seed " << seed << ", " << rejected
              << " rejected): " << (all_ok ? "all ok" : "FAILURES") << "\n";
    return all_ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in)
{
    CLI::App app{"Exact frieze matrices, friezes with coefficients and 0-friezes", "frieze-cli"};
    app.require_subcommand(1);
    Channels io{out, err, in};
    app.fallthrough();
    app.add_flag("-q,--quiet", io.quiet, "Suppress human-readable diagnostics");

    std::function<int()> action;

    // validate / det / triangulate / reconstruct
    std::string matrix_path;
    auto* validate_cmd = app.add_subcommand("validate", "Check the frieze-matrix conditions");
    validate_cmd->add_option("matrix", matrix_path, "Matrix file (JSON or grid, '-' for stdin)")->required();
    validate_cmd->callback([&] { action = [&] { return cmd_validate(io, matrix_path); }; });

    std::string method = "both";
    auto* det_cmd = app.add_subcommand("det", "Exact determinant");
    det_cmd->add_option("matrix", matrix_path, "Matrix file")->required();
    det_cmd->add_option("--method", method, "closed | eliminate | both")
        ->check(CLI::IsMember({"closed", "eliminate", "both"}));
    det_cmd->callback([&] { action = [&] { return cmd_det(io, matrix_path, method); }; });

    bool trace = false;
    auto* tri_cmd = app.add_subcommand("triangulate", "Row-reduce to T_M");
    tri_cmd->add_option("matrix", matrix_path, "Matrix file")->required();
    tri_cmd->add_flag("--trace", trace, "Include the intermediate matrices M_0 .. M_{n-1}");
    tri_cmd->callback([&] { action = [&] { return cmd_triangulate(io, matrix_path, trace); }; });

    std::size_t ri = 0;
    std::size_t rj = 0;
    auto* rec_cmd = app.add_subcommand("reconstruct", "Recover m_{i,j} from the first two rows");
    rec_cmd->add_option("matrix", matrix_path, "Matrix file")->required();
    rec_cmd->add_option("--i", ri)->required();
    rec_cmd->add_option("--j", rj)->required();
    rec_cmd->callback([&] { action = [&] { return cmd_reconstruct(io, matrix_path, ri, rj); }; });

    // frieze ...
    auto* frieze_cmd = app.add_subcommand("frieze", "Infinite friezes with coefficients");
    frieze_cmd->require_subcommand(1);
    std::string seeds;
    std::int64_t rows = 6;
    std::int64_t cols = 8;
    std::optional<std::int64_t> start;
    bool as_grid = false;
    bool as_json = false;

    auto* gen = frieze_cmd->add_subcommand("gen", "Evaluate rows of the frieze");
    gen->add_option("--seeds", seeds, "Seed JSON")->required();
    gen->add_option("--rows", rows)->check(CLI::PositiveNumber);
    gen->add_option("--cols", cols)->check(CLI::PositiveNumber);
    gen->add_option("--start", start, "First column index (default: window origin)");
    gen->add_flag("--grid", as_grid, "Plain-text offset layout");
    gen->add_flag("--json", as_json, "JSON rows (default)");
    gen->callback([&] { action = [&] { return cmd_frieze_gen(io, seeds, rows, cols, start, as_grid && !as_json); }; });

    std::int64_t ci = 0;
    std::int64_t cj = 0;
    auto* cone = frieze_cmd->add_subcommand("cone", "Entries of the cone of f_{i,j}");
    cone->add_option("--seeds", seeds)->required();
    cone->add_option("--i", ci)->required();
    cone->add_option("--j", cj)->required();
    cone->callback([&] { action = [&] { return cmd_frieze_cone(io, seeds, ci, cj); }; });

    std::int64_t k = 0;
    std::size_t n = 3;
    std::string sign = "plus";
    auto* extract = frieze_cmd->add_subcommand("extract", "Frieze matrix M+(k,n) or M-(k,n)");
    extract->add_option("--seeds", seeds)->required();
    extract->add_option("--k", k)->required();
    extract->add_option("--n", n)->required();
    extract->add_option("--sign", sign)->check(CLI::IsMember({"plus", "minus"}));
    extract->add_flag("--json", as_json, "JSON output (the only format)");
    extract->callback([&] { action = [&] { return cmd_frieze_extract(io, seeds, k, n, sign); }; });

    std::int64_t max_period = 8;
    std::int64_t depth = 6;
    auto* period = frieze_cmd->add_subcommand("period", "Smallest period on a finite window");
    period->add_option("--seeds", seeds)->required();
    period->add_option("--max", max_period)->check(CLI::PositiveNumber);
    period->add_option("--depth", depth)->check(CLI::PositiveNumber);
    period->callback([&] { action = [&] { return cmd_frieze_period(io, seeds, max_period, depth); }; });

    // zerofrieze ...
    auto* zero_cmd = app.add_subcommand("zerofrieze", "0-frieze patterns");
    zero_cmd->require_subcommand(1);

    auto* zgen = zero_cmd->add_subcommand("gen", "Evaluate a 0-frieze from its rows u, v");
    zgen->add_option("--seeds", seeds)->required();
    zgen->add_option("--rows", rows)->check(CLI::PositiveNumber);
    zgen->add_option("--cols", cols)->check(CLI::PositiveNumber);
    zgen->add_option("--start", start);
    zgen->add_flag("--grid", as_grid);
    zgen->add_flag("--json", as_json);
    zgen->callback([&] {
        action = [&] {
            ZeroFrieze t = io::zero_frieze_from_json(read_json(seeds, io.in));
            return cmd_zero_gen(io, t, {start.value_or(0), cols, rows}, as_grid && !as_json);
        };
    });

    auto* zfrom = zero_cmd->add_subcommand("from-frieze", "The k-th 0-frieze of a frieze");
    zfrom->add_option("--seeds", seeds, "Frieze seed JSON")->required();
    zfrom->add_option("--k", k)->required();
    zfrom->add_option("--rows", rows)->check(CLI::PositiveNumber);
    zfrom->add_option("--cols", cols)->check(CLI::PositiveNumber);
    zfrom->add_option("--start", start);
    zfrom->add_flag("--grid", as_grid);
    zfrom->add_flag("--json", as_json);
    zfrom->callback([&] {
        action = [&] {
            ZeroFrieze t = from_frieze(io::frieze_from_json(read_json(seeds, io.in)), k);
            return cmd_zero_gen(io, t, {start.value_or(0), cols, rows}, as_grid && !as_json);
        };
    });

    std::string zpath;
    std::string block;
    auto* zcheck = zero_cmd->add_subcommand("check", "Verify the zero diamond rule on a row grid or seed file");
    zcheck->add_option("file", zpath, "Row-grid JSON (as written by gen) or u/v seed JSON")->required();
    zcheck->add_option("--rows", rows, "Rows to evaluate for seed input")->check(CLI::PositiveNumber);
    zcheck->add_option("--cols", cols, "Columns to evaluate for seed input")->check(CLI::PositiveNumber);
    zcheck->add_option("--start", start);
    zcheck->add_option("--block", block, "Also factor the block row_first,row_last,col_first,col_last as a_i*b_j");
    zcheck->callback([&] {
        action = [&] { return cmd_zero_check(io, zpath, {start.value_or(0), cols, rows}, block); };
    });

    // cc ...
    auto* cc_cmd = app.add_subcommand("cc", "Conway-Coxeter friezes");
    cc_cmd->require_subcommand(1);
    std::string quiddity;
    std::string triangulation;
    auto* cc_check = cc_cmd->add_subcommand("check", "Determinant of the fundamental-region matrix");
    cc_check->add_option("--quiddity", quiddity, "Comma-separated a_1,...,a_k");
    cc_check->add_option("--triangulation", triangulation, "Triangulation JSON");
    cc_check->callback([&] { action = [&] { return cmd_cc_check(io, quiddity, triangulation); }; });

    std::size_t count = 10;
    std::uint64_t seed = kDefaultSeed;
    std::size_t cc_k = 6;
    auto* cc_random = cc_cmd->add_subcommand("random", "Random triangulations");
    cc_random->add_option("--k", cc_k)->required()->check(CLI::Range(3, 1000));
    cc_random->add_option("--count", count);
    cc_random->add_option("--seed", seed);
    cc_random->callback([&] { action = [&] { return cmd_cc_random(io, cc_k, count, seed); }; });

    // bm ...
    auto* bm_cmd = app.add_subcommand("bm", "Matrices of 2x2 minors of a 2xn matrix");
    bm_cmd->require_subcommand(1);
    std::string two_row;
    auto* bm_check = bm_cmd->add_subcommand("check", "Determinant of the minor matrix");
    bm_check->add_option("--matrix", two_row, "Two-row JSON")->required();
    bm_check->callback([&] { action = [&] { return cmd_bm_check(io, two_row); }; });

    std::size_t bm_n = 4;
    auto* bm_random = bm_cmd->add_subcommand("random", "Random integer 2xn matrices");
    bm_random->add_option("--n", bm_n)->required();
    bm_random->add_option("--count", count);
    bm_random->add_option("--seed", seed);
    bm_random->callback([&] { action = [&] { return cmd_bm_random(io, bm_n, count, seed); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    if (!action) {
        err << app.help();
        return kExitUsage;
    }
    try {
        return action();
    } catch (const Error& e) {
        io.emit(error_json(e));
        io.note() << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        io.emit({{"ok", false}, {"error", {{"kind", "InvalidInput"}, {"message", e.what()}}}});
        io.note() << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace frieze::cli
