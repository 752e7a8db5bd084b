#include "support/fixtures.hpp"
#include "support/generators.hpp"

#include <gtest/gtest.h>

#include <optional>

namespace {

using namespace frieze;
using namespace frieze::testing;

TEST(MatrixIo, JsonRoundTrip)
{
    Rng rng(81);
    for (int n = 0; n < 20; ++n) {
        FriezeMatrix m = random_frieze(rng, 2 + n % 6, n % 2 ? q5() : FieldDescriptor::rational());
        EXPECT_EQ(io::matrix_from_json(io::to_json(m.matrix())), m.matrix());
        EXPECT_EQ(io::read_matrix(io::to_json(m.matrix()).dump()), m.matrix());
    }
}

TEST(MatrixIo, GridRoundTrip)
{
    FriezeMatrix m = build_from_seeds(exm_seeds(), q5());
    const std::string grid = io::to_grid(m.matrix());
    EXPECT_EQ(grid.rfind("field quadratic 5\n", 0), 0u);
    EXPECT_EQ(io::read_matrix(grid), m.matrix());
    EXPECT_EQ(io::read_matrix("# a comment\n0 2\n2 0\n"), io::read_matrix("field rational\n0 2\n2 0"));
}

TEST(MatrixIo, Errors)
{
    auto kind_of = [](const std::string& text) -> std::optional<ErrorKind> {
        try {
            io::read_matrix(text);
        } catch (const Error& e) {
            return e.kind();
        }
        return std::nullopt;
    };
    EXPECT_EQ(kind_of("{\"entries\": [[0, 1], [1"), ErrorKind::Syntax);
    EXPECT_EQ(kind_of("0 1\n1"), ErrorKind::InvalidInput);
    EXPECT_EQ(kind_of("field quadratic five\n0"), ErrorKind::InvalidInput);
    EXPECT_EQ(kind_of("0 1\n1 0"), std::nullopt);
    EXPECT_EQ(kind_of("0 sqrt(5)\nsqrt(5) 0"), ErrorKind::SqrtMismatch);
    EXPECT_EQ(kind_of("{\"field\": {\"kind\": \"quadratic\", \"d\": 9}, \"entries\": [[0]]}"),
              ErrorKind::InvalidDescriptor);
}

TEST(SeedIo, SequencesAndFriezes)
{
    InfiniteFrieze f = io::frieze_from_json(io::json::parse(read_data("table_seeds.json")));
    EXPECT_EQ(f.x(-1), FieldElement(2));
    EXPECT_EQ(f.entry(3, 5), e5("sqrt(5)"));
    EXPECT_EQ(io::to_json(f.x_seeds())["table"]["start"], -1);

    SeedSequence c = io::seed_sequence_from_json(io::json::parse(R"({"cycle": ["1/2", 3]})"), FieldDescriptor::rational());
    EXPECT_EQ(c(-3), FieldElement(3));
    EXPECT_EQ(c(4), FieldElement(Rational(1, 2)));
    EXPECT_THROW(io::seed_sequence_from_json(io::json::parse("[1, 2]"), FieldDescriptor::rational()), Error);
}

TEST(RowGridIo, RoundTripAndZeroGrid)
{
    ZeroFrieze t = io::zero_frieze_from_json(io::json::parse(read_data("tkf_example.json")));
    io::RowGrid rows = io::zero_frieze_rows(t, {-1, 2, 5});
    io::RowGrid back = io::row_grid_from_json(io::to_json(rows));
    ASSERT_EQ(back.rows.size(), 5u);
    EXPECT_EQ(back.rows[2].values[0], FieldElement(Rational(-1, 4)));
    ZeroGrid grid = io::zero_grid_from_rows(back);
    EXPECT_EQ(*grid.find(0, 2), FieldElement(Rational(5, 8)));
    EXPECT_TRUE(check_zero_diamond(grid).ok());
}

TEST(RowGridIo, OffsetRendering)
{
    InfiniteFrieze f(SeedSequence::constant(FieldElement(2)), SeedSequence::constant(FieldElement(3)));
    std::string text = io::render_offset(io::frieze_rows(f, 0, 3, 3));
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        lines.push_back(line);
    ASSERT_EQ(lines.size(), 3u);
    // each row starts half a cell to the right of the one above
    EXPECT_LT(lines[0].find('0'), lines[1].find('2'));
    EXPECT_LT(lines[1].find('2'), lines[2].find('3'));
}

TEST(ClassicalIo, Inputs)
{
    Triangulation t = io::triangulation_from_json(io::json::parse(read_data("hexagon_triangulation.json")));
    EXPECT_EQ(t.k, 6u);
    EXPECT_EQ(quiddity_from_triangulation(t).a, (std::vector<std::int64_t>{3, 1, 2, 3, 1, 2}));
    EXPECT_EQ(io::triangulation_from_json(io::to_json(t)).diagonals, t.diagonals);

    EXPECT_EQ(io::quiddity_from_string("1, 2,1,2").a, (std::vector<std::int64_t>{1, 2, 1, 2}));
    EXPECT_THROW(io::quiddity_from_string("1,x"), Error);

    TwoRowMatrix x = io::two_row_from_json(io::json::parse(read_data("two_row_example.json")));
    EXPECT_EQ(x.delta(1, 3), FieldElement(-6));
    EXPECT_EQ(io::two_row_from_json(io::to_json(x)).top, x.top);
}

TEST(ReportIo, ViolationFields)
{
    ValidationReport r = validate(load_matrix("exm_as_printed.json"));
    io::json j = io::to_json(r);
    EXPECT_FALSE(j["ok"].get<bool>());
    bool found = false;
    for (const auto& v : j["violations"])
        if (v["rule"] == "Diamond" && v["indices"] == io::json::array({3, 5})) {
            EXPECT_EQ(v["lhs"], "-6");
            EXPECT_EQ(v["rhs"], "6");
            found = true;
        }
    EXPECT_TRUE(found);
}

}  // namespace
