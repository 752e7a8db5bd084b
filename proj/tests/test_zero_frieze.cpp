#include "support/fixtures.hpp"
#include "support/generators.hpp"

#include <gtest/gtest.h>

namespace {

using namespace frieze;
using namespace frieze::testing;

ZeroFrieze tkf_example()
{
    return io::zero_frieze_from_json(io::json::parse(read_data("tkf_example.json")));
}

FieldElement frac(std::int64_t p, std::int64_t q) { return FieldElement(Rational(p, q)); }

TEST(ZeroFrieze, PrintedRowsFromFirstTwoRows)
{
    ZeroFrieze t = tkf_example();
    const FieldElement row3[] = {frac(-1, 4), frac(-5, 4), frac(3, 2), frac(3, 2), frac(-5, 4)};
    const FieldElement row4[] = {frac(-3, 16), frac(5, 8), frac(9, 8), frac(5, 8)};
    const FieldElement row5[] = {frac(3, 32), frac(15, 32), frac(15, 32)};
    for (std::int64_t i = -1; i <= 3; ++i)
        EXPECT_EQ(t.entry(i, i + 1), row3[i + 1]) << i;
    for (std::int64_t i = -1; i <= 2; ++i)
        EXPECT_EQ(t.entry(i, i + 2), row4[i + 1]) << i;
    for (std::int64_t i = -1; i <= 1; ++i)
        EXPECT_EQ(t.entry(i, i + 3), row5[i + 1]) << i;
    EXPECT_TRUE(check_zero_diamond(t, {-1, 3, 5}).ok());
}

TEST(ZeroFrieze, WindowAndIndexErrors)
{
    ZeroFrieze t = tkf_example();
    try {
        t.entry(2, 6);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::WindowExceeded);
    }
    EXPECT_THROW(t.entry(3, 1), Error);
}

TEST(ZeroFrieze, FromConstantFrieze)
{
    InfiniteFrieze f(SeedSequence::constant(FieldElement(2)), SeedSequence::constant(FieldElement(3)));
    ZeroFrieze t = from_frieze(f, 2);
    for (std::int64_t i = -2; i <= 5; ++i)
        EXPECT_EQ(t.entry(i, i - 1), FieldElement(-4));
    EXPECT_EQ(t.entry(1, 1), FieldElement(-6));
    EXPECT_EQ(t.entry(2, 2), FieldElement(2));
    EXPECT_EQ(t.entry(3, 3), FieldElement(-6));
    EXPECT_EQ(t.entry(4, 4), frac(-10, 3));
    EXPECT_TRUE(check_zero_diamond(t, {-2, 8, 6}).ok());
}

TEST(ZeroFrieze, TriangularBlockOfExtractedMatrix)
{
    Rng rng(61);
    int checked = 0;
    while (checked < 20) {
        const FieldDescriptor& fd = checked % 2 ? q5() : FieldDescriptor::rational();
        std::vector<FieldElement> x;
        std::vector<FieldElement> y;
        for (int i = 0; i < 3; ++i) {
            x.push_back(random_element(rng, fd));
            y.push_back(random_element(rng, fd));
        }
        InfiniteFrieze f(SeedSequence::cycle(x), SeedSequence::cycle(y), fd);
        const std::int64_t k = checked % 4;
        const std::size_t n = 3 + checked % 5;
        try {
            FriezeMatrix minus = extract_m_minus(f, k, n);
            TriangularMatrix tp = triangular_closed_form(extract_m_plus(f, k, n));
            TriangularMatrix tm = triangular_closed_form(minus);
            ZeroFrieze t = from_frieze(f, k);
            // right half: the upper part of T+ from row 2 on, diagonal = v row
            for (std::int64_t i = 2; i <= static_cast<std::int64_t>(n); ++i)
                for (std::int64_t j = i; j <= static_cast<std::int64_t>(n); ++j)
                    EXPECT_EQ(t.entry(i, j), tp(i, j)) << k << ":" << i << "," << j;
            // left half: diagonal of T- and -2 times the superdiagonal of M-, read backwards
            for (std::int64_t a = 3; a <= static_cast<std::int64_t>(n); ++a)
                EXPECT_EQ(t.entry(4 - a, 4 - a), tm(a, a)) << k << ":" << a;
            for (std::int64_t a = 2; a < static_cast<std::int64_t>(n); ++a)
                EXPECT_EQ(t.entry(4 - a, 3 - a), FieldElement(-2) * minus(a, a + 1)) << k << ":" << a;
        } catch (const Error& e) {
            ASSERT_EQ(e.kind(), ErrorKind::ZeroEntry);
            continue;
        }
        ++checked;
    }
}

TEST(ZeroFrieze, RankOneBlocks)
{
    Rng rng(62);
    int checked = 0;
    while (checked < 25) {
        const FieldDescriptor& fd = checked % 2 ? q5() : FieldDescriptor::rational();
        std::vector<FieldElement> u;
        std::vector<FieldElement> v;
        for (int i = 0; i < 2 + checked % 3; ++i) {
            u.push_back(random_element(rng, fd));
            v.push_back(random_element(rng, fd));
        }
        ZeroFrieze t(SeedSequence::cycle(u), SeedSequence::cycle(v), fd);
        const std::int64_t r0 = checked % 3 - 1;
        const BlockWindow w{r0, r0 + 2 + checked % 3, r0 + 2 + checked % 3 - 1 + checked % 2, r0 + 6};
        ZeroGrid grid;
        try {
            grid = evaluate(t, w);
        } catch (const Error& e) {
            ASSERT_EQ(e.kind(), ErrorKind::ZeroEntry);
            continue;
        }
        Rank1Factors factors = rank1_factorize(grid, w);
        EXPECT_EQ(factors.a.at(w.row_first), FieldElement(1));
        for (const auto& [pos, value] : grid.cells) {
            EXPECT_EQ(factors.a.at(pos.first) * factors.b.at(pos.second), value);
            // independent check: every 2x2 minor with the top-left corner vanishes
            const FieldElement& corner = *grid.find(w.row_first, w.col_first);
            EXPECT_EQ(corner * value, *grid.find(w.row_first, pos.second) * *grid.find(pos.first, w.col_first));
        }

        for (const auto& [pos, value] : grid.cells) {
            ZeroGrid bad = grid;
            bad.cells.at(pos) = value + FieldElement(1);
            if (bad.cells.at(pos).is_zero())
                bad.cells.at(pos) = value * FieldElement(2);
            try {
                rank1_factorize(bad, w);
                ADD_FAILURE() << "perturbation at " << pos.first << "," << pos.second << " undetected";
            } catch (const Error& e) {
                EXPECT_EQ(e.kind(), ErrorKind::FactorizationImpossible);
            }
        }
        ++checked;
    }
}

TEST(ZeroFrieze, BlockWindowMustStayAboveSubdiagonal)
{
    ZeroFrieze t = tkf_example();
    EXPECT_THROW(evaluate(t, BlockWindow{0, 3, 1, 2}), Error);
}

TEST(ZeroFrieze, CheckDetectsBrokenDiamond)
{
    ZeroFrieze t = tkf_example();
    ZeroGrid grid = evaluate(t, DiagonalWindow{-1, 3, 4});
    grid.cells.at({0, 1}) = grid.cells.at({0, 1}) * FieldElement(3);
    ValidationReport r = check_zero_diamond(grid);
    EXPECT_FALSE(r.ok());
    EXPECT_TRUE(r.has(Rule::ZeroDiamond, {0, 1}) || r.has(Rule::ZeroDiamond, {0, 0}) ||
                r.has(Rule::ZeroDiamond, {-1, 0}));
}

}  // namespace
