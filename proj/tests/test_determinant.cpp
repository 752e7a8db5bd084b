#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

namespace {

using namespace frieze;
using namespace frieze::testing;

TEST(Determinant, RunningExample)
{
    FriezeMatrix m = build_from_seeds(exm_seeds(), q5());
    const FieldElement expected = e5("-384 - 192*sqrt(5)");
    EXPECT_EQ(det_closed_form(m), expected);
    EXPECT_EQ(det_elimination(m.matrix()), expected);
    EXPECT_EQ(det_cofactor(m.matrix()), expected);
}

TEST(Determinant, EliminationAgreesWithCofactorOracle)
{
    Rng rng(41);
    for (int n = 0; n < 80; ++n) {
        const std::size_t size = 1 + n % 8;
        const FieldDescriptor& f = n % 2 ? q5() : FieldDescriptor::rational();
        SquareMatrix m(size, f);
        std::uniform_int_distribution<int> sparse(0, 3);
        for (std::size_t i = 1; i <= size; ++i)
            for (std::size_t j = 1; j <= size; ++j)
                if (sparse(rng))
                    m.set(i, j, random_element(rng, f));
        EXPECT_EQ(det_elimination(m), det_cofactor(m));
    }
}

TEST(Determinant, SingularMatrixIsZero)
{
    SquareMatrix m(3);
    for (std::size_t j = 1; j <= 3; ++j) {
        m.set(1, j, FieldElement(static_cast<int>(j)));
        m.set(2, j, FieldElement(static_cast<int>(2 * j)));
        m.set(3, j, FieldElement(1));
    }
    EXPECT_TRUE(det_elimination(m).is_zero());
}

TEST(Determinant, ClosedFormOnRandomFriezeMatrices)
{
    Rng rng(42);
    for (int n = 0; n < 60; ++n) {
        FriezeMatrix m = random_frieze(rng, 2 + n % 9, n % 2 ? q5() : FieldDescriptor::rational());
        EXPECT_EQ(det_closed_form(m), det_cofactor(m.matrix()));
    }
}

TEST(Determinant, TwoByTwo)
{
    SquareMatrix m(2);
    m.set_symmetric(1, 2, FieldElement(Rational(3, 2)));
    FriezeMatrix f = FriezeMatrix::from_matrix(m);
    EXPECT_EQ(det_closed_form(f), FieldElement(Rational(-9, 4)));
    EXPECT_EQ(det_elimination(m), FieldElement(Rational(-9, 4)));
}

}  // namespace
