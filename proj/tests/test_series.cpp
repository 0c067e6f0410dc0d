#include "svt/motzkin.hpp"
#include "svt/polyseries.hpp"

#include <gtest/gtest.h>

using namespace svt;

namespace {

const MultiPoly X = MultiPoly::x();
const MultiPoly Y = MultiPoly::y();
const MultiPoly A = MultiPoly::alpha();

} // namespace

TEST(MultiPoly, CanonicalText) {
    EXPECT_EQ(MultiPoly().str(), "0");
    EXPECT_EQ((X * X * Y + 3 * A).str(), "x^2*y + 3*alpha");
    EXPECT_EQ((MultiPoly(1) - X).str(), "-x + 1");
    EXPECT_EQ((A - Y).str(), "-y + alpha");
    EXPECT_EQ(pow(X + Y, 2).str(), "x^2 + 2*x*y + y^2");
}

TEST(MultiPoly, ExactDivision) {
    const MultiPoly p = (X + A) * (Y - 2 * A + 1);
    ASSERT_TRUE(p.divide_exact(X + A).has_value());
    EXPECT_EQ(*p.divide_exact(X + A), Y - 2 * A + 1);
    EXPECT_FALSE(p.divide_exact(X + 2).has_value());
    EXPECT_FALSE(MultiPoly(1).divide_exact(X).has_value());
    EXPECT_FALSE(X.divide_exact(MultiPoly()).has_value());
    EXPECT_EQ(*(6 * X).divide_exact(MultiPoly(3)), 2 * X);
    EXPECT_FALSE((5 * X).divide_exact(MultiPoly(3)).has_value());
}

TEST(MultiPoly, DerivativeAndEvaluation) {
    EXPECT_EQ((A * A * X).alpha_derivative(), 2 * A * X);
    EXPECT_EQ((X * Y + 2 * A).evaluate(Rational(1, 2), 3, 5), Rational(23, 2));
}

TEST(ZSeries, GeometricSeries) {
    for (int order : {0, 1, 5, 12}) {
        ZSeries geo(order);
        for (int k = 0; k <= order; ++k) {
            geo[k] = 1;
        }
        const ZSeries one_minus_z = ZSeries(order, 1) - ZSeries::z(order);
        EXPECT_EQ(one_minus_z * geo, ZSeries(order, 1));
        EXPECT_EQ(unit_inverse(one_minus_z), geo);
    }
}

TEST(ZSeries, ExactDivideByPolynomial) {
    ZSeries num(3);
    num[1] = X;
    num[2] = X * Y;
    ZSeries expected(3);
    expected[1] = 1;
    expected[2] = Y;
    EXPECT_EQ(exact_divide(num, ZSeries(3, X)), expected);
    EXPECT_THROW(exact_divide(ZSeries(3, 1), ZSeries(3, X)), NonExactDivision);
}

TEST(ZSeries, ExactDivideShiftsValuation) {
    const ZSeries z = ZSeries::z(6);
    const ZSeries q = exact_divide(z * (ZSeries(6, 1) + X * z), z, "shift");
    EXPECT_EQ(q.order(), 5);
    EXPECT_EQ(q[0], 1);
    EXPECT_EQ(q[1], X);
    try {
        exact_divide(ZSeries(6, 1), z, "constant over z");
        FAIL();
    } catch (const NonExactDivision& e) {
        EXPECT_EQ(e.label(), "constant over z");
        EXPECT_EQ(e.index(), 0);
    }
}

TEST(ZSeries, DerivativesAndSpecialization) {
    const ZSeries s = A * ZSeries::monomial(4, 2);
    EXPECT_EQ(s.alpha_derivative(), ZSeries::monomial(4, 2));
    const ZSeries t = (A * A) * ZSeries::z(3);
    EXPECT_EQ(t.alpha_derivative().specialize(1, 1, 1)[1], 2);
    EXPECT_EQ(ZSeries::monomial(3, 3, 5).derivative(), ZSeries::monomial(2, 2, 15));
    EXPECT_EQ(pow(ZSeries(4, 1) + ZSeries::z(4), 3)[2], 3);
    EXPECT_EQ(ZSeries::monomial(2, 2, A).dump(), "0: 0\n1: 0\n2: alpha\n");
}

TEST(MotzkinSeries, FirstCoefficients) {
    const ZSeries m = solve_M(4);
    EXPECT_EQ(m[0], 1);
    EXPECT_EQ(m[1], X + Y);
    EXPECT_EQ(m[2], pow(X + Y, 2) + A);
    EXPECT_EQ(m.specialize(1, 1, 1)[2], 5);

    const ZSeries m0 = solve_M0(4);
    EXPECT_EQ(m0[0], 1);
    EXPECT_EQ(m0[1], Y);
    EXPECT_EQ(m0[2], Y * Y + A);
}

TEST(MotzkinSeries, DefiningEquationsToOrderTwenty) {
    const ZSeries m = solve_M(20);
    EXPECT_TRUE(residual_M_equation(m).is_zero());
    EXPECT_TRUE(residual_identity_x(m).is_zero());
    EXPECT_TRUE(residual_identity_y(m).is_zero());
    EXPECT_TRUE(residual_identity_diff(m).is_zero());
    EXPECT_TRUE(residual_M0_equation(solve_M0(20), m).is_zero());
}

TEST(MotzkinSeries, Reversion) {
    EXPECT_TRUE(check_reversion(0).ok);
    EXPECT_TRUE(check_reversion(10).ok);
    EXPECT_TRUE(check_reversion(20).ok);
    ZSeries bad = solve_M(8);
    bad[5] += 1;
    const ReversionResult r = check_reversion(bad);
    EXPECT_FALSE(r.ok);
    EXPECT_EQ(r.first_bad_index, 6);
}

TEST(MotzkinSeries, SpecializedWeightsAgreeWithSymbolic) {
    const auto sym = solve_M(10).specialize(2, 3, 5);
    const auto num = solve_M(10, Weights::constant(2, 3, 5));
    for (int k = 0; k <= 10; ++k) {
        EXPECT_EQ(sym[static_cast<std::size_t>(k)], Rational(*num[k].as_constant()));
    }
}

// [z^n]M and [z^n]M0 against weight sums over enumerated excursions.
TEST(MotzkinSeries, MatchesExcursionWeights) {
    const ZSeries m = solve_M(8);
    const ZSeries m0 = solve_M0(8);
    for (int n = 0; n <= 8; ++n) {
        for (bool no_axis_umber : {false, true}) {
            MultiPoly sum;
            for_each_free_excursion(n, no_axis_umber, [&](const ColouredPath& p) {
                const PathWeight w = weight(p);
                sum.add_term({w.c, w.d, w.e}, 1);
            });
            EXPECT_EQ(sum, no_axis_umber ? m0[n] : m[n]) << "n=" << n;
        }
    }
}
