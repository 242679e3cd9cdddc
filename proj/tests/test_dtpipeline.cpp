#include <gtest/gtest.h>

#include "dtc/acceptance.hpp"
#include "dtc/dtpipeline.hpp"
#include "dtc/quiver.hpp"
#include "dtc/trees.hpp"

using namespace dtc;

namespace {

RatFunc rf(std::string_view s) { return RatFunc::parse(s); }

const Quiver k1 = Quiver::kronecker(1);
const Quiver k2 = Quiver::kronecker(2);
const CentralCharge z10({1, 0});
const CentralCharge z01({0, 1});
const CentralCharge zmix({Rational(3), -2}, {1, 2});

void expect_equal_up_to(const OneCollection& a, const OneCollection& b, int bound) {
    for (const auto& g : vectors_up_to_degree(a.rank(), bound)) {
        EXPECT_EQ(a(g), b(g)) << a.name() << " vs " << b.name() << " at " << g;
    }
}

} // namespace

TEST(GradedSeries, SetCoeffAndBound) {
    GradedSeries s(k1.skew_form(), 3, GradedSeries::Flavor::LieLike);
    s.set({1, 0}, RatFunc(2));
    EXPECT_EQ(s.coeff({1, 0}), RatFunc(2));
    EXPECT_EQ(s.coeff({0, 1}), RatFunc(0));
    s.set({1, 0}, RatFunc(0));
    EXPECT_TRUE(s.coeffs().empty());
    EXPECT_THROW(s.set({2, 2}, RatFunc(1)), std::out_of_range);
    EXPECT_THROW(s.set({1}, RatFunc(1)), RankMismatch);
}

// Commutative rank 1: exp(c x) = sum c^n x^n / n!.
TEST(GradedSeries, CommutativeExpLog) {
    SkewForm zero(std::vector<std::vector<int>>{{0}});
    GradedSeries lie(zero, 6, GradedSeries::Flavor::LieLike);
    lie.set({1}, RatFunc(3));
    GradedSeries group = lie.exp();
    Rational c(1);
    for (int n = 1; n <= 6; ++n) {
        c = c * 3 / n;
        EXPECT_EQ(group.coeff({n}), RatFunc(c)) << n;
    }
    EXPECT_EQ(group.log(), lie);
}

TEST(GradedSeries, LogExpInverseNoncommutative) {
    for (const auto& q : {k1, k2}) {
        OneCollection a = stacky_A(q);
        GradedSeries group(q.skew_form(), 4, GradedSeries::Flavor::GroupLike);
        for (const auto& g : vectors_up_to_degree(2, 4)) {
            group.set(g, a(g));
        }
        GradedSeries lie = group.log();
        EXPECT_EQ(lie.flavor(), GradedSeries::Flavor::LieLike);
        EXPECT_EQ(lie.exp(), group);
        EXPECT_EQ(lie.exp().log(), lie);
    }
}

TEST(Pipeline, StackyExamples) {
    OneCollection a = stacky_A(k1);
    EXPECT_EQ(stacky_dt(a, z10, 4)({1, 1}), rf("(-y)/(y^2 - 1)"));
    EXPECT_EQ(stacky_dt(a, z01, 4)({1, 1}), RatFunc(0));
    EXPECT_EQ(stacky_dt(a, zmix, 4)({0, 1}), a({0, 1}));
    EXPECT_THROW(stacky_dt(a, z10, 2)({2, 1}), std::out_of_range);
}

TEST(Pipeline, RationalAndAttractorExamples) {
    OneCollection a = stacky_A(k1);
    EXPECT_EQ(rational_dt(a, z10, 4)({1, 1}), rf("(-y)/(y^2 - 1)"));
    EXPECT_EQ(rational_dt(a, z10, 4)({1, 0}), a({1, 0}));
    OneCollection free = stacky_A(Quiver::loops(0));
    EXPECT_EQ(rational_dt(free, CentralCharge({1}), 4)({2}),
              free({2}) - RatFunc(Rational(1, 2)) * free({1}) * free({1}));
    OneCollection abar_star = attractor_dt(a, k1.skew_form(), 4);
    EXPECT_EQ(abar_star({1, 1}), RatFunc(0));
    EXPECT_EQ(abar_star({1, 0}), rf("(-y)/(y^2 - 1)"));
    EXPECT_EQ(attractor_dt(stacky_A(k2), k2.skew_form(), 4)({1, 1}), RatFunc(0));
}

TEST(Pipeline, OmegaBar) {
    EXPECT_EQ(omega_bar(rf("(-y)/(y^2 - 1)")), RatFunc(1));
    EXPECT_EQ(omega_bar(RatFunc(0)), RatFunc(0));
    EXPECT_EQ(omega_bar(rf("(-y^3)/(y^4 - 2*y^2 + 1)")), rf("(y^2)/(y^2 - 1)"));
}

TEST(Pipeline, SelfStability) {
    EXPECT_TRUE(self_stability_check(stacky_A(k1), k1.skew_form(), {1, 1}));
    EXPECT_TRUE(self_stability_check(stacky_A(k2), k2.skew_form(), {2, 1}));
    Quiver free = Quiver::loops(0);
    for (int n = 1; n <= 4; ++n) {
        EXPECT_TRUE(self_stability_check(stacky_A(free), free.skew_form(), {n}));
    }
}

// A = s_Z * A_Z, and the closed form agrees with the recursive solver.
TEST(Pipeline, BasicWallCrossingConsistency) {
    for (const auto& q : {k1, k2}) {
        OneCollection a = stacky_A(q);
        for (const auto& z : {z10, zmix}) {
            OneCollection az = stacky_dt(a, z, 5);
            expect_equal_up_to(truncated(star(hn(z), az), 5), a, 5);
            expect_equal_up_to(az, stacky_dt_recursive(a, z, 5), 5);
        }
    }
}

TEST(Pipeline, AttractorTreeClosureAndTIndependence) {
    for (const auto& q : {k1, k2}) {
        OneCollection a = stacky_A(q);
        OneCollection abar_star = attractor_dt(a, q.skew_form(), 4);
        for (const auto& z : {z10, zmix}) {
            OneCollection direct = rational_dt(a, z, 4);
            for (const Rational& t : {Rational(0), Rational(1), Rational(1, 2), Rational(3)}) {
                expect_equal_up_to(attractor_tree_eval(abar_star, z, q.skew_form(), t, 4), direct, 4);
            }
        }
    }
    OneCollection abar_star = attractor_dt(stacky_A(k1), k1.skew_form(), 4);
    EXPECT_EQ(attractor_tree_eval(abar_star, z10, k1.skew_form(), 0, 4)({1, 1}), rf("(-y)/(y^2 - 1)"));
    EXPECT_EQ(attractor_tree_eval(abar_star, z10, k1.skew_form(), Rational(1, 2), 4)({1, 1}),
              rf("(-y)/(y^2 - 1)"));
    EXPECT_EQ(attractor_tree_eval(abar_star, z10, k1.skew_form(), 0, 4)({0, 1}), abar_star({0, 1}));
}

TEST(Pipeline, AttractorTreeSumMatchesPlethysm) {
    for (const Rational& t : {Rational(0), Rational(1, 2), Rational(2)}) {
        Collection sum = attractor_tree_sum(zmix, k2.skew_form(), t);
        Collection pleth = attractor_tree_collection(zmix, k2.skew_form(), t);
        for_each_tuple_in_box(2, 2, 4, [&](TupleView v) { ASSERT_EQ(sum(v), pleth(v)) << Tuple(v); });
    }
}

TEST(Pipeline, WallCrossing) {
    for (const auto& q : {k1, k2}) {
        OneCollection a = stacky_A(q);
        OneCollection from = rational_dt(a, z10, 5);
        OneCollection to = rational_dt(a, zmix, 5);
        expect_equal_up_to(wallcross(from, z10, z10, 5), from, 5);
        expect_equal_up_to(wallcross(from, z10, zmix, 5), to, 5);
        expect_equal_up_to(wallcross(wallcross(from, z10, zmix, 5), zmix, z10, 5), from, 5);
    }
    OneCollection abar = rational_dt(stacky_A(k1), z10, 3);
    EXPECT_EQ(wallcross(abar, z10, z01, 3)({1, 1}), RatFunc(0));
}

TEST(Pipeline, SeriesLogCheck) {
    EXPECT_TRUE(series_log_check(stacky_A(k1), z10, 4));
    EXPECT_TRUE(series_log_check(stacky_A(k2), z10, 4));
    EXPECT_TRUE(series_log_check(stacky_A(k2), zmix, 4));
    EXPECT_TRUE(series_log_check(stacky_A(Quiver::loops(0)), CentralCharge({1}), 5));
    EXPECT_THROW(series_log_check(stacky_A(k1), CentralCharge({1, 1}), 3), NotGeneric);
}

// On a one-vertex quiver every part is proportional, so exp_par * Abar_* = A.
TEST(Pipeline, ParallelExpRecoversStacky) {
    for (int loops : {0, 2}) {
        Quiver q = Quiver::loops(loops);
        OneCollection a = stacky_A(q);
        OneCollection abar_star = attractor_dt(a, q.skew_form(), 5);
        OneCollection back = star(exp_log_family(ExpLogKind::ExpPar), abar_star);
        expect_equal_up_to(back, a, 5);
    }
}
