#include <gtest/gtest.h>

#include "dtc/stability.hpp"

using namespace dtc;

namespace {

const SkewForm k1_form = SkewForm::parse("0,-1;1,0");

PerturbedScalar ps(Rational c, std::vector<Rational> eps) { return PerturbedScalar(std::move(c), std::move(eps)); }

} // namespace

TEST(CentralCharge, SlopeExamples) {
    CentralCharge z10({1, 0}, {1, 1});
    EXPECT_EQ(slope_compare(z10, {1, 0}, {0, 1}), std::weak_ordering::greater);
    EXPECT_EQ(slope_compare(z10, {1, 1}, {2, 2}), std::weak_ordering::equivalent);
    CentralCharge z01({0, 1}, {1, 1});
    EXPECT_EQ(slope_compare(z01, {1, 0}, {0, 1}), std::weak_ordering::less);
    EXPECT_EQ(z10.slope(DimVector{2, 1}.entries()), Rational(2, 3));
}

TEST(CentralCharge, RejectsBadRho) {
    EXPECT_THROW(CentralCharge({1, 0}, {1, 0}), std::invalid_argument);
    EXPECT_THROW(CentralCharge({1, 0}, {1, -1}), std::invalid_argument);
    EXPECT_THROW(CentralCharge({1, 0}, {1}), std::invalid_argument);
    EXPECT_THROW(CentralCharge({1, 0}).compare(DimVector{1}, DimVector{1}), RankMismatch);
}

// Slopes computed directly by rational division are the oracle; charges
// with huge entries exercise the non-integer-scaled path.
TEST(CentralCharge, PreorderAndSeesawOnGrid) {
    std::vector<CentralCharge> charges{
        CentralCharge({1, 0}),
        CentralCharge({Rational(-1, 3), 2}, {Rational(5, 2), 1}),
        CentralCharge({Rational(1, 1LL << 40), Rational(3)}, {1, Rational(7, 1LL << 41)}),
    };
    auto vs = vectors_up_to_degree(2, 4);
    for (const auto& z : charges) {
        for (const auto& a : vs) {
            EXPECT_EQ(z.compare(a, a * 3), std::weak_ordering::equivalent);
            for (const auto& b : vs) {
                const Rational ma = z.theta_of(a.entries()) / z.rho_of(a.entries());
                const Rational mb = z.theta_of(b.entries()) / z.rho_of(b.entries());
                auto c = z.compare(a, b);
                EXPECT_EQ(c < 0, ma < mb);
                EXPECT_EQ(c == 0, ma == mb);
                // a <= a + b <= b or b <= a + b <= a.
                DimVector s = a + b;
                bool seesaw = (z.compare(a, s) <= 0 && z.compare(s, b) <= 0) ||
                              (z.compare(b, s) <= 0 && z.compare(s, a) <= 0);
                EXPECT_TRUE(seesaw);
            }
        }
    }
}

TEST(SkewForm, PairExamples) {
    EXPECT_EQ(pair(k1_form, {1, 0}, {0, 1}), -1);
    EXPECT_EQ(pair(k1_form, {0, 1}, {1, 0}), 1);
    EXPECT_EQ(pair(k1_form, {1, 1}, {2, 2}), 0);
    SkewForm b = SkewForm::parse("0,2,-1;-2,0,3;1,-3,0");
    for (const auto& x : vectors_up_to_degree(3, 3)) {
        for (const auto& y : vectors_up_to_degree(3, 3)) {
            EXPECT_EQ(pair(b, x, y), -pair(b, y, x));
        }
    }
    EXPECT_THROW(SkewForm::parse("0,1;1,0"), std::invalid_argument);
    EXPECT_THROW(SkewForm::parse("1,0;0,0"), std::invalid_argument);
    EXPECT_THROW(SkewForm::parse("0,1"), std::invalid_argument);
}

TEST(SelfStability, Examples) {
    EXPECT_EQ(self_stability(k1_form, {1, 1}).theta(), (std::vector<Rational>{-1, 1}));
    EXPECT_EQ(self_stability(k1_form, {1, 0}).theta(), (std::vector<Rational>{0, 1}));
    EXPECT_EQ(self_stability(k1_form, {2, 0}).theta(), (std::vector<Rational>{0, 2}));
    EXPECT_EQ(self_stability(k1_form, {2, 0}).rho(), (std::vector<Rational>{1, 1}));
}

TEST(Genericity, Examples) {
    EXPECT_TRUE(is_generic(CentralCharge({1, 0}), 4));
    auto w = genericity_witness(CentralCharge({0, 0}), 4);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->first, (DimVector{1, 0}));
    EXPECT_EQ(w->second, (DimVector{0, 1}));
    EXPECT_TRUE(is_generic(CentralCharge({1, -1}), 3));
    // mu(e_1) = mu(e_2 + e_3) = 1.
    CentralCharge z({1, 2, 0});
    auto w2 = genericity_witness(z, 3);
    ASSERT_TRUE(w2.has_value());
    EXPECT_EQ(z.compare(w2->first, w2->second), std::weak_ordering::equivalent);
    EXPECT_FALSE(proportional(w2->first, w2->second));
}

TEST(PerturbedScalar, Examples) {
    auto half_e1 = ps(Rational(1, 2), {1, 0});
    auto half_e2 = ps(Rational(1, 2), {0, 1});
    EXPECT_GT(half_e1, half_e2);
    EXPECT_GT(PerturbedScalar::zero(2), ps(0, {0, -1}));
    EXPECT_THROW(PerturbedScalar::zero(2).strict_sign(), NonGeneric);
    EXPECT_THROW(strictly_less(half_e1, half_e1), NonGeneric);
    EXPECT_TRUE(strictly_less(half_e2, half_e1));
    EXPECT_EQ((half_e1 - half_e2), ps(0, {1, -1}));
    EXPECT_EQ(half_e1.scaled(Rational(-2)), ps(-1, {-2, 0}));
    EXPECT_EQ((-half_e1 + half_e1), PerturbedScalar::zero(2));
}

TEST(PerturbedScalar, StrictTotalOrderOnDistinctForms) {
    std::vector<PerturbedScalar> xs;
    for (int c = -1; c <= 1; ++c) {
        for (int e1 = -1; e1 <= 1; ++e1) {
            for (int e2 = -1; e2 <= 1; ++e2) {
                xs.push_back(ps(c, {e1, e2}));
            }
        }
    }
    for (const auto& a : xs) {
        for (const auto& b : xs) {
            if (a == b) {
                continue;
            }
            EXPECT_NE(strictly_less(a, b), strictly_less(b, a));
            EXPECT_EQ(strictly_less(a, b), (b - a).strict_sign() > 0);
            for (const auto& c : xs) {
                if (c != b && c != a && strictly_less(a, b) && strictly_less(b, c)) {
                    EXPECT_TRUE(strictly_less(a, c));
                }
            }
        }
    }
}
