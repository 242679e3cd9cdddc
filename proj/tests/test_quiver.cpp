#include <random>

#include <gtest/gtest.h>

#include "dtc/quiver.hpp"

using namespace dtc;

namespace {

LaurentPoly lp(std::string_view s) { return LaurentPoly::parse(s); }
RatFunc rf(std::string_view s) { return RatFunc::parse(s); }

// Euler form straight from the definition: sum_i a_i b_i - sum_{i->j} a_i b_j.
long long chi(const Quiver& q, const DimVector& a, const DimVector& b) {
    long long v = 0;
    for (int i = 0; i < a.rank(); ++i) {
        v += static_cast<long long>(a[i]) * b[i];
    }
    for (auto [s, t] : q.arrows()) {
        v -= static_cast<long long>(a[s - 1]) * b[t - 1];
    }
    return v;
}

Quiver random_quiver(std::mt19937& gen, int r) {
    std::uniform_int_distribution<int> vertex(1, r);
    std::uniform_int_distribution<int> count(0, 5);
    std::vector<std::pair<int, int>> arrows;
    for (int k = count(gen); k > 0; --k) {
        arrows.emplace_back(vertex(gen), vertex(gen));
    }
    return Quiver(r, std::move(arrows));
}

} // namespace

TEST(Quiver, ParseAndLoad) {
    Quiver q = Quiver::parse("# comment\nvertices 2\narrow 1 2  # first\n\narrow 1 2\n");
    EXPECT_EQ(q.vertex_count(), 2);
    EXPECT_EQ(q.arrows().size(), 2u);
    Quiver file = Quiver::load(DTC_QUIVER_DIR "/kronecker2.quiver");
    EXPECT_EQ(file.arrows(), Quiver::kronecker(2).arrows());
    EXPECT_EQ(Quiver::load(DTC_QUIVER_DIR "/loops2.quiver").arrows(), Quiver::loops(2).arrows());
    for (const char* bad : {"", "arrow 1 2\nvertices 2", "vertices 0", "vertices 2\narrow 1 3",
                            "vertices 2\narrow 1", "vertices 2\nedge 1 2", "vertices 2\nvertices 2",
                            "vertices 2 x"}) {
        EXPECT_THROW(Quiver::parse(bad), ParseError) << bad;
    }
    EXPECT_THROW(Quiver::load("/nonexistent/q.quiver"), std::runtime_error);
    EXPECT_THROW(Quiver(2, {{0, 1}}), std::invalid_argument);
}

TEST(Quiver, EulerAndSkewExamples) {
    Quiver k1 = Quiver::kronecker(1);
    EXPECT_EQ(k1.euler_form({1, 0}, {0, 1}), -1);
    EXPECT_EQ(k1.euler_form({0, 1}, {1, 0}), 0);
    EXPECT_EQ(k1.euler_form({1, 1}, {1, 1}), 1);
    EXPECT_EQ(pair(k1.skew_form(), {1, 0}, {0, 1}), -1);
    EXPECT_EQ(pair(Quiver::kronecker(2).skew_form(), {1, 0}, {0, 1}), -2);
    EXPECT_EQ(pair(Quiver::loops(1).skew_form(), {1}, {1}), 0);
    EXPECT_THROW(k1.euler_form({1}, {1, 0}), RankMismatch);
}

TEST(Quiver, RandomQuiversMatchDefinition) {
    std::mt19937 gen(17);
    for (int trial = 0; trial < 40; ++trial) {
        const int r = 1 + trial % 3;
        Quiver q = random_quiver(gen, r);
        SkewForm b = q.skew_form();
        for (const auto& x : vectors_up_to_degree(r, 3)) {
            for (const auto& y : vectors_up_to_degree(r, 3)) {
                EXPECT_EQ(q.euler_form(x, y), chi(q, x, y));
                EXPECT_EQ(pair(b, x, y), chi(q, x, y) - chi(q, y, x));
                EXPECT_EQ(pair(b, x, y), -pair(b, y, x));
            }
        }
        // Doubling every arrow with its reverse gives a symmetric quiver.
        std::vector<std::pair<int, int>> sym = q.arrows();
        for (auto [s, t] : q.arrows()) {
            sym.emplace_back(t, s);
        }
        Quiver qs(r, sym);
        for (const auto& x : vectors_up_to_degree(r, 3)) {
            for (const auto& y : vectors_up_to_degree(r, 3)) {
                EXPECT_EQ(pair(qs.skew_form(), x, y), 0);
            }
        }
    }
}

TEST(PoincareGL, Values) {
    EXPECT_EQ(poincare_gl(0), LaurentPoly(1));
    EXPECT_EQ(poincare_gl(1), lp("y^2 - 1"));
    EXPECT_EQ(poincare_gl(2), lp("y^4 - 1") * lp("y^4 - y^2"));
    // P(GL_n) at y with y^2 = 4 equals |GL_n(F_4)|.
    for (int n = 0; n <= 3; ++n) {
        long long order = 1;
        long long qn = 1;
        for (int k = 0; k < n; ++k) {
            qn *= 4;
        }
        long long qk = 1;
        for (int k = 0; k < n; ++k) {
            order *= qn - qk;
            qk *= 4;
        }
        EXPECT_EQ(poincare_gl(n).evaluate(Rational(2)), Rational(order)) << n;
    }
    EXPECT_THROW(poincare_gl(-1), std::invalid_argument);
}

TEST(StackyA, ExamplesAndFormula) {
    OneCollection a1 = stacky_A(Quiver::kronecker(1));
    EXPECT_EQ(a1(DimVector{1, 0}), rf("(-y)/(y^2 - 1)"));
    EXPECT_EQ(a1(DimVector{1, 1}), rf("(-y^3)/(y^4 - 2*y^2 + 1)"));
    EXPECT_EQ(stacky_A(Quiver::kronecker(2))(DimVector{1, 1}), rf("(y^4)/(y^4 - 2*y^2 + 1)"));

    std::mt19937 gen(29);
    for (int trial = 0; trial < 10; ++trial) {
        Quiver q = random_quiver(gen, 2);
        OneCollection a = stacky_A(q);
        for (const auto& g : vectors_up_to_degree(2, 4)) {
            long long dim = 0;
            for (auto [s, t] : q.arrows()) {
                dim += static_cast<long long>(g[s - 1]) * g[t - 1];
            }
            RatFunc expect = RatFunc::neg_y_power(static_cast<int>(chi(q, g, g))) *
                             RatFunc(LaurentPoly::monomial(Rational(1), static_cast<int>(2 * dim))) /
                             RatFunc(poincare_gl(g[0]) * poincare_gl(g[1]));
            EXPECT_EQ(a(g), expect);
            EXPECT_FALSE(a(g).is_zero());
        }
    }
}
