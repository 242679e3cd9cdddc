#include <numeric>
#include <set>

#include <gtest/gtest.h>

#include "dtc/acceptance.hpp"
#include "dtc/trees.hpp"

using namespace dtc;

namespace {

Tuple tup(std::initializer_list<DimVector> parts) { return Tuple(parts); }

// Plane trees on n leaves with at least min_children (at most max_children)
// children per internal vertex, counted by recursion over the root's
// children sizes.
long long count_trees(int n, int min_children, int max_children) {
    if (n == 1) {
        return 1;
    }
    // ways[k][m]: sequences of k subtrees with m leaves in total.
    std::vector<std::vector<long long>> ways(static_cast<std::size_t>(n) + 1,
                                             std::vector<long long>(static_cast<std::size_t>(n) + 1, 0));
    ways[0][0] = 1;
    for (int k = 1; k <= n; ++k) {
        for (int m = 1; m <= n; ++m) {
            for (int first = 1; first <= std::min(m, n - 1); ++first) {
                ways[k][m] += count_trees(first, min_children, max_children) * ways[k - 1][m - first];
            }
        }
    }
    long long total = 0;
    for (int k = min_children; k <= std::min(n, max_children); ++k) {
        total += ways[k][n];
    }
    return total;
}

bool well_formed(const PlaneTree& t, int min_children) {
    bool ok = true;
    t.for_each_internal([&](const PlaneTree& v) { ok = ok && static_cast<int>(v.children().size()) >= min_children; });
    return ok;
}

} // namespace

TEST(Trees, EnumerationCounts) {
    const std::vector<long long> schroeder{1, 1, 3, 11, 45, 197};
    const std::vector<long long> catalan{1, 1, 2, 5, 14, 42};
    for (int n = 1; n <= 6; ++n) {
        auto all = enumerate_trees(n);
        auto binary = enumerate_binary(n);
        EXPECT_EQ(static_cast<long long>(all.size()), schroeder[static_cast<std::size_t>(n - 1)]);
        EXPECT_EQ(static_cast<long long>(all.size()), count_trees(n, 2, n));
        EXPECT_EQ(static_cast<long long>(binary.size()), catalan[static_cast<std::size_t>(n - 1)]);
        EXPECT_EQ(static_cast<long long>(binary.size()), count_trees(n, 2, 2));
        EXPECT_EQ(static_cast<long long>(enumerate_trees(n, 3).size()), count_trees(n, 3, n));
        std::set<std::string> distinct;
        std::vector<int> labels(static_cast<std::size_t>(n));
        std::iota(labels.begin(), labels.end(), 1);
        for (const auto& t : all) {
            EXPECT_TRUE(well_formed(t, 2));
            EXPECT_EQ(t.leaf_labels(), labels);
            distinct.insert(t.to_string());
        }
        EXPECT_EQ(distinct.size(), all.size());
        for (const auto& t : binary) {
            EXPECT_TRUE(t.is_binary());
            EXPECT_EQ(t.internal_count(), n - 1);
        }
    }
    EXPECT_TRUE(enumerate_trees(1)[0].is_leaf());
    EXPECT_EQ(enumerate_trees(1)[0].internal_count(), 0);
    EXPECT_EQ(enumerate_trees(3).front().to_string(), enumerate_trees(3).front().to_string());
    EXPECT_THROW(enumerate_trees(0), std::invalid_argument);
    EXPECT_THROW(enumerate_trees(3, 1), std::invalid_argument);
}

TEST(Trees, ChildrenTupleAndEval) {
    PlaneTree cherry = PlaneTree::node({PlaneTree::leaf(1), PlaneTree::leaf(2)});
    PlaneTree left = PlaneTree::node({cherry, PlaneTree::leaf(3)});
    Tuple ab = tup({{1, 0}, {0, 1}});
    Tuple abc = tup({{1, 0}, {0, 1}, {2, 1}});
    EXPECT_EQ(children_tuple(cherry, ab), ab);
    EXPECT_EQ(children_tuple(left, abc), tup({{1, 1}, {2, 1}}));
    EXPECT_EQ(children_tuple(left.children()[0], abc), ab);
    EXPECT_EQ(left.to_string(), "((1,2),3)");

    Collection lg = exp_log_family(ExpLogKind::Log);
    Collection f = random_collection(4);
    EXPECT_EQ(tree_eval(f, PlaneTree::leaf(1), tup({{2, 2}})), Rational(1));
    EXPECT_EQ(tree_eval(lg, cherry, ab), Rational(-1, 2));
    EXPECT_EQ(tree_eval(f, left, abc), f(tup({{1, 1}, {2, 1}})) * f(ab));
    EXPECT_THROW(tree_eval(f, left, ab), std::invalid_argument);
}

TEST(FreeConstruction, SmallCases) {
    Collection f = random_collection(8);
    Collection tf = free_construction(f);
    EXPECT_EQ(tf(tup({{1, 2}})), Rational(1));
    Tuple ab = tup({{1, 0}, {1, 1}});
    EXPECT_EQ(tf(ab), f(ab));
    Tuple a = tup({{1, 0}, {0, 1}, {1, 2}});
    DimVector a1{1, 0};
    DimVector a2{0, 1};
    DimVector a3{1, 2};
    Rational expect = f(a) + f(tup({a1 + a2, a3})) * f(tup({a1, a2})) + f(tup({a1, a2 + a3})) * f(tup({a2, a3}));
    EXPECT_EQ(tf(a), expect);
    EXPECT_THROW(free_construction(identity_collection())(ab), NotSupportedGe2);
    EXPECT_THROW(plethystic_inverse(zero_collection())(ab), NotUnital);
}

TEST(FreeConstruction, FixedPointAndInverseLaws) {
    Collection id = identity_collection();
    for (unsigned seed : {8u, 21u}) {
        Collection f = random_collection(seed);
        Collection tf = free_construction(f);
        Collection fixed = col_add(id, plethysm(f, tf));
        Collection one_minus = col_sub(id, f);
        Collection left = plethysm(one_minus, tf);
        Collection right = plethysm(tf, one_minus);
        for_each_tuple_in_box(2, 2, 5, [&](TupleView v) {
            Tuple a(v);
            ASSERT_EQ(tf(a), fixed(a)) << a;
            ASSERT_EQ(left(a), id(a)) << a;
            ASSERT_EQ(right(a), id(a)) << a;
        });
    }
}

TEST(PlethysticInverse, KnownInverses) {
    Collection id = identity_collection();
    Collection id_inv = plethystic_inverse(id);
    for_each_tuple_in_box(2, 2, 4, [&](TupleView v) { ASSERT_EQ(id_inv(v), id(v)); });
    CentralCharge z({Rational(-1), 2}, {2, 1});
    Collection hn_inv = plethystic_inverse(hn(z));
    Collection closed = hn_inverse(z);
    for_each_tuple_in_box(2, 2, 5, [&](TupleView v) { ASSERT_EQ(hn_inv(v), closed(v)) << Tuple(v); });
    Collection exp_inv = plethystic_inverse(exp_log_family(ExpLogKind::Exp));
    Collection lg = exp_log_family(ExpLogKind::Log);
    for_each_tuple_in_box(1, 3, 6, [&](TupleView v) { ASSERT_EQ(exp_inv(v), lg(v)) << Tuple(v); });
}
