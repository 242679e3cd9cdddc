#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "dtc/collections.hpp"
#include "dtc/semigroup.hpp"

namespace dtc {

class NotSupportedGe2 : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class NotUnital : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Ordered rooted tree whose leaves carry labels; trees built by the
// enumerators have leaves 1..n from left to right.
class PlaneTree {
public:
    static PlaneTree leaf(int label);
    static PlaneTree node(std::vector<PlaneTree> children);

    bool is_leaf() const { return children_.empty(); }
    int label() const { return label_; }
    const std::vector<PlaneTree>& children() const { return children_; }
    int leaf_count() const { return leaves_; }
    // Number of internal vertices |V(T)|.
    int internal_count() const;
    bool is_binary() const;
    // Labels of the leaves below this vertex, left to right.
    std::vector<int> leaf_labels() const;

    // Visits internal vertices in preorder (root first).
    template <class Visit>
    void for_each_internal(Visit&& visit) const {
        if (is_leaf()) {
            return;
        }
        visit(*this);
        for (const auto& c : children_) {
            c.for_each_internal(visit);
        }
    }

    friend bool operator==(const PlaneTree&, const PlaneTree&) = default;
    // `1` for a leaf, `(1,(2,3))` for internal vertices.
    std::string to_string() const;

private:
    int label_ = 0;
    int leaves_ = 1;
    std::vector<PlaneTree> children_;
};

// All plane trees on leaves 1..n whose internal vertices have at least
// `min_children` children (min_children >= 2), in a fixed order.
std::vector<PlaneTree> enumerate_trees(int n, int min_children = 2);
// Plane binary trees on leaves 1..n.
std::vector<PlaneTree> enumerate_binary(int n);

// For an internal vertex v: for each child u, the sum of alpha over the
// leaves below u (leaf label i picks alpha_i).
Tuple children_tuple(const PlaneTree& v, TupleView alpha);

// F(T)(alpha) = prod over internal vertices v of F(alpha|_{ch v}).
Rational tree_eval(const Collection& f, const PlaneTree& t, TupleView alpha);

// (TF)(alpha) = sum over plane trees T with >= 2 children per internal
// vertex of F(T)(alpha). F must vanish on singletons; evaluation throws
// NotSupportedGe2 when a sampled singleton value is nonzero.
Collection free_construction(const Collection& f, EvalOptions options = {});

// T(1 - F); F must be 1 on singletons (sampled, NotUnital otherwise).
Collection plethystic_inverse(const Collection& f, EvalOptions options = {});

} // namespace dtc
