#include "dtc/trees.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>

namespace dtc {

PlaneTree PlaneTree::leaf(int label) {
    PlaneTree t;
    t.label_ = label;
    return t;
}

PlaneTree PlaneTree::node(std::vector<PlaneTree> children) {
    if (children.empty()) {
        throw std::invalid_argument("internal vertex without children");
    }
    PlaneTree t;
    t.leaves_ = 0;
    for (const auto& c : children) {
        t.leaves_ += c.leaves_;
    }
    t.children_ = std::move(children);
    return t;
}

int PlaneTree::internal_count() const {
    int count = 0;
    for_each_internal([&](const PlaneTree&) { ++count; });
    return count;
}

bool PlaneTree::is_binary() const {
    bool binary = true;
    for_each_internal([&](const PlaneTree& v) { binary = binary && v.children_.size() == 2; });
    return binary;
}

std::vector<int> PlaneTree::leaf_labels() const {
    if (is_leaf()) {
        return {label_};
    }
    std::vector<int> out;
    for (const auto& c : children_) {
        auto sub = c.leaf_labels();
        out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
}

std::string PlaneTree::to_string() const {
    if (is_leaf()) {
        return std::to_string(label_);
    }
    std::string out = "(";
    for (std::size_t i = 0; i < children_.size(); ++i) {
        out += (i ? "," : "") + children_[i].to_string();
    }
    return out + ")";
}

namespace {

// Trees on leaves first+1 .. last.
std::vector<PlaneTree> trees_on(int first, int last, int min_children, int max_children) {
    const int n = last - first;
    if (n == 1) {
        return {PlaneTree::leaf(last)};
    }
    std::vector<PlaneTree> out;
    const std::uint64_t masks = std::uint64_t{1} << (n - 1);
    for (std::uint64_t mask = 1; mask < masks; ++mask) {
        int blocks = std::popcount(mask) + 1;
        if (blocks < min_children || blocks > max_children) {
            continue;
        }
        std::vector<std::vector<PlaneTree>> options;
        int start = first;
        for (int k = 0; k < n; ++k) {
            if (k + 1 == n || (mask >> k & 1u)) {
                options.push_back(trees_on(start, first + k + 1, min_children, max_children));
                start = first + k + 1;
            }
        }
        // Cartesian product, first child varying slowest.
        std::vector<std::size_t> pick(options.size(), 0);
        bool done = std::any_of(options.begin(), options.end(), [](const auto& o) { return o.empty(); });
        while (!done) {
            std::vector<PlaneTree> children;
            children.reserve(options.size());
            for (std::size_t j = 0; j < options.size(); ++j) {
                children.push_back(options[j][pick[j]]);
            }
            out.push_back(PlaneTree::node(std::move(children)));
            done = true;
            for (std::size_t j = options.size(); j-- > 0;) {
                if (++pick[j] < options[j].size()) {
                    done = false;
                    break;
                }
                pick[j] = 0;
            }
        }
    }
    return out;
}

void check_leaf_count(const PlaneTree& t, TupleView alpha) {
    if (t.leaf_count() != alpha.size()) {
        throw std::invalid_argument("tree has " + std::to_string(t.leaf_count()) + " leaves but the tuple has " +
                                    std::to_string(alpha.size()) + " parts");
    }
}

// Trees flattened for fast evaluation. Each internal vertex is a split of a
// contiguous leaf range into consecutive child ranges, stored as an index into
// a per-n table of distinct splits. The preorder split sequences of all trees
// are merged into a prefix trie, so a zero factor prunes every tree sharing
// that prefix while each surviving tree still gets its own product.
struct CompiledTrees {
    struct Split {
        std::vector<int> bounds; // first, child boundaries..., last (0-based, half-open)
    };
    struct TrieNode {
        int split = -1;
        int trees_ending = 0;
        std::vector<int> next;
    };
    std::vector<Split> splits;
    std::vector<TrieNode> trie{TrieNode{}};
    int tree_count = 0;
};

void compile_vertices(const PlaneTree& v, int first, std::map<std::vector<int>, int>& ids, CompiledTrees& out,
                      std::vector<int>& tree) {
    if (v.is_leaf()) {
        return;
    }
    std::vector<int> bounds{first};
    int pos = first;
    for (const auto& c : v.children()) {
        pos += c.leaf_count();
        bounds.push_back(pos);
    }
    auto [it, inserted] = ids.try_emplace(bounds, static_cast<int>(out.splits.size()));
    if (inserted) {
        out.splits.push_back({bounds});
    }
    tree.push_back(it->second);
    pos = first;
    for (const auto& c : v.children()) {
        compile_vertices(c, pos, ids, out, tree);
        pos += c.leaf_count();
    }
}

void add_to_trie(CompiledTrees& out, const std::vector<int>& tree) {
    int node = 0;
    for (int split : tree) {
        int child = -1;
        for (int c : out.trie[static_cast<std::size_t>(node)].next) {
            if (out.trie[static_cast<std::size_t>(c)].split == split) {
                child = c;
                break;
            }
        }
        if (child < 0) {
            child = static_cast<int>(out.trie.size());
            out.trie.push_back({split, 0, {}});
            out.trie[static_cast<std::size_t>(node)].next.push_back(child);
        }
        node = child;
    }
    out.trie[static_cast<std::size_t>(node)].trees_ending++;
    out.tree_count++;
}

const CompiledTrees& compiled_trees(int n) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<CompiledTrees>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot) {
        slot = std::make_unique<CompiledTrees>();
        std::map<std::vector<int>, int> ids;
        for (const auto& t : enumerate_trees(n, 2)) {
            std::vector<int> tree;
            compile_vertices(t, 0, ids, *slot, tree);
            add_to_trie(*slot, tree);
        }
    }
    return *slot;
}

void sample_singletons(const Collection& f, TupleView a, const Rational& expected, bool unital) {
    auto fail = [&](TupleView single) {
        std::string what = f.name() + " is " + f(single).to_string() + " on the singleton " + Tuple(single).to_string();
        if (unital) {
            throw NotUnital(what + "; plethystic inverses need value 1 on singletons");
        }
        throw NotSupportedGe2(what + "; the free construction needs support in cardinality >= 2");
    };
    TupleView first = a.slice(0, 1);
    if (f(first) != expected) {
        fail(first);
    }
    if (a.size() > 1) {
        FlatEntries total(a.part(0).begin(), a.part(0).end());
        for (int i = 1; i < a.size(); ++i) {
            auto p = a.part(i);
            for (std::size_t k = 0; k < total.size(); ++k) {
                total[k] += p[k];
            }
        }
        TupleView single(a.rank(), std::span<const int>(total.data(), total.size()));
        if (f(single) != expected) {
            fail(single);
        }
    }
}

Rational eval_free(const Collection& f, TupleView a) {
    sample_singletons(f, a, Rational(), false);
    const int n = a.size();
    if (n == 1) {
        return Rational(1);
    }
    const std::size_t r = static_cast<std::size_t>(a.rank());
    const CompiledTrees& compiled = compiled_trees(n);

    FlatEntries prefix(static_cast<std::size_t>(n + 1) * r, 0);
    for (int k = 0; k < n; ++k) {
        auto part = a.part(k);
        for (std::size_t i = 0; i < r; ++i) {
            prefix[static_cast<std::size_t>(k + 1) * r + i] = prefix[static_cast<std::size_t>(k) * r + i] + part[i];
        }
    }
    // F on each distinct vertex split, computed on first use.
    boost::container::small_vector<std::optional<Rational>, 128> value(compiled.splits.size());
    FlatEntries child;
    auto split_value = [&](int id) -> const Rational& {
        auto& slot = value[static_cast<std::size_t>(id)];
        if (!slot) {
            const auto& b = compiled.splits[static_cast<std::size_t>(id)].bounds;
            child.clear();
            for (std::size_t j = 0; j + 1 < b.size(); ++j) {
                for (std::size_t i = 0; i < r; ++i) {
                    child.push_back(prefix[static_cast<std::size_t>(b[j + 1]) * r + i] -
                                    prefix[static_cast<std::size_t>(b[j]) * r + i]);
                }
            }
            slot = f(TupleView(a.rank(), std::span<const int>(child.data(), child.size())));
        }
        return *slot;
    };

    // Depth-first walk of the trie; `prod` is the product of F over the
    // vertices on the path so far.
    Rational total;
    auto walk = [&](auto&& self, int node, const Rational& prod) -> void {
        const auto& t = compiled.trie[static_cast<std::size_t>(node)];
        for (int i = 0; i < t.trees_ending; ++i) {
            total += prod;
        }
        for (int c : t.next) {
            const Rational& v = split_value(compiled.trie[static_cast<std::size_t>(c)].split);
            if (!v.is_zero()) {
                self(self, c, v.is_one() ? prod : prod * v);
            }
        }
    };
    walk(walk, 0, Rational(1));
    return total;
}

} // namespace

std::vector<PlaneTree> enumerate_trees(int n, int min_children) {
    if (n < 1) {
        throw std::invalid_argument("trees need at least one leaf");
    }
    if (min_children < 2) {
        throw std::invalid_argument("min_children must be at least 2");
    }
    return trees_on(0, n, min_children, n);
}

std::vector<PlaneTree> enumerate_binary(int n) {
    if (n < 1) {
        throw std::invalid_argument("trees need at least one leaf");
    }
    return trees_on(0, n, 2, 2);
}

Tuple children_tuple(const PlaneTree& v, TupleView alpha) {
    if (v.is_leaf()) {
        throw std::invalid_argument("children_tuple needs an internal vertex");
    }
    std::vector<DimVector> parts;
    for (const auto& c : v.children()) {
        DimVector s = DimVector::zero(alpha.rank());
        for (int label : c.leaf_labels()) {
            if (label < 1 || label > alpha.size()) {
                throw std::invalid_argument("leaf label " + std::to_string(label) + " outside the tuple");
            }
            s += DimVector(alpha.part(label - 1));
        }
        parts.push_back(std::move(s));
    }
    return Tuple(parts);
}

Rational tree_eval(const Collection& f, const PlaneTree& t, TupleView alpha) {
    check_leaf_count(t, alpha);
    Rational prod(1);
    t.for_each_internal([&](const PlaneTree& v) {
        if (!prod.is_zero()) {
            prod *= f(children_tuple(v, alpha));
        }
    });
    return prod;
}

Collection free_construction(const Collection& f, EvalOptions options) {
    Collection raw("T(" + f.name() + ")", [f](TupleView a) { return eval_free(f, a); });
    return memoized(raw, options);
}

Collection plethystic_inverse(const Collection& f, EvalOptions options) {
    Collection inverse = free_construction(col_sub(identity_collection(), f), options);
    return Collection(f.name() + "^-1", [f, inverse](TupleView a) {
        sample_singletons(f, a, Rational(1), true);
        return inverse(a);
    });
}

} // namespace dtc
