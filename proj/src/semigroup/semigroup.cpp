#include "dtc/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "dtc/rational.hpp"

namespace dtc {

DimVector::DimVector(std::vector<int> entries) : entries_(std::move(entries)) {
    for (int e : entries_) {
        if (e < 0) {
            throw std::invalid_argument("dimension vector entries must be nonnegative");
        }
    }
}

DimVector DimVector::unit(int rank, int i) {
    std::vector<int> e(static_cast<std::size_t>(rank), 0);
    e.at(static_cast<std::size_t>(i)) = 1;
    return DimVector(std::move(e));
}

DimVector DimVector::parse(std::string_view text) {
    std::vector<int> entries;
    std::string item;
    std::stringstream ss{std::string(text)};
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw ParseError("malformed dimension vector '" + std::string(text) + "'");
        }
        if (item.find_first_not_of(' ', used) != std::string::npos || value < 0) {
            throw ParseError("malformed dimension vector '" + std::string(text) + "'");
        }
        entries.push_back(value);
    }
    if (entries.empty()) {
        throw ParseError("empty dimension vector");
    }
    return DimVector(std::move(entries));
}

int DimVector::total_degree() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

bool DimVector::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](int e) { return e == 0; });
}

bool DimVector::dominated_by(const DimVector& other) const {
    if (rank() != other.rank()) {
        throw RankMismatch("rank mismatch in comparison");
    }
    for (int i = 0; i < rank(); ++i) {
        if ((*this)[i] > other[i]) {
            return false;
        }
    }
    return true;
}

DimVector DimVector::primitive() const {
    int g = 0;
    for (int e : entries_) {
        g = std::gcd(g, e);
    }
    if (g <= 1) {
        return *this;
    }
    std::vector<int> e = entries_;
    for (int& x : e) {
        x /= g;
    }
    return DimVector(std::move(e));
}

DimVector DimVector::operator+(const DimVector& b) const {
    if (rank() != b.rank()) {
        throw RankMismatch("rank mismatch in addition");
    }
    std::vector<int> e = entries_;
    for (int i = 0; i < rank(); ++i) {
        e[static_cast<std::size_t>(i)] += b[i];
    }
    return DimVector(std::move(e));
}

DimVector DimVector::operator-(const DimVector& b) const {
    if (rank() != b.rank()) {
        throw RankMismatch("rank mismatch in subtraction");
    }
    std::vector<int> e = entries_;
    for (int i = 0; i < rank(); ++i) {
        e[static_cast<std::size_t>(i)] -= b[i];
    }
    return DimVector(std::move(e));
}

DimVector DimVector::operator*(int k) const {
    std::vector<int> e = entries_;
    for (int& x : e) {
        x *= k;
    }
    return DimVector(std::move(e));
}

std::string DimVector::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += std::to_string(entries_[i]);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const DimVector& v) { return os << "(" << v.to_string() << ")"; }

Tuple::Tuple(const std::vector<DimVector>& parts) {
    if (parts.empty()) {
        throw std::invalid_argument("tuples must be nonempty");
    }
    rank_ = parts.front().rank();
    for (const auto& p : parts) {
        if (p.rank() != rank_) {
            throw RankMismatch("tuple parts of different ranks");
        }
        if (!p.in_semigroup()) {
            throw ZeroVector("tuple part " + p.to_string() + " is not in the semigroup");
        }
        flat_.insert(flat_.end(), p.entries().begin(), p.entries().end());
    }
}

std::vector<DimVector> Tuple::parts() const {
    std::vector<DimVector> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int i = 0; i < size(); ++i) {
        out.push_back(part(i));
    }
    return out;
}

bool operator<(const Tuple& a, const Tuple& b) {
    if (a.rank_ != b.rank_) {
        return a.rank_ < b.rank_;
    }
    return std::lexicographical_compare(a.flat_.begin(), a.flat_.end(), b.flat_.begin(), b.flat_.end());
}

std::string Tuple::to_string() const {
    std::string out = "(";
    for (int i = 0; i < size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += "(" + part(i).to_string() + ")";
    }
    return out + ")";
}

std::ostream& operator<<(std::ostream& os, const Tuple& t) { return os << t.to_string(); }

Surjection::Surjection(int n, std::vector<int> cuts) : n_(n), cuts_(std::move(cuts)) {
    if (n < 1) {
        throw std::invalid_argument("surjection source must be nonempty");
    }
    for (std::size_t i = 0; i < cuts_.size(); ++i) {
        if (cuts_[i] < 1 || cuts_[i] > n - 1 || (i > 0 && cuts_[i] <= cuts_[i - 1])) {
            throw std::invalid_argument("cut set must be strictly increasing within 1..n-1");
        }
    }
}

Surjection Surjection::from_mask(int n, std::uint64_t mask) {
    std::vector<int> cuts;
    for (int k = 0; k + 1 < n; ++k) {
        if (mask >> k & 1u) {
            cuts.push_back(k + 1);
        }
    }
    return Surjection(n, std::move(cuts));
}

std::pair<int, int> Surjection::block(int j) const {
    if (j < 0 || j >= block_count()) {
        throw std::out_of_range("block index out of range");
    }
    int first = j == 0 ? 0 : cuts_[static_cast<std::size_t>(j) - 1];
    int last = j + 1 == block_count() ? n_ : cuts_[static_cast<std::size_t>(j)];
    return {first, last};
}

DimVector tuple_sum(TupleView alpha) {
    std::vector<int> sum(static_cast<std::size_t>(alpha.rank()), 0);
    for (int i = 0; i < alpha.size(); ++i) {
        auto p = alpha.part(i);
        for (int k = 0; k < alpha.rank(); ++k) {
            sum[static_cast<std::size_t>(k)] += p[static_cast<std::size_t>(k)];
        }
    }
    return DimVector(std::move(sum));
}

Tuple pushforward(TupleView alpha, const Surjection& pi) {
    if (pi.source_size() != alpha.size()) {
        throw std::invalid_argument("surjection source size differs from tuple length");
    }
    FlatEntries flat;
    for (int j = 0; j < pi.block_count(); ++j) {
        auto [first, last] = pi.block(j);
        DimVector s = tuple_sum(alpha.slice(first, last - first));
        flat.insert(flat.end(), s.entries().begin(), s.entries().end());
    }
    return Tuple(alpha.rank(), std::move(flat));
}

Tuple restrict_to_block(TupleView alpha, const Surjection& pi, int block) {
    if (pi.source_size() != alpha.size()) {
        throw std::invalid_argument("surjection source size differs from tuple length");
    }
    auto [first, last] = pi.block(block);
    return Tuple(alpha.slice(first, last - first));
}

bool proportional(std::span<const int> a, std::span<const int> b) {
    if (a.size() != b.size()) {
        throw RankMismatch("rank mismatch in proportionality test");
    }
    // a || b iff a_i * b_j == a_j * b_i for all i, j, given both are nonzero
    // and nonnegative; it suffices to pivot on one nonzero coordinate of a.
    std::size_t pivot = 0;
    while (pivot < a.size() && a[pivot] == 0) {
        ++pivot;
    }
    if (pivot == a.size() || b[pivot] == 0) {
        return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (static_cast<long long>(a[i]) * b[pivot] != static_cast<long long>(b[i]) * a[pivot]) {
            return false;
        }
    }
    return true;
}

namespace {

// Vectors v with 0 <= v <= bound, v != 0, in lexicographic order.
void below_rec(const DimVector& bound, std::vector<int>& cur, std::size_t k, std::vector<DimVector>& out) {
    if (k == cur.size()) {
        if (std::any_of(cur.begin(), cur.end(), [](int e) { return e != 0; })) {
            out.emplace_back(cur);
        }
        return;
    }
    for (int v = 0; v <= bound[static_cast<int>(k)]; ++v) {
        cur[k] = v;
        below_rec(bound, cur, k + 1, out);
    }
}

struct DecompositionWalker {
    int rank;
    const DecompositionBounds& bounds;
    const std::function<void(TupleView)>& visit;
    FlatEntries flat;
    std::vector<int> remaining;
    int parts = 0;

    void step() {
        bool remaining_zero = std::all_of(remaining.begin(), remaining.end(), [](int e) { return e == 0; });
        if (remaining_zero) {
            if (parts >= bounds.min_parts) {
                visit(TupleView(rank, std::span<const int>(flat.data(), flat.size())));
            }
            return;
        }
        if (bounds.max_parts && parts >= *bounds.max_parts) {
            return;
        }
        std::vector<int> part(static_cast<std::size_t>(rank), 0);
        choose(part, 0, 0);
    }

    // Enumerates the next part in lexicographic order, then recurses.
    void choose(std::vector<int>& part, std::size_t k, int degree) {
        if (k == part.size()) {
            if (degree == 0) {
                return;
            }
            if (bounds.max_part_degree && degree > *bounds.max_part_degree) {
                return;
            }
            flat.insert(flat.end(), part.begin(), part.end());
            for (std::size_t i = 0; i < part.size(); ++i) {
                remaining[i] -= part[i];
            }
            ++parts;
            step();
            --parts;
            for (std::size_t i = 0; i < part.size(); ++i) {
                remaining[i] += part[i];
            }
            flat.resize(flat.size() - part.size());
            return;
        }
        for (int v = 0; v <= remaining[k]; ++v) {
            part[k] = v;
            choose(part, k + 1, degree + v);
        }
        part[k] = 0;
    }
};

} // namespace

void for_each_decomposition(const DimVector& gamma, const DecompositionBounds& bounds,
                            const std::function<void(TupleView)>& visit) {
    if (!gamma.in_semigroup()) {
        throw ZeroVector("cannot decompose " + gamma.to_string() + ": not in the semigroup");
    }
    DecompositionWalker walker{gamma.rank(), bounds, visit, {}, std::vector<int>(gamma.entries().begin(), gamma.entries().end())};
    walker.step();
}

std::vector<Tuple> decompositions(const DimVector& gamma, const DecompositionBounds& bounds) {
    std::vector<Tuple> out;
    for_each_decomposition(gamma, bounds, [&](TupleView t) { out.emplace_back(t); });
    return out;
}

std::vector<DimVector> vectors_up_to_degree(int rank, int max_degree) {
    std::vector<DimVector> all = vectors_in_box(rank, max_degree);
    std::vector<DimVector> out;
    for (auto& v : all) {
        if (v.total_degree() <= max_degree) {
            out.push_back(std::move(v));
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const DimVector& a, const DimVector& b) {
        if (a.total_degree() != b.total_degree()) {
            return a.total_degree() < b.total_degree();
        }
        return b < a;
    });
    return out;
}

std::vector<DimVector> vectors_in_box(int rank, int max_entry) {
    return vectors_below(DimVector(std::vector<int>(static_cast<std::size_t>(rank), max_entry)));
}

std::vector<DimVector> vectors_below(const DimVector& gamma) {
    std::vector<DimVector> out;
    std::vector<int> cur(static_cast<std::size_t>(gamma.rank()), 0);
    below_rec(gamma, cur, 0, out);
    return out;
}

} // namespace dtc

std::size_t std::hash<dtc::DimVector>::operator()(const dtc::DimVector& v) const noexcept {
    std::size_t h = 0;
    for (int e : v.entries()) {
        h = h * 1000003u + static_cast<std::size_t>(e);
    }
    return h;
}
