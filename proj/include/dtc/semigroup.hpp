#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace dtc {

class ZeroVector : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class RankMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Element of N^r. Members of the semigroup S = N^r \ {0} have a positive entry.
class DimVector {
public:
    DimVector() = default;
    explicit DimVector(std::vector<int> entries);
    DimVector(std::initializer_list<int> entries) : DimVector(std::vector<int>(entries)) {}
    explicit DimVector(std::span<const int> entries) : DimVector(std::vector<int>(entries.begin(), entries.end())) {}

    static DimVector zero(int rank) { return DimVector(std::vector<int>(static_cast<std::size_t>(rank), 0)); }
    static DimVector unit(int rank, int i);
    // `2,3`
    static DimVector parse(std::string_view text);

    int rank() const { return static_cast<int>(entries_.size()); }
    int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
    std::span<const int> entries() const { return entries_; }
    int total_degree() const;
    bool is_zero() const;
    bool in_semigroup() const { return !entries_.empty() && !is_zero(); }
    // Componentwise <=.
    bool dominated_by(const DimVector& other) const;
    // a / gcd(entries).
    DimVector primitive() const;

    DimVector operator+(const DimVector& b) const;
    DimVector operator-(const DimVector& b) const;
    DimVector operator*(int k) const;
    DimVector& operator+=(const DimVector& b) { return *this = *this + b; }

    friend bool operator==(const DimVector&, const DimVector&) = default;
    friend auto operator<=>(const DimVector&, const DimVector&) = default;

    std::string to_string() const;

private:
    std::vector<int> entries_;
};

std::ostream& operator<<(std::ostream& os, const DimVector& v);

// Flat storage used for tuples and memo keys: n*r entries, no heap
// allocation for small tuples.
using FlatEntries = boost::container::small_vector<int, 24>;

// Non-owning view of an ordered tuple (a_1, ..., a_n) of rank-r vectors,
// stored as n*r consecutive entries.
class TupleView {
public:
    TupleView(int rank, std::span<const int> flat) : rank_(rank), flat_(flat) {}

    int rank() const { return rank_; }
    int size() const { return rank_ == 0 ? 0 : static_cast<int>(flat_.size()) / rank_; }
    std::span<const int> flat() const { return flat_; }
    std::span<const int> part(int i) const {
        return flat_.subspan(static_cast<std::size_t>(i) * static_cast<std::size_t>(rank_),
                             static_cast<std::size_t>(rank_));
    }
    TupleView slice(int first, int count) const {
        return {rank_, flat_.subspan(static_cast<std::size_t>(first) * static_cast<std::size_t>(rank_),
                                     static_cast<std::size_t>(count) * static_cast<std::size_t>(rank_))};
    }

private:
    int rank_;
    std::span<const int> flat_;
};

// Ordered nonempty tuple of semigroup elements of a common rank.
class Tuple {
public:
    Tuple() = default;
    // Throws ZeroVector for a zero part and RankMismatch for mixed ranks.
    explicit Tuple(const std::vector<DimVector>& parts);
    Tuple(std::initializer_list<DimVector> parts) : Tuple(std::vector<DimVector>(parts)) {}
    Tuple(int rank, FlatEntries flat) : rank_(rank), flat_(std::move(flat)) {}
    explicit Tuple(TupleView v) : rank_(v.rank()), flat_(v.flat().begin(), v.flat().end()) {}

    int rank() const { return rank_; }
    int size() const { return rank_ == 0 ? 0 : static_cast<int>(flat_.size()) / rank_; }
    DimVector part(int i) const { return DimVector(view().part(i)); }
    std::vector<DimVector> parts() const;
    const FlatEntries& flat() const { return flat_; }
    TupleView view() const { return {rank_, std::span<const int>(flat_.data(), flat_.size())}; }
    operator TupleView() const { return view(); } // NOLINT(google-explicit-constructor)

    friend bool operator==(const Tuple& a, const Tuple& b) { return a.rank_ == b.rank_ && a.flat_ == b.flat_; }
    friend bool operator<(const Tuple& a, const Tuple& b);

    std::string to_string() const;

private:
    int rank_ = 0;
    FlatEntries flat_;
};

std::ostream& operator<<(std::ostream& os, const Tuple& t);

// Order-preserving surjection {1..n} -> {1..m} encoded by its cut set: cut c
// separates positions c and c+1, so m-1 cuts give m consecutive blocks.
// Block indices in this API are 0-based.
class Surjection {
public:
    Surjection(int n, std::vector<int> cuts);
    // Bit k of mask (0 <= k < n-1) set means a cut after position k+1.
    static Surjection from_mask(int n, std::uint64_t mask);

    int source_size() const { return n_; }
    int block_count() const { return static_cast<int>(cuts_.size()) + 1; }
    const std::vector<int>& cuts() const { return cuts_; }
    // Half-open range [first, last) of 0-based positions in block j.
    std::pair<int, int> block(int j) const;

private:
    int n_;
    std::vector<int> cuts_;
};

DimVector tuple_sum(TupleView alpha);
Tuple pushforward(TupleView alpha, const Surjection& pi);
Tuple restrict_to_block(TupleView alpha, const Surjection& pi, int block);

// True iff a and b are positive multiples of a common vector.
bool proportional(std::span<const int> a, std::span<const int> b);
inline bool proportional(const DimVector& a, const DimVector& b) { return proportional(a.entries(), b.entries()); }

struct DecompositionBounds {
    int min_parts = 1;
    std::optional<int> max_parts;
    // Parts of total degree above this bound are never emitted.
    std::optional<int> max_part_degree;
};

// Visits every ordered tuple alpha with tuple_sum(alpha) == gamma within the
// bounds, exactly once, in lexicographic order of the flattened entries.
// Throws ZeroVector if gamma is not in S.
void for_each_decomposition(const DimVector& gamma, const DecompositionBounds& bounds,
                            const std::function<void(TupleView)>& visit);
std::vector<Tuple> decompositions(const DimVector& gamma, const DecompositionBounds& bounds = {});

// Nonzero vectors of the given rank with total degree in [1, max_degree],
// ordered by total degree and then by decreasing lexicographic order
// (e_1 before e_2).
std::vector<DimVector> vectors_up_to_degree(int rank, int max_degree);
// Nonzero vectors with every entry in [0, max_entry], lexicographic.
std::vector<DimVector> vectors_in_box(int rank, int max_entry);
// Vectors v with 0 <= v <= gamma componentwise, excluding zero, lexicographic.
std::vector<DimVector> vectors_below(const DimVector& gamma);

} // namespace dtc

template <>
struct std::hash<dtc::DimVector> {
    std::size_t operator()(const dtc::DimVector& v) const noexcept;
};
