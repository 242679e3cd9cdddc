#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "dtc/collections.hpp"
#include "dtc/ratfunc.hpp"
#include "dtc/stability.hpp"
#include "dtc/trees.hpp"

namespace dtc {

class NotLyndon : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Element of the free associative algebra on S: a finite combination of
// words (tuples of dimension vectors) with nonzero rational coefficients.
class WordCombo {
public:
    WordCombo() = default;
    static WordCombo word(const Tuple& w, const Rational& c = Rational(1));
    // Component of a collection on all tuples summing to gamma.
    static WordCombo of_collection(const Collection& f, const DimVector& gamma);

    const std::map<Tuple, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Tuple& w) const;
    void add(const Tuple& w, const Rational& c);

    WordCombo operator+(const WordCombo& b) const;
    WordCombo operator-(const WordCombo& b) const;
    WordCombo scaled(const Rational& c) const;
    // Concatenation product.
    WordCombo operator*(const WordCombo& b) const;
    // Terms whose words have exactly n letters.
    WordCombo length_component(int n) const;

    friend bool operator==(const WordCombo&, const WordCombo&) = default;
    std::string to_string() const;

private:
    std::map<Tuple, Rational> terms_;
};

// [a, b] = ab - ba.
WordCombo commutator(const WordCombo& a, const WordCombo& b);

// Each word a_1...a_n goes to [[...[a_1, a_2], ...], a_n], extended linearly.
WordCombo dynkin_map(const WordCombo& v);
// Dynkin-Specht-Wever: v is Lie iff D(v_n) = n v_n for each length-n part.
bool is_lie(const WordCombo& v);

// Collection with the values of v on its words and zero elsewhere.
Collection combo_collection(std::string name, const WordCombo& v);

// Words over the alphabet {0 < 1 < ... < k-1}.
using Word = std::vector<int>;
bool is_lyndon(const Word& w);
// All Lyndon words of length 1..max_length in lexicographic order (Duval).
std::vector<Word> lyndon_words(int alphabet_size, int max_length);
// Longest proper Lyndon suffix v of a Lyndon word w = uv (length >= 2).
std::pair<Word, Word> standard_factorization(const Word& w);
// Bracketing via standard factorization, letters mapped through `alphabet`.
// Throws NotLyndon.
WordCombo lyndon_bracket(const Word& w, const std::vector<DimVector>& alphabet);

// Coefficient and degree of an element c x^gamma of the quantum affine plane.
struct GradedTerm {
    RatFunc coefficient;
    DimVector degree;
};

// Nested commutators [u, v] = c_u c_v ((-y)^<g_u,g_v> - (-y)^<g_v,g_u>) x^(g_u+g_v)
// over a binary tree, with leaf i carrying coeffs[i] x^alpha_i (unit
// coefficients when coeffs is empty).
GradedTerm bracket_eval(const PlaneTree& t, TupleView alpha, const SkewForm& form,
                        const std::vector<RatFunc>& coeffs = {});

// ((-y)^m - (-y)^-m) / (y^-1 - y).
RatFunc kappa(int m);

// Flow tree coefficient eps_Z(T, alpha, sigma) in {0, 1}; sigma[i] is the
// 0-based index of the part placed at leaf i + 1. Throws NonGeneric when a
// required strict comparison is between identical perturbed forms.
int flow_tree_coeff(const PlaneTree& t, TupleView alpha, const std::vector<int>& sigma, const CentralCharge& z,
                    const SkewForm& form);

using DegreeFunction = std::function<RatFunc(const DimVector&)>;

// Omega_bar_Z(gamma) by the flow tree formula from Omega_bar_*: sums over
// multisets of parts (weight 1/|Aut|), permutations and binary trees of
// eps * prod kappa(<left, right>) * prod Omega_bar_*(parts).
RatFunc flow_tree_dt(const DegreeFunction& omega_bar_star, const CentralCharge& z, const SkewForm& form,
                     const DimVector& gamma);
// Same sum with pi(T, alpha^sigma) evaluated by bracket_eval on
// Abar_* = Omega_bar_* / (y^-1 - y), converted back with omega_bar.
RatFunc flow_tree_dt_brackets(const DegreeFunction& omega_bar_star, const CentralCharge& z, const SkewForm& form,
                              const DimVector& gamma);

} // namespace dtc
