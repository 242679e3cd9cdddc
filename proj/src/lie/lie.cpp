#include "dtc/lie.hpp"

#include <algorithm>
#include <numeric>

namespace dtc {

WordCombo WordCombo::word(const Tuple& w, const Rational& c) {
    WordCombo out;
    out.add(w, c);
    return out;
}

WordCombo WordCombo::of_collection(const Collection& f, const DimVector& gamma) {
    WordCombo out;
    for_each_decomposition(gamma, {}, [&](TupleView a) { out.add(Tuple(a), f(a)); });
    return out;
}

Rational WordCombo::coefficient(const Tuple& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational() : it->second;
}

void WordCombo::add(const Tuple& w, const Rational& c) {
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

WordCombo WordCombo::operator+(const WordCombo& b) const {
    WordCombo out = *this;
    for (const auto& [w, c] : b.terms_) {
        out.add(w, c);
    }
    return out;
}

WordCombo WordCombo::operator-(const WordCombo& b) const { return *this + b.scaled(Rational(-1)); }

WordCombo WordCombo::scaled(const Rational& c) const {
    WordCombo out;
    if (c.is_zero()) {
        return out;
    }
    for (const auto& [w, v] : terms_) {
        out.terms_.emplace(w, v * c);
    }
    return out;
}

WordCombo WordCombo::operator*(const WordCombo& b) const {
    WordCombo out;
    for (const auto& [u, cu] : terms_) {
        for (const auto& [v, cv] : b.terms_) {
            if (u.rank() != v.rank()) {
                throw RankMismatch("words of different rank");
            }
            FlatEntries flat = u.flat();
            flat.insert(flat.end(), v.flat().begin(), v.flat().end());
            out.add(Tuple(u.rank(), std::move(flat)), cu * cv);
        }
    }
    return out;
}

WordCombo WordCombo::length_component(int n) const {
    WordCombo out;
    for (const auto& [w, c] : terms_) {
        if (w.size() == n) {
            out.terms_.emplace(w, c);
        }
    }
    return out;
}

std::string WordCombo::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    for (const auto& [w, c] : terms_) {
        out += (out.empty() ? "" : " + ") + c.to_string() + "*" + w.to_string();
    }
    return out;
}

WordCombo commutator(const WordCombo& a, const WordCombo& b) { return a * b - b * a; }

WordCombo dynkin_map(const WordCombo& v) {
    WordCombo out;
    for (const auto& [w, c] : v.terms()) {
        WordCombo acc = WordCombo::word(Tuple(w.view().slice(0, 1)));
        for (int k = 1; k < w.size(); ++k) {
            acc = commutator(acc, WordCombo::word(Tuple(w.view().slice(k, 1))));
        }
        out = out + acc.scaled(c);
    }
    return out;
}

bool is_lie(const WordCombo& v) {
    int max_len = 0;
    for (const auto& [w, c] : v.terms()) {
        max_len = std::max(max_len, w.size());
    }
    for (int n = 1; n <= max_len; ++n) {
        WordCombo part = v.length_component(n);
        if (!part.is_zero() && dynkin_map(part) != part.scaled(Rational(n))) {
            return false;
        }
    }
    return true;
}

Collection combo_collection(std::string name, const WordCombo& v) {
    auto terms = std::make_shared<const std::map<Tuple, Rational>>(v.terms());
    return Collection(std::move(name), [terms](TupleView a) {
        auto it = terms->find(Tuple(a));
        return it == terms->end() ? Rational() : it->second;
    });
}

bool is_lyndon(const Word& w) {
    if (w.empty()) {
        return false;
    }
    for (std::size_t k = 1; k < w.size(); ++k) {
        if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + static_cast<std::ptrdiff_t>(k), w.end())) {
            return false;
        }
    }
    return true;
}

std::vector<Word> lyndon_words(int alphabet_size, int max_length) {
    std::vector<Word> out;
    if (alphabet_size < 1 || max_length < 1) {
        return out;
    }
    Word w{-1};
    while (!w.empty()) {
        ++w.back();
        out.push_back(w);
        const std::size_t m = w.size();
        while (w.size() < static_cast<std::size_t>(max_length)) {
            w.push_back(w[w.size() - m]);
        }
        while (!w.empty() && w.back() == alphabet_size - 1) {
            w.pop_back();
        }
    }
    return out;
}

std::pair<Word, Word> standard_factorization(const Word& w) {
    if (w.size() < 2 || !is_lyndon(w)) {
        throw NotLyndon("standard factorization needs a Lyndon word of length >= 2");
    }
    for (std::size_t k = 1; k < w.size(); ++k) {
        Word v(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
        if (is_lyndon(v)) {
            return {Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k)), v};
        }
    }
    throw NotLyndon("no Lyndon suffix"); // unreachable: the last letter is Lyndon
}

WordCombo lyndon_bracket(const Word& w, const std::vector<DimVector>& alphabet) {
    if (!is_lyndon(w)) {
        throw NotLyndon("word is not Lyndon");
    }
    if (w.size() == 1) {
        const int letter = w.front();
        if (letter < 0 || letter >= static_cast<int>(alphabet.size())) {
            throw std::out_of_range("letter outside the alphabet");
        }
        return WordCombo::word(Tuple({alphabet[static_cast<std::size_t>(letter)]}));
    }
    auto [u, v] = standard_factorization(w);
    return commutator(lyndon_bracket(u, alphabet), lyndon_bracket(v, alphabet));
}

namespace {

void check_tree(const PlaneTree& t, int n) {
    if (t.leaf_count() != n) {
        throw std::invalid_argument("tree has " + std::to_string(t.leaf_count()) + " leaves but the tuple has " +
                                    std::to_string(n) + " parts");
    }
    if (!t.is_binary()) {
        throw std::invalid_argument("flow trees and brackets need a binary tree");
    }
}

GradedTerm bracket_rec(const PlaneTree& t, TupleView alpha, const SkewForm& form, const std::vector<RatFunc>& coeffs) {
    if (t.is_leaf()) {
        const int i = t.label() - 1;
        if (i < 0 || i >= alpha.size()) {
            throw std::invalid_argument("leaf label outside the tuple");
        }
        RatFunc c = coeffs.empty() ? RatFunc(1) : coeffs[static_cast<std::size_t>(i)];
        return {std::move(c), DimVector(alpha.part(i))};
    }
    GradedTerm u = bracket_rec(t.children()[0], alpha, form, coeffs);
    GradedTerm v = bracket_rec(t.children()[1], alpha, form, coeffs);
    const int m = static_cast<int>(form.pair(u.degree, v.degree));
    RatFunc twist = RatFunc::neg_y_power(m) - RatFunc::neg_y_power(-m);
    return {u.coefficient * v.coefficient * twist, u.degree + v.degree};
}

} // namespace

GradedTerm bracket_eval(const PlaneTree& t, TupleView alpha, const SkewForm& form, const std::vector<RatFunc>& coeffs) {
    check_tree(t, alpha.size());
    if (!coeffs.empty() && static_cast<int>(coeffs.size()) != alpha.size()) {
        throw std::invalid_argument("one coefficient per leaf expected");
    }
    return bracket_rec(t, alpha, form, coeffs);
}

RatFunc kappa(int m) {
    RatFunc den(LaurentPoly::monomial(Rational(1), -1) - LaurentPoly::y());
    return (RatFunc::neg_y_power(m) - RatFunc::neg_y_power(-m)) / den;
}

namespace {

using Form = std::vector<PerturbedScalar>;

// theta_p is the parent's linear map, given by its values on e_1..e_n.
bool flow_vertex(const PlaneTree& v, const Form& theta_p, const std::vector<std::vector<long long>>& pairing) {
    if (v.is_leaf()) {
        return true;
    }
    const std::size_t n = theta_p.size();
    std::vector<int> left = v.children()[0].leaf_labels();
    std::vector<int> right = v.children()[1].leaf_labels();
    long long m = 0;
    for (int i : left) {
        for (int j : right) {
            m += pairing[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
        }
    }
    if (m <= 0) {
        return false;
    }
    const int eps_dim = theta_p.front().eps_dim();
    PerturbedScalar a = PerturbedScalar::zero(eps_dim);
    PerturbedScalar b = PerturbedScalar::zero(eps_dim);
    for (int i : left) {
        a += theta_p[static_cast<std::size_t>(i - 1)];
    }
    for (int j : right) {
        b += theta_p[static_cast<std::size_t>(j - 1)];
    }
    if (!strictly_less(a, b)) {
        return false;
    }
    std::vector<int> below = left;
    below.insert(below.end(), right.begin(), right.end());
    Form theta_v(n);
    for (std::size_t i = 0; i < n; ++i) {
        long long to_v = 0;
        for (int j : below) {
            to_v += pairing[i][static_cast<std::size_t>(j - 1)];
        }
        theta_v[i] = theta_p[i] - a.scaled(Rational(to_v, m));
    }
    return flow_vertex(v.children()[0], theta_v, pairing) && flow_vertex(v.children()[1], theta_v, pairing);
}

void check_permutation(const std::vector<int>& sigma, int n) {
    std::vector<int> sorted = sigma;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> ident(static_cast<std::size_t>(n));
    std::iota(ident.begin(), ident.end(), 0);
    if (sorted != ident) {
        throw std::invalid_argument("sigma is not a permutation of 0..n-1");
    }
}

} // namespace

int flow_tree_coeff(const PlaneTree& t, TupleView alpha, const std::vector<int>& sigma, const CentralCharge& z,
                    const SkewForm& form) {
    const int n = alpha.size();
    check_tree(t, n);
    check_permutation(sigma, n);
    if (alpha.rank() != z.rank() || alpha.rank() != form.rank()) {
        throw RankMismatch("tuple rank differs from the charge or form rank");
    }
    if (n == 1) {
        return 1;
    }
    const DimVector total = tuple_sum(alpha);
    const Rational mu = z.slope(total.entries());
    auto theta_shifted = [&](std::span<const int> v) { return z.theta_of(v) - mu * z.rho_of(v); };

    std::vector<std::vector<long long>> pairing(static_cast<std::size_t>(n), std::vector<long long>(static_cast<std::size_t>(n)));
    Form theta_w;
    for (int i = 0; i < n; ++i) {
        auto ai = alpha.part(sigma[static_cast<std::size_t>(i)]);
        for (int j = 0; j < n; ++j) {
            pairing[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                form.pair(ai, alpha.part(sigma[static_cast<std::size_t>(j)]));
        }
        // Infinitesimals are attached to the original slots, so the
        // perturbations for different sigma are compatible.
        std::vector<Rational> eps(static_cast<std::size_t>(n), Rational(-1, n));
        eps[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])] += Rational(1);
        theta_w.emplace_back(theta_shifted(ai), std::move(eps));
    }
    return flow_vertex(t, theta_w, pairing) ? 1 : 0;
}

namespace {

// Visits one arrangement per multiset of parts summing to gamma (the
// non-decreasing one) with its weight 1/|Aut|.
template <class Visit>
void for_each_multiset(const DimVector& gamma, Visit&& visit) {
    for_each_decomposition(gamma, {}, [&](TupleView a) {
        std::vector<DimVector> parts;
        for (int i = 0; i < a.size(); ++i) {
            parts.emplace_back(a.part(i));
        }
        if (!std::is_sorted(parts.begin(), parts.end())) {
            return;
        }
        long long aut = 1;
        int run = 1;
        for (std::size_t i = 1; i <= parts.size(); ++i) {
            if (i < parts.size() && parts[i] == parts[i - 1]) {
                aut *= ++run;
            } else {
                run = 1;
            }
        }
        visit(a, Rational(1, aut));
    });
}

template <class Term>
RatFunc flow_sum(const DegreeFunction& omega_bar_star, const CentralCharge& z, const SkewForm& form,
                 const DimVector& gamma, Term&& term) {
    RatFunc total;
    for_each_multiset(gamma, [&](TupleView a, const Rational& weight) {
        const int n = a.size();
        std::vector<RatFunc> omega;
        for (int i = 0; i < n; ++i) {
            omega.push_back(omega_bar_star(DimVector(a.part(i))));
            if (omega.back().is_zero()) {
                return;
            }
        }
        const auto trees = enumerate_binary(n);
        std::vector<int> sigma(static_cast<std::size_t>(n));
        std::iota(sigma.begin(), sigma.end(), 0);
        do {
            FlatEntries flat;
            std::vector<RatFunc> omega_sigma;
            for (int i : sigma) {
                auto p = a.part(i);
                flat.insert(flat.end(), p.begin(), p.end());
                omega_sigma.push_back(omega[static_cast<std::size_t>(i)]);
            }
            Tuple permuted(a.rank(), std::move(flat));
            for (const auto& t : trees) {
                if (flow_tree_coeff(t, a, sigma, z, form) == 1) {
                    total += term(t, permuted, omega_sigma).scaled(weight);
                }
            }
        } while (std::next_permutation(sigma.begin(), sigma.end()));
    });
    return total;
}

} // namespace

RatFunc flow_tree_dt(const DegreeFunction& omega_bar_star, const CentralCharge& z, const SkewForm& form,
                     const DimVector& gamma) {
    return flow_sum(omega_bar_star, z, form, gamma,
                    [&](const PlaneTree& t, const Tuple& permuted, const std::vector<RatFunc>& omega) {
                        RatFunc prod(1);
                        for (const auto& c : omega) {
                            prod *= c;
                        }
                        t.for_each_internal([&](const PlaneTree& v) {
                            Tuple ch = children_tuple(v, permuted);
                            prod *= kappa(static_cast<int>(form.pair(ch.part(0), ch.part(1))));
                        });
                        return prod;
                    });
}

RatFunc flow_tree_dt_brackets(const DegreeFunction& omega_bar_star, const CentralCharge& z, const SkewForm& form,
                              const DimVector& gamma) {
    const RatFunc q(LaurentPoly::monomial(Rational(1), -1) - LaurentPoly::y());
    RatFunc abar = flow_sum(omega_bar_star, z, form, gamma,
                            [&](const PlaneTree& t, const Tuple& permuted, const std::vector<RatFunc>& omega) {
                                std::vector<RatFunc> leaf;
                                for (const auto& c : omega) {
                                    leaf.push_back(c / q);
                                }
                                return bracket_eval(t, permuted, form, leaf).coefficient;
                            });
    return q * abar;
}

} // namespace dtc
