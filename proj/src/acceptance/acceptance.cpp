#include "dtc/acceptance.hpp"

#include <chrono>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "dtc/dtpipeline.hpp"
#include "dtc/lie.hpp"
#include "dtc/quiver.hpp"
#include "dtc/trees.hpp"

namespace dtc {

void for_each_tuple_in_box(int rank, int max_entry, int max_parts, const std::function<void(TupleView)>& visit) {
    const auto letters = vectors_in_box(rank, max_entry);
    const std::size_t r = static_cast<std::size_t>(rank);
    for (int n = 1; n <= max_parts; ++n) {
        std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
        FlatEntries flat(static_cast<std::size_t>(n) * r);
        while (true) {
            for (std::size_t i = 0; i < pick.size(); ++i) {
                auto e = letters[pick[i]].entries();
                std::copy(e.begin(), e.end(), flat.begin() + static_cast<std::ptrdiff_t>(i * r));
            }
            visit(TupleView(rank, std::span<const int>(flat.data(), flat.size())));
            std::size_t k = pick.size();
            while (k > 0 && ++pick[k - 1] == letters.size()) {
                pick[--k] = 0;
            }
            if (k == 0) {
                break;
            }
        }
    }
}

Collection random_collection(unsigned seed) {
    Collection raw("R" + std::to_string(seed), [seed](TupleView a) {
        if (a.size() < 2) {
            return Rational();
        }
        std::vector<std::uint32_t> words{seed, static_cast<std::uint32_t>(a.rank())};
        for (int e : a.flat()) {
            words.push_back(static_cast<std::uint32_t>(e));
        }
        std::seed_seq seq(words.begin(), words.end());
        std::mt19937 gen(seq);
        std::uniform_int_distribution<int> num(-3, 3);
        std::uniform_int_distribution<int> den(1, 4);
        int p = num(gen);
        return Rational(p, den(gen));
    });
    return memoized(raw);
}

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Counts comparisons and remembers the first disagreement.
class Tally {
public:
    template <class A, class B>
    void expect_eq(const A& got, const B& want, const std::string& where) {
        ++checked_;
        if (!(got == want)) {
            if (failures_++ == 0) {
                std::ostringstream os;
                os << where << ": got " << got << ", expected " << want;
                first_ = os.str();
            }
        }
    }
    void expect(bool ok, const std::string& where) {
        ++checked_;
        if (!ok && failures_++ == 0) {
            first_ = where;
        }
    }
    long long checked() const { return checked_; }
    Outcome outcome(const std::string& summary) const {
        if (failures_ == 0) {
            return {true, summary + "; " + std::to_string(checked_) + " checks"};
        }
        return {false, std::to_string(failures_) + " of " + std::to_string(checked_) + " checks failed; first: " + first_};
    }

private:
    long long checked_ = 0;
    long long failures_ = 0;
    std::string first_;
};

Rational identity_value(TupleView a) { return a.size() == 1 ? Rational(1) : Rational(); }

std::string where(const std::string& what, TupleView a) { return what + " at " + Tuple(a).to_string(); }

CentralCharge charge(std::vector<Rational> theta, std::vector<Rational> rho) {
    return CentralCharge(std::move(theta), std::move(rho));
}

CentralCharge charge(std::vector<Rational> theta) { return CentralCharge(std::move(theta)); }

// Two rank-2 charges: the standard one and one with a skewed rho.
std::vector<CentralCharge> rank2_charges() {
    return {charge({1, 0}), charge({-1, 2}, {2, 1})};
}

Outcome check_a1(const AcceptanceOptions& opt) {
    Tally tally;
    const int max_n = opt.quick ? 4 : 5;
    for (unsigned seed : {11u, 23u, 47u}) {
        Collection f = random_collection(seed);
        Collection one_minus_f = col_sub(identity_collection(), f);
        Collection tf = free_construction(f);
        Collection left = plethysm(one_minus_f, tf, {false});
        Collection right = plethysm(tf, one_minus_f, {false});
        for_each_tuple_in_box(2, 2, max_n, [&](TupleView a) {
            tally.expect_eq(left(a), identity_value(a), where("(1-F) o TF, seed " + std::to_string(seed), a));
            tally.expect_eq(right(a), identity_value(a), where("TF o (1-F), seed " + std::to_string(seed), a));
        });
    }
    return tally.outcome("3 seeded collections, rank 2, n <= " + std::to_string(max_n) + ", entries <= 2");
}

Outcome check_a2(const AcceptanceOptions& opt) {
    Tally tally;
    const int box_n = opt.quick ? 4 : opt.exhaustive ? 6 : 5;
    const int sum_bound = opt.quick ? 2 : 3;
    for (const auto& z : rank2_charges()) {
        Collection closed = opt.hn_inverse_factory(z);
        Collection s = hn(z);
        Collection inverse = plethystic_inverse(s, {false});
        Collection left = plethysm(closed, s, {false});
        auto check = [&](TupleView a) {
            tally.expect_eq(closed(a), inverse(a), where("s^-1 vs T(1-s), " + z.to_string(), a));
            tally.expect_eq(left(a), identity_value(a), where("s^-1 o s, " + z.to_string(), a));
        };
        // Every part within the box.
        for_each_tuple_in_box(2, 3, box_n, check);
        // Every tuple whose sum stays within the box; reaches n = 2 * sum_bound.
        for (const auto& gamma : vectors_below(DimVector{sum_bound, sum_bound})) {
            for_each_decomposition(gamma, {}, check);
        }
    }
    return tally.outcome("2 charges; parts in [0,3]^2 with n <= " + std::to_string(box_n) + ", and all tuples with sum <= (" +
                         std::to_string(sum_bound) + "," + std::to_string(sum_bound) + ")");
}

Outcome check_a3(const AcceptanceOptions& opt) {
    Tally tally;
    auto inverse_pair = [&](const Collection& e, const Collection& l, int rank, int max_entry, int max_n,
                            const std::string& label) {
        Collection el = plethysm(e, l, {false});
        Collection le = plethysm(l, e, {false});
        for_each_tuple_in_box(rank, max_entry, max_n, [&](TupleView a) {
            tally.expect_eq(el(a), identity_value(a), where("exp o log " + label, a));
            tally.expect_eq(le(a), identity_value(a), where("log o exp " + label, a));
        });
    };
    inverse_pair(exp_log_family(ExpLogKind::Exp), exp_log_family(ExpLogKind::Log), 1, 3, opt.quick ? 4 : 7, "");
    const int n2 = opt.quick ? 4 : 5;
    inverse_pair(exp_log_family(ExpLogKind::ExpPar), exp_log_family(ExpLogKind::LogPar), 2, 2, n2, "_par");
    for (const auto& z : rank2_charges()) {
        inverse_pair(exp_log_family(ExpLogKind::ExpTheta, z), exp_log_family(ExpLogKind::LogTheta, z), 2, 2, n2,
                     "_theta " + z.to_string());
    }
    return tally.outcome("rank 1 n <= " + std::string(opt.quick ? "4" : "7") + "; _par and _theta rank 2 n <= " +
                         std::to_string(n2));
}

Outcome check_a4(const AcceptanceOptions& opt) {
    Tally tally;
    const std::vector<std::pair<CentralCharge, CentralCharge>> pairs{
        {charge({1, 0}), charge({0, 1})},
        {charge({-1, 2}, {2, 1}), charge({3, -1})},
        {charge({2, 1}, {1, 3}), charge({1, 0}, {1, 2})},
    };
    const int max_n = opt.quick ? 4 : 5;
    for (const auto& [z, z2] : pairs) {
        Collection closed = transition(z, z2);
        Collection composed = plethysm(hn_inverse(z2), hn(z), {false});
        for_each_tuple_in_box(2, 2, max_n, [&](TupleView a) {
            tally.expect_eq(closed(a), composed(a), where("transition " + z.to_string() + " -> " + z2.to_string(), a));
        });
    }
    return tally.outcome("3 charge pairs, rank 2, n <= " + std::to_string(max_n) + ", entries <= 2");
}

// Sign counts of the split comparisons alpha_{<=k} vs alpha_{>k}.
struct SplitCounts {
    int plus = 0;
    int zero = 0;
    int minus = 0;
};

SplitCounts split_counts(const CentralCharge& z, TupleView a) {
    SplitCounts c;
    DimVector total = tuple_sum(a);
    DimVector left = DimVector::zero(a.rank());
    for (int k = 0; k + 1 < a.size(); ++k) {
        left += DimVector(a.part(k));
        DimVector right = total - left;
        auto cmp = z.compare(left.entries(), right.entries());
        (cmp > 0 ? c.plus : cmp < 0 ? c.minus : c.zero)++;
    }
    return c;
}

Outcome check_a5(const AcceptanceOptions& opt) {
    Tally tally;
    const int max_n = opt.quick ? 4 : 5;
    const std::vector<Rational> ts{0, 1, Rational(1, 2), 2, -1};
    long long odd_zero_seen = 0;
    for (const auto& z : rank2_charges()) {
        for (const auto& t : ts) {
            Collection closed_inv = hn_inv_geometric(z, t);
            Collection def_inv = plethysm(hn_inverse(z), geometric(t), {false});
            Collection closed_g = g_theta_t(z, t);
            Collection def_g = plethysm(g_theta(z), geometric(t), {false});
            const std::string label = "t=" + t.to_string() + ", " + z.to_string();
            for_each_tuple_in_box(2, 2, max_n, [&](TupleView a) {
                tally.expect_eq(closed_inv(a), def_inv(a), where("s^-1 o sigma_t, " + label, a));
                Rational g = closed_g(a);
                tally.expect_eq(g, def_g(a), where("g o sigma_t, " + label, a));
                if (t == Rational(1, 2)) {
                    SplitCounts c = split_counts(z, a);
                    Rational want = c.zero % 2 == 1
                                        ? Rational()
                                        : Rational(c.plus % 2 == 0 ? 2 : -2, c.zero + 1) / Rational(2).pow(a.size());
                    odd_zero_seen += c.zero % 2;
                    tally.expect_eq(g, want, where("t=1/2 closed form, " + z.to_string(), a));
                }
            });
        }
    }
    tally.expect(odd_zero_seen > 0, "no tuple with odd n0 was sampled");
    return tally.outcome("2 charges, t in {0,1,1/2,2,-1}, rank 2, n <= " + std::to_string(max_n) + "; " +
                         std::to_string(odd_zero_seen) + " odd-n0 tuples vanish at t=1/2");
}

Outcome check_a6(const AcceptanceOptions& opt) {
    Tally tally;
    Quiver k1 = Quiver::kronecker(1);
    OneCollection a = stacky_A(k1);
    const int bound = opt.quick ? 4 : 6;
    CentralCharge z10 = charge({1, 0});
    CentralCharge z01 = charge({0, 1});
    tally.expect_eq(omega_bar(rational_dt(a, z10, 2)(DimVector{1, 1})), RatFunc(1), "Omega_bar(1,1) at theta=(1,0)");
    tally.expect_eq(omega_bar(rational_dt(a, z01, 2)(DimVector{1, 1})), RatFunc(0), "Omega_bar(1,1) at theta=(0,1)");
    for (const auto& z : {z10, z01}) {
        OneCollection closed = stacky_dt(a, z, bound);
        OneCollection recursive = stacky_dt_recursive(a, z, bound);
        for (const auto& gamma : vectors_up_to_degree(2, bound)) {
            tally.expect_eq(closed(gamma), recursive(gamma), "stacky " + z.to_string() + " at " + gamma.to_string());
        }
    }
    return tally.outcome("K1 Omega_bar(1,1) = 1 and 0; stacky evaluators agree for |gamma| <= " + std::to_string(bound));
}

// (-y)^(n^2) / (y^(n(n-1)) prod_{k=1..n} (y^(2k) - 1)).
RatFunc gl_attractor_value(int n) {
    LaurentPoly den = LaurentPoly::monomial(Rational(1), n * (n - 1));
    for (int k = 1; k <= n; ++k) {
        den *= LaurentPoly::monomial(Rational(1), 2 * k) - LaurentPoly(1);
    }
    return RatFunc::neg_y_power(n * n) / RatFunc(den);
}

Outcome check_a7(const AcceptanceOptions& opt) {
    Tally tally;
    const int bound = opt.quick ? 4 : 6;
    Collection exp_par = exp_log_family(ExpLogKind::ExpPar);
    for (int m : {1, 2}) {
        Quiver q = Quiver::kronecker(m);
        OneCollection abar_star = attractor_dt(stacky_A(q), q.skew_form(), bound);
        const std::string label = "K" + std::to_string(m);
        for (const auto& gamma : vectors_up_to_degree(2, bound)) {
            if (gamma[0] != 0 && gamma[1] != 0) {
                tally.expect_eq(abar_star(gamma), RatFunc(0), label + " Abar_* at " + gamma.to_string());
            }
        }
        OneCollection a_star = star(exp_par, abar_star);
        for (int n = 1; n <= 3; ++n) {
            for (int i = 0; i < 2; ++i) {
                DimVector gamma = DimVector::unit(2, i) * n;
                tally.expect_eq(a_star(gamma), gl_attractor_value(n), label + " exp_par * Abar_* at " + gamma.to_string());
            }
        }
    }
    return tally.outcome("K1, K2 |gamma| <= " + std::to_string(bound) + "; A_*(n e_i) for n <= 3");
}

Outcome check_a8(const AcceptanceOptions& opt) {
    Tally tally;
    Quiver k2 = Quiver::kronecker(2);
    const SkewForm form = k2.skew_form();
    const int side = opt.quick ? 2 : 3;
    const int bound = 2 * side;
    OneCollection a = stacky_A(k2);
    OneCollection abar_star = attractor_dt(a, form, bound);
    const std::vector<Rational> ts{0, 1, Rational(1, 2), 3};
    for (const auto& z : rank2_charges()) {
        OneCollection rational = rational_dt(a, z, bound);
        std::vector<OneCollection> trees;
        for (const auto& t : ts) {
            trees.push_back(attractor_tree_eval(abar_star, z, form, t, bound));
        }
        for (const auto& gamma : vectors_below(DimVector{side, side})) {
            RatFunc want = rational(gamma);
            for (std::size_t i = 0; i < ts.size(); ++i) {
                tally.expect_eq(trees[i](gamma), want,
                                "t=" + ts[i].to_string() + ", " + z.to_string() + " at " + gamma.to_string());
            }
        }
    }
    return tally.outcome("K2, 2 charges, t in {0,1,1/2,3}, gamma <= (" + std::to_string(side) + "," +
                         std::to_string(side) + ")");
}

Outcome check_a9(const AcceptanceOptions& opt) {
    Tally tally;
    const int bound = opt.quick ? 3 : 4;
    const std::vector<std::pair<CentralCharge, CentralCharge>> pairs{
        {charge({1, 0}), charge({0, 1})},
        {charge({-1, 2}, {2, 1}), charge({3, -1}, {1, 2})},
    };
    for (const auto& [z, z2] : pairs) {
        Collection w = wallcross_collection(z, z2);
        for (const auto& gamma : vectors_up_to_degree(2, bound)) {
            tally.expect(is_lie(WordCombo::of_collection(w, gamma)),
                         "degree " + gamma.to_string() + " component not Lie for " + z.to_string() + " -> " +
                             z2.to_string());
        }
    }
    return tally.outcome("2 charge pairs, |gamma| <= " + std::to_string(bound));
}

Outcome check_a10(const AcceptanceOptions& opt) {
    Tally tally;
    const int side = opt.quick ? 1 : 2;
    const int bound = 2 * side;
    const std::vector<CentralCharge> charges{charge({1, 0}), charge({3, -2}, {1, 2})};
    for (int m : {1, 2}) {
        Quiver q = Quiver::kronecker(m);
        const SkewForm form = q.skew_form();
        OneCollection abar_star = attractor_dt(stacky_A(q), form, bound);
        DegreeFunction omega_star = [abar_star](const DimVector& g) { return omega_bar(abar_star(g)); };
        for (const auto& z : charges) {
            OneCollection tree = attractor_tree_eval(abar_star, z, form, 0, bound);
            for (const auto& gamma : vectors_below(DimVector{side, side})) {
                tally.expect_eq(flow_tree_dt(omega_star, z, form, gamma), omega_bar(tree(gamma)),
                                "K" + std::to_string(m) + ", " + z.to_string() + " at " + gamma.to_string());
            }
        }
    }
    return tally.outcome("K1, K2, 2 charges, gamma <= (" + std::to_string(side) + "," + std::to_string(side) + ")");
}

Outcome check_a11(const AcceptanceOptions& opt) {
    Tally tally;
    const int bound = opt.quick ? 4 : 5;
    for (const auto& [label, q] : {std::pair{"K1", Quiver::kronecker(1)}, std::pair{"K2", Quiver::kronecker(2)},
                                   std::pair{"2-loop", Quiver::loops(2)}}) {
        OneCollection a = stacky_A(q);
        for (const auto& gamma : vectors_up_to_degree(q.vertex_count(), bound)) {
            tally.expect(self_stability_check(a, q.skew_form(), gamma),
                         std::string(label) + " self-stability at " + gamma.to_string());
        }
    }
    return tally.outcome("K1, K2, 2-loop, |gamma| <= " + std::to_string(bound));
}

Outcome check_a12(const AcceptanceOptions& opt) {
    Tally tally;
    const int bound = opt.quick ? 3 : 4;
    for (int m : {1, 2}) {
        OneCollection a = stacky_A(Quiver::kronecker(m));
        for (const auto& z : rank2_charges()) {
            tally.expect(series_log_check(a, z, bound), "K" + std::to_string(m) + ", " + z.to_string());
        }
    }
    return tally.outcome("K1, K2, 2 charges, bound " + std::to_string(bound));
}

struct Criterion {
    Outcome (*run)(const AcceptanceOptions&);
    double limit_seconds; // 0: no limit
};

const std::map<std::string, Criterion>& criteria() {
    static const std::map<std::string, Criterion> table{
        {"A1", {check_a1, 60}},  {"A2", {check_a2, 60}},  {"A3", {check_a3, 0}},   {"A4", {check_a4, 0}},
        {"A5", {check_a5, 0}},   {"A6", {check_a6, 0}},   {"A7", {check_a7, 0}},   {"A8", {check_a8, 300}},
        {"A9", {check_a9, 0}},   {"A10", {check_a10, 0}}, {"A11", {check_a11, 0}}, {"A12", {check_a12, 0}},
    };
    return table;
}

} // namespace

std::vector<std::string> acceptance_ids() {
    std::vector<std::string> ids;
    for (int i = 1; i <= 12; ++i) {
        ids.push_back("A" + std::to_string(i));
    }
    return ids;
}

CheckResult run_check(const std::string& id, const AcceptanceOptions& options) {
    auto it = criteria().find(id);
    if (it == criteria().end()) {
        throw std::invalid_argument("unknown acceptance criterion '" + id + "'");
    }
    CheckResult result{id, false, 0, ""};
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
        outcome = it->second.run(options);
    } catch (const std::exception& e) {
        outcome = {false, std::string("exception: ") + e.what()};
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    result.pass = outcome.pass;
    result.detail = outcome.detail;
    const double limit = it->second.limit_seconds;
    const bool limited = limit > 0 && !(id == "A2" && options.exhaustive);
    if (limited && result.seconds >= limit) {
        result.pass = false;
        std::ostringstream os;
        os << "exceeded the " << limit << " s limit; " << result.detail;
        result.detail = os.str();
    }
    return result;
}

std::string format_result(const CheckResult& r) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << r.id << (r.id.size() < 3 ? "  " : " ") << (r.pass ? "PASS" : "FAIL") << "  " << r.seconds << " s  "
       << r.detail;
    return os.str();
}

std::vector<CheckResult> run_acceptance(const AcceptanceOptions& options, std::ostream& out) {
    std::vector<CheckResult> results;
    for (const auto& id : acceptance_ids()) {
        results.push_back(run_check(id, options));
        out << format_result(results.back()) << std::endl;
    }
    return results;
}

} // namespace dtc
