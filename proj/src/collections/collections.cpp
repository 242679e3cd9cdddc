#include "dtc/collections.hpp"

#include <map>
#include <mutex>

namespace dtc {

namespace {

using Signs = boost::container::small_vector<int, 12>;

int to_sign(std::weak_ordering c) { return c < 0 ? -1 : c > 0 ? 1 : 0; }

// Flattened prefix sums: entries [k*r, (k+1)*r) hold alpha_1 + ... + alpha_k.
FlatEntries prefix_sums(TupleView a) {
    const int n = a.size();
    const int r = a.rank();
    FlatEntries p(static_cast<std::size_t>((n + 1) * r), 0);
    for (int k = 0; k < n; ++k) {
        auto part = a.part(k);
        for (int i = 0; i < r; ++i) {
            p[static_cast<std::size_t>((k + 1) * r + i)] = p[static_cast<std::size_t>(k * r + i)] + part[static_cast<std::size_t>(i)];
        }
    }
    return p;
}

// For k = 1..n-1, the sign of alpha_{<=k} vs alpha_{>k} under `cmp`, which
// returns -1, 0 or 1 for a pair of vectors.
template <class Cmp>
Signs split_signs(TupleView a, Cmp cmp) {
    const int n = a.size();
    const std::size_t r = static_cast<std::size_t>(a.rank());
    FlatEntries p = prefix_sums(a);
    FlatEntries rest(r);
    Signs out;
    std::span<const int> total(p.data() + static_cast<std::size_t>(n) * r, r);
    for (int k = 1; k < n; ++k) {
        std::span<const int> head(p.data() + static_cast<std::size_t>(k) * r, r);
        for (std::size_t i = 0; i < r; ++i) {
            rest[i] = total[i] - head[i];
        }
        out.push_back(cmp(head, std::span<const int>(rest.data(), r)));
    }
    return out;
}

Signs charge_split_signs(const CentralCharge& z, TupleView a) {
    return split_signs(a, [&](std::span<const int> x, std::span<const int> y) { return to_sign(z.compare(x, y)); });
}

Signs skew_split_signs(const SkewForm& form, TupleView a) {
    return split_signs(a, [&](std::span<const int> x, std::span<const int> y) {
        long long v = form.pair(x, y);
        return v < 0 ? -1 : v > 0 ? 1 : 0;
    });
}

struct SignCounts {
    int plus = 0;
    int minus = 0;
    int zero = 0;
};

SignCounts count_signs(const Signs& s) {
    SignCounts c;
    for (int v : s) {
        (v > 0 ? c.plus : v < 0 ? c.minus : c.zero)++;
    }
    return c;
}

Rational factorial(int n) {
    Rational f(1);
    for (int k = 2; k <= n; ++k) {
        f *= Rational(k);
    }
    return f;
}

Rational sign_power(int e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

// (-1)^(n-1) / (n0 + 1) when no split sign is negative.
Rational g_value(const Signs& s) {
    SignCounts c = count_signs(s);
    if (c.minus > 0) {
        return Rational();
    }
    return sign_power(static_cast<int>(s.size())) / Rational(c.zero + 1);
}

// t^(n-) (t-1)^(n+) (t^(n0+1) - (t-1)^(n0+1)) / (n0+1)
Rational g_t_value(const Signs& s, const Rational& t) {
    SignCounts c = count_signs(s);
    Rational u = t - Rational(1);
    return t.pow(c.minus) * u.pow(c.plus) * (t.pow(c.zero + 1) - u.pow(c.zero + 1)) / Rational(c.zero + 1);
}

bool all_parts(TupleView a, const std::function<bool(std::span<const int>, std::span<const int>)>& related) {
    for (int i = 1; i < a.size(); ++i) {
        if (!related(a.part(0), a.part(i))) {
            return false;
        }
    }
    return true;
}

Rational eval_plethysm(const Collection& f, const Collection& g, TupleView a) {
    const int n = a.size();
    const std::size_t r = static_cast<std::size_t>(a.rank());
    if (n == 1) {
        Rational gv = g(a);
        return gv.is_zero() ? gv : f(a) * gv;
    }
    FlatEntries p = prefix_sums(a);
    // G on the contiguous segment [i, j), computed on first use.
    boost::container::small_vector<std::optional<Rational>, 56> seg(static_cast<std::size_t>(n * (n + 1)));
    auto segment = [&](int i, int j) -> const Rational& {
        auto& slot = seg[static_cast<std::size_t>(i * (n + 1) + j)];
        if (!slot) {
            slot = g(a.slice(i, j - i));
        }
        return *slot;
    };
    Rational total;
    FlatEntries push;
    const std::uint64_t masks = std::uint64_t{1} << (n - 1);
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
        Rational prod(1);
        bool zero = false;
        int first = 0;
        push.clear();
        for (int k = 0; k < n; ++k) {
            if (k + 1 < n && !(mask >> k & 1u)) {
                continue;
            }
            const Rational& v = segment(first, k + 1);
            if (v.is_zero()) {
                zero = true;
                break;
            }
            if (!v.is_one()) {
                prod *= v;
            }
            for (std::size_t i = 0; i < r; ++i) {
                push.push_back(p[static_cast<std::size_t>(k + 1) * r + i] - p[static_cast<std::size_t>(first) * r + i]);
            }
            first = k + 1;
        }
        if (zero) {
            continue;
        }
        Rational fv = f(TupleView(a.rank(), std::span<const int>(push.data(), push.size())));
        if (!fv.is_zero()) {
            total += fv * prod;
        }
    }
    return total;
}

} // namespace

Collection::Collection(std::string name, Rule rule)
    : rule_(std::make_shared<const Rule>(std::move(rule))), name_(std::make_shared<const std::string>(std::move(name))) {}

Collection memoized(const Collection& f, EvalOptions options) {
    if (!options.memoize) {
        return f;
    }
    auto memo = std::make_shared<TupleMemo<Rational>>();
    return Collection(f.name(), [f, memo](TupleView a) {
        FlatEntries k = TupleMemo<Rational>::key(a);
        if (auto v = memo->find(k)) {
            return *v;
        }
        Rational v = f(a);
        memo->insert(std::move(k), v);
        return v;
    });
}

Collection identity_collection() {
    return Collection("1", [](TupleView a) { return a.size() == 1 ? Rational(1) : Rational(); });
}

Collection zero_collection() {
    return Collection("0", [](TupleView) { return Rational(); });
}

Collection col_add(const Collection& f, const Collection& g) {
    return Collection("(" + f.name() + " + " + g.name() + ")", [f, g](TupleView a) { return f(a) + g(a); });
}

Collection col_sub(const Collection& f, const Collection& g) {
    return Collection("(" + f.name() + " - " + g.name() + ")", [f, g](TupleView a) { return f(a) - g(a); });
}

Collection col_scale(const Collection& f, const Rational& c) {
    return Collection(c.to_string() + "*" + f.name(), [f, c](TupleView a) { return c * f(a); });
}

Collection plethysm(const Collection& f, const Collection& g, EvalOptions options) {
    Collection raw("(" + f.name() + " o " + g.name() + ")", [f, g](TupleView a) { return eval_plethysm(f, g, a); });
    return memoized(raw, options);
}

Rational bar_eval(const Collection& f, const DimVector& gamma, int bound) {
    if (gamma.total_degree() > bound) {
        throw std::invalid_argument("degree of " + gamma.to_string() + " exceeds bound " + std::to_string(bound));
    }
    Rational s;
    for_each_decomposition(gamma, {}, [&](TupleView a) { s += f(a); });
    return s;
}

OneCollection::OneCollection(std::string name, SkewForm form, Rule rule)
    : impl_(std::make_shared<const Impl>(std::move(name), std::move(form), std::move(rule))) {}

OneCollection OneCollection::from_values(std::string name, SkewForm form,
                                         const std::vector<std::pair<DimVector, RatFunc>>& values) {
    auto table = std::make_shared<std::unordered_map<DimVector, RatFunc>>(values.begin(), values.end());
    return OneCollection(std::move(name), std::move(form), [table](const DimVector& g) {
        auto it = table->find(g);
        return it == table->end() ? RatFunc() : it->second;
    });
}

RatFunc OneCollection::operator()(const DimVector& gamma) const {
    if (gamma.rank() != rank()) {
        throw RankMismatch("degree " + gamma.to_string() + " has rank " + std::to_string(gamma.rank()) +
                           ", expected " + std::to_string(rank()));
    }
    if (!gamma.in_semigroup()) {
        throw ZeroVector("1-collections are defined on nonzero degrees only");
    }
    {
        std::shared_lock lock(impl_->mutex);
        auto it = impl_->cache.find(gamma);
        if (it != impl_->cache.end()) {
            return it->second;
        }
    }
    RatFunc v = impl_->rule(gamma);
    std::unique_lock lock(impl_->mutex);
    impl_->cache.try_emplace(gamma, v);
    return v;
}

OneCollection star(const Collection& f, const OneCollection& h) {
    return OneCollection(f.name() + " * " + h.name(), h.form(), [f, h](const DimVector& gamma) {
        const int r = gamma.rank();
        // Mixed-radix index of vectors below gamma.
        std::vector<int> stride(static_cast<std::size_t>(r));
        int size = 1;
        for (int k = r - 1; k >= 0; --k) {
            stride[static_cast<std::size_t>(k)] = size;
            size *= gamma[k] + 1;
        }
        std::vector<std::optional<RatFunc>> hv(static_cast<std::size_t>(size));
        auto h_at = [&](std::span<const int> v, int idx) -> const RatFunc& {
            auto& slot = hv[static_cast<std::size_t>(idx)];
            if (!slot) {
                slot = h(DimVector(v));
            }
            return *slot;
        };
        const SkewForm& form = h.form();

        // Terms with the same multiset of parts share prod H(alpha_i); only the
        // twist exponent depends on the order.
        std::map<FlatEntries, std::map<long long, Rational>> grouped;
        FlatEntries idx;
        FlatEntries prefix;
        for_each_decomposition(gamma, {}, [&](TupleView a) {
            idx.clear();
            for (int i = 0; i < a.size(); ++i) {
                auto part = a.part(i);
                int id = 0;
                for (int k = 0; k < r; ++k) {
                    id += part[static_cast<std::size_t>(k)] * stride[static_cast<std::size_t>(k)];
                }
                if (h_at(part, id).is_zero()) {
                    return;
                }
                idx.push_back(id);
            }
            Rational fv = f(a);
            if (fv.is_zero()) {
                return;
            }
            long long twist = 0;
            prefix.assign(static_cast<std::size_t>(r), 0);
            for (int i = 0; i < a.size(); ++i) {
                auto part = a.part(i);
                if (i > 0) {
                    twist += form.pair(std::span<const int>(prefix.data(), prefix.size()), part);
                }
                for (int k = 0; k < r; ++k) {
                    prefix[static_cast<std::size_t>(k)] += part[static_cast<std::size_t>(k)];
                }
            }
            std::sort(idx.begin(), idx.end());
            grouped[idx][twist] += fv;
        });

        RatFunc total;
        for (const auto& [ids, twists] : grouped) {
            std::vector<LaurentPoly::Term> terms;
            for (const auto& [tw, c] : twists) {
                if (!c.is_zero()) {
                    terms.emplace_back(static_cast<int>(tw), tw % 2 == 0 ? c : -c);
                }
            }
            LaurentPoly poly = LaurentPoly::from_terms(std::move(terms));
            if (poly.is_zero()) {
                continue;
            }
            RatFunc prod(poly);
            for (int id : ids) {
                prod *= *hv[static_cast<std::size_t>(id)];
            }
            total += prod;
        }
        return total;
    });
}

Collection hn(const CentralCharge& z) {
    return Collection("s", [z](TupleView a) {
        for (int k = 0; k + 1 < a.size(); ++k) {
            if (z.compare(a.part(k), a.part(k + 1)) <= 0) {
                return Rational();
            }
        }
        return Rational(1);
    });
}

Collection hn_inverse(const CentralCharge& z) {
    return Collection("s^-1", [z](TupleView a) {
        for (int s : charge_split_signs(z, a)) {
            if (s <= 0) {
                return Rational();
            }
        }
        return sign_power(a.size() - 1);
    });
}

Collection transition(const CentralCharge& z, const CentralCharge& z2) {
    return Collection("s_transition", [z, z2](TupleView a) {
        Signs after = charge_split_signs(z2, a);
        int sign = 1;
        for (int k = 0; k + 1 < a.size(); ++k) {
            bool descends = z.compare(a.part(k), a.part(k + 1)) > 0;
            bool split_above = after[static_cast<std::size_t>(k)] > 0;
            if (!descends && split_above) {
                sign = -sign;
            } else if (!(descends && !split_above)) {
                return Rational();
            }
        }
        return Rational(sign);
    });
}

Collection exp_log_family(ExpLogKind kind, const std::optional<CentralCharge>& z) {
    bool needs_charge = kind == ExpLogKind::ExpTheta || kind == ExpLogKind::LogTheta;
    if (needs_charge && !z) {
        throw std::invalid_argument("exp_theta and log_theta require a central charge");
    }
    bool is_exp = kind == ExpLogKind::Exp || kind == ExpLogKind::ExpPar || kind == ExpLogKind::ExpTheta;
    std::function<bool(std::span<const int>, std::span<const int>)> related;
    std::string name = is_exp ? "exp" : "log";
    if (kind == ExpLogKind::ExpPar || kind == ExpLogKind::LogPar) {
        related = [](std::span<const int> x, std::span<const int> y) { return proportional(x, y); };
        name += "_par";
    } else if (needs_charge) {
        related = [z = *z](std::span<const int> x, std::span<const int> y) { return z.compare(x, y) == 0; };
        name += "_theta";
    }
    return Collection(name, [is_exp, related](TupleView a) {
        if (related && !all_parts(a, related)) {
            return Rational();
        }
        int n = a.size();
        return is_exp ? factorial(n).inverse() : sign_power(n - 1) / Rational(n);
    });
}

Collection geometric(const Rational& t) {
    return Collection("sigma_" + t.to_string(), [t](TupleView a) { return t.pow(a.size() - 1); });
}

Collection g_theta(const CentralCharge& z) {
    return Collection("g", [z](TupleView a) { return g_value(charge_split_signs(z, a)); });
}

Collection g_theta_inv(const CentralCharge& z) {
    return Collection("g^-1", [z](TupleView a) {
        Rational v(1);
        int run = 1;
        for (int k = 0; k + 1 < a.size(); ++k) {
            auto c = z.compare(a.part(k), a.part(k + 1));
            if (c < 0) {
                return Rational();
            }
            if (c > 0) {
                v /= factorial(run);
                run = 1;
            } else {
                ++run;
            }
        }
        return v / factorial(run);
    });
}

Collection hn_inv_geometric(const CentralCharge& z, const Rational& t) {
    return Collection("s^-1 o sigma_" + t.to_string(), [z, t](TupleView a) {
        int plus = count_signs(charge_split_signs(z, a)).plus;
        return t.pow(a.size() - 1 - plus) * (t - Rational(1)).pow(plus);
    });
}

Collection g_theta_t(const CentralCharge& z, const Rational& t) {
    return Collection("g_" + t.to_string(), [z, t](TupleView a) { return g_t_value(charge_split_signs(z, a), t); });
}

Collection g_star(const SkewForm& form) {
    return Collection("g_*", [form](TupleView a) { return g_value(skew_split_signs(form, a)); });
}

Collection g_star_t(const SkewForm& form, const Rational& t) {
    return Collection("g_*," + t.to_string(), [form, t](TupleView a) { return g_t_value(skew_split_signs(form, a), t); });
}

} // namespace dtc
