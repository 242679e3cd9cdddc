#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "dtc/ratfunc.hpp"
#include "dtc/rational.hpp"
#include "dtc/semigroup.hpp"
#include "dtc/stability.hpp"

namespace dtc {

// Thread-safe write-once cache from flattened tuples (prefixed by the rank)
// to values. Insertion stops silently once `capacity` entries are stored, so
// huge grid scans cannot exhaust memory; lookups stay correct either way.
template <class Value>
class TupleMemo {
public:
    explicit TupleMemo(std::size_t capacity = std::size_t{1} << 20) : capacity_(capacity) {}

    static FlatEntries key(TupleView alpha) {
        FlatEntries k;
        k.reserve(alpha.flat().size() + 1);
        k.push_back(alpha.rank());
        k.insert(k.end(), alpha.flat().begin(), alpha.flat().end());
        return k;
    }

    std::optional<Value> find(const FlatEntries& k) const {
        std::shared_lock lock(mutex_);
        auto it = map_.find(k);
        if (it == map_.end()) {
            return std::nullopt;
        }
        return it->second;
    }

    void insert(FlatEntries k, const Value& v) {
        std::unique_lock lock(mutex_);
        if (map_.size() < capacity_) {
            map_.try_emplace(std::move(k), v);
        }
    }

    std::size_t size() const {
        std::shared_lock lock(mutex_);
        return map_.size();
    }

private:
    struct Hash {
        std::size_t operator()(const FlatEntries& k) const noexcept {
            std::size_t h = 14695981039346656037ull;
            for (int e : k) {
                h = (h ^ static_cast<std::size_t>(static_cast<unsigned>(e))) * 1099511628211ull;
            }
            return h;
        }
    };

    std::size_t capacity_;
    mutable std::shared_mutex mutex_;
    std::unordered_map<FlatEntries, Value, Hash> map_;
};

// A rational-valued collection: a rule on ordered tuples of dimension
// vectors. Copies share the rule; evaluation is pure.
class Collection {
public:
    using Rule = std::function<Rational(TupleView)>;

    Collection(std::string name, Rule rule);

    Rational operator()(TupleView alpha) const { return (*rule_)(alpha); }
    Rational operator()(const Tuple& alpha) const { return (*rule_)(alpha.view()); }
    const std::string& name() const { return *name_; }

private:
    std::shared_ptr<const Rule> rule_;
    std::shared_ptr<const std::string> name_;
};

struct EvalOptions {
    bool memoize = true;
};

// Same values as `f`, cached per tuple (when options.memoize is set).
Collection memoized(const Collection& f, EvalOptions options = {});

Collection identity_collection();
Collection zero_collection();
Collection col_add(const Collection& f, const Collection& g);
Collection col_sub(const Collection& f, const Collection& g);
Collection col_scale(const Collection& f, const Rational& c);

// (F o G)(alpha) = sum over order-preserving surjections pi of
// F(pi_* alpha) * prod_j G(alpha restricted to block j).
Collection plethysm(const Collection& f, const Collection& g, EvalOptions options = {});

// Sum of F over all decompositions of gamma. Throws std::invalid_argument
// when gamma has total degree above the bound.
Rational bar_eval(const Collection& f, const DimVector& gamma, int bound);

// Graded 1-collection gamma -> c(gamma), read as c(gamma) x^gamma in the
// quantum affine plane x^a x^b = (-y)^<a,b> x^(a+b). Values are cached.
class OneCollection {
public:
    using Rule = std::function<RatFunc(const DimVector&)>;

    OneCollection(std::string name, SkewForm form, Rule rule);
    // Finite table; missing keys read as zero.
    static OneCollection from_values(std::string name, SkewForm form,
                                     const std::vector<std::pair<DimVector, RatFunc>>& values);

    RatFunc operator()(const DimVector& gamma) const;
    int rank() const { return impl_->form.rank(); }
    const SkewForm& form() const { return impl_->form; }
    const std::string& name() const { return impl_->name; }

private:
    struct Impl {
        Impl(std::string n, SkewForm f, Rule r) : name(std::move(n)), form(std::move(f)), rule(std::move(r)) {}
        std::string name;
        SkewForm form;
        Rule rule;
        mutable std::shared_mutex mutex;
        mutable std::unordered_map<DimVector, RatFunc> cache;
    };
    std::shared_ptr<const Impl> impl_;
};

// (F * H)(gamma) = sum over decompositions alpha of gamma of
// F(alpha) * (-y)^(sum_{i<j} <alpha_i, alpha_j>) * prod_i H(alpha_i).
OneCollection star(const Collection& f, const OneCollection& h);

// s_Z: 1 iff alpha_1 >_Z ... >_Z alpha_n.
Collection hn(const CentralCharge& z);
// s_Z^{-1}: (-1)^(n-1) iff alpha_{<=k} >_Z alpha_{>k} for all k.
Collection hn_inverse(const CentralCharge& z);
// s_{Z -> Z'} = s_{Z'}^{-1} o s_Z as a product of per-position signs.
Collection transition(const CentralCharge& z, const CentralCharge& z2);

enum class ExpLogKind { Exp, Log, ExpPar, LogPar, ExpTheta, LogTheta };
Collection exp_log_family(ExpLogKind kind, const std::optional<CentralCharge>& z = std::nullopt);

// sigma_t(alpha) = t^(n-1).
Collection geometric(const Rational& t);
Collection g_theta(const CentralCharge& z);
Collection g_theta_inv(const CentralCharge& z);
Collection hn_inv_geometric(const CentralCharge& z, const Rational& t);
Collection g_theta_t(const CentralCharge& z, const Rational& t);
Collection g_star(const SkewForm& form);
Collection g_star_t(const SkewForm& form, const Rational& t);

} // namespace dtc
