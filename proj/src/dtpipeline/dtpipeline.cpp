#include "dtc/dtpipeline.hpp"

#include <memory>
#include <mutex>
#include <unordered_map>

#include "dtc/trees.hpp"

namespace dtc {

GradedSeries::GradedSeries(SkewForm form, int bound, Flavor flavor)
    : form_(std::move(form)), bound_(bound), flavor_(flavor) {
    if (bound < 1) {
        throw std::invalid_argument("series bound must be at least 1");
    }
}

RatFunc GradedSeries::coeff(const DimVector& gamma) const {
    auto it = coeffs_.find(gamma);
    return it == coeffs_.end() ? RatFunc() : it->second;
}

void GradedSeries::set(const DimVector& gamma, RatFunc c) {
    if (gamma.rank() != form_.rank()) {
        throw RankMismatch("series degree " + gamma.to_string() + " has the wrong rank");
    }
    if (!gamma.in_semigroup()) {
        throw ZeroVector("series degrees must be nonzero");
    }
    if (gamma.total_degree() > bound_) {
        throw std::out_of_range("degree " + gamma.to_string() + " exceeds the series bound " + std::to_string(bound_));
    }
    if (c.is_zero()) {
        coeffs_.erase(gamma);
    } else {
        coeffs_[gamma] = std::move(c);
    }
}

std::map<DimVector, RatFunc> GradedSeries::mul(const std::map<DimVector, RatFunc>& a,
                                               const std::map<DimVector, RatFunc>& b) const {
    std::map<DimVector, RatFunc> out;
    for (const auto& [da, ca] : a) {
        for (const auto& [db, cb] : b) {
            DimVector d = da + db;
            if (d.total_degree() > bound_) {
                continue;
            }
            out[d] += RatFunc::neg_y_power(static_cast<int>(form_.pair(da, db))) * ca * cb;
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

GradedSeries GradedSeries::log() const {
    if (flavor_ != Flavor::GroupLike) {
        throw std::logic_error("log needs a group-like series");
    }
    GradedSeries out(form_, bound_, Flavor::LieLike);
    std::map<DimVector, RatFunc> power = coeffs_;
    for (int k = 1; k <= bound_ && !power.empty(); ++k) {
        Rational c(k % 2 == 1 ? 1 : -1, k);
        for (const auto& [d, v] : power) {
            out.coeffs_[d] += v.scaled(c);
        }
        power = mul(power, coeffs_);
    }
    std::erase_if(out.coeffs_, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

GradedSeries GradedSeries::exp() const {
    if (flavor_ != Flavor::LieLike) {
        throw std::logic_error("exp needs a Lie-like series");
    }
    GradedSeries out(form_, bound_, Flavor::GroupLike);
    std::map<DimVector, RatFunc> power = coeffs_;
    Rational factorial(1);
    for (int k = 1; k <= bound_ && !power.empty(); ++k) {
        factorial *= Rational(k);
        for (const auto& [d, v] : power) {
            out.coeffs_[d] += v.scaled(Rational(1) / factorial);
        }
        power = mul(power, coeffs_);
    }
    std::erase_if(out.coeffs_, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

OneCollection truncated(const OneCollection& c, int bound) {
    return OneCollection(c.name(), c.form(), [c, bound](const DimVector& gamma) {
        if (gamma.total_degree() > bound) {
            throw std::out_of_range("degree " + gamma.to_string() + " exceeds the bound " + std::to_string(bound));
        }
        return c(gamma);
    });
}

namespace {

void check_rank(const OneCollection& a, int rank) {
    if (a.rank() != rank) {
        throw RankMismatch("central charge rank " + std::to_string(rank) + " differs from collection rank " +
                           std::to_string(a.rank()));
    }
}

} // namespace

OneCollection stacky_dt(const OneCollection& a, const CentralCharge& z, int bound) {
    check_rank(a, z.rank());
    return truncated(star(hn_inverse(z), a), bound);
}

OneCollection stacky_dt_recursive(const OneCollection& a, const CentralCharge& z, int bound) {
    check_rank(a, z.rank());
    struct Memo {
        std::mutex mutex;
        std::unordered_map<DimVector, RatFunc> values;
    };
    auto memo = std::make_shared<Memo>();
    // A(gamma) = sum over HN-ordered decompositions of twisted products of A_Z,
    // so A_Z(gamma) is A(gamma) minus the terms with at least two parts.
    auto solve = std::make_shared<std::function<RatFunc(const DimVector&)>>();
    std::weak_ptr<std::function<RatFunc(const DimVector&)>> weak = solve;
    *solve = [a, z, memo, weak](const DimVector& gamma) -> RatFunc {
        {
            std::lock_guard lock(memo->mutex);
            auto it = memo->values.find(gamma);
            if (it != memo->values.end()) {
                return it->second;
            }
        }
        auto self = weak.lock();
        RatFunc value = a(gamma);
        const SkewForm& form = a.form();
        for_each_decomposition(gamma, {}, [&](TupleView alpha) {
            const int n = alpha.size();
            if (n < 2) {
                return;
            }
            for (int i = 0; i + 1 < n; ++i) {
                if (z.compare(alpha.part(i), alpha.part(i + 1)) <= 0) {
                    return;
                }
            }
            long long twist = 0;
            DimVector prefix(alpha.part(0));
            RatFunc prod = (*self)(prefix);
            for (int i = 1; i < n && !prod.is_zero(); ++i) {
                DimVector part(alpha.part(i));
                twist += form.pair(prefix, part);
                prefix += part;
                prod *= (*self)(part);
            }
            if (!prod.is_zero()) {
                value -= RatFunc::neg_y_power(static_cast<int>(twist)) * prod;
            }
        });
        std::lock_guard lock(memo->mutex);
        memo->values.try_emplace(gamma, value);
        return value;
    };
    return truncated(OneCollection("A_Z", a.form(), [solve](const DimVector& gamma) { return (*solve)(gamma); }),
                     bound);
}

OneCollection rational_dt(const OneCollection& a, const CentralCharge& z, int bound) {
    check_rank(a, z.rank());
    return truncated(star(g_theta(z), a), bound);
}

OneCollection attractor_dt(const OneCollection& a, const SkewForm& form, int bound) {
    return truncated(star(g_star(form), a), bound);
}

bool self_stability_check(const OneCollection& a, const SkewForm& form, const DimVector& gamma) {
    const int bound = gamma.total_degree();
    CentralCharge theta = self_stability(form, gamma);
    return rational_dt(a, theta, bound)(gamma) == attractor_dt(a, form, bound)(gamma);
}

Collection attractor_tree_collection(const CentralCharge& z, const SkewForm& form, const Rational& t,
                                     EvalOptions options) {
    return plethysm(g_theta_t(z, t), plethystic_inverse(g_star_t(form, t), options), options);
}

Collection attractor_tree_sum(const CentralCharge& z, const SkewForm& form, const Rational& t) {
    Collection gz = g_theta_t(z, t);
    Collection gs = g_star_t(form, t);
    Collection raw("F_tree", [gz, gs](TupleView alpha) {
        const int n = alpha.size();
        if (n == 1) {
            return Rational(1);
        }
        Rational total;
        for (const auto& tree : enumerate_trees(n, 2)) {
            Rational prod(1);
            int vertices = 0;
            bool root = true;
            tree.for_each_internal([&](const PlaneTree& v) {
                ++vertices;
                if (prod.is_zero()) {
                    return;
                }
                Tuple children = children_tuple(v, alpha);
                prod *= root ? gz(children) - gs(children) : gs(children);
                root = false;
            });
            total += vertices % 2 == 1 ? prod : -prod;
        }
        return total;
    });
    return memoized(raw);
}

OneCollection attractor_tree_eval(const OneCollection& abar_star, const CentralCharge& z, const SkewForm& form,
                                  const Rational& t, int bound) {
    check_rank(abar_star, z.rank());
    return truncated(star(attractor_tree_collection(z, form, t), abar_star), bound);
}

Collection wallcross_collection(const CentralCharge& z, const CentralCharge& z2, EvalOptions options) {
    Collection inner = plethysm(transition(z, z2), exp_log_family(ExpLogKind::ExpTheta, z), options);
    return plethysm(exp_log_family(ExpLogKind::LogTheta, z2), inner, options);
}

OneCollection wallcross(const OneCollection& abar_z, const CentralCharge& z, const CentralCharge& z2, int bound) {
    check_rank(abar_z, z.rank());
    check_rank(abar_z, z2.rank());
    return truncated(star(wallcross_collection(z, z2), abar_z), bound);
}

RatFunc omega_bar(const RatFunc& c) {
    return RatFunc(LaurentPoly::monomial(Rational(1), -1) - LaurentPoly::y()) * c;
}

bool series_log_check(const OneCollection& a, const CentralCharge& z, int bound) {
    check_rank(a, z.rank());
    if (auto witness = genericity_witness(z, bound)) {
        throw NotGeneric("central charge is not generic up to degree " + std::to_string(bound) + ": " +
                         witness->first.to_string() + " and " + witness->second.to_string() + " share a slope");
    }
    OneCollection az = stacky_dt(a, z, bound);
    OneCollection abar = rational_dt(a, z, bound);
    std::map<Rational, std::vector<DimVector>> rays;
    for (const auto& gamma : vectors_up_to_degree(a.rank(), bound)) {
        rays[z.slope(gamma.entries())].push_back(gamma);
    }
    for (const auto& [slope, members] : rays) {
        GradedSeries series(a.form(), bound, GradedSeries::Flavor::GroupLike);
        for (const auto& gamma : members) {
            series.set(gamma, az(gamma));
        }
        GradedSeries logged = series.log();
        for (const auto& gamma : members) {
            if (logged.coeff(gamma) != abar(gamma)) {
                return false;
            }
        }
    }
    return true;
}

} // namespace dtc
