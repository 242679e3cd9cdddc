#pragma once

#include <map>
#include <stdexcept>

#include "dtc/collections.hpp"
#include "dtc/ratfunc.hpp"
#include "dtc/stability.hpp"

namespace dtc {

class NotGeneric : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Truncated series sum_gamma c(gamma) x^gamma in the quantum affine plane
// x^a x^b = (-y)^<a,b> x^(a+b), keeping degrees of total degree <= bound.
// Group-like series carry an implicit constant term 1, Lie-like ones 0;
// the map never stores the constant term or zero coefficients.
class GradedSeries {
public:
    enum class Flavor { GroupLike, LieLike };

    GradedSeries(SkewForm form, int bound, Flavor flavor);

    const SkewForm& form() const { return form_; }
    int bound() const { return bound_; }
    Flavor flavor() const { return flavor_; }
    const std::map<DimVector, RatFunc>& coeffs() const { return coeffs_; }

    RatFunc coeff(const DimVector& gamma) const;
    // Throws std::out_of_range above the bound, RankMismatch on rank errors.
    void set(const DimVector& gamma, RatFunc c);

    // log(1 + x) = sum_k (-1)^(k-1) x^k / k; group-like to Lie-like.
    GradedSeries log() const;
    // exp(x) = 1 + sum_k x^k / k!; Lie-like to group-like.
    GradedSeries exp() const;

    friend bool operator==(const GradedSeries& a, const GradedSeries& b) {
        return a.flavor_ == b.flavor_ && a.bound_ == b.bound_ && a.coeffs_ == b.coeffs_;
    }

private:
    // Product of the non-constant parts, truncated at the bound.
    std::map<DimVector, RatFunc> mul(const std::map<DimVector, RatFunc>& a,
                                     const std::map<DimVector, RatFunc>& b) const;

    SkewForm form_;
    int bound_;
    Flavor flavor_;
    std::map<DimVector, RatFunc> coeffs_;
};

// Same values as `c` on degrees of total degree <= bound; std::out_of_range above.
OneCollection truncated(const OneCollection& c, int bound);

// A_Z = s_Z^{-1} * A.
OneCollection stacky_dt(const OneCollection& a, const CentralCharge& z, int bound);
// A_Z solved degree by degree from A = s_Z * A_Z.
OneCollection stacky_dt_recursive(const OneCollection& a, const CentralCharge& z, int bound);
// Abar_Z = g_Z * A.
OneCollection rational_dt(const OneCollection& a, const CentralCharge& z, int bound);
// Abar_* = g_* * A.
OneCollection attractor_dt(const OneCollection& a, const SkewForm& form, int bound);
// Abar_theta(gamma) == Abar_*(gamma) for the self-stability theta = <-, gamma>.
bool self_stability_check(const OneCollection& a, const SkewForm& form, const DimVector& gamma);

// F_{Z,t} = g_{Z,t} o g_{*,t}^{-1}.
Collection attractor_tree_collection(const CentralCharge& z, const SkewForm& form, const Rational& t,
                                     EvalOptions options = {});
// F_{Z,t} as a sum over plane trees with >= 2 children per vertex: root
// factor g_{Z,t} - g_{*,t}, other vertices g_{*,t}, sign (-1)^(|V|-1);
// 1 on singletons.
Collection attractor_tree_sum(const CentralCharge& z, const SkewForm& form, const Rational& t);
// Abar_Z = F_{Z,t} * Abar_*.
OneCollection attractor_tree_eval(const OneCollection& abar_star, const CentralCharge& z, const SkewForm& form,
                                  const Rational& t, int bound);

// log_{Z'} o s_{Z->Z'} o exp_Z.
Collection wallcross_collection(const CentralCharge& z, const CentralCharge& z2, EvalOptions options = {});
// Abar_{Z'} from Abar_Z.
OneCollection wallcross(const OneCollection& abar_z, const CentralCharge& z, const CentralCharge& z2, int bound);

// (y^-1 - y) c.
RatFunc omega_bar(const RatFunc& c);

// For each slope ray up to the bound, log of 1 + sum_{gamma in ray} A_Z(gamma) x^gamma
// equals Abar_Z on that ray. Throws NotGeneric unless Z is generic up to the bound.
bool series_log_check(const OneCollection& a, const CentralCharge& z, int bound);

} // namespace dtc
