#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dtc/rational.hpp"
#include "dtc/semigroup.hpp"

namespace dtc {

class NonGeneric : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Parses comma-separated rationals, e.g. `1,-1/2,0`.
std::vector<Rational> parse_rational_vector(std::string_view text);

// Central charge Z = -theta + i*rho with rho > 0 entrywise. Slopes
// mu(a) = theta(a) / rho(a) are compared by cross-multiplication; no
// division is ever performed.
class CentralCharge {
public:
    CentralCharge(std::vector<Rational> theta, std::vector<Rational> rho);
    // rho = (1, ..., 1)
    explicit CentralCharge(std::vector<Rational> theta);

    int rank() const { return static_cast<int>(theta_.size()); }
    const std::vector<Rational>& theta() const { return theta_; }
    const std::vector<Rational>& rho() const { return rho_; }

    Rational theta_of(std::span<const int> a) const;
    Rational rho_of(std::span<const int> a) const;
    Rational slope(std::span<const int> a) const { return theta_of(a) / rho_of(a); }

    std::weak_ordering compare(std::span<const int> a, std::span<const int> b) const;
    std::weak_ordering compare(const DimVector& a, const DimVector& b) const { return compare(a.entries(), b.entries()); }

    std::string to_string() const;

private:
    std::vector<Rational> theta_;
    std::vector<Rational> rho_;
    // theta and rho rescaled by positive integers to integer vectors; the
    // comparison sign is unchanged. Empty when the scaled values overflow.
    std::vector<long long> theta_int_;
    std::vector<long long> rho_int_;
};

inline std::weak_ordering slope_compare(const CentralCharge& z, const DimVector& a, const DimVector& b) {
    return z.compare(a, b);
}

// Antisymmetric integer form <a, b> = a^T M b.
class SkewForm {
public:
    explicit SkewForm(std::vector<std::vector<int>> matrix);
    static SkewForm zero(int rank);
    // Rows separated by ';', entries by ',': `0,-1;1,0`.
    static SkewForm parse(std::string_view text);

    int rank() const { return static_cast<int>(matrix_.size()); }
    const std::vector<std::vector<int>>& matrix() const { return matrix_; }
    long long pair(std::span<const int> a, std::span<const int> b) const;
    long long pair(const DimVector& a, const DimVector& b) const { return pair(a.entries(), b.entries()); }
    bool is_zero() const;

    friend bool operator==(const SkewForm&, const SkewForm&) = default;

private:
    std::vector<std::vector<int>> matrix_;
};

inline long long pair(const SkewForm& b, const DimVector& x, const DimVector& y) { return b.pair(x, y); }

// theta_k = <e_k, gamma>, rho = (1, ..., 1).
CentralCharge self_stability(const SkewForm& form, const DimVector& gamma);

// First pair (a, b) of non-proportional vectors with total degree <= bound
// and equal slope, or nullopt if the charge is generic up to the bound.
std::optional<std::pair<DimVector, DimVector>> genericity_witness(const CentralCharge& z, int bound);
inline bool is_generic(const CentralCharge& z, int bound) { return !genericity_witness(z, bound).has_value(); }

// c + sum_i eps_coeffs[i] * eps_i for formal infinitesimals
// eps_1 >> eps_2 >> ... > 0, ordered lexicographically.
class PerturbedScalar {
public:
    PerturbedScalar() = default;
    PerturbedScalar(Rational constant, std::vector<Rational> eps_coeffs);
    static PerturbedScalar zero(int eps_dim) {
        return PerturbedScalar(Rational(), std::vector<Rational>(static_cast<std::size_t>(eps_dim)));
    }

    const Rational& constant() const { return constant_; }
    const std::vector<Rational>& eps_coeffs() const { return eps_; }
    int eps_dim() const { return static_cast<int>(eps_.size()); }
    bool is_zero() const;
    // Throws NonGeneric on the identically zero form.
    int strict_sign() const;

    PerturbedScalar operator+(const PerturbedScalar& b) const;
    PerturbedScalar operator-(const PerturbedScalar& b) const;
    PerturbedScalar operator-() const;
    PerturbedScalar scaled(const Rational& c) const;
    PerturbedScalar& operator+=(const PerturbedScalar& b) { return *this = *this + b; }
    PerturbedScalar& operator-=(const PerturbedScalar& b) { return *this = *this - b; }

    friend bool operator==(const PerturbedScalar&, const PerturbedScalar&) = default;
    friend std::strong_ordering operator<=>(const PerturbedScalar& a, const PerturbedScalar& b);

    std::string to_string() const;

private:
    Rational constant_;
    std::vector<Rational> eps_;
};

// a < b, throwing NonGeneric when a and b are identical forms.
bool strictly_less(const PerturbedScalar& a, const PerturbedScalar& b);

} // namespace dtc
