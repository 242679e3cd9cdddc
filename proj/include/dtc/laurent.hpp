#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dtc/rational.hpp"

namespace dtc {

// Laurent polynomial in y with rational coefficients, stored sparsely as
// (exponent, coefficient) pairs in increasing exponent order. No stored
// coefficient is zero; the zero polynomial has no terms.
class LaurentPoly {
public:
    using Term = std::pair<int, Rational>;

    LaurentPoly() = default;
    LaurentPoly(const Rational& c); // NOLINT(google-explicit-constructor)
    LaurentPoly(int c) : LaurentPoly(Rational(c)) {} // NOLINT(google-explicit-constructor)

    // Terms in any order; duplicates are summed and zeros dropped.
    static LaurentPoly from_terms(std::vector<Term> terms);
    static LaurentPoly monomial(const Rational& c, int exponent);
    static LaurentPoly y() { return monomial(Rational(1), 1); }
    static LaurentPoly parse(std::string_view text);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Only meaningful for nonzero polynomials.
    int min_exponent() const { return terms_.front().first; }
    int max_exponent() const { return terms_.back().first; }
    const Rational& leading_coefficient() const { return terms_.back().second; }
    Rational coefficient(int exponent) const;

    LaurentPoly operator-() const;
    LaurentPoly scaled(const Rational& c) const;
    // Multiplication by y^k.
    LaurentPoly shifted(int k) const;
    LaurentPoly pow(unsigned e) const;
    Rational evaluate(const Rational& y) const;

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator+=(const LaurentPoly& b) { return *this = *this + b; }
    LaurentPoly& operator-=(const LaurentPoly& b) { return *this = *this - b; }
    LaurentPoly& operator*=(const LaurentPoly& b) { return *this = *this * b; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

    // Terms by strictly decreasing exponent, e.g. `y^4 - 2*y^2 + 1`.
    std::string to_string() const;

    std::size_t hash() const;

private:
    std::vector<Term> terms_;
};

// Ordinary polynomial helpers. Arguments must have no negative exponents.
std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a, const LaurentPoly& b);
// Monic gcd; gcd(0, 0) = 0.
LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

} // namespace dtc
