#pragma once

#include <string>
#include <string_view>

#include "dtc/laurent.hpp"

namespace dtc {

// Rational function in y over Q in canonical form.
//
// All powers of y are carried by the numerator: the denominator is an
// ordinary monic polynomial with nonzero constant term, coprime to the
// numerator. Two RatFuncs are equal as functions iff they are structurally
// equal.
class RatFunc {
public:
    RatFunc() : den_(1) {}
    RatFunc(const Rational& c) : num_(c), den_(1) {} // NOLINT(google-explicit-constructor)
    RatFunc(int c) : RatFunc(Rational(c)) {} // NOLINT(google-explicit-constructor)
    RatFunc(LaurentPoly p) : num_(std::move(p)), den_(1) {} // NOLINT(google-explicit-constructor)
    // Throws DivisionByZero if den is zero.
    RatFunc(const LaurentPoly& num, const LaurentPoly& den);

    // (-y)^m for any integer m.
    static RatFunc neg_y_power(int m);
    static RatFunc y() { return RatFunc(LaurentPoly::y()); }
    // Inverse of to_string; also accepts a bare Laurent polynomial.
    static RatFunc parse(std::string_view text);

    const LaurentPoly& numerator() const { return num_; }
    const LaurentPoly& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator-() const;
    RatFunc inverse() const;
    RatFunc pow(int e) const;
    RatFunc scaled(const Rational& c) const;
    Rational evaluate(const Rational& y) const;

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
    RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
    RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
    RatFunc& operator/=(const RatFunc& b) { return *this = *this / b; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) = default;

    // `(num)/(den)`, or just the numerator when the denominator is 1.
    std::string to_string() const;

private:
    struct Canonical {};
    RatFunc(Canonical, LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {}

    LaurentPoly num_;
    LaurentPoly den_;
};

std::ostream& operator<<(std::ostream& os, const RatFunc& f);

} // namespace dtc
