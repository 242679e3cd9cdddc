#include "dtc/ratfunc.hpp"

#include <ostream>

namespace dtc {

namespace {

LaurentPoly exact_quotient(const LaurentPoly& a, const LaurentPoly& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero()) {
        throw std::logic_error("inexact polynomial division");
    }
    return q;
}

} // namespace

RatFunc::RatFunc(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) {
        throw DivisionByZero("rational function with zero denominator");
    }
    if (num.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    int kd = den.min_exponent();
    LaurentPoly d = den.shifted(-kd);
    LaurentPoly n = num.shifted(-kd);
    int kn = n.min_exponent();
    n = n.shifted(-kn);
    if (!d.is_constant()) {
        LaurentPoly g = poly_gcd(n, d);
        if (!g.is_constant()) {
            n = exact_quotient(n, g);
            d = exact_quotient(d, g);
        }
    }
    Rational lead_inv = d.leading_coefficient().inverse();
    num_ = n.scaled(lead_inv).shifted(kn);
    den_ = d.scaled(lead_inv);
}

RatFunc RatFunc::neg_y_power(int m) {
    Rational sign = (m % 2 == 0) ? Rational(1) : Rational(-1);
    return RatFunc(LaurentPoly::monomial(sign, m));
}

RatFunc RatFunc::parse(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && s.front() == ' ') {
        s.remove_prefix(1);
    }
    while (!s.empty() && s.back() == ' ') {
        s.remove_suffix(1);
    }
    if (!s.empty() && s.front() == '(') {
        auto close = s.find(')');
        if (close == std::string_view::npos) {
            throw ParseError("unbalanced parenthesis in '" + std::string(text) + "'");
        }
        LaurentPoly num = LaurentPoly::parse(s.substr(1, close - 1));
        std::string_view rest = s.substr(close + 1);
        while (!rest.empty() && rest.front() == ' ') {
            rest.remove_prefix(1);
        }
        if (rest.empty()) {
            return RatFunc(num);
        }
        if (rest.size() < 3 || rest.front() != '/' || rest.back() != ')') {
            throw ParseError("expected '/(denominator)' in '" + std::string(text) + "'");
        }
        rest.remove_prefix(1);
        while (!rest.empty() && rest.front() == ' ') {
            rest.remove_prefix(1);
        }
        if (rest.empty() || rest.front() != '(') {
            throw ParseError("expected '(' before denominator in '" + std::string(text) + "'");
        }
        LaurentPoly den = LaurentPoly::parse(rest.substr(1, rest.size() - 2));
        return RatFunc(num, den);
    }
    return RatFunc(LaurentPoly::parse(s));
}

RatFunc RatFunc::operator-() const { return RatFunc(Canonical{}, -num_, den_); }

RatFunc RatFunc::inverse() const {
    if (is_zero()) {
        throw DivisionByZero("inverse of the zero rational function");
    }
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(int e) const {
    if (e < 0) {
        return inverse().pow(-e);
    }
    return RatFunc(Canonical{}, num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
}

RatFunc RatFunc::scaled(const Rational& c) const {
    if (c.is_zero()) {
        return RatFunc();
    }
    return RatFunc(Canonical{}, num_.scaled(c), den_);
}

Rational RatFunc::evaluate(const Rational& y) const {
    Rational d = den_.evaluate(y);
    if (d.is_zero()) {
        throw DivisionByZero("rational function evaluated at a pole");
    }
    return num_.evaluate(y) / d;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) {
        return b;
    }
    if (b.is_zero()) {
        return a;
    }
    if (a.den_ == b.den_) {
        return RatFunc(a.num_ + b.num_, a.den_);
    }
    if (a.den_.is_constant()) {
        return RatFunc(a.num_ * b.den_ + b.num_, b.den_);
    }
    if (b.den_.is_constant()) {
        return RatFunc(a.num_ + b.num_ * a.den_, a.den_);
    }
    LaurentPoly g = poly_gcd(a.den_, b.den_);
    LaurentPoly ad = exact_quotient(a.den_, g);
    LaurentPoly bd = exact_quotient(b.den_, g);
    return RatFunc(a.num_ * bd + b.num_ * ad, ad * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) {
        return RatFunc();
    }
    if (a.den_.is_constant() && b.den_.is_constant()) {
        return RatFunc(RatFunc::Canonical{}, a.num_ * b.num_, LaurentPoly(1));
    }
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

std::string RatFunc::to_string() const {
    if (den_.is_constant()) {
        return num_.to_string();
    }
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.to_string(); }

} // namespace dtc
