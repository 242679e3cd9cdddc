#include "dtc/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <ostream>

namespace dtc {

namespace {

// Dense coefficient vector for exponents [0, size).
using Dense = std::vector<Rational>;

Dense to_dense(const LaurentPoly& p) {
    if (p.is_zero()) {
        return {};
    }
    if (p.min_exponent() < 0) {
        throw std::invalid_argument("polynomial operation on a Laurent polynomial with negative exponents");
    }
    Dense d(static_cast<std::size_t>(p.max_exponent()) + 1);
    for (const auto& [e, c] : p.terms()) {
        d[static_cast<std::size_t>(e)] = c;
    }
    return d;
}

LaurentPoly from_dense(const Dense& d) {
    std::vector<LaurentPoly::Term> terms;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (!d[i].is_zero()) {
            terms.emplace_back(static_cast<int>(i), d[i]);
        }
    }
    return LaurentPoly::from_terms(std::move(terms));
}

void trim(Dense& d) {
    while (!d.empty() && d.back().is_zero()) {
        d.pop_back();
    }
}

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    LaurentPoly parse_all() {
        LaurentPoly p = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) {
            fail("unexpected trailing input");
        }
        return p;
    }

    LaurentPoly parse_expr() {
        std::vector<LaurentPoly::Term> terms;
        skip_ws();
        bool negative = false;
        if (peek() == '-' || peek() == '+') {
            negative = text_[pos_++] == '-';
        }
        terms.push_back(parse_term(negative));
        while (true) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') {
                break;
            }
            ++pos_;
            terms.push_back(parse_term(c == '-'));
        }
        return LaurentPoly::from_terms(std::move(terms));
    }

    std::size_t position() const { return pos_; }

private:
    LaurentPoly::Term parse_term(bool negative) {
        skip_ws();
        Rational coeff(1);
        int exponent = 0;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = parse_coefficient();
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                skip_ws();
                exponent = parse_power();
            }
        } else if (peek() == 'y') {
            exponent = parse_power();
        } else {
            fail("expected a term");
        }
        return {exponent, negative ? -coeff : coeff};
    }

    Rational parse_coefficient() {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
        if (peek() == '/') {
            ++pos_;
            if (!std::isdigit(static_cast<unsigned char>(peek()))) {
                fail("malformed fraction");
            }
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                ++pos_;
            }
        }
        return Rational::parse(text_.substr(start, pos_ - start));
    }

    int parse_power() {
        if (peek() != 'y') {
            fail("expected 'y'");
        }
        ++pos_;
        skip_ws();
        if (peek() != '^') {
            return 1;
        }
        ++pos_;
        skip_ws();
        bool negative = false;
        if (peek() == '-' || peek() == '+') {
            negative = text_[pos_++] == '-';
        }
        if (!std::isdigit(static_cast<unsigned char>(peek()))) {
            fail("malformed exponent");
        }
        long value = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + (text_[pos_++] - '0');
            if (value > 1000000) {
                fail("exponent out of range");
            }
        }
        return static_cast<int>(negative ? -value : value);
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

LaurentPoly::LaurentPoly(const Rational& c) {
    if (!c.is_zero()) {
        terms_.emplace_back(0, c);
    }
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    LaurentPoly p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().first == t.first) {
            p.terms_.back().second += t.second;
            if (p.terms_.back().second.is_zero()) {
                p.terms_.pop_back();
            }
        } else if (!t.second.is_zero()) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

LaurentPoly LaurentPoly::monomial(const Rational& c, int exponent) {
    LaurentPoly p;
    if (!c.is_zero()) {
        p.terms_.emplace_back(exponent, c);
    }
    return p;
}

LaurentPoly LaurentPoly::parse(std::string_view text) { return PolyParser(text).parse_all(); }

bool LaurentPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }

Rational LaurentPoly::coefficient(int exponent) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                               [](const Term& t, int e) { return t.first < e; });
    if (it != terms_.end() && it->first == exponent) {
        return it->second;
    }
    return Rational();
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p = *this;
    for (auto& t : p.terms_) {
        t.second = -t.second;
    }
    return p;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
    if (c.is_zero()) {
        return {};
    }
    LaurentPoly p = *this;
    for (auto& t : p.terms_) {
        t.second *= c;
    }
    return p;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly p = *this;
    for (auto& t : p.terms_) {
        t.first += k;
    }
    return p;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
    LaurentPoly result(1);
    LaurentPoly base = *this;
    while (e > 0) {
        if (e & 1u) {
            result *= base;
        }
        e >>= 1u;
        if (e > 0) {
            base *= base;
        }
    }
    return result;
}

Rational LaurentPoly::evaluate(const Rational& y) const {
    Rational sum;
    for (const auto& [e, c] : terms_) {
        sum += c * y.pow(e);
    }
    return sum;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
        if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
            r.terms_.push_back(*i++);
        } else if (i == a.terms_.end() || j->first < i->first) {
            r.terms_.push_back(*j++);
        } else {
            Rational c = i->second + j->second;
            if (!c.is_zero()) {
                r.terms_.emplace_back(i->first, std::move(c));
            }
            ++i;
            ++j;
        }
    }
    return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    int lo = a.min_exponent() + b.min_exponent();
    std::vector<Rational> acc(static_cast<std::size_t>(a.max_exponent() + b.max_exponent() - lo) + 1);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            acc[static_cast<std::size_t>(ea + eb - lo)] += ca * cb;
        }
    }
    LaurentPoly r;
    for (std::size_t k = 0; k < acc.size(); ++k) {
        if (!acc[k].is_zero()) {
            r.terms_.emplace_back(static_cast<int>(k) + lo, std::move(acc[k]));
        }
    }
    return r;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        bool negative = c.sign() < 0;
        if (it == terms_.rbegin()) {
            if (negative) {
                out += "-";
            }
        } else {
            out += negative ? " - " : " + ";
        }
        Rational mag = negative ? -c : c;
        if (e == 0) {
            out += mag.to_string();
            continue;
        }
        if (!mag.is_one()) {
            out += mag.to_string() + "*";
        }
        out += "y";
        if (e != 1) {
            out += "^" + std::to_string(e);
        }
    }
    return out;
}

std::size_t LaurentPoly::hash() const {
    std::size_t h = terms_.size();
    for (const auto& [e, c] : terms_) {
        h ^= std::hash<int>{}(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h ^= c.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) {
        throw DivisionByZero("polynomial division by zero");
    }
    Dense r = to_dense(a);
    Dense d = to_dense(b);
    trim(r);
    if (r.size() < d.size()) {
        return {LaurentPoly(), a};
    }
    Dense q(r.size() - d.size() + 1);
    Rational lead_inv = d.back().inverse();
    for (std::size_t k = q.size(); k-- > 0;) {
        Rational c = r[k + d.size() - 1] * lead_inv;
        if (c.is_zero()) {
            continue;
        }
        q[k] = c;
        for (std::size_t i = 0; i < d.size(); ++i) {
            r[k + i] -= c * d[i];
        }
    }
    trim(r);
    return {from_dense(q), from_dense(r)};
}

LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b) {
    while (!b.is_zero()) {
        LaurentPoly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = r.is_zero() ? r : r.scaled(r.leading_coefficient().inverse());
    }
    if (a.is_zero()) {
        return a;
    }
    return a.scaled(a.leading_coefficient().inverse());
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

} // namespace dtc
