#include "dtc/rational.hpp"

#include <cctype>
#include <functional>
#include <numeric>
#include <ostream>

namespace dtc {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr i128 kMaxInline = INT64_MAX;

u128 uabs(i128 x) { return x < 0 ? static_cast<u128>(-(x + 1)) + 1 : static_cast<u128>(x); }

u128 gcd128(u128 a, u128 b) {
    if ((a >> 64) == 0 && (b >> 64) == 0) {
        return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    }
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    return static_cast<std::int64_t>(gcd128(uabs(a), uabs(b)));
}

mpz_class to_mpz(i128 x) {
    bool neg = x < 0;
    u128 m = uabs(x);
    std::uint64_t limbs[2] = {static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(m >> 64)};
    mpz_class z;
    mpz_import(z.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, limbs);
    if (neg) {
        z = -z;
    }
    return z;
}

bool fits_inline(const mpz_class& z) {
    return z.fits_slong_p() && z != mpz_class(LONG_MIN);
}

} // namespace

Rational::Rational(long long n, long long d) {
    if (d == 0) {
        throw DivisionByZero("rational with zero denominator");
    }
    assign_wide(n, d);
}

Rational::Rational(const mpq_class& q) {
    mpq_class c(q);
    c.canonicalize();
    assign_big(std::move(c));
}

Rational::Rational(const mpz_class& z) { assign_big(mpq_class(z)); }

void Rational::assign_big(mpq_class q) {
    if (fits_inline(q.get_num()) && fits_inline(q.get_den())) {
        num_ = q.get_num().get_si();
        den_ = q.get_den().get_si();
        big_.reset();
        return;
    }
    num_ = 0;
    den_ = 1;
    big_ = std::make_shared<const mpq_class>(std::move(q));
}

void Rational::assign_wide(i128 n, i128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    if (d == 1 && n <= kMaxInline && n >= -kMaxInline) {
        num_ = static_cast<std::int64_t>(n);
        den_ = 1;
        big_.reset();
        return;
    }
    u128 g = gcd128(uabs(n), static_cast<u128>(d));
    if (g > 1) {
        n /= static_cast<i128>(g);
        d /= static_cast<i128>(g);
    }
    if (n == 0) {
        d = 1;
    }
    if (n <= kMaxInline && n >= -kMaxInline && d <= kMaxInline) {
        num_ = static_cast<std::int64_t>(n);
        den_ = static_cast<std::int64_t>(d);
        big_.reset();
        return;
    }
    mpq_class q(to_mpz(n), to_mpz(d));
    q.canonicalize();
    assign_big(std::move(q));
}

Rational Rational::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
            s.remove_prefix(1);
        }
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
            s.remove_suffix(1);
        }
        return s;
    };
    auto parse_int = [&](std::string_view s) {
        s = trim(s);
        std::string digits(s);
        std::size_t start = (!digits.empty() && (digits[0] == '+' || digits[0] == '-')) ? 1 : 0;
        if (start == digits.size()) {
            throw ParseError("malformed rational: '" + std::string(text) + "'");
        }
        for (std::size_t i = start; i < digits.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(digits[i]))) {
                throw ParseError("malformed rational: '" + std::string(text) + "'");
            }
        }
        if (digits[0] == '+') {
            digits.erase(0, 1);
        }
        return mpz_class(digits);
    };
    std::string_view s = trim(text);
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_int(s));
    }
    mpz_class n = parse_int(s.substr(0, slash));
    std::string_view den_text = trim(s.substr(slash + 1));
    if (!den_text.empty() && (den_text.front() == '+' || den_text.front() == '-')) {
        throw ParseError("malformed rational: '" + std::string(text) + "' (the sign belongs to the numerator)");
    }
    mpz_class d = parse_int(den_text);
    if (d == 0) {
        throw DivisionByZero("rational with zero denominator: '" + std::string(text) + "'");
    }
    return Rational(mpq_class(n, d));
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
    if (big_) {
        return sgn(*big_);
    }
    return (num_ > 0) - (num_ < 0);
}

mpz_class Rational::numerator() const { return big_ ? big_->get_num() : mpz_class(static_cast<long>(num_)); }

mpz_class Rational::denominator() const { return big_ ? big_->get_den() : mpz_class(static_cast<long>(den_)); }

mpq_class Rational::to_mpq() const {
    if (big_) {
        return *big_;
    }
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

std::string Rational::to_string() const {
    if (big_) {
        return big_->get_str();
    }
    if (den_ == 1) {
        return std::to_string(num_);
    }
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
    if (big_) {
        return Rational(mpq_class(-*big_));
    }
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) {
        throw DivisionByZero("inverse of zero");
    }
    if (big_) {
        return Rational(mpq_class(1 / *big_));
    }
    Rational r;
    r.assign_wide(den_, num_);
    return r;
}

Rational Rational::pow(long long e) const {
    if (e < 0) {
        return inverse().pow(-e);
    }
    Rational result(1);
    Rational base = *this;
    while (e > 0) {
        if (e & 1) {
            result *= base;
        }
        e >>= 1;
        if (e > 0) {
            base *= base;
        }
    }
    return result;
}

Rational operator+(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) {
        return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
    }
    if (a.num_ == 0) {
        return b;
    }
    if (b.num_ == 0) {
        return a;
    }
    Rational r;
    if (a.den_ == 1 && b.den_ == 1 && !__builtin_add_overflow(a.num_, b.num_, &r.num_) && r.num_ != INT64_MIN) {
        return r;
    }
    if (a.den_ == b.den_) {
        r.assign_wide(static_cast<__int128>(a.num_) + b.num_, a.den_);
    } else {
        r.assign_wide(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                      static_cast<__int128>(a.den_) * b.den_);
    }
    return r;
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) {
        return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
    }
    if (a.num_ == 0 || b.num_ == 0) {
        return Rational();
    }
    if (a.den_ == 1 && b.den_ == 1) {
        Rational r;
        if (!__builtin_mul_overflow(a.num_, b.num_, &r.num_) && r.num_ != INT64_MIN) {
            return r;
        }
    }
    std::int64_t g1 = gcd64(a.num_, b.den_);
    std::int64_t g2 = gcd64(b.num_, a.den_);
    Rational r;
    r.assign_wide(static_cast<__int128>(a.num_ / g1) * (b.num_ / g2),
                  static_cast<__int128>(a.den_ / g2) * (b.den_ / g1));
    return r;
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

bool operator==(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) {
        return a.big_ && b.big_ && *a.big_ == *b.big_;
    }
    return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) {
        int c = cmp(a.to_mpq(), b.to_mpq());
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }
    __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs <=> rhs;
}

std::size_t Rational::hash() const {
    if (big_) {
        return std::hash<std::string>{}(big_->get_str());
    }
    std::size_t h = std::hash<std::int64_t>{}(num_);
    return h ^ (std::hash<std::int64_t>{}(den_) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

} // namespace dtc
