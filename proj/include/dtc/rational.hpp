#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dtc {

class DivisionByZero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Exact rational number in lowest terms with a positive denominator.
//
// Values whose numerator and denominator fit in 64 bits are stored inline and
// use 128-bit intermediate arithmetic; everything else lives in an immutable
// shared GMP rational. The representation is canonical: a value that fits the
// inline form is never stored as a GMP rational, so equality is structural.
class Rational {
public:
    Rational() = default;
    Rational(long long n) : num_(n) { // NOLINT(google-explicit-constructor)
        if (n == INT64_MIN) {
            assign_big(mpq_class(mpz_class(std::to_string(n))));
        }
    }
    Rational(int n) : Rational(static_cast<long long>(n)) {} // NOLINT
    Rational(long n) : Rational(static_cast<long long>(n)) {} // NOLINT
    Rational(long long n, long long d);
    explicit Rational(const mpq_class& q);
    explicit Rational(const mpz_class& z);

    // Accepts `p` or `p/q` with an optional leading sign.
    static Rational parse(std::string_view text);

    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const;
    int sign() const;

    mpz_class numerator() const;
    mpz_class denominator() const;
    mpq_class to_mpq() const;
    std::string to_string() const;

    Rational operator-() const;
    Rational inverse() const;
    Rational pow(long long e) const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    std::size_t hash() const;

private:
    void assign_big(mpq_class q);
    void assign_wide(__int128 n, __int128 d);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

} // namespace dtc

template <>
struct std::hash<dtc::Rational> {
    std::size_t operator()(const dtc::Rational& q) const noexcept { return q.hash(); }
};
