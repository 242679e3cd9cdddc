#include <random>

#include <gtest/gtest.h>

#include "dtc/ratfunc.hpp"

using namespace dtc;

namespace {

LaurentPoly lp(std::string_view s) { return LaurentPoly::parse(s); }
RatFunc rf(std::string_view s) { return RatFunc::parse(s); }

Rational random_rational(std::mt19937& gen, int span = 9) {
    std::uniform_int_distribution<int> num(-span, span);
    std::uniform_int_distribution<int> den(1, span);
    return Rational(num(gen), den(gen));
}

LaurentPoly random_poly(std::mt19937& gen) {
    std::uniform_int_distribution<int> count(0, 4);
    std::uniform_int_distribution<int> exponent(-3, 4);
    std::vector<LaurentPoly::Term> terms;
    for (int i = count(gen); i > 0; --i) {
        terms.emplace_back(exponent(gen), random_rational(gen, 4));
    }
    return LaurentPoly::from_terms(std::move(terms));
}

RatFunc random_ratfunc(std::mt19937& gen) {
    LaurentPoly den;
    while (den.is_zero()) {
        den = random_poly(gen);
    }
    return RatFunc(random_poly(gen), den);
}

} // namespace

TEST(Rational, LowestTermsAndSign) {
    Rational q(6, -4);
    EXPECT_EQ(q.to_string(), "-3/2");
    EXPECT_EQ(q.numerator(), -3);
    EXPECT_EQ(q.denominator(), 2);
    EXPECT_EQ(Rational(0, -7).to_string(), "0");
    EXPECT_EQ(Rational(0, -7).denominator(), 1);
    EXPECT_THROW(Rational(1, 0), DivisionByZero);
    EXPECT_THROW(Rational(3).inverse() * Rational(0).inverse(), DivisionByZero);
}

TEST(Rational, ParseRoundTrip) {
    for (const char* s : {"0", "5", "-5", "3/4", "-3/4", "123456789012345678901234567891/2"}) {
        EXPECT_EQ(Rational::parse(s).to_string(), s);
    }
    EXPECT_EQ(Rational::parse("+6/8"), Rational(3, 4));
    EXPECT_THROW(Rational::parse("1/0"), DivisionByZero);
    for (const char* bad : {"", "x", "1/", "/2", "1.5", "2/-3"}) {
        EXPECT_THROW(Rational::parse(bad), ParseError) << bad;
    }
}

// GMP rationals are the oracle, including values far beyond 64 bits.
TEST(Rational, MatchesGmpOnRandomAndHugeValues) {
    std::mt19937 gen(7);
    std::uniform_int_distribution<long long> big(-(1LL << 62), 1LL << 62);
    for (int i = 0; i < 2000; ++i) {
        long long an = big(gen);
        long long ad = big(gen) | 1;
        long long bn = i % 3 == 0 ? big(gen) % 100 : big(gen);
        long long bd = (big(gen) % 1000) | 1;
        Rational a(an, ad);
        Rational b(bn, bd);
        mpq_class qa(mpz_class(std::to_string(an)), mpz_class(std::to_string(ad)));
        mpq_class qb(mpz_class(std::to_string(bn)), mpz_class(std::to_string(bd)));
        qa.canonicalize();
        qb.canonicalize();
        EXPECT_EQ((a + b).to_mpq(), mpq_class(qa + qb));
        EXPECT_EQ((a - b).to_mpq(), mpq_class(qa - qb));
        EXPECT_EQ((a * b).to_mpq(), mpq_class(qa * qb));
        if (bn != 0) {
            EXPECT_EQ((a / b).to_mpq(), mpq_class(qa / qb));
        }
        EXPECT_EQ(a < b, qa < qb);
        // Canonical storage: equal values compare and hash equal whatever path built them.
        Rational back(mpq_class(qa * qb));
        EXPECT_EQ(back, a * b);
        EXPECT_EQ(back.hash(), (a * b).hash());
    }
}

TEST(Rational, FieldAxiomsOnRandomInputs) {
    std::mt19937 gen(11);
    for (int i = 0; i < 500; ++i) {
        Rational a = random_rational(gen);
        Rational b = random_rational(gen);
        Rational c = random_rational(gen);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        if (!a.is_zero()) {
            EXPECT_EQ(a * a.inverse(), Rational(1));
        }
    }
}

TEST(LaurentPoly, SpecExamples) {
    EXPECT_EQ(lp("y^2 - 1") + LaurentPoly(1), lp("y^2"));
    EXPECT_EQ(lp("y - 1") * lp("y + 1"), lp("y^2 - 1"));
    EXPECT_EQ(lp("y^-1") * LaurentPoly::y(), LaurentPoly(1));
    EXPECT_TRUE((lp("y^3 - 2*y") - lp("y^3 - 2*y")).is_zero());
    EXPECT_TRUE((lp("y^3 - 2*y") - lp("y^3 - 2*y")).terms().empty());
}

TEST(LaurentPoly, RenderAndParse) {
    LaurentPoly p = LaurentPoly::from_terms({{-2, Rational(3, 2)}, {4, Rational(1)}, {0, Rational(-2)}, {4, Rational(1)}});
    EXPECT_EQ(p.to_string(), "2*y^4 - 2 + 3/2*y^-2");
    EXPECT_EQ(LaurentPoly::parse(p.to_string()), p);
    EXPECT_EQ(LaurentPoly().to_string(), "0");
}

TEST(LaurentPoly, EvaluationIsARingMap) {
    std::mt19937 gen(3);
    for (int i = 0; i < 300; ++i) {
        LaurentPoly a = random_poly(gen);
        LaurentPoly b = random_poly(gen);
        Rational y = random_rational(gen);
        if (y.is_zero()) {
            continue;
        }
        EXPECT_EQ((a * b).evaluate(y), a.evaluate(y) * b.evaluate(y));
        EXPECT_EQ((a - b).evaluate(y), a.evaluate(y) - b.evaluate(y));
    }
}

TEST(RatFunc, SpecExamples) {
    RatFunc inv = RatFunc(1) / rf("y^2 - 1");
    EXPECT_EQ(inv + inv, rf("(2)/(y^2 - 1)"));
    EXPECT_EQ(RatFunc(lp("y^2 - 1"), lp("y - 1")), rf("y + 1"));
    RatFunc q(lp("y^-1 - y"));
    EXPECT_EQ(q * RatFunc(lp("-y"), lp("y^2 - 1")), RatFunc(1));
    EXPECT_THROW(RatFunc(1) / RatFunc(0), DivisionByZero);
    EXPECT_THROW(RatFunc(lp("y"), LaurentPoly()), DivisionByZero);
}

TEST(RatFunc, NegYPower) {
    EXPECT_EQ(RatFunc::neg_y_power(0), RatFunc(1));
    EXPECT_EQ(RatFunc::neg_y_power(-1), RatFunc(lp("-y^-1")));
    EXPECT_EQ(RatFunc::neg_y_power(2), RatFunc(lp("y^2")));
    EXPECT_EQ(RatFunc::neg_y_power(3), RatFunc(lp("-y^3")));
}

TEST(RatFunc, CanonicalForm) {
    // y^-2 (y^2 - 1) / (2 y^3 - 2 y) = 1 / (2 y^3).
    RatFunc f(lp("1 - y^-2"), lp("2*y^3 - 2*y"));
    EXPECT_EQ(f.denominator(), LaurentPoly(1));
    EXPECT_EQ(f.numerator(), lp("1/2*y^-3"));
    RatFunc g(lp("-y^3"), lp("y^4 - 2*y^2 + 1"));
    EXPECT_EQ(g.to_string(), "(-y^3)/(y^4 - 2*y^2 + 1)");
    EXPECT_EQ(RatFunc::parse(g.to_string()), g);
    EXPECT_EQ(RatFunc(g.numerator(), g.denominator()), g);
}

TEST(RatFunc, FieldAxiomsAndCanonicalEquality) {
    std::mt19937 gen(5);
    for (int i = 0; i < 200; ++i) {
        RatFunc a = random_ratfunc(gen);
        RatFunc b = random_ratfunc(gen);
        RatFunc c = random_ratfunc(gen);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        if (!a.is_zero()) {
            EXPECT_EQ(a * a.inverse(), RatFunc(1));
            EXPECT_EQ((b * a) / a, b);
        }
        // Re-normalizing is the identity; rendering round-trips.
        EXPECT_EQ(RatFunc(a.numerator(), a.denominator()), a);
        EXPECT_EQ(RatFunc::parse(a.to_string()), a);
        // Denominator is an ordinary monic polynomial with nonzero constant term.
        EXPECT_GE(a.denominator().min_exponent(), 0);
        EXPECT_EQ(a.denominator().min_exponent(), 0);
        EXPECT_EQ(a.denominator().leading_coefficient(), Rational(1));
        if (!a.is_zero()) {
            LaurentPoly shifted = a.numerator().shifted(-a.numerator().min_exponent());
            EXPECT_EQ(poly_gcd(shifted, a.denominator()), LaurentPoly(1));
        }
    }
}

TEST(RatFunc, EvaluationMatchesArithmetic) {
    std::mt19937 gen(9);
    for (int i = 0; i < 200; ++i) {
        RatFunc a = random_ratfunc(gen);
        RatFunc b = random_ratfunc(gen);
        Rational y = random_rational(gen, 20);
        if (y.is_zero() || a.denominator().evaluate(y).is_zero() || b.denominator().evaluate(y).is_zero()) {
            continue;
        }
        EXPECT_EQ((a + b).evaluate(y), a.evaluate(y) + b.evaluate(y));
        EXPECT_EQ((a * b).evaluate(y), a.evaluate(y) * b.evaluate(y));
    }
}
