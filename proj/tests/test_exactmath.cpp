#include "ratdist/errors.hpp"
#include "ratdist/quadfield.hpp"
#include "ratdist/rational.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ratdist;

namespace {

Rational R(const char* s) { return Rational::parse(s); }

Rational random_rational(std::mt19937_64& rng, long span) {
    std::uniform_int_distribution<long> num(-span, span), den(1, span);
    return Rational(num(rng), den(rng));
}

} // namespace

TEST(Rational, ParseAndPrint) {
    EXPECT_EQ(R("6/8").str(), "3/4");
    EXPECT_EQ(R("-10/5").str(), "-2");
    EXPECT_EQ(R("0/7").str(), "0");
    EXPECT_EQ(R("  12 / -18 ").str(), "-2/3");
    EXPECT_THROW(R("1/0"), ParseError);
    EXPECT_THROW(R("1.5"), ParseError);
    EXPECT_THROW(R(""), ParseError);
    EXPECT_EQ(Rational(0).den(), 1);
}

TEST(Rational, SquareDetection) {
    EXPECT_EQ(*is_rational_square(R("9/16")), R("3/4"));
    EXPECT_FALSE(is_rational_square(R("1/2")));
    EXPECT_FALSE(is_rational_square(R("-4")));
    EXPECT_EQ(*is_rational_square(0), 0);
    // Table 2 point against the origin, by hand: integer roots of num and den.
    Rational x = R("41/27"), y = R("77/108"), z = R("28/27");
    Rational d2 = x * x + y * y + z * z;
    Integer n = d2.num(), d = d2.den();
    Integer rn = isqrt(n), rd = isqrt(d);
    ASSERT_EQ(rn * rn, n);
    ASSERT_EQ(rd * rd, d);
    EXPECT_EQ(*is_rational_square(d2), Rational(rn, rd));
}

TEST(Rational, SquareProperties) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        Rational r = random_rational(rng, 1000000);
        EXPECT_EQ(*is_rational_square(r * r), abs(r));
        auto s = is_rational_square(r * r);
        EXPECT_EQ(*s * *s, r * r);
        Rational a = random_rational(rng, 1000), b = random_rational(rng, 1000);
        EXPECT_EQ((a + b) - b, a);
    }
}

TEST(Rational, Height) {
    EXPECT_EQ(height(R("13/12")), 13);
    EXPECT_EQ(height(0), 1);
    EXPECT_EQ(height(-24), 24);
    EXPECT_EQ(height(R("-3/7")), 7);
}

TEST(QuadField, Examples) {
    QuadElem a(1, 1, 2), b(1, -1, 2);
    EXPECT_EQ(a * b, QuadElem::rational(-1, 2));
    EXPECT_EQ(a.inverse(), QuadElem(-1, 1, 2));
    EXPECT_EQ(quad_arith(QuadElem::rational(1, 2), a, QuadOp::div), QuadElem(-1, 1, 2));
    // 1 + 2 a t - t^2 with a = 1, t = 1 + sqrt 2.
    QuadElem t = a;
    EXPECT_TRUE((QuadElem::rational(1, 2) + t * Rational(2) - t * t).is_zero());
    EXPECT_THROW(a + QuadElem(1, 1, 3), RadicandMismatch);
    EXPECT_THROW(a / QuadElem(0, 0, 2), DivisionByZero);
    EXPECT_THROW(QuadElem(1, 1, 4), InvalidArgument);
}

TEST(QuadField, FieldProperty) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        QuadElem a(random_rational(rng, 500), random_rational(rng, 500), 2);
        QuadElem b(random_rational(rng, 500), random_rational(rng, 500), 2);
        if (a.is_zero()) continue;
        EXPECT_EQ((a * b) * a.inverse(), b);
        EXPECT_EQ(*quad_sqrt(a * a) * *quad_sqrt(a * a), a * a);
    }
    EXPECT_FALSE(quad_sqrt(QuadElem(1, 1, 2)));
    EXPECT_EQ(*quad_sqrt(QuadElem::rational(2, 2)), QuadElem(0, 1, 2));
}
