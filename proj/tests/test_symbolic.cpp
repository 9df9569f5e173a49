#include "ratdist/errors.hpp"
#include "ratdist/ratfunc.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ratdist;

namespace {

UniPoly U(std::vector<long> c) {
    std::vector<Rational> r(c.begin(), c.end());
    return UniPoly("t", r);
}

MultiPoly P(const std::string& s, const VarList& v) { return MultiPoly::parse(s, v); }

RatFunc F(const std::string& s, const VarList& v) { return RatFunc::parse(s, v); }

UniPoly random_uni(std::mt19937_64& rng, int deg) {
    std::uniform_int_distribution<long> c(-9, 9), d(1, 5);
    std::vector<Rational> v;
    for (int i = 0; i <= deg; ++i) v.emplace_back(c(rng), d(rng));
    if (v.back().is_zero()) v.back() = 1;
    return UniPoly("t", v);
}

MultiPoly random_multi(std::mt19937_64& rng, const VarList& vars, int terms, unsigned maxdeg) {
    std::uniform_int_distribution<long> c(-9, 9), d(1, 4);
    std::uniform_int_distribution<unsigned> e(0, maxdeg);
    MultiPoly p(vars);
    for (int i = 0; i < terms; ++i) {
        Monomial m(vars.size());
        for (auto& x : m) x = e(rng);
        p.add_term(m, Rational(c(rng), d(rng)));
    }
    return p;
}

} // namespace

TEST(UniPoly, ArithmeticAndDivision) {
    UniPoly a = U({-1, 0, 1}), b = U({-1, 1});
    EXPECT_EQ(exact_div(a, b), U({1, 1}));
    EXPECT_THROW(exact_div(U({1, 0, 1}), b), NonExactDivision);
    EXPECT_EQ(gcd(a, U({1, -2, 1})), U({-1, 1}));
    EXPECT_EQ(gcd(U({2, 4}), UniPoly("t")), U({1, 2}).monic());
    EXPECT_EQ(U({1, 2, 1}).str(), "t^2 + 2*t + 1");
}

TEST(UniPoly, Sqrt) {
    EXPECT_EQ(*poly_sqrt(U({1, 2, 1})), U({1, 1}));
    EXPECT_FALSE(poly_sqrt(U({1, 0, 1})));
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        UniPoly q = random_uni(rng, 1 + i % 8);
        auto r = poly_sqrt(q * q);
        ASSERT_TRUE(r);
        EXPECT_TRUE(*r == q || *r == -q);
        EXPECT_GT(r->leading().sign(), 0);
    }
}

TEST(UniPoly, GcdOfReducedIsOne) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 30; ++i) {
        UniPoly g = random_uni(rng, 2), a = random_uni(rng, 3), b = random_uni(rng, 4);
        RatFunc f(g * a, g * b);
        UniPoly n = f.num_uni("t"), d = f.den_uni("t");
        EXPECT_EQ(gcd(n, d).degree(), 0);
        EXPECT_EQ(d.leading(), 1);
        EXPECT_EQ(gcd(g * a, g * b).degree() >= g.degree(), true);
    }
}

TEST(MultiPoly, ParsePrintRoundTrip) {
    VarList v{"X", "Y", "Z"};
    MultiPoly p = P("(X^2+Y^2)*(X^2-Y^2)", v);
    EXPECT_EQ(p, P("X^4 - Y^4", v));
    EXPECT_EQ(P(p.str(), v), p);
    MultiPoly q = P("3/4*X*Y^2 - 7*Z + 1/2", v);
    EXPECT_EQ(q.str(), "3/4*X*Y^2 - 7*Z + 1/2");
    EXPECT_EQ(P(q.str(), v), q);
    EXPECT_THROW(P("X + W", v), ParseError);
    EXPECT_THROW(P("X +* Y", v), ParseError);
    EXPECT_THROW(P("1/X", v), ParseError);
}

TEST(MultiPoly, ExactDivisionAndMismatch) {
    VarList v{"t"};
    EXPECT_EQ(exact_div(P("t^2-1", v), P("t-1", v)), P("t+1", v));
    EXPECT_THROW(exact_div(P("t^2+1", v), P("t-1", v)), NonExactDivision);
    EXPECT_THROW(P("x", {"x"}) + P("y", {"y"}), VariableMismatch);
    VarList w{"x", "y"};
    MultiPoly a = P("x^3 - 2*x*y + y^2", w), b = P("x + y - 1", w);
    EXPECT_EQ(poly_arith(a * b, b, PolyOp::exact_div), a);
}

TEST(MultiPoly, Sqrt) {
    std::mt19937_64 rng(9);
    VarList v{"x", "y", "z"};
    for (int i = 0; i < 40; ++i) {
        MultiPoly q = random_multi(rng, v, 1 + i % 6, 3);
        if (q.is_zero()) continue;
        auto r = poly_sqrt(q * q);
        ASSERT_TRUE(r) << q.str();
        EXPECT_TRUE(*r == q || *r == -q);
    }
    EXPECT_FALSE(poly_sqrt(P("x^2 + y^2", v)));
    EXPECT_FALSE(poly_sqrt(P("x^2*y + 1", v)));
}

TEST(RatFunc, ReductionAndRoot) {
    VarList v{"t"};
    RatFunc f = F("(t^2+2*t+1)/(4*t^2)", v);
    EXPECT_EQ(*ratfunc_square_root(f), F("(t+1)/(2*t)", v));
    EXPECT_FALSE(ratfunc_square_root(F("(t^2+1)/t^2", v)));
    RatFunc g = F("(t^2-1)/(2*t^2-2*t)", v);
    EXPECT_EQ(g.num().str(), "1/2*t + 1/2");
    EXPECT_EQ(g.den().str(), "t");
    // Idempotent.
    RatFunc h(g.num(), g.den());
    EXPECT_EQ(h.num(), g.num());
    EXPECT_EQ(h.den(), g.den());
    EXPECT_EQ(F(g.str(), v).num(), g.num());
}

TEST(RatFunc, SubstExamples) {
    VarList t{"t"}, a{"a"};
    RatFunc at = F("(1-t^2)/(2*t)", t);
    RatFunc sq = subst(P("a^2", a), Bindings{{"a", at}}, t);
    EXPECT_EQ(sq.eval({{"t", 1}}), 0);
    VarList u{"u"};
    RatFunc z = F("(1-u^2)/(4*u)", u);
    RatFunc id = z * F("4*u", u) - F("1-u^2", u);
    EXPECT_EQ(subst(id, rational_bindings({{"u", 2}}, {}), {}).constant_value(), 0);
    VarList uv{"u", "v"};
    RatFunc P0 = F("(u^4+1-4*u*(u^2-1)/(u^2+1)*v+2*v^2)/(4*(u^2-1)*v)", uv);
    EXPECT_EQ(subst(P0, rational_bindings({{"u", 2}, {"v", 1}}, {}), {}).constant_value(), Rational(71, 60));
    EXPECT_THROW(subst(F("1/(t-1)", t), rational_bindings({{"t", 1}}, {}), {}), EvaluationAtPole);
    EXPECT_THROW(F("1/(t-1)", t).eval({{"t", 1}}), EvaluationAtPole);
}

TEST(RatFunc, SubstIsHomomorphism) {
    std::mt19937_64 rng(13);
    VarList xy{"x", "y"}, st{"s", "t"};
    for (int i = 0; i < 10; ++i) {
        MultiPoly a = random_multi(rng, xy, 4, 2), b = random_multi(rng, xy, 3, 2);
        Bindings bind{{"x", RatFunc(random_multi(rng, st, 2, 2), random_multi(rng, st, 2, 1) + Rational(3))},
                      {"y", RatFunc(random_multi(rng, st, 3, 1))}};
        if (bind["x"].den().is_zero()) continue;
        EXPECT_TRUE(same_function(subst(a * b, bind, st), subst(a, bind, st) * subst(b, bind, st)));
    }
}

TEST(RatFunc, EvaluationRoundTrip) {
    std::mt19937_64 rng(17);
    VarList v{"t"};
    UniPoly n = random_uni(rng, 5), d = random_uni(rng, 4);
    RatFunc f(n, d);
    std::uniform_int_distribution<long> pick(-50, 50), pd(1, 9);
    int checked = 0;
    while (checked < 20) {
        Rational x(pick(rng), pd(rng));
        if (d.eval(x).is_zero()) continue;
        EXPECT_EQ(f.eval({{"t", x}}), n.eval(x) / d.eval(x));
        ++checked;
    }
}
