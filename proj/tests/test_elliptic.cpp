#include "ratdist/elliptic.hpp"
#include "ratdist/errors.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ratdist;

namespace {

Rational R(const char* s) { return Rational::parse(s); }

// y^2 = x^3 - 2 has (3, 5) of infinite order.
const ECurve E1 = ECurve::short_form(0, -2);
const ECPoint P1 = ECPoint::affine(3, 5);

// A long-form curve: 37a1, y^2 + y = x^3 - x, generator (0,0).
const ECurve E37{0, 0, 1, -1, 0};
const ECPoint G37 = ECPoint::affine(0, 0);

} // namespace

TEST(Elliptic, Basics) {
    EXPECT_TRUE(ec_on_curve(E1, P1));
    EXPECT_TRUE(ec_on_curve(E1, ECPoint::O()));
    EXPECT_FALSE(ec_on_curve(E1, ECPoint::affine(0, 1)));
    EXPECT_EQ(ec_add(E1, P1, ECPoint::O()), P1);
    EXPECT_EQ(ec_add(E1, P1, ec_neg(E1, P1)), ECPoint::O());
    EXPECT_EQ(ec_mul(E1, 0, P1), ECPoint::O());
    EXPECT_EQ(ec_mul(E1, 1, P1), P1);
    EXPECT_EQ(ec_mul(E1, 2, P1), ECPoint::affine(R("129/100"), R("-383/1000")));
    EXPECT_THROW(ec_add(E1, P1, ECPoint::affine(1, 1)), OffCurve);
    EXPECT_THROW(ec_mul(E1, 3, ECPoint::affine(1, 1)), OffCurve);
}

TEST(Elliptic, Invariants) {
    EXPECT_EQ(curve_invariants(ECurve::short_form(-1, 0)).j, 1728);
    EXPECT_EQ(curve_invariants(ECurve::short_form(0, 1)).j, 0);
    EXPECT_THROW(curve_invariants(ECurve::cubic(-2, 1, 0)), SingularCurve);
    EXPECT_EQ(curve_invariants(E37).discriminant, 37);
}

TEST(Elliptic, GroupLawProperties) {
    for (const auto& [E, P] : {std::make_pair(E1, P1), std::make_pair(E37, G37)}) {
        for (long m = -5; m <= 5; ++m)
            for (long n = -5; n <= 5; ++n)
                EXPECT_EQ(ec_mul(E, m + n, P), ec_add(E, ec_mul(E, m, P), ec_mul(E, n, P)));
        ECPoint A = ec_mul(E, 2, P), B = ec_mul(E, -3, P), C = ec_mul(E, 5, P);
        EXPECT_EQ(ec_add(E, A, B), ec_add(E, B, A));
        EXPECT_EQ(ec_add(E, ec_add(E, A, B), C), ec_add(E, A, ec_add(E, B, C)));
        for (long k = 1; k <= 12; ++k) EXPECT_FALSE(ec_mul(E, k, P).infinity);
    }
}

TEST(Elliptic, IsomorphismFinder) {
    CurveIso s = to_short_weierstrass(E37);
    EXPECT_TRUE(s.dst.is_short());
    EXPECT_TRUE(ec_on_curve(s.dst, s(G37)));
    // Scale E1 by u = 2/3 and shift: still isomorphic.
    ECurve E2 = transform(E1, R("2/3"), 5, R("1/2"), -1);
    auto iso = find_isomorphism(E1, E2);
    ASSERT_TRUE(iso);
    for (long k = 1; k <= 4; ++k) {
        ECPoint Q = ec_mul(E1, k, P1);
        EXPECT_TRUE(ec_on_curve(E2, (*iso)(Q)));
        EXPECT_EQ((*iso)(ec_mul(E1, 3, Q)), ec_mul(E2, 3, (*iso)(Q)));
        EXPECT_EQ(iso->inverse()((*iso)(Q)), Q);
    }
    // Quadratic twist by 5 is not Q-isomorphic.
    EXPECT_FALSE(find_isomorphism(E1, ECurve::short_form(0, -2 * 125)));
    EXPECT_TRUE(find_isomorphism(ECurve::short_form(-1, 0), ECurve::short_form(-16, 0)));
}

TEST(Elliptic, QuarticModels) {
    // V^2 = q^4 + 1 with (0, 1).
    QuarticCurve C = QuarticCurve::with_point({1, 0, 0, 0, 1}, 0, 1);
    QuarticModel M = quartic_to_cubic(C);
    EXPECT_EQ(M.forward(0, 1), ECPoint::O());
    EXPECT_TRUE(ec_on_curve(M.curve(), M.forward(0, -1)));
    EXPECT_THROW(quartic_to_cubic(QuarticCurve::with_point({1, 0, 2, 0, 1}, 0, 1)), SingularQuartic);
    EXPECT_THROW(quartic_to_cubic(QuarticCurve::with_point({1, 0, 0, 0, 1}, 0, 2)), InvalidArgument);
}

TEST(Elliptic, QuarticRandomPointsRoundTrip) {
    // V^2 = q^4 - q^3 - 3 q^2 - 2 q + 9: points found by sweeping q.
    std::array<Rational, 5> c{9, -2, -3, -1, 1};
    std::vector<QuarticCurve> models{QuarticCurve::with_point(c, 0, 3), QuarticCurve::with_point(c, 2, -1),
                                     QuarticCurve::with_infinity(c, 1), QuarticCurve::with_infinity(c, -1)};
    std::vector<std::pair<Rational, Rational>> pts;
    for (long n = -40; n <= 40 && pts.size() < 20; ++n)
        for (long d = 1; d <= 20 && pts.size() < 20; ++d) {
            Rational q(n, d);
            if (q.den() != d) continue;
            if (auto v = is_rational_square(QuarticCurve::with_infinity(c, 1).eval(q))) pts.emplace_back(q, *v);
        }
    ASSERT_GE(pts.size(), 8u);
    for (const auto& C : models) {
        QuarticModel M = quartic_to_cubic(C);
        for (const auto& [q, v] : pts) {
            for (const Rational& vv : {v, -v}) {
                ECPoint P = M.forward(q, vv);
                ASSERT_TRUE(ec_on_curve(M.curve(), P));
                auto back = M.backward(P);
                ASSERT_TRUE(back);
                EXPECT_EQ(back->first, q);
                EXPECT_EQ(back->second, vv);
            }
        }
    }
    // A cubic with a rational root: V^2 = q^3 - q via the root q = 0.
    QuarticModel Mr = quartic_to_cubic(QuarticCurve::with_point({0, -1, 0, 1, 0}, 1, 0));
    EXPECT_TRUE(ec_on_curve(Mr.curve(), Mr.forward(0, 0)));
    EXPECT_EQ(*Mr.backward(Mr.forward(-1, 0)), std::make_pair(Rational(-1), Rational(0)));
    EXPECT_EQ(curve_invariants(Mr.curve()).j, 1728);
}
