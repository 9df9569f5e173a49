#include "ratdist/errors.hpp"
#include "ratdist/geometry.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ratdist;

namespace {

Rational R(const char* s) { return Rational::parse(s); }

} // namespace

TEST(Geometry, SquaredDistance) {
    EXPECT_EQ(squared_distance({0, 0, 0}, {1, 1, 0}), 2);
    EXPECT_EQ(squared_distance({R("1/2"), R("1/2"), R("1/4")}, {0, 0, 0}), R("9/16"));
    Point3 p{R("3/7"), R("-2/9"), 5};
    EXPECT_EQ(squared_distance(p, p), 0);
}

TEST(Geometry, GuyPoint) {
    auto rep = distance_report({R("1/2"), R("1/2"), R("1/4")}, VertexSet::unit_square());
    ASSERT_TRUE(rep.all_rational);
    EXPECT_EQ(rep.count_rational, 4);
    for (const auto& e : rep.entries) EXPECT_EQ(*e.root, R("3/4"));
}

TEST(Geometry, CubeFiveTableThree) {
    // Table 3 prints d1..d4 for the square vertices and d5 for (0,0,1).
    auto rep = distance_report({R("77/108"), R("41/27"), R("-28/27")}, VertexSet::cube_five());
    ASSERT_TRUE(rep.all_rational);
    EXPECT_EQ(*rep.entries[0].root, R("71/36")); // (0,0,0)
    EXPECT_EQ(*rep.entries[1].root, R("49/36")); // (0,1,0)
    EXPECT_EQ(*rep.entries[2].root, R("67/36")); // (1,0,0)
    EXPECT_EQ(*rep.entries[3].root, R("43/36")); // (1,1,0)
    EXPECT_EQ(*rep.entries[4].root, R("95/36"));
}

TEST(Geometry, RectangleRow) {
    auto rep = distance_report({R("88/399"), R("55/133"), 0}, VertexSet::rectangle(R("13/12")));
    EXPECT_TRUE(rep.all_rational);
    EXPECT_THROW(VertexSet::rectangle(0), InvalidArgument);
    for (const auto& e : rep.entries) EXPECT_EQ(*e.root * *e.root, e.dist2);
}

TEST(Geometry, Heron) {
    EXPECT_EQ(heron_area_sq(3, 4, 5), 36);
    EXPECT_EQ(heron_area_sq(1, 2, 3), 0);
    Rational a = R("13/7"), b = R("5/3"), c = R("2");
    EXPECT_EQ(heron_area_sq(a, b, c), heron_area_sq(c, a, b));
    EXPECT_EQ(heron_area_sq(a, b, c), heron_area_sq(b, c, a));
}

TEST(Geometry, CayleyMenger) {
    EXPECT_EQ(cayley_menger_volume_sq({Point3{0, 0, 0}, Point3{1, 0, 0}, Point3{0, 1, 0}, Point3{0, 0, 1}}), R("1/36"));
    EXPECT_EQ(cayley_menger_volume_sq({Point3{0, 0, 0}, Point3{1, 0, 0}, Point3{0, 1, 0}, Point3{1, 1, 0}}), 0);
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<long> n(-20, 20), d(1, 6);
    auto rnd = [&] { return Point3{Rational(n(rng), d(rng)), Rational(n(rng), d(rng)), Rational(n(rng), d(rng))}; };
    for (int i = 0; i < 20; ++i) {
        Tetrahedron t{rnd(), rnd(), rnd(), rnd()};
        Rational v = cayley_menger_volume_sq(t);
        Tetrahedron p{t[2], t[0], t[3], t[1]};
        EXPECT_EQ(cayley_menger_volume_sq(p), v);
        Point3 sh{n(rng), n(rng), n(rng)};
        Tetrahedron s = t;
        for (auto& q : s) q = {q.x + sh.x, q.y + sh.y, q.z + sh.z};
        EXPECT_EQ(cayley_menger_volume_sq(s), v);
        // Against the triple product.
        Rational ax = t[1].x - t[0].x, ay = t[1].y - t[0].y, az = t[1].z - t[0].z;
        Rational bx = t[2].x - t[0].x, by = t[2].y - t[0].y, bz = t[2].z - t[0].z;
        Rational cx = t[3].x - t[0].x, cy = t[3].y - t[0].y, cz = t[3].z - t[0].z;
        Rational det = ax * (by * cz - bz * cy) - ay * (bx * cz - bz * cx) + az * (bx * cy - by * cx);
        EXPECT_EQ(v, det * det / 36);
    }
}

TEST(Geometry, CanonicalRect) {
    using T = std::tuple<Rational, Rational, Rational>;
    T row{R("12/11"), R("24/77"), R("32/77")};
    EXPECT_EQ(canonical_rect_hit(R("12/11"), R("24/77"), R("32/77")), row);
    EXPECT_EQ(canonical_rect_hit(R("12/11"), R("24/77"), R("45/77")), row);
    Rational a = R("11/12");
    EXPECT_EQ(canonical_rect_hit(a, R("32/77") * a, R("24/77") * a), row);
}

TEST(Geometry, CanonicalRectOrbitProperty) {
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<long> n(1, 40), d(1, 40);
    for (int i = 0; i < 100; ++i) {
        Rational a(n(rng), d(rng)), x(n(rng), d(rng)), y(n(rng), d(rng));
        auto c = canonical_rect_hit(a, x, y);
        auto [ca, cx, cy] = c;
        EXPECT_EQ(canonical_rect_hit(ca, cx, cy), c);
        for (const auto& [oa, ox, oy] : rect_orbit(a, x, y)) EXPECT_EQ(canonical_rect_hit(oa, ox, oy), c);
        EXPECT_LE(rect_orbit(a, x, y).size(), 8u);
    }
}

TEST(Geometry, CanonicalSquare3d) {
    Point3 p{R("41/27"), R("77/108"), R("28/27")};
    Point3 c = canonical_square3d(p);
    EXPECT_EQ(c, (Point3{R("-14/27"), R("31/108"), R("28/27")}));
    EXPECT_EQ(canonical_square3d({c.y, 1 - c.x, -c.z}), c);
}
