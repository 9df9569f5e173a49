#include "ratdist/errors.hpp"
#include "ratdist/families.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ratdist;

namespace {

Rational R(const char* s) { return Rational::parse(s); }

// Small random rationals, never zero.
struct RandRat {
    std::mt19937 gen;
    explicit RandRat(unsigned seed) : gen(seed) {}
    Rational operator()(long H = 30) {
        std::uniform_int_distribution<long> num(-H, H), den(1, H);
        long n = 0;
        while (n == 0) n = num(gen);
        return Rational(n, den(gen));
    }
};

// Independent of the library's report: squared distances and exact roots.
bool oracle(const Point3& p, const std::vector<Point3>& vs) {
    for (const auto& v : vs) {
        Rational dx = p.x - v.x, dy = p.y - v.y, dz = p.z - v.z;
        Rational s = dx * dx + dy * dy + dz * dz;
        Integer n = s.num(), d = s.den();
        if (n < 0) return false;
        Integer rn = sqrt(n), rd = sqrt(d);
        if (rn * rn != n || rd * rd != d) return false;
    }
    return true;
}

const std::vector<Point3> kSquare{{0, 0, 0}, {0, 1, 0}, {1, 0, 0}, {1, 1, 0}};

// Evaluates a family at `want` random points off its poles.
int oracle_sweep(const ParamFamily& f, int want, unsigned seed, long H = 30) {
    RandRat rr(seed);
    int ok = 0, tried = 0;
    while (tried < want && tried < 10 * want) {
        Params at;
        for (const auto& v : f.params) at[v] = rr(H);
        Point3 p;
        try {
            p = f.eval(at);
        } catch (const EvaluationAtPole&) {
            continue;
        } catch (const DivisionByZero&) {
            continue;
        }
        ++tried;
        ok += oracle(p, f.target_at(at).vertices);
    }
    return ok;
}

} // namespace

// ---- rectangles ------------------------------------------------------------

TEST(Rectangle, QuarticIsSquareOfConic) {
    VarList v{"X", "Y", "Z", "t"};
    RatFunc t = RatFunc::var(v, "t");
    RatFunc F = subst(rect_quartic_symbolic(), {{"a", (1 - t * t) / (2 * t)}}, v);
    RatFunc G(rect_conic_G());
    EXPECT_EQ(F, G * G);
}

TEST(Rectangle, FamilyOracle) {
    ParamFamily f = rect_family_symbolic();
    EXPECT_EQ(oracle_sweep(f, 25, 1), 25);
    RectPoint p = rect_family(R("2/3"), 1, 2);
    EXPECT_EQ(p.a, R("5/12"));
    EXPECT_TRUE(oracle(p.point, VertexSet::rectangle(p.a).vertices));
    EXPECT_THROW(rect_family(1, 1, 2), InvalidArgument);
}

TEST(Rectangle, Sqrt2Family) {
    for (long n : {2, 3, 5}) {
        QuadElem u = QuadElem::rational(n, 2) + QuadElem(0, R("1/3"), 2);
        Sqrt2Point s = rect_sqrt2_family(u);
        const std::array<std::pair<long, long>, 4> vs{{{0, 0}, {0, 1}, {1, 0}, {1, 1}}};
        for (std::size_t i = 0; i < 4; ++i) {
            QuadElem dx = s.x - Rational(vs[i].first), dy = s.y - Rational(vs[i].second);
            EXPECT_EQ(s.dist[i] * s.dist[i], dx * dx + dy * dy);
        }
        // Displayed x is in the a = -1 frame; displayed y is wrong in either frame.
        EXPECT_EQ(s.printed_x, -s.x);
        EXPECT_FALSE(s.printed_y == s.y);
        EXPECT_FALSE(s.printed_y == 1 - s.y);
    }
}

TEST(Rectangle, ShuteYocom) {
    int interior = 0;
    for (long i = 1; i < 8; ++i)
        for (long j = 1; j < 8; ++j) {
            Rational U(i, 9), V(j, 11);
            ShuteYocom sy = shute_yocom_point(U, V);
            EXPECT_TRUE(oracle(sy.point, VertexSet::rectangle(sy.a).vertices));
            EXPECT_EQ(sy.interior && sy.a > 0, shute_yocom_sign_test(U, V) && sy.a > 0);
            interior += sy.interior;
        }
    EXPECT_GT(interior, 0);
}

TEST(Rectangle, InteriorGeneration) {
    EXPECT_THROW(curve_invariants(interior_rect_curve(1)), SingularCurve);
    EXPECT_THROW(interior_rect_generate(1, 2), InvalidArgument);
    ECurve E = interior_rect_curve(2);
    EXPECT_TRUE(ec_on_curve(E, interior_rect_H(2)));
    EXPECT_TRUE(ec_on_curve(E, ec_add(E, interior_rect_H(2), interior_rect_H(2))));
    for (const Rational& t : {R("1/4"), R("1/3"), R("2/7")}) {
        Rational target = 2 * t / (1 - t * t);
        int in_box = 0;
        auto pairs = interior_rect_generate(t, 3);
        ASSERT_FALSE(pairs.empty());
        for (const auto& [U, V] : pairs) {
            ShuteYocom sy;
            try {
                sy = shute_yocom_point(U, V);
            } catch (const InvalidArgument&) {
                continue;
            }
            EXPECT_TRUE(oracle(sy.point, VertexSet::rectangle(sy.a).vertices));
            EXPECT_TRUE(sy.a == target || sy.a == -target) << sy.a;
            in_box += sy.interior && sy.a == target;
        }
        EXPECT_GT(in_box, 0) << t;
    }
}

// ---- unit square: planes -----------------------------------------------------

TEST(SquarePlanes, Prop31Audit) {
    Prop31Audit a = audit_prop31();
    EXPECT_EQ(a.printed_pass, 0);
    EXPECT_EQ(a.corrected_pass, static_cast<int>(a.corrected.size()));
    EXPECT_TRUE(oracle(axis_line_family(2), kSquare));
    EXPECT_FALSE(oracle(axis_line_printed(2), kSquare));
}

TEST(SquarePlanes, HalfPlane) {
    const VarList uv{"u", "v"};
    auto f = half_plane_PQz_symbolic();
    RatFunc H = subst(half_plane_H(), {{"P", f[0]}, {"Q", f[1]}}, uv);
    EXPECT_EQ(H, 4 * f[2] * f[2]);
    RandRat rr(7);
    for (int i = 0; i < 25; ++i) {
        Rational u = rr(), v = rr();
        if (u == 1 || u == -1) continue;
        EXPECT_TRUE(oracle(half_plane_point(u, v).point, kSquare));
    }
    HalfPlaneCurve c = half_plane_curve(2, 1);
    EXPECT_TRUE(ec_on_curve(c.curve, c.point));
    EXPECT_FALSE(c.point.infinity);
    EXPECT_THROW(half_plane_curve(1, 3), SingularCurve);
    EXPECT_THROW(half_plane_curve(2, 0), SingularCurve);
}

TEST(SquarePlanes, Diagonal) {
    ParamFamily f = diag_plane_family_symbolic();
    EXPECT_EQ(oracle_sweep(f, 25, 3), 25);
    for (const Rational& k : {R("2"), R("1/3"), R("-5/2")})
        EXPECT_TRUE(ec_on_curve(diag_plane_curve(k), diag_plane_Q(k)));
    EXPECT_TRUE(diag_plane_generate(2, 0).empty());
    auto pts = diag_plane_generate(2, 2);
    Point3 fam = diag_plane_family(2);
    int fresh = 0;
    for (const auto& p : pts) {
        EXPECT_TRUE(oracle(p, kSquare));
        EXPECT_EQ(p.x, p.y);
        fresh += !(p == fam);
    }
    EXPECT_GE(fresh, 1);
}

// ---- unit square in space ----------------------------------------------------

TEST(Square3D, PolynomialG) {
    MultiPoly G = square3d_G();
    EXPECT_EQ(G.eval({{"u", 2}, {"X", R("1/12")}, {"Y", R("19/36")}}), R("49/729"));
    const VarList v{"u", "X", "Y"};
    RatFunc u = RatFunc::var(v, "u"), X = RatFunc::var(v, "X"), Y = RatFunc::var(v, "Y");
    EXPECT_EQ(subst(G, {{"u", X / Y}, {"X", u * Y}, {"Y", Y}}, v), RatFunc(G));
}

TEST(Square3D, TangentConstruction) {
    Rational u0 = 2, X0 = R("1/12"), Y0 = R("19/36"), V0 = R("7/27");
    TangentConstruction tc = square3d_tangent_construct(u0, X0, Y0, V0);
    Rational B1 = 4 * Y0 * ((-pow(u0, 4) + 10 * u0 * u0 - 1) * X0 * X0 + pow(u0 * u0 - 1, 2) * Y0 * Y0 - u0 * u0 - 1);
    EXPECT_EQ(tc.trace.B1, B1);
    EXPECT_EQ(oracle_sweep(tc.family, 25, 4), 25);

    Point3 p = tc.family.eval({{"t", 30}});
    EXPECT_TRUE(oracle(p, kSquare));

    Square3DComparison c = compare_with_printed_square3d(tc.family);
    ASSERT_TRUE(c.matches);
    EXPECT_EQ(c.alpha, 17);
    EXPECT_EQ(c.beta, 816);
    EXPECT_EQ(c.gamma, -18);
    EXPECT_EQ(c.delta, 162);
    EXPECT_EQ(c.symmetry, "z->-z");
    EXPECT_EQ(c.delta_normalized, printed_square3d().delta.primitive());

    EXPECT_THROW(square3d_tangent_construct(u0, X0, Y0, R("14/27")), InvalidArgument);
    EXPECT_THROW(square3d_tangent_construct(u0, X0, Y0, 0), InvalidArgument);
}

TEST(Square3D, PrintedFamilyOracle) {
    PrintedSquare3D pr = printed_square3d();
    for (long s : {1, 2, 7, 30}) {
        Rational D = pr.delta.eval(s), D2 = D * D;
        Point3 p{pr.x_num.eval(s) / D2, pr.y_num.eval(s) / D2, pr.z_num.eval(s) / D2};
        EXPECT_TRUE(oracle(p, kSquare)) << s;
    }
}

// ---- tetrahedra ----------------------------------------------------------------

namespace {

const Tetrahedron kSimplex{Point3{0, 0, 0}, Point3{1, 0, 0}, Point3{0, 1, 0}, Point3{0, 0, 1}};
const Tetrahedron kRathbun{Point3{0, 0, 0}, Point3{1, 0, 0}, Point3{R("11/200"), R("117/800"), 0},
                           Point3{R("7/25"), R("63/325"), R("21/260")}};

std::map<std::string, Rational> at_R(const std::array<Rational, 5>& r) {
    std::map<std::string, Rational> m;
    for (std::size_t i = 0; i < 5; ++i) m["R" + std::to_string(i)] = r[i];
    return m;
}

bool kills_gradient(const MultiPoly& F, const std::array<Rational, 5>& r) {
    auto at = at_R(r);
    if (!F.eval(at).is_zero()) return false;
    for (std::size_t i = 0; i < 5; ++i)
        if (!F.partial("R" + std::to_string(i)).eval(at).is_zero()) return false;
    return true;
}

} // namespace

TEST(Tetra, ConstructionOracle) {
    for (const auto& tet : {kSimplex, kRathbun}) {
        TetraConstruction tc = tetra_construct(tet);
        std::vector<Point3> vs(tet.begin(), tet.end());
        EXPECT_EQ(oracle_sweep(tc.family, 10, 5, 12), 10);
        // C2(0,0,0,p4) = -(det A)^2 p4^2.
        const VarList p{"p1", "p2", "p3", "p4"};
        MultiPoly c = tc.trace.C2.specialize({{"p1", 0}, {"p2", 0}, {"p3", 0}});
        EXPECT_EQ(c, MultiPoly::var(p, "p4") * MultiPoly::var(p, "p4") * -(tc.trace.detA * tc.trace.detA));
    }
    EXPECT_TRUE(oracle({R("617/4900"), R("2553/63700"), R("3/25480")},
                       std::vector<Point3>(kRathbun.begin(), kRathbun.end())));
}

TEST(Tetra, Degenerate) {
    Tetrahedron flat{Point3{0, 0, 0}, Point3{1, 2, 3}, Point3{2, 4, 6}, Point3{0, 1, 5}};
    EXPECT_THROW(tetra_construct(flat), DegenerateTetrahedron);
    EXPECT_THROW(tetra_singular_points(flat), DegenerateTetrahedron);
}

TEST(Tetra, SingularPoints) {
    MultiPoly F = tetra_quartic(kRathbun);
    auto pts = tetra_singular_points(kRathbun);
    ASSERT_EQ(pts.size(), 40u);
    for (const auto& s : pts) EXPECT_TRUE(kills_gradient(F, s.R)) << s.label;

    // The points at infinity are singular for any tetrahedron.
    Tetrahedron odd{Point3{0, 0, 0}, Point3{1, 2, 0}, Point3{R("1/3"), 5, 1}, Point3{-2, R("1/7"), 3}};
    MultiPoly G = tetra_quartic(odd);
    for (int s = 0; s < 8; ++s)
        EXPECT_TRUE(kills_gradient(G, {1, s & 1 ? -1 : 1, s & 2 ? -1 : 1, s & 4 ? -1 : 1, 0}));
    EXPECT_THROW(tetra_singular_points(odd), InvalidArgument);
}

TEST(Tetra, Collinear) {
    CollinearPoint c = collinear_family(3, 4, 0, 2, 3, 1);
    std::vector<Point3> vs{{0, 0, 0}, {3, 4, 0}, {6, 8, 0}, {9, 12, 0}};
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(squared_distance(c.point, vs[i]), c.Q[i] * c.Q[i]);
    CollinearPoint o = collinear_family(3, 4, 0, 2, 3, R("5/2"));
    EXPECT_EQ(o.point, (Point3{0, 0, 0}));
    EXPECT_EQ(o.Q[0], 0);
    EXPECT_THROW(collinear_family(1, 1, 1, 2, 3, 1), InvalidArgument);
}

TEST(Tetra, HeronTriangle) {
    auto s = heron_triangle(2, 1, 1);
    EXPECT_EQ(s, (std::array<Rational, 3>{6, 5, 5}));
    EXPECT_EQ(heron_area_sq(6, 5, 5), 144);
    const VarList v{"u", "v", "w"};
    MultiPoly p = MultiPoly::parse("(v + w)*(u^2 - v*w)", v), q = MultiPoly::parse("v*(u^2 + w^2)", v),
              r = MultiPoly::parse("w*(u^2 + v^2)", v);
    MultiPoly h = (p + q + r) * (q + r - p) * (p - q + r) * (p + q - r);
    EXPECT_TRUE(poly_sqrt(h).has_value());
    EXPECT_THROW(heron_triangle(1, 2, 3), InvalidArgument);
}

TEST(Tetra, HeronFamily) {
    for (const Rational& m : {R("2"), R("3"), R("1/2")}) {
        HeronTetraReport h = heron_tetra(m);
        EXPECT_TRUE(h.edges_match);
        EXPECT_TRUE(h.three_equal_pairs);
        EXPECT_TRUE(h.areas_match);
        for (const auto& a : h.face_area_sq) EXPECT_TRUE(is_rational_square(a).has_value());
        EXPECT_EQ(h.volume_sq, cayley_menger_volume_sq(h.tet));
        // The displayed volume is V / 288^2.
        EXPECT_EQ(h.volume_sq, pow(82944 * h.printed_volume, 2));
        EXPECT_FALSE(h.volume_match);
    }
    EXPECT_THROW(heron_tetra(1), InvalidArgument);
}

TEST(Tetra, FivePointConfigurations) {
    HeronTetraReport h = heron_tetra(3);
    TetraConstruction tc = tetra_construct(h.tet);
    RandRat rr(11);
    int found = 0;
    for (int i = 0; i < 40 && found < 10; ++i) {
        Params at{{"q1", rr(9)}, {"q2", rr(9)}, {"q3", rr(9)}};
        Point3 p;
        try {
            p = tc.family.eval(at);
        } catch (const EvaluationAtPole&) {
            continue;
        }
        std::vector<Point3> five(h.tet.begin(), h.tet.end());
        if (!oracle(p, five)) continue;
        five.push_back(p);
        bool all = true;
        for (std::size_t a = 0; a < 5; ++a)
            for (std::size_t b = a + 1; b < 5; ++b) all = all && oracle(five[a], {five[b]});
        found += all;
    }
    EXPECT_EQ(found, 10);
}

// ---- cube ------------------------------------------------------------------------

TEST(Cube, SixFamilySymbolic) {
    ParamFamily f = cube_six_family_symbolic();
    const RatFunc &y = f.coord("y"), &z = f.coord("z");
    Rational q(1, 4);
    for (const RatFunc& e : {q + y * y + z * z, q + (1 - y) * (1 - y) + z * z, q + y * y + (1 - z) * (1 - z)}) {
        auto r = ratfunc_square_root(e);
        ASSERT_TRUE(r.has_value());
        EXPECT_EQ(*r * *r, e);
    }
    // The displayed y fails the second equation.
    RatFunc yp = cube_six_printed().first;
    EXPECT_FALSE(ratfunc_square_root(q + (1 - yp) * (1 - yp) + z * z).has_value());
}

TEST(Cube, SixFamilyPoints) {
    EXPECT_EQ(oracle_sweep(cube_six_family_symbolic(), 25, 9), 25);
    const std::vector<Point3> six{{0, 0, 0}, {0, 1, 0}, {1, 0, 0}, {1, 1, 0}, {0, 0, 1}, {1, 0, 1}};
    EXPECT_TRUE(oracle(cube_six_family(2), six));
    EXPECT_THROW(cube_six_family(1), EvaluationAtPole);
}

TEST(Cube, SixGeneration) {
    ECurve E = cube_six_curve(2);
    EXPECT_TRUE(ec_on_curve(E, cube_six_Z(2)));
    EXPECT_FALSE(ec_on_curve(E, ECPoint::affine(0, 1)));
    const std::vector<Point3> six{{0, 0, 0}, {0, 1, 0}, {1, 0, 0}, {1, 1, 0}, {0, 0, 1}, {1, 0, 1}};
    auto two = cube_six_generate(2, 2);
    EXPECT_NE(std::find(two.begin(), two.end(), cube_six_family(2)), two.end());
    auto three = cube_six_generate(2, 3);
    ASSERT_FALSE(three.empty());
    for (const auto& p : three) {
        EXPECT_TRUE(oracle(p, six));
        EXPECT_EQ(std::find(two.begin(), two.end(), p), two.end());
    }
    EXPECT_THROW(cube_six_generate(2, 0), InvalidArgument);
}

TEST(Cube, KnownPoints) {
    auto pts = cube_known_points();
    ASSERT_EQ(pts.size(), 4u);
    for (const auto& k : pts) {
        EXPECT_TRUE(oracle(k.point, k.vertices.vertices)) << k.label;
        EXPECT_TRUE(k.report.all_rational);
    }
    // Table rows: the four square distances as a multiset, then (0,0,1).
    for (std::size_t i = 2; i < 4; ++i) {
        std::vector<Rational> got, want(pts[i].printed.begin(), pts[i].printed.begin() + 4);
        for (std::size_t j = 0; j < 4; ++j) got.push_back(*pts[i].report.entries[j].root);
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        EXPECT_EQ(got, want);
        EXPECT_EQ(*pts[i].report.entries[4].root, pts[i].printed[4]);
    }
}
