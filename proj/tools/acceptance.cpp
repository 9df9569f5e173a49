// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.
// Oracles here are local and do not go through distance_report.

#include "ratdist/errors.hpp"
#include "ratdist/families.hpp"
#include "ratdist/search.hpp"
#include "ratdist/tables.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>

using namespace ratdist;

namespace {

Rational R(const char* s) { return Rational::parse(s); }

bool rational_sq(const Rational& s) {
    Integer n = s.num(), d = s.den();
    if (n < 0) return false;
    Integer rn = sqrt(n), rd = sqrt(d);
    return rn * rn == n && rd * rd == d;
}

Rational dist2(const Point3& p, const Point3& q) {
    Rational dx = p.x - q.x, dy = p.y - q.y, dz = p.z - q.z;
    return dx * dx + dy * dy + dz * dz;
}

bool oracle(const Point3& p, const std::vector<Point3>& vs) {
    for (const auto& v : vs)
        if (!rational_sq(dist2(p, v))) return false;
    return true;
}

const std::vector<Point3> kSquare{{0, 0, 0}, {0, 1, 0}, {1, 0, 0}, {1, 1, 0}};

bool isq(long long n) {
    if (n < 0) return false;
    auto r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r * r == n;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

unsigned hw_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

struct Outcome {
    bool pass = true;
    std::ostringstream note;
    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            note << " [failed: " << what << "]";
        }
    }
};

using Triple = std::tuple<Rational, Rational, Rational>;

// ---- 1 -----------------------------------------------------------------------

// Least X + Y + Z over orbit members inside the search domain a > 1,
// 0 < x < a, 0 < y <= 1/2, with (x, y) = (X/Z, Y/Z) reduced.
Integer part_sum(const Rational& a, const Rational& x, const Rational& y) {
    Integer best = -1;
    for (const auto& [b, u, v] : rect_orbit(a, x, y)) {
        if (b <= 1 || u <= 0 || u >= b || v <= 0 || v > Rational(1, 2)) continue;
        Integer Z;
        mpz_lcm(Z.get_mpz_t(), u.den().get_mpz_t(), v.den().get_mpz_t());
        Integer s = (u * Rational(Z)).num() + (v * Rational(Z)).num() + Z;
        if (best < 0 || s < best) best = s;
    }
    return best;
}

void c1(Outcome& o) {
    std::set<Triple> all, ci;
    for (const auto& row : table_rows(1)) {
        auto c = canonical_rect_hit(row.vertices.a, row.point.x, row.point.y);
        all.insert(c);
        if (part_sum(std::get<0>(c), std::get<1>(c), std::get<2>(c)) <= 400) ci.insert(c);
    }
    o.require(all.size() == 7, "seven distinct canonical printed rows");
    o.require(ci.size() == 5, "five rows fit the sum 400 bound");

    auto run = [&](long bound) {
        SearchConfig cfg;
        cfg.sum_bound = bound;
        cfg.threads = hw_threads();
        auto t0 = std::chrono::steady_clock::now();
        RectSearchResult r = search_rect(cfg);
        double s = seconds_since(t0);
        std::set<Triple> got;
        for (const auto& h : r.hits) {
            got.insert({h.witness[0], h.witness[1], h.witness[2]});
            o.require(oracle(h.point, h.vertices.vertices), "hit re-verifies");
        }
        o.note << " sum<=" << bound << ": " << got.size() << " rows in " << s << " s (degenerate x=0 " << r.x_zero
               << ", x=a/2 " << r.x_half << ", y=1/2 " << r.y_half << ");";
        return std::pair{got, s};
    };
    auto [g400, s400] = run(400);
    o.require(g400 == ci, "sum 400 rows");
    o.require(s400 < 120, "sum 400 under 2 minutes");
    auto [g1000, s1000] = run(1000);
    o.require(g1000 == all, "sum 1000 rows equal Table 1");
    o.require(s1000 < 1800, "sum 1000 under 30 minutes");
}

// ---- 2, 3 ----------------------------------------------------------------------

void c2(Outcome& o) {
    auto t0 = std::chrono::steady_clock::now();
    auto rows = table_rows(2);
    int ok = 0;
    for (const auto& r : rows) ok += oracle(r.point, kSquare);
    double s = seconds_since(t0);
    o.note << " " << ok << "/" << rows.size() << " in " << s << " s";
    o.require(rows.size() == 23 && ok == 23, "all 23 rows");
    o.require(verify_table(2).all_pass(), "verify_table agrees");
    o.require(s < 1, "under 1 second");
}

void c3(Outcome& o) {
    const std::vector<Point3> five{{0, 0, 0}, {0, 1, 0}, {1, 0, 0}, {1, 1, 0}, {0, 0, 1}};
    auto rows = table_rows(3);
    o.require(rows.size() == 2, "two rows");
    for (const auto& r : rows) {
        std::multiset<Rational> got, want(r.printed.begin(), r.printed.begin() + 4);
        for (std::size_t j = 0; j < 4; ++j) {
            Rational d2 = dist2(r.point, five[j]);
            auto root = is_rational_square(d2);
            o.require(root.has_value(), "square distance rational");
            if (root) got.insert(*root);
        }
        o.require(got == want, "d1..d4 as printed " + r.point.str());
        o.require(dist2(r.point, five[4]) == r.printed[4] * r.printed[4], "d5 as printed");
        o.note << " " << r.point.str() << " ok;";
    }
    o.require(verify_table(3).all_pass(), "verify_table agrees");
}

// ---- 4 -----------------------------------------------------------------------

void c4(Outcome& o) {
    TangentConstruction tc = square3d_tangent_construct(2, R("1/12"), R("19/36"), R("7/27"));
    Square3DComparison cmp = compare_with_printed_square3d(tc.family);
    PrintedSquare3D pr = printed_square3d();
    o.require(cmp.matches, "Mobius + symmetry match with the displayed x, y, z");
    o.require(cmp.delta_normalized == pr.delta.primitive(), "Delta after normalization");
    o.note << " t = (" << cmp.alpha.str() << " s + " << cmp.beta.str() << ")/(" << cmp.gamma.str() << " s + "
           << cmp.delta.str() << "), " << cmp.symmetry << ";";

    // Spot check: the constructed x at s = 0, times Delta(0)^2.
    const Integer lead("5522066829177276301427600");
    o.require(pr.x_num.coeff(0) == 3 * Rational(lead), "displayed constant term");
    if (cmp.matches && !cmp.delta.is_zero()) {
        Point3 p = tc.family.eval({{"t", cmp.beta / cmp.delta}});
        Rational xs = p.x;
        if (cmp.symmetry.find("x<->y") != std::string::npos) xs = p.y;
        if (cmp.symmetry.find("x->1-x") != std::string::npos) xs = 1 - xs;
        Rational D0 = pr.delta.eval(0);
        o.require(xs * D0 * D0 == 3 * Rational(lead), "constructed x(0) Delta(0)^2 = 3*5522066829177276301427600");
    }

    const RatFunc &x = tc.family.coord("x"), &y = tc.family.coord("y"), &z = tc.family.coord("z");
    int roots = 0;
    for (const RatFunc& e : {x * x + y * y + z * z, (1 - x) * (1 - x) + y * y + z * z,
                             x * x + (1 - y) * (1 - y) + z * z, (1 - x) * (1 - x) + (1 - y) * (1 - y) + z * z}) {
        auto r = ratfunc_square_root(e);
        roots += r && *r * *r == e;
    }
    o.note << " square roots " << roots << "/4";
    o.require(roots == 4, "four square roots");
}

// ---- 5 -----------------------------------------------------------------------

// Y^2 - (X^3 + a2 X^2 + a4 X + a6) as a rational function.
RatFunc on_cubic(const RatFunc& X, const RatFunc& Y, const RatFunc& a2, const RatFunc& a4, const RatFunc& a6) {
    return Y * Y - (X * X * X + a2 * X * X + a4 * X + a6);
}

void c5(Outcome& o) {
    auto t0 = std::chrono::steady_clock::now();
    int done = 0;
    auto check = [&](bool ok, const std::string& what) {
        o.require(ok, what);
        done += ok;
    };

    {
        VarList v{"X", "Y", "Z", "t"};
        RatFunc t = RatFunc::var(v, "t");
        RatFunc F = subst(rect_quartic_symbolic(), {{"a", (1 - t * t) / (2 * t)}}, v);
        RatFunc G(rect_conic_G());
        check(F == G * G, "F = G^2");
    }
    {
        VarList v{"t"};
        auto P = [&](const char* s) { return RatFunc::parse(s, v); };
        RatFunc al = P("(t^2 - 2*t - 1)^2"), be = P("(t^2 + 2*t - 1)^2");
        check(on_cubic(P("-(1 + t^2)^2"), P("4*t*(1 - t^4)"), al + be, al * be, RatFunc::constant(v, 0)).is_zero(),
              "H on E_t");
        RatFunc A = P("-108*(13*t^16 - 20*t^12 + 78*t^8 - 20*t^4 + 13)");
        RatFunc B = P("864*(23*t^24 - 132*t^20 + 129*t^16 - 296*t^12 + 129*t^8 - 132*t^4 + 23)");
        RatFunc zero = RatFunc::constant(v, 0);
        check(on_cubic(P("12*(2*t^8 + 3*t^6 - 2*t^4 + 3*t^2 + 2)"), P("108*t*(t^2 + 1)*(t^8 - 1)"), zero, A, B)
                  .is_zero(),
              "Z on E'");
    }
    {
        VarList v{"k"};
        auto P = [&](const char* s) { return RatFunc::parse(s, v); };
        RatFunc g = P("(4 - 16*k - 12*k^2 - 8*k^3 + k^4)^2"), d = P("(4 + 16*k - 12*k^2 + 8*k^3 + k^4)^2");
        RatFunc X = P("(2 + k^2)^2*(12 - 4*k^2 + 3*k^4)^2/(-2 + k^2)^2");
        RatFunc Y = P("8*(2 + k^2)*(-16 + 20*k^2 + k^6)*(-4 - 5*k^4 + k^6)*(12 - 4*k^2 + 3*k^4)/(-2 + k^2)^3");
        check(on_cubic(X, Y, -(g + d), g * d, RatFunc::constant(v, 0)).is_zero(), "Q on E");
    }
    {
        const VarList uv{"u", "v"};
        auto f = half_plane_PQz_symbolic();
        check(subst(half_plane_H(), {{"P", f[0]}, {"Q", f[1]}}, uv) == 4 * f[2] * f[2], "4 z0^2 = H(P0, Q0)");
    }
    {
        ParamFamily f = rect_family_symbolic();
        const VarList& v = f.params;
        RatFunc t = RatFunc::var(v, "t");
        RatFunc a = (1 - t * t) / (2 * t), x = f.coord("x"), y = f.coord("y");
        RatFunc lhs = x * (a - x) * y * (1 - y);
        RatFunc sq = RatFunc::parse("u*(u^2 - v^2)*((1 - t)*u + (1 + t)*v)*((1 + t)*u + (1 - t)*v)*"
                                    "((1 - t^2)*u + (1 + t^2)*v)*((1 + 2*t - t^2)*u + (1 + t^2)*v)*"
                                    "((1 - 2*t - t^2)*u + (1 + t^2)*v)/"
                                    "((1 + t^2)*u^2 + 2*(1 - t^2)*u*v + (1 + t^2)*v^2)^4",
                                    v);
        check(lhs == -4 * sq * sq, "x(a-x)y(1-y) = -4(...)^2");
    }
    {
        MultiPoly G = square3d_G();
        const VarList v{"u", "X", "Y"};
        RatFunc u = RatFunc::var(v, "u"), X = RatFunc::var(v, "X"), Y = RatFunc::var(v, "Y");
        check(subst(G, {{"u", X / Y}, {"X", u * Y}, {"Y", Y}}, v) == RatFunc(G), "G invariance");
    }
    {
        ParamFamily f = cube_six_family_symbolic();
        const RatFunc &x = f.coord("x"), &y = f.coord("y"), &z = f.coord("z");
        int n = 0;
        for (const RatFunc& e :
             {x * x + y * y + z * z, x * x + (1 - y) * (1 - y) + z * z, x * x + y * y + (1 - z) * (1 - z)}) {
            auto r = ratfunc_square_root(e);
            n += r && *r * *r == e;
        }
        check(n == 3, "cube-six square roots");
    }
    double s = seconds_since(t0);
    o.note << " " << done << "/8 identities in " << s << " s";
    o.require(s < 60, "under 1 minute");
}

// ---- 6 -----------------------------------------------------------------------

void c6(Outcome& o) {
    int printed = 0, corrected = 0;
    for (long u : {1, 2, 3}) {
        Rational z = Rational(1 - u * u) / (4 * u);
        printed += oracle({Rational(1, 2), Rational(1, 2), z}, kSquare);
    }
    for (const Rational& u : {R("1/2"), R("1"), R("2"), R("3")}) {
        Rational z = (1 - 2 * u * u) / (4 * u);
        corrected += oracle({Rational(1, 2), Rational(1, 2), z}, kSquare);
    }
    Prop31Audit a = audit_prop31();
    o.note << " printed " << a.printed_pass << "/" << a.printed.size() << ", corrected " << a.corrected_pass << "/"
           << a.corrected.size();
    o.require(printed == 0 && a.printed_pass == 0 && a.printed.size() == 3, "printed 0/3");
    o.require(corrected == 4 && a.corrected_pass == 4 && a.corrected.size() == 4, "corrected 4/4");
    Point3 guy = axis_line_family(R("1/2"));
    o.require(guy == Point3{R("1/2"), R("1/2"), R("1/4")}, "Guy point at u = 1/2");
    for (const auto& v : kSquare) o.require(dist2(guy, v) == R("9/16"), "distance 3/4");
}

// ---- 7 -----------------------------------------------------------------------

void c7(Outcome& o) {
    SearchConfig cfg;
    cfg.m_bound = 30;
    cfg.t_bound = 500;
    cfg.threads = hw_threads();
    auto t0 = std::chrono::steady_clock::now();
    auto hits = search_cube_surface(cfg);
    double s = seconds_since(t0);
    bool found = false;
    const std::vector<Point3> six{{0, 0, 0}, {0, 1, 0}, {1, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
    for (const auto& h : hits) {
        // The surface equation itself.
        Rational m = h.witness[0], t = h.witness[1], U = h.witness[2];
        Rational lhs = 2 * (t * t - 8 * m * m) * (-t * t + 2 * pow(1 - m * m, 2));
        Rational rhs = pow(t * t + pow(1 + m * m, 2) - U * U, 2);
        o.require(lhs == rhs, "surface equation");
        if (m == -24 && t == 360 && U == 313) {
            found = true;
            o.require(h.point == Point3{R("31/108"), R("31/108"), R("1519/1080")}, "reconstructed point");
            o.require(oracle(h.point, six), "six rational distances");
        }
    }
    o.note << " " << hits.size() << " hits in " << s << " s";
    o.require(found, "(-24, 360, 313) found");
    o.require(s < 60, "under 1 minute");
}

// ---- 8, 9 --------------------------------------------------------------------

const Tetrahedron kRathbun{Point3{0, 0, 0}, Point3{1, 0, 0}, Point3{R("11/200"), R("117/800"), 0},
                           Point3{R("7/25"), R("63/325"), R("21/260")}};

// Up to `want` oracle-valid specializations of the tetrahedron family.
std::vector<Point3> tetra_points(const TetraConstruction& tc, int want, unsigned seed) {
    std::mt19937 gen(seed);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
    std::vector<Point3> out;
    std::vector<Point3> vs(tc.tet.begin(), tc.tet.end());
    for (int i = 0; i < 20 * want && static_cast<int>(out.size()) < want; ++i) {
        Params at;
        for (const char* q : {"q1", "q2", "q3"}) at[q] = Rational(num(gen), den(gen));
        try {
            Point3 p = tc.family.eval(at);
            if (oracle(p, vs)) out.push_back(p);
        } catch (const EvaluationAtPole&) {
        } catch (const DivisionByZero&) {
        }
    }
    return out;
}

void c8(Outcome& o) {
    TetraConstruction tc = tetra_construct(kRathbun);
    std::vector<Point3> vs(kRathbun.begin(), kRathbun.end());
    auto pts = tetra_points(tc, 10, 8);
    o.note << " " << pts.size() << "/10 specializations;";
    o.require(pts.size() == 10, "10 specializations pass");
    o.require(oracle({R("617/4900"), R("2553/63700"), R("3/25480")}, vs), "displayed point");

    MultiPoly F = tetra_quartic(kRathbun);
    auto sing = tetra_singular_points(kRathbun);
    int killed = 0;
    for (const auto& s : sing) {
        std::map<std::string, Rational> at;
        for (std::size_t i = 0; i < 5; ++i) at["R" + std::to_string(i)] = s.R[i];
        bool ok = F.eval(at).is_zero();
        for (std::size_t i = 0; i < 5; ++i) ok = ok && F.partial("R" + std::to_string(i)).eval(at).is_zero();
        killed += ok;
    }
    o.note << " singular " << killed << "/" << sing.size();
    o.require(sing.size() == 40 && killed == 40, "40 singular points");
}

void c9(Outcome& o) {
    for (const Rational& m : {R("2"), R("3"), R("1/2")}) {
        HeronTetraReport h = heron_tetra(m);
        std::string tag = " m=" + m.str();
        o.require(h.edges_match, "edges" + tag);
        o.require(h.three_equal_pairs, "three equal pairs" + tag);
        o.require(h.areas_match, "face areas" + tag);
        for (const auto& a : h.face_area_sq) o.require(rational_sq(a), "rational face area" + tag);
        o.require(h.volume_sq == cayley_menger_volume_sq(h.tet), "volume is Cayley-Menger" + tag);
        o.require(h.volume_match, "volume equals displayed closed form" + tag);
        auto V = is_rational_square(h.volume_sq);
        if (!h.volume_match && V && !h.printed_volume.is_zero())
            o.note << tag << ": V / displayed = " << (*V / h.printed_volume).str() << ";";
    }

    HeronTetraReport h = heron_tetra(3);
    TetraConstruction tc = tetra_construct(h.tet);
    int five = 0;
    for (const auto& p : tetra_points(tc, 12, 9)) {
        std::vector<Point3> pts(h.tet.begin(), h.tet.end());
        pts.push_back(p);
        bool all = true;
        for (std::size_t a = 0; a < 5; ++a)
            for (std::size_t b = a + 1; b < 5; ++b) all = all && rational_sq(dist2(pts[a], pts[b]));
        five += all;
    }
    o.note << " five-point configurations " << five;
    o.require(five >= 10, "10 five-point configurations");
}

// ---- 10 ----------------------------------------------------------------------

std::set<Triple> brute_rect(long H, long S) {
    std::set<Triple> out;
    for (long Z = 1; Z <= S; ++Z)
        for (long Y = 1; 2 * Y <= Z; ++Y)
            for (long X = 1; X + Y + Z <= S; ++X) {
                if (std::gcd(std::gcd(X, Y), Z) != 1) continue;
                Rational x(X, Z), y(Y, Z);
                if (!rational_sq(x * x + y * y) || !rational_sq(x * x + (1 - y) * (1 - y))) continue;
                for (long p = 2; p <= H; ++p)
                    for (long q = 1; q < p; ++q) {
                        if (std::gcd(p, q) != 1) continue;
                        Rational a(p, q);
                        if (x < a && rational_sq((a - x) * (a - x) + y * y) &&
                            rational_sq((a - x) * (a - x) + (1 - y) * (1 - y)))
                            out.insert(canonical_rect_hit(a, x, y));
                    }
            }
    return out;
}

std::set<Point3> brute_square3d(long Dmax, long zf) {
    std::set<Point3> out;
    for (long D = 1; D <= Dmax; ++D)
        for (long Y = 2; 2 * Y < D; ++Y)
            for (long X = 1; X < Y; ++X)
                for (long Z = 1; Z <= zf * D; ++Z) {
                    if (std::gcd(std::gcd(X, Y), std::gcd(Z, D)) != 1) continue;
                    long long X2 = X * X, Y2 = Y * Y, Z2 = Z * Z, U2 = (D - X) * (D - X), V2 = (D - Y) * (D - Y);
                    if (isq(X2 + Y2 + Z2) && isq(X2 + V2 + Z2) && isq(U2 + Y2 + Z2) && isq(U2 + V2 + Z2))
                        out.insert({Rational(X, D), Rational(Y, D), Rational(Z, D)});
                }
    return out;
}

std::set<Triple> brute_cube(long M, long T) {
    std::set<Triple> out;
    for (long m = -M; m <= M; ++m)
        for (long t = 1; t <= T; ++t) {
            __int128 m2 = m * m, t2 = t * t, c2 = (1 - m2) * (1 - m2), e = (1 + m2) * (1 + m2);
            __int128 lhs = 2 * (t2 - 8 * m2) * (2 * c2 - t2);
            if (lhs < 0) continue;
            for (long U = 0; static_cast<__int128>(U) * U <= t2 + e + 2 * (t2 + 2 * c2); ++U) {
                __int128 w = t2 + e - static_cast<__int128>(U) * U;
                if (w * w == lhs) out.insert({Rational(m), Rational(t), Rational(U)});
            }
        }
    return out;
}

void c10(Outcome& o) {
    auto rect_want = brute_rect(20, 120);
    auto sq_want = brute_square3d(40, 2);
    auto cube_want = brute_cube(60, 60);
    o.note << " brute force: rect " << rect_want.size() << ", square3d " << sq_want.size() << ", cube "
           << cube_want.size() << ";";
    for (auto [threads, seed] : {std::pair{2u, 1ull}, std::pair{3u, 20240501ull}, std::pair{4u, 77ull}}) {
        SearchConfig cfg;
        cfg.threads = threads;
        cfg.seed = seed;
        cfg.a_height = 20;
        cfg.sum_bound = 120;
        cfg.exclude_degenerate = false;
        cfg.exclude_square_family = false;
        cfg.den_bound = 40;
        cfg.z_factor = 2;
        cfg.m_bound = 60;
        cfg.t_bound = 60;
        std::set<Triple> rect;
        for (const auto& h : search_rect(cfg).hits) rect.insert({h.witness[0], h.witness[1], h.witness[2]});
        std::set<Point3> sq;
        for (const auto& h : search_square3d(cfg)) sq.insert(h.point);
        std::set<Triple> cube;
        for (const auto& h : search_cube_surface(cfg)) cube.insert({h.witness[0], h.witness[1], h.witness[2]});
        std::string tag = " threads=" + std::to_string(threads) + " seed=" + std::to_string(seed);
        o.require(rect == rect_want, "rect" + tag);
        o.require(sq == sq_want, "square3d" + tag);
        o.require(cube == cube_want, "cube" + tag);
    }
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
        {"Table 1 reproduction", c1},
        {"Table 2 verification", c2},
        {"Table 3 verification", c3},
        {"tangent construction on the unit square", c4},
        {"symbolic identity suite", c5},
        {"axis line audit", c6},
        {"cube surface search", c7},
        {"tetrahedron pipeline", c8},
        {"Heron tetrahedra", c9},
        {"search soundness and completeness", c10},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.note << " [exception: " << e.what() << "]";
        }
        failed += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << ":" << o.note.str()
                  << std::endl;
    }
    return failed ? 1 : 0;
}
