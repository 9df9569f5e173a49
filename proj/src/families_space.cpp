#include "ratdist/errors.hpp"
#include "ratdist/families.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

namespace ratdist {

namespace {

const VarList kT{"t"};
const VarList kS{"s"};

RatFunc uni(const UniPoly& num, const UniPoly& den) { return RatFunc(num, den); }

// Numerator over a constant denominator.
MultiPoly as_poly(const RatFunc& f) { return f.num() * inverse(f.den().constant_term()); }

} // namespace

MultiPoly square3d_G() {
    return MultiPoly::parse("-2 + 2*(u^2 + 1)*(X^2 + Y^2) - (u^2 - 1)^2*(X^2 - Y^2)^2 - 16*u^2*X^2*Y^2", {"u", "X", "Y"});
}

TangentConstruction square3d_tangent_construct(const Rational& u0, const Rational& X0, const Rational& Y0,
                                               const Rational& V0) {
    if (V0.is_zero()) throw InvalidArgument("V0 must be nonzero");
    MultiPoly G = square3d_G();
    if (G.eval({{"u", u0}, {"X", X0}, {"Y", Y0}}) != V0 * V0) throw InvalidArgument("Q0 is not on V^2 = G(u,X,Y)");

    // The line X = T + X0, Y = pT + Y0, V = qT^2 + tT + V0.
    const VarList vars{"T", "p", "q", "t"};
    auto var = [&](const char* n) { return MultiPoly::var(vars, n); };
    MultiPoly T = var("T"), p = var("p"), q = var("q"), t = var("t");
    MultiPoly V = q * T * T + t * T + V0;
    Bindings line{{"u", RatFunc::constant(vars, u0)},
                  {"X", RatFunc(T + X0)},
                  {"Y", RatFunc(p * T + Y0)}};
    RatFunc Gl = subst(G, line, vars);
    MultiPoly e = V * V - Gl.num() * inverse(Gl.den().constant_term());
    std::vector<MultiPoly> A = e.coeffs_in("T");
    A.resize(5, MultiPoly(vars));
    if (!A[0].is_zero()) throw ConstructionFailure("A0 does not vanish");

    // A1 = p B1 + (B0 + 2 t V0).
    std::vector<MultiPoly> a1 = A[1].coeffs_in("p");
    a1.resize(2, MultiPoly(vars));
    if (a1[1].is_zero() || !a1[1].is_constant()) throw InvalidArgument("B1 = 0: A1 cannot be solved for p");
    Rational B1 = a1[1].constant_term();
    RatFunc ps = RatFunc(-a1[0] * inverse(B1)).with_vars(kT);

    Bindings sp{{"p", ps}};
    MultiPoly a2 = as_poly(subst(A[2], sp, {"q", "t"}));
    std::vector<MultiPoly> a2q = a2.coeffs_in("q");
    a2q.resize(2, MultiPoly(a2.vars()));
    if (a2q[1].is_zero()) throw InvalidArgument("A2 does not involve q");
    RatFunc qs = (-RatFunc(a2q[0]) / RatFunc(a2q[1])).with_vars(kT);

    Bindings spq{{"p", ps}, {"q", qs}, {"T", RatFunc::constant(kT, 0)}};
    TangentConstructionTrace tr;
    tr.B1 = B1;
    tr.p = ps;
    tr.q = qs;
    for (std::size_t i = 0; i < 5; ++i) tr.A[i] = subst(A[i], spq, kT);
    if (tr.A[3].is_zero() || tr.A[4].is_zero()) throw ConstructionFailure("A3 A4 vanishes identically");
    tr.T = -tr.A[3] / tr.A[4];

    RatFunc tt = RatFunc::var(kT, "t");
    RatFunc Xs = tr.T + X0, Ys = ps * tr.T + Y0, Vs = qs * tr.T * tr.T + tt * tr.T + V0;
    TangentConstruction out;
    out.trace = tr;
    ParamFamily& f = out.family;
    f.name = "square3d";
    f.params = kT;
    f.coords = {
        {"x", 2 * u0 * Xs * Ys + Rational(1, 2)},
        {"y", (u0 * u0 - 1) / 2 * (Xs * Xs - Ys * Ys) + Rational(1, 2)},
        {"z", Vs / 2},
    };
    f.target = "square3d";
    f.target_at = [](const Params&) { return VertexSet::unit_square(); };
    f.excluded = {"zeros of A4(p(t), q(t))"};
    return out;
}

PrintedSquare3D printed_square3d() {
    auto P = [](const std::string& s) { return MultiPoly::parse(s, kS).to_uni("s"); };
    PrintedSquare3D p;
    p.x_num = P("3*(5522066829177276301427600 - 258403606687492419505600*s + 24350105869790104153088*s^2"
                " - 930272613423360964576*s^3 + 39295267680627366536*s^4 - 1085485845235095088*s^5"
                " + 24133448660417792*s^6 - 401146604231320*s^7 + 3899504263625*s^8)");
    p.y_num = P("30*(3992136439221148602640 - 6939554120499388567712*s + 117488065643083258096*s^2"
                " - 13393876262858078048*s^3 + 411476041942299568*s^4 - 13249457441223848*s^5"
                " + 681815047971100*s^6 - 7562115944888*s^7 + 337499289355*s^8)");
    p.z_num = P("714*(3779374597422498556400 + 529318935972209201600*s - 977278343015269168*s^2"
                " + 1745565618326470736*s^3 - 10290117484952896*s^4 + 1635035001144368*s^5"
                " - 3620551914412*s^6 + 458263598420*s^7 + 118863425*s^8)");
    p.delta = P("18*(221769748580 - 3052768504*s + 670128264*s^2 - 6059132*s^3 + 500425*s^4)");
    return p;
}

namespace {

using cplx = std::complex<long double>;

// Roots of a polynomial with rational coefficients (Durand-Kerner).
std::vector<cplx> numeric_roots(const UniPoly& f) {
    const int n = f.degree();
    std::vector<long double> c(static_cast<std::size_t>(n) + 1);
    Rational lead = f.leading();
    for (int i = 0; i <= n; ++i) c[static_cast<std::size_t>(i)] = (f.coeff(i) / lead).to_double();
    // Scale so the roots are of order one.
    long double R = 0;
    for (int i = 0; i < n; ++i) R = std::max(R, std::pow(std::fabs(c[static_cast<std::size_t>(i)]), 1.0L / (n - i)));
    if (R == 0) R = 1;
    std::vector<cplx> z(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) z[static_cast<std::size_t>(i)] = R * std::pow(cplx(0.4L, 0.9L), i);
    auto eval = [&](cplx x) {
        cplx v = 1;
        for (int i = n - 1; i >= 0; --i) v = v * x + c[static_cast<std::size_t>(i)];
        return v;
    };
    for (int it = 0; it < 2000; ++it) {
        long double moved = 0;
        for (std::size_t i = 0; i < z.size(); ++i) {
            cplx den = 1;
            for (std::size_t j = 0; j < z.size(); ++j)
                if (j != i) den *= z[i] - z[j];
            cplx dz = eval(z[i]) / den;
            z[i] -= dz;
            moved = std::max(moved, std::abs(dz) / std::max(1.0L, std::abs(z[i])));
        }
        if (moved < 1e-17L) break;
    }
    return z;
}

// Best rational approximation with bounded denominator.
Rational rationalize(long double x, long max_den) {
    long double a = x;
    Integer h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    for (int i = 0; i < 64; ++i) {
        long double fl = std::floor(a);
        Integer ai(static_cast<long>(fl));
        Integer h2 = ai * h1 + h0, k2 = ai * k1 + k0;
        if (k2 > max_den) break;
        h0 = h1; h1 = h2; k0 = k1; k1 = k2;
        long double frac = a - fl;
        if (std::fabs(frac) < 1e-12L) break;
        a = 1 / frac;
    }
    return Rational(h1, k1);
}

cplx det3c(cplx a, cplx b, cplx c, cplx d, cplx e, cplx f, cplx g, cplx h, cplx i) {
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

struct Symmetry {
    bool swap, fx, fy, fz;
    std::string name() const {
        std::string s;
        auto add = [&](const char* p) { s += (s.empty() ? "" : ", ") + std::string(p); };
        if (swap) add("x<->y");
        if (fx) add("x->1-x");
        if (fy) add("y->1-y");
        if (fz) add("z->-z");
        return s.empty() ? "identity" : s;
    }
};

} // namespace

Square3DComparison compare_with_printed_square3d(const ParamFamily& fam) {
    Square3DComparison out;
    PrintedSquare3D pr = printed_square3d();
    RatFunc xp = uni(pr.x_num, pow(pr.delta, 2)), yp = uni(pr.y_num, pow(pr.delta, 2)), zp = uni(pr.z_num, pow(pr.delta, 2));

    const RatFunc &xc = fam.coord("x"), &yc = fam.coord("y"), &zc = fam.coord("z");
    UniPoly den = xc.den_uni("t");
    UniPoly D = exact_div(den, gcd(den, den.derivative()));
    if (D.degree() != pr.delta.degree()) return out;

    std::vector<cplx> rp = numeric_roots(pr.delta), rc = numeric_roots(D);
    std::array<int, 4> perm{0, 1, 2, 3};
    do {
        // Mobius m with m(rp[i]) = rc[perm[i]]: rows (z, 1, -w z, -w).
        std::array<std::array<cplx, 4>, 3> M;
        for (int i = 0; i < 3; ++i) {
            cplx z = rp[static_cast<std::size_t>(i)], w = rc[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
            M[static_cast<std::size_t>(i)] = {z, 1, -w * z, -w};
        }
        std::array<cplx, 4> v;
        for (int j = 0; j < 4; ++j) {
            std::array<cplx, 9> m;
            int k = 0;
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 4; ++c)
                    if (c != j) m[static_cast<std::size_t>(k++)] = M[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            cplx d = det3c(m[0], m[1], m[2], m[3], m[4], m[5], m[6], m[7], m[8]);
            v[static_cast<std::size_t>(j)] = (j % 2 ? -d : d);
        }
        cplx z3 = rp[3], w3 = rc[static_cast<std::size_t>(perm[3])];
        cplx img = (v[0] * z3 + v[1]) / (v[2] * z3 + v[3]);
        if (std::abs(img - w3) > 1e-6L * std::max(1.0L, std::abs(w3))) continue;
        std::size_t big = 0;
        for (std::size_t j = 1; j < 4; ++j)
            if (std::abs(v[j]) > std::abs(v[big])) big = j;
        cplx scale = v[big];
        std::array<Rational, 4> r;
        bool real = true;
        for (std::size_t j = 0; j < 4; ++j) {
            cplx c = v[j] / scale;
            if (std::fabs(c.imag()) > 1e-9L) real = false;
            r[j] = rationalize(c.real(), 1000000);
        }
        if (!real) continue;
        // Exact check: substitute t = (a s + b)/(c s + d).
        RatFunc sub = (RatFunc::var(kS, "s") * r[0] + r[1]) / (RatFunc::var(kS, "s") * r[2] + r[3]);
        Bindings b{{"t", sub}};
        RatFunc xs = subst(xc, b, kS), ys = subst(yc, b, kS), zs = subst(zc, b, kS);
        for (int mask = 0; mask < 16; ++mask) {
            Symmetry sy{bool(mask & 1), bool(mask & 2), bool(mask & 4), bool(mask & 8)};
            RatFunc X = sy.swap ? ys : xs, Y = sy.swap ? xs : ys, Z = zs;
            if (sy.fx) X = 1 - X;
            if (sy.fy) Y = 1 - Y;
            if (sy.fz) Z = -Z;
            if (!(X == xp && Y == yp && Z == zp)) continue;
            // Primitive integers with delta > 0.
            Integer l = 1, g = 0;
            for (const Rational& c : r) l = lcm(l, c.den());
            for (const Rational& c : r) g = gcd(g, (c * Rational(l)).num());
            Rational k = Rational(l) / Rational(g);
            if ((r[3] * k).sign() < 0) k = -k;
            for (Rational& c : r) c = c * k;
            out.matches = true;
            out.alpha = r[0];
            out.beta = r[1];
            out.gamma = r[2];
            out.delta = r[3];
            out.symmetry = sy.name();
            // D(m(s)) (c s + d)^4, primitive, against the printed Delta.
            UniPoly num = UniPoly("s", {r[1], r[0]}), dd = UniPoly("s", {r[3], r[2]});
            UniPoly acc("s");
            for (int i = 0; i <= D.degree(); ++i)
                acc = acc + D.coeff(i) * pow(num, static_cast<unsigned>(i)) *
                                pow(dd, static_cast<unsigned>(D.degree() - i));
            out.delta_normalized = acc.primitive();
            return out;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

} // namespace ratdist
