#include "ratdist/errors.hpp"
#include "ratdist/families.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <set>

namespace ratdist {

namespace {

const VarList kUV{"u", "v"};
const VarList kK{"k"};

bool square_oracle(const Point3& p) { return distance_report(p, VertexSet::unit_square()).all_rational; }

} // namespace

// ---- line x = y = 1/2 ------------------------------------------------------

Point3 axis_line_family(const Rational& u) {
    if (u.is_zero()) throw InvalidArgument("u must be nonzero");
    return {Rational(1, 2), Rational(1, 2), (1 - 2 * u * u) / (4 * u)};
}

Point3 axis_line_printed(const Rational& u) {
    if (u.is_zero()) throw InvalidArgument("u must be nonzero");
    return {Rational(1, 2), Rational(1, 2), (1 - u * u) / (4 * u)};
}

Prop31Audit audit_prop31() {
    Prop31Audit a;
    a.printed_condition = "1/4 + z^2 = T^2";
    a.printed_family = "z = (1-u^2)/(4u), T = (1+u^2)/(4u)";
    a.corrected_condition = "1/2 + z^2 = T^2";
    a.corrected_family = "z = (1-2u^2)/(4u), T = (1+2u^2)/(4u)";
    for (long n : {1, 2, 3}) {
        Point3 p = axis_line_printed(n);
        bool ok = square_oracle(p);
        a.printed.push_back({n, p, ok});
        a.printed_pass += ok;
    }
    for (const Rational& u : {Rational(1, 2), Rational(1), Rational(2), Rational(3)}) {
        Point3 p = axis_line_family(u);
        bool ok = square_oracle(p);
        a.corrected.push_back({u, p, ok});
        a.corrected_pass += ok;
    }
    return a;
}

// ---- plane x = 1/2 ---------------------------------------------------------

MultiPoly half_plane_H() {
    return MultiPoly::parse("-2 + 2*P^2 - P^4 + 2*(P^2 + 1)*Q^2 - Q^4", {"P", "Q"});
}

std::array<RatFunc, 3> half_plane_PQz_symbolic() {
    return {
        RatFunc::parse("(u^4 + 1 - 4*u*(u^2 - 1)*v/(u^2 + 1) + 2*v^2)/(4*(u^2 - 1)*v)", kUV),
        RatFunc::parse("(u^4 + 1 + 4*u*(u^2 - 1)*v/(u^2 + 1) + 2*v^2)/(4*(u^2 - 1)*v)", kUV),
        RatFunc::parse("(u^4 + 1 - 2*v^2)/(4*(u^2 + 1)*v)", kUV),
    };
}

HalfPlanePoint half_plane_point(const Rational& u, const Rational& v) {
    static const auto f = half_plane_PQz_symbolic();
    Params at{{"u", u}, {"v", v}};
    Rational P0 = f[0].eval(at), Q0 = f[1].eval(at), z0 = f[2].eval(at);
    return {{Rational(1, 2), (P0 * P0 - Q0 * Q0 + 1) / 2, z0}, P0, Q0};
}

std::pair<MultiPoly, MultiPoly> half_plane_curve_coeffs() {
    MultiPoly b = MultiPoly::parse("(1 + u^2)^2*(1 + u^4)^2 + 8*u*(1 - u^8)*v + 4*(5 + 6*u^2 - 14*u^4 + 6*u^6 + 5*u^8)*v^2"
                                   " + 16*u*(1 - u^4)*v^3 + 4*(1 + u^2)^2*v^4",
                                   kUV);
    MultiPoly c = MultiPoly::parse("16*(u^4 - 1)^2*v^2*((1 + u^2)*(1 + u^4) + 2*(1 - u)*(1 + u)^3*v + 2*(1 + u^2)*v^2)"
                                   "*((1 + u^2)*(1 + u^4) - 2*(1 - u)^3*(1 + u)*v + 2*(1 + u^2)*v^2)",
                                   kUV);
    return {-b, c};
}

HalfPlaneCurve half_plane_curve(const Rational& u, const Rational& v) {
    if (u == 1 || u == -1 || v.is_zero()) throw SingularCurve("E is singular for u = +-1 or v = 0");
    if (u.is_zero()) throw InvalidArgument("u must be nonzero");
    static const auto coeffs = half_plane_curve_coeffs();
    Params at{{"u", u}, {"v", v}};
    Rational a2 = coeffs.first.eval(at), a4 = coeffs.second.eval(at);
    HalfPlaneCurve out{ECurve::cubic(a2, a4, 0), ECPoint::O(), std::nullopt};
    curve_invariants(out.curve); // throws SingularCurve

    HalfPlanePoint hp = half_plane_point(u, v);
    Rational z0 = hp.point.z, P2 = hp.P0 * hp.P0;
    // 4Z^2 = H(P0, Q) as Z^2 = quartic in Q.
    std::array<Rational, 5> c{(-2 + 2 * P2 - P2 * P2) / 4, 0, (P2 + 1) / 2, 0, Rational(-1, 4)};
    QuarticModel M = quartic_to_cubic(QuarticCurve::with_point(c, hp.Q0, z0));
    auto iso = find_isomorphism(M.curve(), out.curve);
    if (!iso) throw ConstructionFailure("quartic model is not isomorphic to the displayed cubic");
    out.point = (*iso)(M.forward(-hp.Q0, z0));

    Rational disc = a2 * a2 - 4 * a4;
    if (disc.sign() > 0) {
        double b = -a2.to_double(), s = std::sqrt(disc.to_double());
        out.two_torsion = std::make_pair((b - s) / 2, (b + s) / 2);
    }
    return out;
}

// ---- plane x = y ---------------------------------------------------------

ParamFamily diag_plane_family_symbolic() {
    ParamFamily f;
    f.name = "diag";
    f.params = kK;
    RatFunc x = RatFunc::parse("(4 + 2*k - 2*k^2 + k^3)*(2 - 2*k + k^2 + k^3)*(4 - 16*k - 12*k^2 - 8*k^3 + k^4)"
                               "/(2*(2 + k^2)^3*(4 - 12*k^2 + k^4))",
                               kK);
    RatFunc z = RatFunc::parse("(2 - k^2)*(16 - 352*k^2 - 104*k^4 - 88*k^6 + k^8)/(4*(2 + k^2)^3*(4 - 12*k^2 + k^4))", kK);
    f.coords = {{"x", x}, {"y", x}, {"z", z}};
    f.target = "square3d";
    f.target_at = [](const Params&) { return VertexSet::unit_square(); };
    f.excluded = {"2 + k^2 = 0", "4 - 12k^2 + k^4 = 0"};
    return f;
}

Point3 diag_plane_family(const Rational& k) {
    static const ParamFamily f = diag_plane_family_symbolic();
    return f.eval({{"k", k}});
}

QuarticCurve diag_plane_quartic(const Rational& k) {
    Rational k2 = k * k, s = 2 + k2, w = 4 - 12 * k2 + k2 * k2;
    Rational al = 128 * k2 * s * s, be = 2 * w * w;
    std::array<Rational, 5> c{-al * be / 2, 0, (al + be) / 2, 0, Rational(-1, 2)};
    Rational den = 12 - 4 * k2 + 3 * k2 * k2;
    if (den.is_zero()) throw InvalidArgument("12 - 4k^2 + 3k^4 = 0");
    Rational t0 = 4 * s * s * w / den;
    Rational Z0 = 4 * (4 - k2 * k2) * w * (16 - 352 * k2 - 104 * pow(k, 4) - 88 * pow(k, 6) + pow(k, 8)) / (den * den);
    return QuarticCurve::with_point(c, t0, Z0);
}

ECurve diag_plane_curve(const Rational& k) {
    Rational g = pow(4 - 16 * k - 12 * k * k - 8 * pow(k, 3) + pow(k, 4), 2);
    Rational d = pow(4 + 16 * k - 12 * k * k + 8 * pow(k, 3) + pow(k, 4), 2);
    return ECurve::cubic(-(g + d), g * d, 0);
}

ECPoint diag_plane_Q(const Rational& k) {
    Rational k2 = k * k, q = 12 - 4 * k2 + 3 * k2 * k2;
    if (k2 == 2) throw EvaluationAtPole("Q has a pole at k^2 = 2");
    Rational X = pow(2 + k2, 2) * q * q / pow(k2 - 2, 2);
    Rational Y = 8 * (2 + k2) * (-16 + 20 * k2 + pow(k, 6)) * (-4 - 5 * pow(k, 4) + pow(k, 6)) * q / pow(k2 - 2, 3);
    return ECPoint::affine(X, Y);
}

std::vector<Point3> diag_plane_generate(const Rational& k, int n) {
    std::vector<Point3> out;
    if (n <= 0) return out;
    if (n > 64) throw InvalidArgument("n must be at most 64");
    ECurve E = diag_plane_curve(k);
    try {
        curve_invariants(E);
    } catch (const SingularCurve&) {
        throw InvalidArgument("degenerate k: the cubic is singular");
    }
    QuarticModel M = quartic_to_cubic(diag_plane_quartic(k));
    auto iso = find_isomorphism(E, M.curve());
    if (!iso) throw ConstructionFailure("quartic model is not isomorphic to the displayed cubic");
    ECPoint Q = diag_plane_Q(k);
    if (!ec_on_curve(E, Q)) throw ConstructionFailure("Q is not on the displayed cubic");
    Rational s = 2 + k * k, m = 4 * k / s;
    std::set<Point3> seen;
    for (int j = 1; j <= n; ++j) {
        for (int sign : {1, -1}) {
            auto back = M.backward((*iso)(ec_mul(E, sign * j, Q)));
            if (!back || back->first.is_zero()) continue;
            const auto& [t, Z] = *back;
            Rational tau = t / (s * s);
            Rational x = Rational(1, 2) - 2 * m * (1 - m * m) / (tau * tau);
            Point3 p{x, x, Z / (t * t)};
            if (square_oracle(p) && seen.insert(p).second) out.push_back(p);
        }
    }
    return out;
}

} // namespace ratdist
