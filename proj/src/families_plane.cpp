#include "ratdist/errors.hpp"
#include "ratdist/families.hpp"

#include <algorithm>
#include <set>

namespace ratdist {

Point3 ParamFamily::eval(const Params& at) const {
    Point3 p{0, 0, 0};
    for (const auto& [name, f] : coords) {
        Rational v = f.eval(at);
        if (name == "x") p.x = v;
        else if (name == "y") p.y = v;
        else if (name == "z") p.z = v;
    }
    return p;
}

const RatFunc& ParamFamily::coord(const std::string& n) const {
    for (const auto& [name, f] : coords)
        if (name == n) return f;
    throw InvalidArgument("family " + name + " has no coordinate " + n);
}

namespace {

const VarList kXYZat{"X", "Y", "Z", "a", "t"};
const VarList kTUV{"t", "u", "v"};

void require_t(const Rational& t) {
    if (t.is_zero() || t == 1 || t == -1) throw InvalidArgument("t must avoid 0 and +-1");
}

} // namespace

MultiPoly rect_quartic_symbolic() {
    return MultiPoly::parse("(1 - 4*t^2 + 6*t^4 + 16*a^2*t^4 - 4*t^6 + t^8)*(X^4 + Y^4)"
                            " + 4*(t^2 - 1)^3*(t^2 + 1)*(X^2 + Y^2)*X*Y"
                            " - 8*a^2*t^2*(1 + t^2)^2*(X^2 + Y^2)*Z^2"
                            " + 16*a^2*t^2*Z^2*((1 - t^4)*X*Y + (1 + a^2)*t^2*Z^2)"
                            " + 2*(3 - 4*t^2 + 2*t^4 - 16*a^2*t^4 - 4*t^6 + 3*t^8)*X^2*Y^2",
                            kXYZat);
}

MultiPoly build_rect_quartic(const Rational& a, const Rational& t) {
    if (t.is_zero()) throw InvalidArgument("t must be nonzero");
    return rect_quartic_symbolic().specialize({{"a", a}, {"t", t}}).with_vars({"X", "Y", "Z"});
}

MultiPoly rect_conic_G() {
    return MultiPoly::parse("(t^2 - 1)*((t^2 + 1)*X^2 + 2*(t^2 - 1)*X*Y + (t^2 + 1)*Y^2 - (t^2 + 1)*Z^2)",
                            {"X", "Y", "Z", "t"});
}

ParamFamily rect_family_symbolic() {
    const std::string D = "((t^2 + 1)*u^2 - 2*(t^2 - 1)*u*v + (1 + t^2)*v^2)";
    ParamFamily f;
    f.name = "rect";
    f.params = kTUV;
    f.coords = {
        {"x", RatFunc::parse("4*t*u*(v^2 - u^2)*((t^2 - 1)*u - (t^2 + 1)*v)/" + D + "^2", kTUV)},
        {"y", RatFunc::parse("2*u*((t - 1)*u - (t + 1)*v)*((t + 1)*u - (t - 1)*v)*((t^2 - 1)*u - (t^2 + 1)*v)/" + D +
                                 "^2",
                             kTUV)},
    };
    f.target = "rect:(1-t^2)/(2*t)";
    f.target_at = [](const Params& at) {
        const Rational& t = at.at("t");
        return VertexSet::rectangle((1 - t * t) / (2 * t));
    };
    f.excluded = {"t in {0, 1, -1}", "(t^2+1)u^2 - 2(t^2-1)uv + (1+t^2)v^2 = 0"};
    return f;
}

RectPoint rect_family(const Rational& t, const Rational& u, const Rational& v) {
    require_t(t);
    static const ParamFamily fam = rect_family_symbolic();
    return {(1 - t * t) / (2 * t), fam.eval({{"t", t}, {"u", u}, {"v", v}})};
}

Sqrt2Point rect_sqrt2_family(const QuadElem& u) {
    const long d = 2;
    if (u.radicand() != d) throw RadicandMismatch("u must lie in Q(sqrt 2)");
    const QuadElem s2(0, 1, d), one = QuadElem::rational(1, d);
    if ((s2 * u * u - 2 * one * u + s2).is_zero()) throw InvalidArgument("sqrt2 u^2 - 2u + sqrt2 = 0");
    const QuadElem t = one + s2, v = one;
    const QuadElem t2 = t * t;
    QuadElem X = 2 * one * u * ((one - t2) * u + (t2 + one) * v);
    QuadElem Y = (t2 + one) * (u * u - v * v);
    QuadElem Z = (t2 + one) * (u * u + v * v) - 2 * one * (t2 - one) * u * v;
    QuadElem P = X / Z, Q = Y / Z;
    QuadElem R = ((P + Q) * t2 + P - Q) / (2 * one * t);
    QuadElem S = ((P + Q) * t2 - P + Q) / (2 * one * t);
    QuadElem a = (one - t2) / (2 * one * t); // -1
    QuadElem x = (a * a + P * P - R * R) / (2 * one * a);
    QuadElem y = (P * P - Q * Q + one) * Rational(1, 2);

    Sqrt2Point out{-x, y, {P, Q, R, S}, one, one};
    QuadElem den = u * u - s2 * u + one;
    out.printed_x = u * (u - s2) * (one - u * u) / (den * den);
    out.printed_y = (3 * one - 2 * one * s2) * u * (s2 * (u - one) - 2 * one) * (s2 * (u - one) + s2) *
                    ((one + s2) * u - s2 - 2 * one) / (2 * one * den * den);
    return out;
}

ShuteYocom shute_yocom_point(const Rational& U, const Rational& V) {
    Rational p1 = 1 - U * U, q1 = 2 * U, p2 = 1 - V * V, q2 = 2 * V;
    Rational A = p1 * q2 + p2 * q1, B = p1 * p2 + q1 * q2;
    if (B.is_zero()) throw InvalidArgument("B(U,V) = 0");
    if (A.is_zero()) throw InvalidArgument("A(U,V) = 0: degenerate rectangle");
    Rational a = A / B;
    Point3 pt{p1 * q2 / B, q1 * q2 / B, 0};
    bool interior = pt.x > 0 && pt.x < a && pt.y > 0 && pt.y < 1;
    return {A, B, a, pt, interior};
}

bool shute_yocom_sign_test(const Rational& U, const Rational& V) {
    Rational D = (1 - U * U) * (1 - V * V) + 4 * U * V;
    if (D.is_zero()) return false;
    for (const Rational& n : {V * (1 - U * U), U * (1 - V * V), U * V, (1 - U * U) * (1 - V * V)})
        if ((n / D).sign() <= 0) return false;
    return true;
}

QuarticCurve interior_rect_quartic(const Rational& t) {
    require_t(t);
    UniPoly f("U", {1 - t * t, -4 * t, t * t - 1});
    UniPoly g("U", {-t, -(t * t - 1), t});
    UniPoly w = f * f + Rational(4) * g * g;
    std::array<Rational, 5> c;
    for (int i = 0; i <= 4; ++i) c[static_cast<std::size_t>(i)] = w.coeff(i);
    return QuarticCurve::with_point(c, 0, t * t + 1);
}

ECurve interior_rect_curve(const Rational& t) {
    Rational al = pow(t * t - 2 * t - 1, 2), be = pow(t * t + 2 * t - 1, 2);
    return ECurve::cubic(al + be, al * be, 0);
}

ECPoint interior_rect_H(const Rational& t) {
    return ECPoint::affine(-pow(1 + t * t, 2), 4 * t * (1 - pow(t, 4)));
}

std::vector<std::pair<Rational, Rational>> interior_rect_generate(const Rational& t, int n) {
    require_t(t);
    if (n < 1 || n > 64) throw InvalidArgument("n must be in 1..64");
    QuarticModel M = quartic_to_cubic(interior_rect_quartic(t));
    ECurve Et = interior_rect_curve(t);
    auto iso = find_isomorphism(Et, M.curve());
    if (!iso) throw ConstructionFailure("quartic model is not isomorphic to E_t");
    Rational al = pow(t * t - 2 * t - 1, 2), be = pow(t * t + 2 * t - 1, 2);
    std::vector<ECPoint> torsion{ECPoint::O(), ECPoint::affine(0, 0), ECPoint::affine(-al, 0),
                                 ECPoint::affine(-be, 0)};
    ECPoint H = interior_rect_H(t);
    std::set<std::pair<Rational, Rational>> seen;
    std::vector<std::pair<Rational, Rational>> out;
    for (int k = -n; k <= n; ++k) {
        if (k == 0) continue;
        ECPoint kH = ec_mul(Et, k, H);
        for (const auto& T2 : torsion) {
            auto back = M.backward((*iso)(ec_add(Et, kH, T2)));
            if (!back) continue;
            const auto& [U, W] = *back;
            Rational den = 2 * (t - U) * (1 + t * U);
            if (den.is_zero()) continue;
            for (const Rational& w : {W, -W}) {
                Rational V = (w - ((t - 1) * U - t - 1) * ((t + 1) * U + t - 1)) / den;
                if (seen.emplace(U, V).second) out.emplace_back(U, V);
            }
        }
    }
    return out;
}

} // namespace ratdist
