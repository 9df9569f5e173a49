#pragma once

#include "ratdist/rational.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>

namespace ratdist {

// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
struct ECurve {
    Rational a1, a2, a3, a4, a6;

    static ECurve short_form(const Rational& A, const Rational& B) { return {0, 0, 0, A, B}; }
    // y^2 = x^3 + a2 x^2 + a4 x + a6
    static ECurve cubic(const Rational& a2, const Rational& a4, const Rational& a6) { return {0, a2, 0, a4, a6}; }

    Rational b2() const { return a1 * a1 + 4 * a2; }
    Rational b4() const { return 2 * a4 + a1 * a3; }
    Rational b6() const { return a3 * a3 + 4 * a6; }
    Rational b8() const;
    Rational c4() const;
    Rational c6() const;
    Rational discriminant() const;
    bool is_short() const { return a1.is_zero() && a2.is_zero() && a3.is_zero(); }

    std::string str() const;
    friend bool operator==(const ECurve&, const ECurve&) = default;
};

struct ECPoint {
    bool infinity = true;
    Rational x, y;

    static ECPoint O() { return {}; }
    static ECPoint affine(Rational x, Rational y) { return {false, std::move(x), std::move(y)}; }
    std::string str() const;
    friend bool operator==(const ECPoint&, const ECPoint&) = default;
};

struct CurveInvariants {
    Rational discriminant, j;
};

bool ec_on_curve(const ECurve& E, const ECPoint& P);
ECPoint ec_neg(const ECurve& E, const ECPoint& P);
// Chord-tangent addition. Throws OffCurve.
ECPoint ec_add(const ECurve& E, const ECPoint& P, const ECPoint& Q);
// Double-and-add, n may be negative. Throws OffCurve.
ECPoint ec_mul(const ECurve& E, long n, const ECPoint& P);
// Throws SingularCurve when the discriminant vanishes.
CurveInvariants curve_invariants(const ECurve& E);

// Admissible change of variables x = u^2 x' + r, y = u^3 y' + s u^2 x' + t,
// carrying points of `src` to points of `dst`.
struct CurveIso {
    ECurve src, dst;
    Rational u = 1, r, s, t;

    ECPoint operator()(const ECPoint& P) const;
    CurveIso inverse() const;
    // this, then next.
    CurveIso then(const CurveIso& next) const;
};

// Applies [u,r,s,t] to E and returns the transformed curve.
ECurve transform(const ECurve& E, const Rational& u, const Rational& r, const Rational& s, const Rational& t);
// Isomorphism onto y^2 = x^3 + A x + B.
CurveIso to_short_weierstrass(const ECurve& E);
// A Q-isomorphism from E1 onto E2 when one exists.
std::optional<CurveIso> find_isomorphism(const ECurve& E1, const ECurve& E2);

// V^2 = c4 q^4 + c3 q^3 + c2 q^2 + c1 q + c0 with a known rational point:
// either affine (q0, v0), or the point at infinity where V/q^2 -> lead
// (lead^2 = c4).
struct QuarticCurve {
    std::array<Rational, 5> c; // c[i] multiplies q^i
    std::optional<std::pair<Rational, Rational>> point;
    Rational lead;

    static QuarticCurve with_point(std::array<Rational, 5> c, Rational q0, Rational v0);
    static QuarticCurve with_infinity(std::array<Rational, 5> c, Rational lead);

    Rational eval(const Rational& q) const;
    bool contains(const Rational& q, const Rational& v) const { return v * v == eval(q); }
};

// Weierstrass model of a quartic with explicit maps both ways.
class QuarticModel {
public:
    const ECurve& curve() const { return E_; }
    // Image of an affine point (q, v) of the quartic.
    ECPoint forward(const Rational& q, const Rational& v) const;
    // Affine preimage; empty for points over q = infinity.
    std::optional<std::pair<Rational, Rational>> backward(const ECPoint& P) const;

private:
    friend QuarticModel quartic_to_cubic(const QuarticCurve& C);
    enum class Kind { Infinity, Affine, Root } kind_ = Kind::Infinity;
    ECurve E_;
    QuarticCurve C_;
    Rational q0_, v0_;
    // Infinity and affine kinds: V' = lead * y1, x = q' + shift,
    // y1^2 = x^4 + p x^2 + r x + k.
    Rational lead_, shift_, p_, r_, k_;
    // Root kind: W^2 = g3 w^3 + g2 w^2 + g1 w + g0.
    Rational g3_;
};

// Throws SingularQuartic for a singular or degenerate quartic and
// InvalidArgument when the marked point is not on the curve.
QuarticModel quartic_to_cubic(const QuarticCurve& C);

} // namespace ratdist
