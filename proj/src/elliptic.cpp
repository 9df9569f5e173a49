#include "ratdist/elliptic.hpp"

#include "ratdist/errors.hpp"

namespace ratdist {

Rational ECurve::b8() const { return a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4; }

Rational ECurve::c4() const { return b2() * b2() - 24 * b4(); }

Rational ECurve::c6() const { return -b2() * b2() * b2() + 36 * b2() * b4() - 216 * b6(); }

Rational ECurve::discriminant() const {
    Rational B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
    return -B2 * B2 * B8 - 8 * B4 * B4 * B4 - 27 * B6 * B6 + 9 * B2 * B4 * B6;
}

std::string ECurve::str() const {
    return "[" + a1.str() + "," + a2.str() + "," + a3.str() + "," + a4.str() + "," + a6.str() + "]";
}

std::string ECPoint::str() const { return infinity ? "O" : "(" + x.str() + ", " + y.str() + ")"; }

bool ec_on_curve(const ECurve& E, const ECPoint& P) {
    if (P.infinity) return true;
    const Rational &x = P.x, &y = P.y;
    return y * y + E.a1 * x * y + E.a3 * y == x * x * x + E.a2 * x * x + E.a4 * x + E.a6;
}

ECPoint ec_neg(const ECurve& E, const ECPoint& P) {
    if (P.infinity) return P;
    return ECPoint::affine(P.x, -P.y - E.a1 * P.x - E.a3);
}

namespace {

ECPoint add_unchecked(const ECurve& E, const ECPoint& P, const ECPoint& Q) {
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    Rational lambda, nu;
    if (P.x == Q.x) {
        if (P.y + Q.y + E.a1 * Q.x + E.a3 == 0) return ECPoint::O();
        Rational den = 2 * P.y + E.a1 * P.x + E.a3;
        lambda = (3 * P.x * P.x + 2 * E.a2 * P.x + E.a4 - E.a1 * P.y) / den;
        nu = (-P.x * P.x * P.x + E.a4 * P.x + 2 * E.a6 - E.a3 * P.y) / den;
    } else {
        lambda = (Q.y - P.y) / (Q.x - P.x);
        nu = (P.y * Q.x - Q.y * P.x) / (Q.x - P.x);
    }
    Rational x3 = lambda * lambda + E.a1 * lambda - E.a2 - P.x - Q.x;
    Rational y3 = -(lambda + E.a1) * x3 - nu - E.a3;
    return ECPoint::affine(x3, y3);
}

void require_on(const ECurve& E, const ECPoint& P) {
    if (!ec_on_curve(E, P)) throw OffCurve("point " + P.str() + " is not on " + E.str());
}

} // namespace

ECPoint ec_add(const ECurve& E, const ECPoint& P, const ECPoint& Q) {
    require_on(E, P);
    require_on(E, Q);
    return add_unchecked(E, P, Q);
}

ECPoint ec_mul(const ECurve& E, long n, const ECPoint& P) {
    require_on(E, P);
    ECPoint base = n < 0 ? ec_neg(E, P) : P;
    unsigned long k = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    ECPoint acc = ECPoint::O();
    while (k) {
        if (k & 1) acc = add_unchecked(E, acc, base);
        k >>= 1;
        if (k) base = add_unchecked(E, base, base);
    }
    return acc;
}

CurveInvariants curve_invariants(const ECurve& E) {
    Rational d = E.discriminant();
    if (d.is_zero()) throw SingularCurve("singular curve " + E.str());
    Rational c4 = E.c4();
    return {d, c4 * c4 * c4 / d};
}

ECurve transform(const ECurve& E, const Rational& u, const Rational& r, const Rational& s, const Rational& t) {
    if (u.is_zero()) throw InvalidArgument("u must be nonzero");
    Rational u2 = u * u, u3 = u2 * u, u4 = u2 * u2, u6 = u3 * u3;
    ECurve R;
    R.a1 = (E.a1 + 2 * s) / u;
    R.a2 = (E.a2 - s * E.a1 + 3 * r - s * s) / u2;
    R.a3 = (E.a3 + r * E.a1 + 2 * t) / u3;
    R.a4 = (E.a4 - s * E.a3 + 2 * r * E.a2 - (t + r * s) * E.a1 + 3 * r * r - 2 * s * t) / u4;
    R.a6 = (E.a6 + r * E.a4 + r * r * E.a2 + r * r * r - t * E.a3 - t * t - r * t * E.a1) / u6;
    return R;
}

ECPoint CurveIso::operator()(const ECPoint& P) const {
    if (P.infinity) return P;
    Rational u2 = u * u;
    Rational xp = (P.x - r) / u2;
    Rational yp = (P.y - s * (P.x - r) - t) / (u2 * u);
    return ECPoint::affine(xp, yp);
}

CurveIso CurveIso::inverse() const {
    Rational u2 = u * u;
    return {dst, src, ratdist::inverse(u), -r / u2, -s / u, (r * s - t) / (u2 * u)};
}

CurveIso CurveIso::then(const CurveIso& n) const {
    Rational u2 = u * u;
    return {src, n.dst, u * n.u, r + u2 * n.r, s + u * n.s, t + u2 * s * n.r + u2 * u * n.t};
}

CurveIso to_short_weierstrass(const ECurve& E) {
    Rational s = -E.a1 / 2;
    Rational r = -E.b2() / 12;
    Rational t = -(E.a3 + r * E.a1) / 2;
    return {E, transform(E, 1, r, s, t), 1, r, s, t};
}

std::optional<CurveIso> find_isomorphism(const ECurve& E1, const ECurve& E2) {
    if (E1.discriminant().is_zero() || E2.discriminant().is_zero()) throw SingularCurve("isomorphism of singular curves");
    CurveIso i1 = to_short_weierstrass(E1), i2 = to_short_weierstrass(E2);
    const Rational &A1 = i1.dst.a4, &B1 = i1.dst.a6, &A2 = i2.dst.a4, &B2 = i2.dst.a6;
    // Short curves: A2 = A1 / u^4, B2 = B1 / u^6.
    if (A1.is_zero() != A2.is_zero() || B1.is_zero() != B2.is_zero()) return std::nullopt;
    std::optional<Rational> u2;
    if (A1.is_zero()) {
        Rational c = B1 / B2; // u^6
        // Rational cube root of c.
        Integer n, d;
        Integer an = ::abs(c.num());
        mpz_root(n.get_mpz_t(), an.get_mpz_t(), 3);
        mpz_root(d.get_mpz_t(), c.den().get_mpz_t(), 3);
        Rational root(c.sign() < 0 ? Integer(-n) : n, d);
        if (root * root * root == c && root.sign() > 0) u2 = root;
    } else if (B1.is_zero()) {
        u2 = is_rational_square(A1 / A2);
    } else {
        Rational c = (A2 * B1) / (A1 * B2);
        if (c.sign() > 0) u2 = c;
    }
    if (!u2) return std::nullopt;
    auto u = is_rational_square(*u2);
    if (!u) return std::nullopt;
    Rational u4 = *u2 * *u2;
    if (A2 * u4 != A1 || B2 * u4 * *u2 != B1) return std::nullopt;
    CurveIso scale{i1.dst, i2.dst, *u, 0, 0, 0};
    return i1.then(scale).then(i2.inverse());
}

QuarticCurve QuarticCurve::with_point(std::array<Rational, 5> c, Rational q0, Rational v0) {
    QuarticCurve C{std::move(c), std::make_pair(std::move(q0), std::move(v0)), 0};
    return C;
}

QuarticCurve QuarticCurve::with_infinity(std::array<Rational, 5> c, Rational lead) {
    return QuarticCurve{std::move(c), std::nullopt, std::move(lead)};
}

Rational QuarticCurve::eval(const Rational& q) const {
    return (((c[4] * q + c[3]) * q + c[2]) * q + c[1]) * q + c[0];
}

namespace {

// Coefficients of w^4 f(q0 + 1/w) = sum c_i (q0 w + 1)^i w^(4-i).
std::array<Rational, 5> invert_at(const std::array<Rational, 5>& c, const Rational& q0) {
    std::array<Rational, 5> g{};
    for (int i = 0; i <= 4; ++i) {
        // (q0 w + 1)^i = sum_j binom(i,j) q0^j w^j
        Rational qj = 1;
        long binom = 1;
        for (int j = 0; j <= i; ++j) {
            g[static_cast<std::size_t>(j + 4 - i)] += c[static_cast<std::size_t>(i)] * Rational(binom) * qj;
            qj *= q0;
            binom = binom * (i - j) / (j + 1);
        }
    }
    return g;
}

} // namespace

QuarticModel quartic_to_cubic(const QuarticCurve& C) {
    QuarticModel M;
    M.C_ = C;
    std::array<Rational, 5> f = C.c;
    Rational lead;
    if (C.point) {
        const auto& [q0, v0] = *C.point;
        if (!C.contains(q0, v0)) throw InvalidArgument("marked point is not on the quartic");
        M.q0_ = q0;
        M.v0_ = v0;
        f = invert_at(C.c, q0);
        if (v0.is_zero()) {
            M.kind_ = QuarticModel::Kind::Root;
            const Rational &g3 = f[3], &g2 = f[2], &g1 = f[1], &g0 = f[0];
            if (g3.is_zero()) throw SingularQuartic("repeated root at the marked point");
            M.g3_ = g3;
            M.E_ = ECurve::cubic(g2, g3 * g1, g3 * g3 * g0);
            if (M.E_.discriminant().is_zero()) throw SingularQuartic("singular quartic");
            return M;
        }
        M.kind_ = QuarticModel::Kind::Affine;
        lead = v0;
    } else {
        M.kind_ = QuarticModel::Kind::Infinity;
        lead = C.lead;
        if (lead.is_zero() || lead * lead != C.c[4]) throw InvalidArgument("lead^2 must equal the quartic coefficient");
    }
    // y1^2 = q^4 + b q^3 + c q^2 + d q + e with V = lead * y1.
    Rational a2 = lead * lead;
    Rational b = f[3] / a2, c = f[2] / a2, d = f[1] / a2, e = f[0] / a2;
    Rational s = b / 4; // x = q + s
    M.lead_ = lead;
    M.shift_ = s;
    M.p_ = c - 6 * s * s;
    M.r_ = d - 2 * c * s + 8 * s * s * s;
    M.k_ = e - d * s + c * s * s - 3 * s * s * s * s;
    M.E_ = ECurve::cubic(M.p_, -4 * M.k_, M.r_ * M.r_ - 4 * M.p_ * M.k_);
    if (M.E_.discriminant().is_zero()) throw SingularQuartic("singular quartic");
    return M;
}

ECPoint QuarticModel::forward(const Rational& q, const Rational& v) const {
    if (!C_.contains(q, v)) throw OffCurve("(" + q.str() + ", " + v.str() + ") is not on the quartic");
    Rational qq = q, vv = v;
    if (kind_ != Kind::Infinity) {
        if (q == q0_) {
            if (v == v0_) return ECPoint::O();
            // The other point over q0 (Affine kind only: v = -v0).
            return ECPoint::affine(-p_, -r_);
        }
        Rational w = inverse(q - q0_);
        qq = w;
        vv = v * w * w;
        if (kind_ == Kind::Root) return ECPoint::affine(g3_ * qq, g3_ * vv);
    }
    Rational x = qq + shift_;
    Rational y1 = vv / lead_;
    Rational X = 2 * (y1 + x * x);
    Rational Y = 2 * (X + p_) * x + r_;
    return ECPoint::affine(X, Y);
}

std::optional<std::pair<Rational, Rational>> QuarticModel::backward(const ECPoint& P) const {
    if (!ec_on_curve(E_, P)) throw OffCurve("point " + P.str() + " is not on the model");
    Rational w, W;
    if (kind_ == Kind::Root) {
        if (P.infinity) return std::make_pair(q0_, v0_);
        if (P.x.is_zero()) return std::nullopt;
        w = P.x / g3_;
        W = P.y / g3_;
    } else {
        // O and (-p, -r) lie over the marked point (or over q = infinity).
        if (P.infinity || (P.x == -p_ && P.y == -r_)) {
            if (kind_ == Kind::Infinity) return std::nullopt;
            return std::make_pair(q0_, P.infinity ? v0_ : -v0_);
        }
        // On X = -p the relation x^2 (X + p) + r x + k - X^2/4 = 0 is linear.
        Rational x = P.x == -p_ ? (p_ * p_ / 4 - k_) / r_ : (P.y - r_) / (2 * (P.x + p_));
        Rational y1 = P.x / 2 - x * x;
        w = x - shift_;
        W = lead_ * y1;
        if (kind_ == Kind::Infinity) return std::make_pair(w, W);
    }
    if (w.is_zero()) return std::nullopt;
    Rational iw = inverse(w);
    return std::make_pair(q0_ + iw, W * iw * iw);
}

} // namespace ratdist
