#include "ratdist/errors.hpp"
#include "ratdist/families.hpp"

namespace ratdist {

namespace {

const VarList kR{"R0", "R1", "R2", "R3", "R4"};
const VarList kTp{"T", "p1", "p2", "p3", "p4"};
const VarList kP{"p1", "p2", "p3", "p4"};
const VarList kQ{"q1", "q2", "q3"};

using Mat3 = std::array<std::array<Rational, 3>, 3>;

// Rows are P1, P2, P3.
Mat3 vertex_matrix(const Tetrahedron& t) {
    if (!(t[0] == Point3{0, 0, 0})) throw InvalidArgument("first tetrahedron vertex must be the origin");
    Mat3 A;
    for (std::size_t i = 0; i < 3; ++i) A[i] = {t[i + 1].x, t[i + 1].y, t[i + 1].z};
    return A;
}

Rational det3(const Mat3& A) {
    return A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1]) - A[0][1] * (A[1][0] * A[2][2] - A[1][2] * A[2][0]) +
           A[0][2] * (A[1][0] * A[2][1] - A[1][1] * A[2][0]);
}

// A adj(A) = det(A) I.
Mat3 adjugate(const Mat3& A) {
    Mat3 C;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            std::size_t r0 = (i + 1) % 3, r1 = (i + 2) % 3, c0 = (j + 1) % 3, c1 = (j + 2) % 3;
            C[j][i] = A[r0][c0] * A[r1][c1] - A[r0][c1] * A[r1][c0];
        }
    return C;
}

// |adj(A) b|^2 - det^2 R0^2 R4^2 with b_i = (R0^2 - Ri^2 + d0i^2 R4^2)/2.
MultiPoly quartic_in(const Tetrahedron& t, const std::array<MultiPoly, 5>& R) {
    Mat3 A = vertex_matrix(t);
    Rational det = det3(A);
    if (det.is_zero()) throw DegenerateTetrahedron("det A = 0: the vertices are coplanar");
    Mat3 adj = adjugate(A);
    const VarList& vars = R[0].vars();
    std::array<MultiPoly, 3> b;
    for (std::size_t i = 0; i < 3; ++i) {
        Rational d2 = squared_distance(t[0], t[i + 1]);
        b[i] = (R[0] * R[0] - R[i + 1] * R[i + 1] + R[4] * R[4] * d2) * Rational(1, 2);
    }
    MultiPoly F(vars);
    for (std::size_t k = 0; k < 3; ++k) {
        MultiPoly c = b[0] * adj[k][0] + b[1] * adj[k][1] + b[2] * adj[k][2];
        F += c * c;
    }
    return F - R[0] * R[0] * R[4] * R[4] * (det * det);
}

MultiPoly compose(const MultiPoly& p, const Bindings& b, const VarList& target) {
    RatFunc f = subst(p, b, target);
    return f.num() * inverse(f.den().constant_term());
}

} // namespace

MultiPoly tetra_quartic(const Tetrahedron& t) {
    std::array<MultiPoly, 5> R;
    for (std::size_t i = 0; i < 5; ++i) R[i] = MultiPoly::var(kR, kR[i]);
    return quartic_in(t, R);
}

TetraConstruction tetra_construct(const Tetrahedron& tet) {
    Mat3 A = vertex_matrix(tet);
    Rational det = det3(A);
    if (det.is_zero()) throw DegenerateTetrahedron("det A = 0: the vertices are coplanar");

    TetraConstruction out;
    out.tet = tet;
    TetraTrace& tr = out.trace;
    tr.detA = det;
    tr.F = tetra_quartic(tet);

    auto v = [](const char* n) { return MultiPoly::var(kTp, n); };
    MultiPoly T = v("T"), one = MultiPoly::constant(kTp, 1);
    std::array<MultiPoly, 5> R{T + one, (v("p1") + one) * T + one, (v("p2") + one) * T + one,
                               (v("p3") + one) * T + one, v("p4") * T};
    std::vector<MultiPoly> C = quartic_in(tet, R).coeffs_in("T");
    C.resize(5, MultiPoly(kTp));
    if (!C[0].is_zero() || !C[1].is_zero()) throw ConstructionFailure("F does not vanish to order two at (1,1,1,1,0)");
    tr.C2 = C[2].with_vars(kP);
    tr.C3 = C[3].with_vars(kP);
    tr.C4 = C[4].with_vars(kP);

    // Lines through Y1 = (a11, a21, a31, 1) in directions d = (q1, q2, q3, 0):
    // the second intersection is C2(d) Y1 - (grad C2(Y1) . d) d.
    std::array<Rational, 4> Y1{A[0][0], A[1][0], A[2][0], 1};
    std::map<std::string, Rational> atY{{"p1", Y1[0]}, {"p2", Y1[1]}, {"p3", Y1[2]}, {"p4", Y1[3]}};
    if (!tr.C2.eval(atY).is_zero()) throw ConstructionFailure("Y1 is not on the quadric C2 = 0");
    std::array<MultiPoly, 4> d{MultiPoly::var(kQ, "q1"), MultiPoly::var(kQ, "q2"), MultiPoly::var(kQ, "q3"),
                               MultiPoly(kQ)};
    MultiPoly grad(kQ);
    bool flat = true;
    for (std::size_t i = 0; i < 4; ++i) {
        Rational g = tr.C2.partial(kP[i]).eval(atY);
        if (!g.is_zero()) flat = false;
        grad += d[i] * g;
    }
    if (flat) throw ConstructionFailure("Y1 is the vertex of the cone C2 = 0");
    Bindings atd{{"p1", RatFunc(d[0])}, {"p2", RatFunc(d[1])}, {"p3", RatFunc(d[2])}, {"p4", RatFunc(d[3])}};
    MultiPoly C2d = compose(tr.C2, atd, kQ);
    Bindings atX;
    for (std::size_t i = 0; i < 4; ++i) {
        tr.X[i] = C2d * Y1[i] - grad * d[i];
        atX[kP[i]] = RatFunc(tr.X[i]);
    }
    if (tr.X[3].is_zero()) throw ConstructionFailure("X4 vanishes identically");
    if (!compose(tr.C2, atX, kQ).is_zero()) throw ConstructionFailure("quadric parametrization is off the quadric");
    MultiPoly C3p = compose(tr.C3, atX, kQ), C4p = compose(tr.C4, atX, kQ);
    if (C3p.is_zero()) throw ConstructionFailure("C3' vanishes identically");
    if (C4p.is_zero()) throw ConstructionFailure("C4' vanishes identically");
    tr.T = RatFunc(-C3p, C4p);

    // Q0 = (1 + 1/T)/X4, Qi = (1 + Xi + 1/T)/X4 over the common denominator X4 C3'.
    MultiPoly D = tr.X[3] * C3p;
    std::array<MultiPoly, 4> N;
    N[0] = C3p - C4p;
    for (std::size_t i = 1; i < 4; ++i) N[i] = C3p * (tr.X[i - 1] + Rational(1)) - C4p;
    for (std::size_t i = 0; i < 4; ++i) out.Q[i] = RatFunc(N[i], D);

    Mat3 adj = adjugate(A);
    MultiPoly D2 = D * D;
    std::array<MultiPoly, 3> rhs;
    for (std::size_t i = 0; i < 3; ++i)
        rhs[i] = N[0] * N[0] - N[i + 1] * N[i + 1] + D2 * squared_distance(tet[0], tet[i + 1]);
    MultiPoly den = D2 * (2 * det);
    ParamFamily& f = out.family;
    f.name = "tetra";
    f.params = kQ;
    const char* names[3] = {"x", "y", "z"};
    for (std::size_t k = 0; k < 3; ++k)
        f.coords.emplace_back(names[k], RatFunc(rhs[0] * adj[k][0] + rhs[1] * adj[k][1] + rhs[2] * adj[k][2], den));
    f.target = "tetra";
    f.target_at = [tet](const Params&) { return VertexSet::tetrahedron(tet); };
    f.excluded = {"X4(q) = 0", "C3'(q) = 0", "C4'(q) = 0"};
    return out;
}

std::vector<SingularPoint> tetra_singular_points(const Tetrahedron& t) {
    Mat3 A = vertex_matrix(t);
    if (det3(A).is_zero()) throw DegenerateTetrahedron("det A = 0: the vertices are coplanar");
    auto d = [&](std::size_t i, std::size_t j) {
        auto r = is_rational_square(squared_distance(t[i], t[j]));
        if (!r) throw InvalidArgument("edge d" + std::to_string(i) + std::to_string(j) + " is irrational");
        return *r;
    };
    std::vector<SingularPoint> out;
    // Vertex k: Q_k = 0 and Q_i = d_ik.
    for (std::size_t k = 0; k < 4; ++k) {
        std::array<std::size_t, 3> others;
        std::size_t n = 0;
        for (std::size_t i = 0; i < 4; ++i)
            if (i != k) others[n++] = i;
        for (int s = 0; s < 8; ++s) {
            SingularPoint p;
            p.R[k] = 0;
            p.R[4] = 1;
            std::string label = "P" + std::to_string(k) + "(";
            for (std::size_t j = 0; j < 3; ++j) {
                std::size_t i = others[j];
                bool neg = s & (1 << j);
                p.R[i] = neg ? -d(std::min(i, k), std::max(i, k)) : d(std::min(i, k), std::max(i, k));
                label += std::string(j ? "," : "") + (neg ? "-" : "+");
            }
            p.label = label + ")";
            out.push_back(p);
        }
    }
    for (int s = 0; s < 8; ++s) {
        SingularPoint p;
        p.R = {1, s & 1 ? -1 : 1, s & 2 ? -1 : 1, s & 4 ? -1 : 1, 0};
        p.label = "inf(" + std::string(s & 1 ? "-" : "+") + (s & 2 ? "-" : "+") + (s & 4 ? "-" : "+") + ")";
        out.push_back(p);
    }
    return out;
}

CollinearPoint collinear_family(const Rational& a, const Rational& b, const Rational& c, const Rational& p,
                                const Rational& q, const Rational& u) {
    auto d = is_rational_square(a * a + b * b + c * c);
    if (!d) throw InvalidArgument("a^2 + b^2 + c^2 is not a rational square");
    if (d->is_zero()) throw InvalidArgument("P1 is the origin");
    Rational s = (*d - 2 * u) / (2 * *d), h = (*d - 2 * u) / 2;
    return {{a * s, b * s, c * s}, {h, (*d + 2 * u) / 2, *d * p - h, *d * q - h}};
}

std::array<Rational, 3> heron_triangle(const Rational& u, const Rational& v, const Rational& w) {
    std::array<Rational, 3> s{(v + w) * (u * u - v * w), v * (u * u + w * w), w * (u * u + v * v)};
    for (const auto& x : s)
        if (x.sign() <= 0) throw InvalidArgument("nonpositive side " + x.str());
    return s;
}

HeronTetraReport heron_tetra(const Rational& m) {
    if (m.is_zero() || m == 1 || m == -1) throw InvalidArgument("m must avoid 0 and +-1");
    Rational m2 = m * m, m4 = m2 * m2;
    HeronTetraReport r;
    r.tet = {Point3{0, 0, 0},
             Point3{10 * (m4 - 1) * (m4 + 3 * m2 + 1), 0, 0},
             Point3{2 * (m2 - 1) * (m2 + 4) * pow(3 * m2 + 2, 2) / 5,
                    (m2 + 4) * (2 * m2 + 3) * (3 * m2 + 2) * (4 * m2 + 1) / 5, 0},
             Point3{2 * (m2 - 1) * pow(2 * m2 + 3, 2) * (4 * m2 + 1) / 5,
                    -(2 * m2 + 3) * (2 * m2 - 5 * m - 2) * (2 * m2 + 5 * m - 2) * (3 * m2 + 2) / 5,
                    4 * (m2 - 1) * m * (2 * m2 + 3) * (3 * m2 + 2)}};
    r.p = 10 * (m4 - 1) * (m4 + 3 * m2 + 1);
    r.q = (m2 + 4) * (3 * m2 + 2) * (2 * m4 + 2 * m2 + 1);
    r.r = (2 * m2 + 3) * (4 * m2 + 1) * (m4 + 2 * m2 + 2);

    std::size_t k = 0;
    bool rational = true;
    std::array<Rational, 6> e2;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j, ++k) {
            e2[k] = squared_distance(r.tet[i], r.tet[j]);
            auto s = is_rational_square(e2[k]);
            if (!s) rational = false;
            r.edges[k] = s.value_or(0);
        }
    // Opposite edges: d01 d23, d02 d13, d03 d12.
    r.three_equal_pairs = e2[0] == e2[5] && e2[1] == e2[4] && e2[2] == e2[3];
    r.edges_match = rational && r.three_equal_pairs && e2[0] == r.p * r.p && e2[1] == r.q * r.q &&
                    e2[2] == r.r * r.r;

    r.printed_area = (m4 - 1) * (m2 + 4) * (4 * m2 + 1) * (2 * m2 + 3) * (3 * m2 + 2) * (1 + 3 * m2 + m4);
    const std::array<std::array<std::size_t, 3>, 4> faces{{{0, 1, 3}, {0, 2, 4}, {1, 2, 5}, {3, 4, 5}}};
    r.areas_match = rational;
    for (std::size_t f = 0; f < 4; ++f) {
        const auto& e = faces[f];
        r.face_area_sq[f] = heron_area_sq(r.edges[e[0]], r.edges[e[1]], r.edges[e[2]]);
        if (r.face_area_sq[f] != r.printed_area * r.printed_area) r.areas_match = false;
    }

    r.volume_sq = cayley_menger_volume_sq(r.tet);
    r.printed_volume = m * (m2 - 1) * (m4 - 1) * (m2 + 4) * (4 * m2 + 1) * pow(2 * m2 + 3, 2) * pow(3 * m2 + 2, 2) *
                       (1 + 3 * m2 + m4) / 62208;
    r.volume_match = r.volume_sq == r.printed_volume * r.printed_volume;
    return r;
}

} // namespace ratdist
