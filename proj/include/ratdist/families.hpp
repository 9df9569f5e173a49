#pragma once

#include "ratdist/elliptic.hpp"
#include "ratdist/geometry.hpp"
#include "ratdist/quadfield.hpp"
#include "ratdist/ratfunc.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ratdist {

using Params = std::map<std::string, Rational>;

// A tuple of rational functions whose rational specializations (off the
// poles) solve a distance system for `target_at(params)`.
struct ParamFamily {
    std::string name;
    VarList params;
    // x, y and optionally z; a missing z means the plane z = 0.
    std::vector<std::pair<std::string, RatFunc>> coords;
    std::string target;
    std::function<VertexSet(const Params&)> target_at;
    std::vector<std::string> excluded;

    // Throws EvaluationAtPole.
    Point3 eval(const Params& at) const;
    DistanceReport check(const Params& at) const { return distance_report(eval(at), target_at(at)); }
    const RatFunc& coord(const std::string& name) const;
};

// ---- rectangles ----------------------------------------------------------

// F(X,Y,Z) of the genus-three curve C_{a,t}, in variables (X,Y,Z,a,t).
MultiPoly rect_quartic_symbolic();
// F at given a and t, in (X,Y,Z). Throws InvalidArgument for t = 0.
MultiPoly build_rect_quartic(const Rational& a, const Rational& t);
// The conic G(X,Y,Z) in (X,Y,Z,t) with F = G^2 when a = (1-t^2)/(2t).
MultiPoly rect_conic_G();

// a = (1-t^2)/(2t) and the point (x, y) in (t, u, v).
ParamFamily rect_family_symbolic();
struct RectPoint {
    Rational a;
    Point3 point; // z = 0
};
// Throws InvalidArgument for t in {0, 1, -1}, EvaluationAtPole on the
// denominator zero set.
RectPoint rect_family(const Rational& t, const Rational& u, const Rational& v);

// Points over Q(sqrt 2) at Q(sqrt 2)-rational distance from the unit square.
struct Sqrt2Point {
    QuadElem x, y;
    // Distances to (0,0), (0,1), (1,0), (1,1).
    std::array<QuadElem, 4> dist;
    // The displayed closed forms, evaluated; they are kept for comparison.
    QuadElem printed_x, printed_y;
};
// Evaluates the rectangle construction at t = 1 + sqrt 2, v = 1 (so a = -1)
// and reflects x -> -x onto the unit square. Throws InvalidArgument when
// sqrt2 u^2 - 2u + sqrt2 = 0.
Sqrt2Point rect_sqrt2_family(const QuadElem& u);

struct ShuteYocom {
    Rational A, B, a;
    Point3 point;
    bool interior;
};
// Throws InvalidArgument when B(U,V) = 0 or A(U,V) = 0.
ShuteYocom shute_yocom_point(const Rational& U, const Rational& V);
// Sign conditions V(1-U^2), U(1-V^2), UV, (1-U^2)(1-V^2) all of the sign of
// Delta = (1-U^2)(1-V^2) + 4UV.
bool shute_yocom_sign_test(const Rational& U, const Rational& V);

// W^2 = quartic(U) for C_t, with its marked point (0, t^2+1).
QuarticCurve interior_rect_quartic(const Rational& t);
// E_t: Y^2 = X(X + (t^2-2t-1)^2)(X + (t^2+2t-1)^2) and H.
ECurve interior_rect_curve(const Rational& t);
ECPoint interior_rect_H(const Rational& t);
// Distinct (U, V) on C_t from the multiples kH, 1 <= |k| <= n, and their
// translates by 2-torsion. Throws InvalidArgument for t in {0, 1, -1} or n
// out of range.
std::vector<std::pair<Rational, Rational>> interior_rect_generate(const Rational& t, int n);

// ---- the unit square, special planes -------------------------------------

// Corrected line family (1/2, 1/2, (1-2u^2)/(4u)).
Point3 axis_line_family(const Rational& u);
// The displayed parametrization z = (1-u^2)/(4u).
Point3 axis_line_printed(const Rational& u);

struct AuditRow {
    Rational u;
    Point3 point;
    bool passes;
};
struct Prop31Audit {
    std::string printed_condition, printed_family, corrected_condition, corrected_family;
    std::vector<AuditRow> printed, corrected;
    int printed_pass = 0, corrected_pass = 0;
};
Prop31Audit audit_prop31();

// H(P, Q) = -2 + 2P^2 - P^4 + 2(P^2+1)Q^2 - Q^4 in (P, Q).
MultiPoly half_plane_H();
// (P0, Q0, z0) in (u, v).
std::array<RatFunc, 3> half_plane_PQz_symbolic();
struct HalfPlanePoint {
    Point3 point;
    Rational P0, Q0;
};
// Throws EvaluationAtPole for u = +-1 or v = 0.
HalfPlanePoint half_plane_point(const Rational& u, const Rational& v);

struct HalfPlaneCurve {
    ECurve curve;  // the displayed cubic model at (u, v)
    ECPoint point; // image of (-Q0, z0)
    // Roots 0 < r1 < r2 of the quadratic factor when real; empty otherwise.
    std::optional<std::pair<double, double>> two_torsion;
};
// Throws SingularCurve for u = +-1 or v = 0, InvalidArgument for u = 0.
HalfPlaneCurve half_plane_curve(const Rational& u, const Rational& v);
// The displayed cubic as a polynomial family: coefficients (a2, a4) in (u,v).
std::pair<MultiPoly, MultiPoly> half_plane_curve_coeffs();

// Displayed x = y, z in k.
ParamFamily diag_plane_family_symbolic();
Point3 diag_plane_family(const Rational& k);
// The quartic Z^2 = -1/2 (t^2 - 128k^2(2+k^2)^2)(t^2 - 2(4-12k^2+k^4)^2) with
// its displayed point, and the displayed cubic with Q.
QuarticCurve diag_plane_quartic(const Rational& k);
ECurve diag_plane_curve(const Rational& k);
ECPoint diag_plane_Q(const Rational& k);
// Points from jQ, 1 <= j <= n, that pass the square oracle on x = y.
std::vector<Point3> diag_plane_generate(const Rational& k, int n);

// ---- the unit square in space --------------------------------------------

// G(u, X, Y) in (u, X, Y).
MultiPoly square3d_G();

struct TangentConstructionTrace {
    RatFunc p, q, T;          // in t
    std::array<RatFunc, 5> A; // coefficients of T^0..T^4 after solving
    Rational B1;
};
struct TangentConstruction {
    ParamFamily family; // x, y, z in t
    TangentConstructionTrace trace;
};
// Requires V0^2 = G(u0, X0, Y0), V0 != 0 and B1 != 0.
TangentConstruction square3d_tangent_construct(const Rational& u0, const Rational& X0, const Rational& Y0,
                                               const Rational& V0);

// The displayed x(t), y(t), z(t) over Delta^2 and Delta.
struct PrintedSquare3D {
    UniPoly x_num, y_num, z_num, delta;
};
PrintedSquare3D printed_square3d();
struct Square3DComparison {
    bool matches = false;
    // t_constructed = (alpha s + beta) / (gamma s + delta), s the printed
    // parameter.
    Rational alpha, beta, gamma, delta;
    std::string symmetry;
    UniPoly delta_normalized;
};
// Looks for a Mobius reparametrization and a square symmetry carrying the
// constructed family onto the printed one.
Square3DComparison compare_with_printed_square3d(const ParamFamily& family);

// ---- tetrahedra ----------------------------------------------------------

struct TetraTrace {
    Rational detA;
    MultiPoly F;          // quartic form in R0..R4
    MultiPoly C2, C3, C4; // forms in p1..p4
    std::array<MultiPoly, 4> X; // quadric parametrization p_i = X_i(q1,q2,q3)
    RatFunc T;            // -C3'/C4'
};
struct TetraConstruction {
    Tetrahedron tet;
    TetraTrace trace;
    // Q0..Q3 and x, y, z as functions of (q1, q2, q3).
    std::array<RatFunc, 4> Q;
    ParamFamily family;
};
// Throws DegenerateTetrahedron or ConstructionFailure.
TetraConstruction tetra_construct(const Tetrahedron& t);
// F(R) for the tetrahedron, in R0..R4.
MultiPoly tetra_quartic(const Tetrahedron& t);

struct SingularPoint {
    std::array<Rational, 5> R;
    std::string label;
};
// The 40 points; entries d_ij must be rational (throws InvalidArgument).
std::vector<SingularPoint> tetra_singular_points(const Tetrahedron& t);

struct CollinearPoint {
    Point3 point;
    std::array<Rational, 4> Q;
};
// Throws InvalidArgument when a^2+b^2+c^2 is not a rational square.
CollinearPoint collinear_family(const Rational& a, const Rational& b, const Rational& c, const Rational& p,
                                const Rational& q, const Rational& u);

// Brahmagupta sides; throws InvalidArgument for a nonpositive side.
std::array<Rational, 3> heron_triangle(const Rational& u, const Rational& v, const Rational& w);

struct HeronTetraReport {
    Tetrahedron tet;
    std::array<Rational, 6> edges; // d01 d02 d03 d12 d13 d23
    Rational p, q, r;              // displayed edge lengths
    bool edges_match = false;
    bool three_equal_pairs = false;
    std::array<Rational, 4> face_area_sq;
    Rational printed_area;
    bool areas_match = false;
    Rational volume_sq, printed_volume;
    bool volume_match = false;
};
// Throws InvalidArgument for m in {0, 1, -1}.
HeronTetraReport heron_tetra(const Rational& m);

// ---- the cube ------------------------------------------------------------

// C': W^2 = quartic(q) for a = (t^2+1)/(2t), marked at infinity.
QuarticCurve cube_six_quartic(const Rational& t);
ECurve cube_six_curve(const Rational& t); // E': short form
ECPoint cube_six_Z(const Rational& t);
// y(t), z(t) as displayed, and the family (1/2, y, z).
ParamFamily cube_six_family_symbolic();
std::pair<RatFunc, RatFunc> cube_six_printed();
// Throws EvaluationAtPole on the zeros of Delta and t in {0, 1, -1}.
Point3 cube_six_family(const Rational& t);
// Points from mZ through C' and the V-curve. Throws InvalidArgument for
// m < 1.
std::vector<Point3> cube_six_generate(const Rational& t, int m);

struct LabelledPoint {
    std::string label;
    Point3 point;
    VertexSet vertices;
    DistanceReport report;
    std::vector<Rational> printed; // displayed distances, when any
};
std::vector<LabelledPoint> cube_known_points();

} // namespace ratdist
