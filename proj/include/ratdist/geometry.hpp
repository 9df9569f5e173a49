#pragma once

#include "ratdist/rational.hpp"

#include <array>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace ratdist {

struct Point3 {
    Rational x, y, z;
    friend bool operator==(const Point3&, const Point3&) = default;
    friend auto operator<=>(const Point3&, const Point3&) = default;
    std::string str() const;
};

using Tetrahedron = std::array<Point3, 4>;

enum class VertexKind { Rectangle, UnitSquare3D, UnitCube, CubeFive, CubeSixHalf, CubeSixDiag, Tetrahedron, Collinear };

// Ordered vertex list. Orders are fixed per kind:
//   Rectangle(a)   (0,0,0) (0,1,0) (a,0,0) (a,1,0)
//   UnitSquare3D   (0,0,0) (0,1,0) (1,0,0) (1,1,0)
//   UnitCube       (i,j,k) with i major, k minor
//   CubeFive       unit square, then (0,0,1)
//   CubeSixHalf    unit square, then (0,0,1) (1,0,1)   [points on x = 1/2]
//   CubeSixDiag    unit square, then (1,0,1) (0,1,1)   [points on x = y]
//   Tetrahedron    the four given points, first one the origin
//   Collinear      (0,0,0), P1, p*P1, q*P1
struct VertexSet {
    VertexKind kind;
    std::vector<Point3> vertices;
    Rational a; // rectangle side, 0 otherwise

    static VertexSet rectangle(const Rational& a);
    static VertexSet unit_square();
    static VertexSet unit_cube();
    static VertexSet cube_five();
    static VertexSet cube_six_half();
    static VertexSet cube_six_diag();
    static VertexSet tetrahedron(const Tetrahedron& t);
    static VertexSet collinear(const Point3& p1, const Rational& p, const Rational& q);

    std::string describe() const;
};

struct DistanceEntry {
    Point3 vertex;
    Rational dist2;
    std::optional<Rational> root;
};

struct DistanceReport {
    std::vector<DistanceEntry> entries;
    bool all_rational = true;
    int count_rational = 0;
};

Rational squared_distance(const Point3& p, const Point3& q);
DistanceReport distance_report(const Point3& p, const VertexSet& vs);

// (a+b+c)(-a+b+c)(a-b+c)(a+b-c)/16.
Rational heron_area_sq(const Rational& a, const Rational& b, const Rational& c);

// Exact determinant by fraction-free elimination.
Rational determinant(std::vector<std::vector<Rational>> m);

// V^2 from 288 V^2 = Cayley-Menger determinant.
Rational cayley_menger_volume_sq(const Tetrahedron& t);

// Orbit representative of (a,x,y) under (a,x,y) -> (1/a, y/a, x/a),
// (a, a-x, y), (a, x, 1-y): lexicographically least member with a >= 1,
// x <= a/2, y <= 1/2 when one exists, else the least member overall.
std::tuple<Rational, Rational, Rational> canonical_rect_hit(const Rational& a, const Rational& x, const Rational& y);

// Orbit of (a,x,y) under the three involutions (eight elements at most).
std::vector<std::tuple<Rational, Rational, Rational>> rect_orbit(const Rational& a, const Rational& x, const Rational& y);

// Representative of (x,y,z) under x <-> 1-x, y <-> 1-y, x <-> y, z <-> -z:
// x' <= y' <= 1/2, z' >= 0.
Point3 canonical_square3d(const Point3& p);

} // namespace ratdist
