#include "ratdist/geometry.hpp"

#include "ratdist/errors.hpp"

#include <algorithm>

namespace ratdist {

std::string Point3::str() const { return "(" + x.str() + ", " + y.str() + ", " + z.str() + ")"; }

namespace {

std::vector<Point3> square_vertices() { return {{0, 0, 0}, {0, 1, 0}, {1, 0, 0}, {1, 1, 0}}; }

} // namespace

VertexSet VertexSet::rectangle(const Rational& a) {
    if (a.is_zero()) throw InvalidArgument("rectangle side a must be nonzero");
    return {VertexKind::Rectangle, {{0, 0, 0}, {0, 1, 0}, {a, 0, 0}, {a, 1, 0}}, a};
}

VertexSet VertexSet::unit_square() { return {VertexKind::UnitSquare3D, square_vertices(), 0}; }

VertexSet VertexSet::unit_cube() {
    VertexSet v{VertexKind::UnitCube, {}, 0};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) v.vertices.push_back({i, j, k});
    return v;
}

VertexSet VertexSet::cube_five() {
    VertexSet v{VertexKind::CubeFive, square_vertices(), 0};
    v.vertices.push_back({0, 0, 1});
    return v;
}

VertexSet VertexSet::cube_six_half() {
    VertexSet v{VertexKind::CubeSixHalf, square_vertices(), 0};
    v.vertices.push_back({0, 0, 1});
    v.vertices.push_back({1, 0, 1});
    return v;
}

VertexSet VertexSet::cube_six_diag() {
    VertexSet v{VertexKind::CubeSixDiag, square_vertices(), 0};
    v.vertices.push_back({1, 0, 1});
    v.vertices.push_back({0, 1, 1});
    return v;
}

VertexSet VertexSet::tetrahedron(const Tetrahedron& t) {
    if (!(t[0] == Point3{0, 0, 0})) throw InvalidArgument("first tetrahedron vertex must be the origin");
    return {VertexKind::Tetrahedron, {t.begin(), t.end()}, 0};
}

VertexSet VertexSet::collinear(const Point3& p1, const Rational& p, const Rational& q) {
    return {VertexKind::Collinear, {{0, 0, 0}, p1, {p * p1.x, p * p1.y, p * p1.z}, {q * p1.x, q * p1.y, q * p1.z}}, 0};
}

std::string VertexSet::describe() const {
    switch (kind) {
    case VertexKind::Rectangle: return "rect:" + a.str();
    case VertexKind::UnitSquare3D: return "square3d";
    case VertexKind::UnitCube: return "cube";
    case VertexKind::CubeFive: return "cube-five";
    case VertexKind::CubeSixHalf: return "cube-six-half";
    case VertexKind::CubeSixDiag: return "cube-six-diag";
    case VertexKind::Tetrahedron: return "tetra";
    case VertexKind::Collinear: return "collinear";
    }
    return "?";
}

Rational squared_distance(const Point3& p, const Point3& q) {
    Rational dx = p.x - q.x, dy = p.y - q.y, dz = p.z - q.z;
    return dx * dx + dy * dy + dz * dz;
}

DistanceReport distance_report(const Point3& p, const VertexSet& vs) {
    DistanceReport r;
    for (const auto& v : vs.vertices) {
        DistanceEntry e{v, squared_distance(p, v), std::nullopt};
        e.root = is_rational_square(e.dist2);
        if (e.root) ++r.count_rational;
        else r.all_rational = false;
        r.entries.push_back(std::move(e));
    }
    return r;
}

Rational heron_area_sq(const Rational& a, const Rational& b, const Rational& c) {
    return (a + b + c) * (-a + b + c) * (a - b + c) * (a + b - c) / 16;
}

Rational determinant(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        Rational inv = inverse(m[col][col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col].is_zero()) continue;
            Rational f = m[r][col] * inv;
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

Rational cayley_menger_volume_sq(const Tetrahedron& t) {
    std::vector<std::vector<Rational>> m(5, std::vector<Rational>(5, 1));
    m[0][0] = 0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) m[i + 1][j + 1] = squared_distance(t[i], t[j]);
    return determinant(std::move(m)) / 288;
}

std::vector<std::tuple<Rational, Rational, Rational>> rect_orbit(const Rational& a, const Rational& x, const Rational& y) {
    using T = std::tuple<Rational, Rational, Rational>;
    std::vector<T> orbit{{a, x, y}};
    for (std::size_t i = 0; i < orbit.size(); ++i) {
        auto [A, X, Y] = orbit[i];
        for (T next : {T{inverse(A), Y / A, X / A}, T{A, A - X, Y}, T{A, X, 1 - Y}})
            if (std::find(orbit.begin(), orbit.end(), next) == orbit.end()) orbit.push_back(next);
    }
    return orbit;
}

std::tuple<Rational, Rational, Rational> canonical_rect_hit(const Rational& a, const Rational& x, const Rational& y) {
    auto orbit = rect_orbit(a, x, y);
    std::vector<std::tuple<Rational, Rational, Rational>> good;
    for (const auto& [A, X, Y] : orbit)
        if (A >= 1 && X <= A / 2 && Y <= Rational(1, 2)) good.emplace_back(A, X, Y);
    const auto& pool = good.empty() ? orbit : good;
    return *std::min_element(pool.begin(), pool.end());
}

Point3 canonical_square3d(const Point3& p) {
    Rational half(1, 2);
    Rational x = p.x > half ? 1 - p.x : p.x;
    Rational y = p.y > half ? 1 - p.y : p.y;
    if (y < x) std::swap(x, y);
    return {x, y, abs(p.z)};
}

} // namespace ratdist
