#pragma once

#include "ratdist/geometry.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ratdist {

struct SearchConfig {
    // rect: height of a, and X + Y + Z for (x, y) = (X/Z, Y/Z).
    long a_height = 20;
    long sum_bound = 1000;
    // square3d: common denominator D of (x, y, z), and z <= z_factor.
    long den_bound = 40;
    long z_factor = 2;
    // cube surface: |m| <= m_bound, 0 < t <= t_bound.
    long m_bound = 30;
    long t_bound = 500;

    unsigned threads = 1;
    // Permutes shard order; results do not depend on it.
    std::uint64_t seed = 0;
    // rect: drop hits with some of P, Q, R, S equal (counted instead).
    bool exclude_degenerate = true;
    // rect: drop a with a^2 + 1 a square, i.e. a = (1-t^2)/(2t).
    bool exclude_square_family = true;

    void validate() const; // throws InvalidArgument
};

enum class SearchKind { Rect, Square3D, CubeSurface };
std::string to_string(SearchKind k);

struct SearchHit {
    SearchKind kind;
    // rect: (a, x, y) canonical; square3d: (x, y, z) canonical; cube
    // surface: (m, t, U).
    std::vector<Rational> witness;
    Point3 point;
    VertexSet vertices;
    DistanceReport report;
};

struct RectSearchResult {
    std::vector<SearchHit> hits;
    // Canonical classes with x = 0, x = a/2, y = 1/2, or another equality
    // among P, Q, R, S.
    long x_zero = 0, x_half = 0, y_half = 0, other_equal = 0;
    long excluded_square_family = 0;
};

// (X, Y, Z) with gcd 1, X + Y + Z <= sum_bound, 2Y <= Z, and a = p/q with
// max(p, q) <= a_height, a > 1, x < a. Hits are canonicalized under the
// three involutions and sorted by (height(a), a, x, y).
RectSearchResult search_rect(const SearchConfig& cfg);

// x = X/D, y = Y/D, z = Z/D with 0 < X < Y < D/2, 0 < Z <= z_factor D,
// gcd(X, Y, Z, D) = 1. Sorted by (x, y, z).
std::vector<SearchHit> search_square3d(const SearchConfig& cfg);

// Integer points of 2(t^2 - 8m^2)(-t^2 + 2(1-m^2)^2) = (t^2 + (1+m^2)^2 - U^2)^2
// with U >= 0, and the induced point (x, x, z) on the plane x = y.
std::vector<SearchHit> search_cube_surface(const SearchConfig& cfg);

// Perfect-square test with a residue prefilter.
bool is_square_u64(std::uint64_t n);
bool is_square_i128(__int128 n);

} // namespace ratdist
