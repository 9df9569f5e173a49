#include "ratdist/search.hpp"

#include "ratdist/errors.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <thread>

namespace ratdist {

namespace {

// Quadratic residues modulo 64, 63, 65 and 11.
struct Residues {
    std::array<bool, 64> m64{};
    std::array<bool, 63> m63{};
    std::array<bool, 65> m65{};
    std::array<bool, 11> m11{};
    Residues() {
        for (unsigned i = 0; i < 64; ++i) m64[i * i % 64] = true;
        for (unsigned i = 0; i < 63; ++i) m63[i * i % 63] = true;
        for (unsigned i = 0; i < 65; ++i) m65[i * i % 65] = true;
        for (unsigned i = 0; i < 11; ++i) m11[i * i % 11] = true;
    }
};
const Residues kRes;

bool residue_ok(std::uint64_t n) {
    if (!kRes.m64[n & 63]) return false;
    std::uint64_t r = n % (63ULL * 65 * 11);
    return kRes.m63[r % 63] && kRes.m65[r % 65] && kRes.m11[r % 11];
}

std::uint64_t isqrt_u64(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// Runs shard(i) for i in [0, n) over cfg.threads workers, in an order
// permuted by cfg.seed, and concatenates the results.
template <class T, class F>
std::vector<T> run_shards(const SearchConfig& cfg, long n, F shard) {
    std::vector<long> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0L);
    std::mt19937_64 rng(cfg.seed);
    std::shuffle(order.begin(), order.end(), rng);

    std::vector<std::vector<T>> parts(static_cast<std::size_t>(n));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k; (k = next.fetch_add(1)) < order.size();) {
            long i = order[k];
            parts[static_cast<std::size_t>(i)] = shard(i);
        }
    };
    unsigned nt = std::max(1u, cfg.threads);
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < nt; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::vector<T> out;
    for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    return out;
}

struct RawRect {
    long p, q, X, Y, Z;
};

} // namespace

bool is_square_u64(std::uint64_t n) {
    if (!residue_ok(n)) return false;
    std::uint64_t r = isqrt_u64(n);
    return r * r == n;
}

bool is_square_i128(__int128 n) {
    if (n < 0) return false;
    if (n <= static_cast<__int128>(UINT64_MAX)) return is_square_u64(static_cast<std::uint64_t>(n));
    auto u = static_cast<unsigned __int128>(n);
    if (!residue_ok(static_cast<std::uint64_t>(u % (64ULL * 63 * 65 * 11)))) return false;
    auto r = static_cast<unsigned __int128>(std::sqrt(static_cast<long double>(u)));
    while (r * r > u) --r;
    while ((r + 1) * (r + 1) <= u) ++r;
    return r * r == u;
}

void SearchConfig::validate() const {
    if (a_height <= 0 || sum_bound <= 0 || den_bound <= 0 || z_factor <= 0 || m_bound <= 0 || t_bound <= 0)
        throw InvalidArgument("search bounds must be positive");
    if (sum_bound > 20000 || den_bound > 5000 || m_bound > 100000 || t_bound > 100000)
        throw InvalidArgument("search bound too large");
}

std::string to_string(SearchKind k) {
    switch (k) {
    case SearchKind::Rect: return "rect";
    case SearchKind::Square3D: return "square3d";
    case SearchKind::CubeSurface: return "cube-surface";
    }
    return "?";
}

RectSearchResult search_rect(const SearchConfig& cfg) {
    cfg.validate();
    std::vector<std::pair<long, long>> as;
    for (long p = 2; p <= cfg.a_height; ++p)
        for (long q = 1; q < p; ++q)
            if (std::gcd(p, q) == 1) as.emplace_back(p, q);
    const long S = cfg.sum_bound;

    // One shard per Z.
    auto raws = run_shards<RawRect>(cfg, S, [&](long zi) {
        std::vector<RawRect> out;
        const long Z = zi + 1;
        for (long Y = 1; 2 * Y <= Z && Y + Z < S; ++Y)
            for (long X = 1; X + Y + Z <= S; ++X) {
                if (std::gcd(std::gcd(X, Y), Z) != 1) continue;
                // a-independent conditions first.
                auto x2 = static_cast<std::uint64_t>(X * X);
                if (!is_square_u64(x2 + static_cast<std::uint64_t>(Y * Y))) continue;
                if (!is_square_u64(x2 + static_cast<std::uint64_t>((Z - Y) * (Z - Y)))) continue;
                for (const auto& [p, q] : as) {
                    if (X * q >= p * Z) continue; // x < a
                    long d = p * Z - q * X;
                    auto d2 = static_cast<std::uint64_t>(d * d);
                    if (!is_square_u64(d2 + static_cast<std::uint64_t>(q * q * Y * Y))) continue;
                    if (!is_square_u64(d2 + static_cast<std::uint64_t>(q * q * (Z - Y) * (Z - Y)))) continue;
                    out.push_back({p, q, X, Y, Z});
                }
            }
        return out;
    });

    RectSearchResult res;
    std::set<std::tuple<Rational, Rational, Rational>> seen;
    const Rational half(1, 2);
    for (const auto& r : raws) {
        Rational a(r.p, r.q);
        auto c = canonical_rect_hit(a, Rational(r.X, r.Z), Rational(r.Y, r.Z));
        if (!seen.insert(c).second) continue;
        const auto& [A, x, y] = c;
        if (cfg.exclude_square_family && is_rational_square(A * A + 1)) {
            ++res.excluded_square_family;
            continue;
        }
        Rational P2 = x * x + y * y, Q2 = x * x + (1 - y) * (1 - y), R2 = (A - x) * (A - x) + y * y,
                 S2 = (A - x) * (A - x) + (1 - y) * (1 - y);
        bool equal = P2 == Q2 || P2 == R2 || P2 == S2 || Q2 == R2 || Q2 == S2 || R2 == S2;
        if (equal) {
            if (x.is_zero()) ++res.x_zero;
            else if (x == A / 2) ++res.x_half;
            else if (y == half) ++res.y_half;
            else ++res.other_equal;
            if (cfg.exclude_degenerate) continue;
        }
        VertexSet vs = VertexSet::rectangle(A);
        Point3 pt{x, y, 0};
        DistanceReport rep = distance_report(pt, vs);
        if (!rep.all_rational) throw ConstructionFailure("search_rect emitted a point failing the oracle");
        res.hits.push_back({SearchKind::Rect, {A, x, y}, pt, vs, rep});
    }
    std::sort(res.hits.begin(), res.hits.end(), [](const SearchHit& u, const SearchHit& v) {
        auto key = [](const SearchHit& h) {
            return std::make_tuple(height(h.witness[0]), h.witness[0], h.witness[1], h.witness[2]);
        };
        return key(u) < key(v);
    });
    return res;
}

std::vector<SearchHit> search_square3d(const SearchConfig& cfg) {
    cfg.validate();
    struct Raw {
        long X, Y, Z, D;
    };
    auto raws = run_shards<Raw>(cfg, cfg.den_bound, [&](long di) {
        std::vector<Raw> out;
        const long D = di + 1;
        for (long Y = 2; 2 * Y < D; ++Y)
            for (long X = 1; X < Y; ++X) {
                long g = std::gcd(std::gcd(X, Y), D);
                auto a = static_cast<std::uint64_t>(X * X + Y * Y),
                     b = static_cast<std::uint64_t>(X * X + (D - Y) * (D - Y)),
                     c = static_cast<std::uint64_t>((D - X) * (D - X) + Y * Y),
                     d = static_cast<std::uint64_t>((D - X) * (D - X) + (D - Y) * (D - Y));
                for (long Z = 1; Z <= cfg.z_factor * D; ++Z) {
                    if (g != 1 && std::gcd(g, Z) != 1) continue;
                    auto z2 = static_cast<std::uint64_t>(Z * Z);
                    if (is_square_u64(a + z2) && is_square_u64(b + z2) && is_square_u64(c + z2) &&
                        is_square_u64(d + z2))
                        out.push_back({X, Y, Z, D});
                }
            }
        return out;
    });
    std::vector<SearchHit> hits;
    for (const auto& r : raws) {
        Point3 p{Rational(r.X, r.D), Rational(r.Y, r.D), Rational(r.Z, r.D)};
        VertexSet vs = VertexSet::unit_square();
        DistanceReport rep = distance_report(p, vs);
        if (!rep.all_rational) throw ConstructionFailure("search_square3d emitted a point failing the oracle");
        hits.push_back({SearchKind::Square3D, {p.x, p.y, p.z}, p, vs, rep});
    }
    std::sort(hits.begin(), hits.end(), [](const SearchHit& u, const SearchHit& v) { return u.point < v.point; });
    return hits;
}

std::vector<SearchHit> search_cube_surface(const SearchConfig& cfg) {
    cfg.validate();
    struct Raw {
        long m, t, U;
    };
    const long M = cfg.m_bound;
    auto raws = run_shards<Raw>(cfg, 2 * M + 1, [&](long mi) {
        std::vector<Raw> out;
        const long m = mi - M;
        const __int128 m2 = static_cast<__int128>(m) * m, c = (1 - m2) * (1 - m2), e = (1 + m2) * (1 + m2);
        for (long t = 1; t <= cfg.t_bound; ++t) {
            const __int128 t2 = static_cast<__int128>(t) * t;
            __int128 L = 2 * (t2 - 8 * m2) * (2 * c - t2);
            if (!is_square_i128(L)) continue;
            auto s = static_cast<__int128>(std::sqrt(static_cast<long double>(L)));
            while (s * s > L) --s;
            while ((s + 1) * (s + 1) <= L) ++s;
            std::set<long> Us;
            for (__int128 u2 : {t2 + e - s, t2 + e + s}) {
                if (!is_square_i128(u2)) continue;
                auto U = static_cast<long>(std::sqrt(static_cast<long double>(u2)));
                while (static_cast<__int128>(U) * U > u2) --U;
                while (static_cast<__int128>(U + 1) * (U + 1) <= u2) ++U;
                if (Us.insert(U).second) out.push_back({m, t, U});
            }
        }
        return out;
    });
    std::vector<SearchHit> hits;
    for (const auto& r : raws) {
        Rational m(r.m), t(r.t), U(r.U), t2 = t * t;
        Rational x = Rational(1, 2) - 2 * m * (1 - m * m) / t2;
        Rational z = (t2 + pow(1 + m * m, 2) - U * U) / (2 * t2);
        Point3 p{x, x, z};
        VertexSet vs = VertexSet::cube_six_diag();
        DistanceReport rep = distance_report(p, vs);
        if (!rep.all_rational) throw ConstructionFailure("search_cube_surface emitted a point failing the oracle");
        hits.push_back({SearchKind::CubeSurface, {m, t, U}, p, vs, rep});
    }
    std::sort(hits.begin(), hits.end(),
              [](const SearchHit& u, const SearchHit& v) { return u.witness < v.witness; });
    return hits;
}

} // namespace ratdist
