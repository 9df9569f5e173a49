#include "ratdist/errors.hpp"
#include "ratdist/families.hpp"

#include <set>

namespace ratdist {

namespace {

const VarList kT{"t"};

Rational cube_a(const Rational& t) {
    if (t.is_zero() || t == 1 || t == -1) throw InvalidArgument("t must avoid 0 and +-1");
    return (t * t + 1) / (2 * t);
}

const char* kYNum =
    "t^48 - 8*t^47 + 20*t^46 + 8*t^45 - 24*t^44 - 1528*t^43 + 6684*t^42 - 4872*t^41 - 69302*t^40"
    " + 96040*t^39 + 771532*t^38 - 2467368*t^37 - 4047800*t^36 + 22047704*t^35 + 12635044*t^34"
    " - 107433944*t^33 - 23948593*t^32 + 342788016*t^31 + 24622088*t^30 - 780080048*t^29"
    " - 638000*t^28 + 1324015696*t^27 - 37969832*t^26 - 1716035152*t^25 + 57538508*t^24"
    " + 1716035152*t^23 - 37969832*t^22 - 1324015696*t^21 - 638000*t^20 + 780080048*t^19"
    " + 24622088*t^18 - 342788016*t^17 - 23948593*t^16 + 107433944*t^15 + 12635044*t^14"
    " - 22047704*t^13 - 4047800*t^12 + 2467368*t^11 + 771532*t^10 - 96040*t^9 - 69302*t^8"
    " + 4872*t^7 + 6684*t^6 + 1528*t^5 - 24*t^4 - 8*t^3 + 20*t^2 + 8*t + 1";
const char* kZNum =
    "3*t^48 - 16*t^47 + 56*t^46 - 32*t^45 + 1096*t^44 - 5696*t^43 + 15928*t^42 + 11472*t^41"
    " + 51710*t^40 - 551056*t^39 + 1282392*t^38 + 3181248*t^37 - 11188440*t^36 - 701152*t^35"
    " + 39387992*t^34 - 55013168*t^33 - 75669523*t^32 + 272885472*t^31 + 75471984*t^30"
    " - 744371648*t^29 + 210064*t^28 + 1377115648*t^27 - 116092816*t^26 - 1850031968*t^25"
    " + 173321252*t^24 + 1850031968*t^23 - 116092816*t^22 - 1377115648*t^21 + 210064*t^20"
    " + 744371648*t^19 + 75471984*t^18 - 272885472*t^17 - 75669523*t^16 + 55013168*t^15"
    " + 39387992*t^14 + 701152*t^13 - 11188440*t^12 - 3181248*t^11 + 1282392*t^10"
    " + 551056*t^9 + 51710*t^8 - 11472*t^7 + 15928*t^6 + 5696*t^5 + 1096*t^4 + 32*t^3 + 56*t^2"
    " + 16*t + 3";
const char* kDelta =
    "4*(t - 1)*(t + 1)*(t^2 + 1)^2*(t^8 - 4*t^7 + 10*t^6 + 12*t^5 - 14*t^4 - 12*t^3 + 10*t^2 + 4*t + 1)"
    "*(t^16 - 4*t^14 + 168*t^12 - 492*t^10 + 718*t^8 - 492*t^6 + 168*t^4 - 4*t^2 + 1)"
    "*(t^16 + 4*t^14 - 32*t^13 + 232*t^12 + 160*t^11 - 756*t^10 - 320*t^9 + 1102*t^8 + 320*t^7"
    " - 756*t^6 - 160*t^5 + 232*t^4 + 32*t^3 + 4*t^2 + 1)";

} // namespace

QuarticCurve cube_six_quartic(const Rational& t) {
    Rational a = cube_a(t), a2 = a * a;
    std::array<Rational, 5> c{a2 * (3 * a2 * a2 - 6 * a2 + 2), 2 * a2 * (3 * a2 - 2), -pow(2 * a2 - 1, 2),
                              -2 * (a2 - 1), a2 - 1};
    return QuarticCurve::with_infinity(c, (t * t - 1) / (2 * t));
}

ECurve cube_six_curve(const Rational& t) {
    Rational t4 = pow(t, 4);
    auto P = [&](std::initializer_list<long> cs) {
        Rational s = 0;
        for (long c : cs) s = s * t4 + c;
        return s;
    };
    return ECurve::short_form(-108 * P({13, -20, 78, -20, 13}), 864 * P({23, -132, 129, -296, 129, -132, 23}));
}

ECPoint cube_six_Z(const Rational& t) {
    Rational t2 = t * t;
    return ECPoint::affine(12 * (2 * pow(t, 8) + 3 * pow(t, 6) - 2 * pow(t, 4) + 3 * t2 + 2),
                           108 * t * (t2 + 1) * (pow(t, 8) - 1));
}

std::pair<RatFunc, RatFunc> cube_six_printed() {
    return {RatFunc::parse(std::string("(") + kYNum + ")/(2*t*" + kDelta + ")", kT),
            RatFunc::parse(std::string("(") + kZNum + ")/((t^2 - 1)*" + kDelta + ")", kT)};
}

// The displayed y carries the wrong sign: 1/4 + (1-y)^2 + z^2 is a square
// only after y -> -y.
ParamFamily cube_six_family_symbolic() {
    auto [y, z] = cube_six_printed();
    ParamFamily f;
    f.name = "cube-six";
    f.params = kT;
    f.coords = {{"x", RatFunc::constant(kT, Rational(1, 2))}, {"y", -y}, {"z", z}};
    f.target = "cube-six-half";
    f.target_at = [](const Params&) { return VertexSet::cube_six_half(); };
    f.excluded = {"t in {0, 1, -1}", "Delta(t) = 0"};
    return f;
}

Point3 cube_six_family(const Rational& t) {
    static const ParamFamily f = cube_six_family_symbolic();
    return f.eval({{"t", t}});
}

std::vector<Point3> cube_six_generate(const Rational& t, int m) {
    if (m < 1) throw InvalidArgument("m must be at least 1");
    if (m > 64) throw InvalidArgument("m must be at most 64");
    Rational a = cube_a(t), a2 = a * a;
    ECurve E = cube_six_curve(t);
    QuarticModel M = quartic_to_cubic(cube_six_quartic(t));
    auto iso = find_isomorphism(E, M.curve());
    if (!iso) throw ConstructionFailure("quartic model is not isomorphic to E'");
    ECPoint Z = cube_six_Z(t);
    if (!ec_on_curve(E, Z)) throw ConstructionFailure("Z is not on E'");
    ECPoint mZ = ec_mul(E, m, Z);
    std::vector<Point3> out;
    std::set<Point3> seen;
    for (const ECPoint& S : {mZ, ec_neg(E, mZ)}) {
        auto back = M.backward((*iso)(S));
        if (!back) continue;
        const auto& [q, W] = *back;
        // W = (q^4 - 2(a^2+1)q^2 + 3a^4 + 2) p / 2 + q^3 - q^2 - (a^2+1)q + 2.
        Rational lin = (pow(q, 4) - 2 * (a2 + 1) * q * q + 3 * a2 * a2 + 2) / 2;
        if (lin.is_zero()) continue;
        Rational p = (W - (pow(q, 3) - q * q - (a2 + 1) * q + 2)) / lin;
        if (p.is_zero()) continue;
        Rational P = p + 1, Q = p * q + 1, T2 = a2 * p * p;
        Point3 pt{Rational(1, 2), (P * P - Q * Q + T2) / (2 * T2), (P * P - 1 + T2) / (2 * T2)};
        if (distance_report(pt, VertexSet::cube_six_half()).all_rational && seen.insert(pt).second) out.push_back(pt);
    }
    return out;
}

std::vector<LabelledPoint> cube_known_points() {
    struct Row {
        const char* label;
        Point3 p;
        VertexSet vs;
        std::vector<Rational> printed;
    };
    const std::vector<Row> rows{
        {"x=y plane (31/108)", {Rational(31, 108), Rational(31, 108), Rational(1519, 1080)}, VertexSet::cube_six_diag(), {}},
        {"x=y plane (77/108)", {Rational(77, 108), Rational(77, 108), Rational(1519, 1080)}, VertexSet::cube_six_diag(), {}},
        {"five vertices, row 1",
         {Rational(77, 108), Rational(41, 27), Rational(-28, 27)},
         VertexSet::cube_five(),
         {Rational(71, 36), Rational(67, 36), Rational(49, 36), Rational(43, 36), Rational(95, 36)}},
        {"five vertices, row 2",
         {Rational(83, 125), Rational(-49, 500), Rational(-14, 75)},
         VertexSet::cube_five(),
         {Rational(389, 300), Rational(349, 300), Rational(209, 300), Rational(119, 300), Rational(409, 300)}},
    };
    std::vector<LabelledPoint> out;
    for (const auto& r : rows) out.push_back({r.label, r.p, r.vs, distance_report(r.p, r.vs), r.printed});
    return out;
}

} // namespace ratdist
