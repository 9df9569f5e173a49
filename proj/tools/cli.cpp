#include "cli.hpp"

#include "ratdist/errors.hpp"
#include "ratdist/families.hpp"
#include "ratdist/search.hpp"
#include "ratdist/tables.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <thread>

namespace ratdist::cli {

namespace {

using json = nlohmann::ordered_json;

// Usage or configuration problem detected after parsing.
struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// What a command produces: a JSON document, the same data as a flat table
// for csv/text, and whether every check passed.
struct Output {
    json doc = json::object();
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    bool ok = true;
};

std::string q(const Rational& r) { return r.str(); }

json point_json(const Point3& p) { return json::array({q(p.x), q(p.y), q(p.z)}); }

json report_json(const DistanceReport& r) {
    json e = json::array();
    for (const auto& d : r.entries)
        e.push_back({{"vertex", point_json(d.vertex)},
                     {"dist2", q(d.dist2)},
                     {"root", d.root ? json(q(*d.root)) : json(nullptr)}});
    return {{"all_rational", r.all_rational}, {"count_rational", r.count_rational}, {"entries", e}};
}

std::string yes(bool b) { return b ? "yes" : "no"; }

Rational parse_rat(const std::string& s, const std::string& what) {
    try {
        return Rational::parse(s);
    } catch (const Error&) {
        throw Usage("bad rational for " + what + ": '" + s + "'");
    }
}

std::vector<Rational> parse_list(const std::string& s, char sep, const std::string& what) {
    std::vector<Rational> out;
    std::size_t start = 0;
    while (true) {
        std::size_t k = s.find(sep, start);
        out.push_back(parse_rat(s.substr(start, k == std::string::npos ? k : k - start), what));
        if (k == std::string::npos) break;
        start = k + 1;
    }
    return out;
}

Point3 parse_point(const std::string& s, const std::string& what) {
    auto v = parse_list(s, ',', what);
    if (v.size() != 3) throw Usage(what + " needs three coordinates");
    return {v[0], v[1], v[2]};
}

// Four vertices, first the origin: "x,y,z;x,y,z;x,y,z;x,y,z".
Tetrahedron parse_tetra_inline(const std::string& s) {
    Tetrahedron t;
    std::size_t start = 0;
    for (int i = 0; i < 4; ++i) {
        std::size_t k = s.find(';', start);
        if ((k == std::string::npos) != (i == 3)) throw Usage("--vertices needs four points separated by ';'");
        t[static_cast<std::size_t>(i)] = parse_point(s.substr(start, k == std::string::npos ? k : k - start), "--vertices");
        start = k + 1;
    }
    return t;
}

// JSON file: [[x,y,z] x4] or {"vertices": [...]}, entries "p/q" strings or integers.
Tetrahedron read_tetra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Usage("cannot open " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw Usage(path + ": " + e.what());
    }
    if (j.is_object()) j = j.value("vertices", json());
    if (!j.is_array() || j.size() != 4) throw Usage(path + ": expected four vertices");
    Tetrahedron t;
    for (std::size_t i = 0; i < 4; ++i) {
        const json& v = j[i];
        if (!v.is_array() || v.size() != 3) throw Usage(path + ": each vertex needs three coordinates");
        std::array<Rational, 3> c;
        for (std::size_t k = 0; k < 3; ++k)
            c[k] = parse_rat(v[k].is_string() ? v[k].get<std::string>() : v[k].dump(), path);
        t[i] = {c[0], c[1], c[2]};
    }
    return t;
}

Tetrahedron tetra_from(const std::string& file, const std::string& inline_vertices) {
    if (!file.empty() && !inline_vertices.empty()) throw Usage("give either --file or --vertices");
    if (!file.empty()) return read_tetra_file(file);
    if (!inline_vertices.empty()) return parse_tetra_inline(inline_vertices);
    throw Usage("a tetrahedron is required (--file or --vertices)");
}

VertexSet parse_target(const std::string& t) {
    if (t == "square3d") return VertexSet::unit_square();
    if (t == "cube") return VertexSet::unit_cube();
    if (t == "cube-five") return VertexSet::cube_five();
    if (t == "cube-six-half") return VertexSet::cube_six_half();
    if (t == "cube-six-diag") return VertexSet::cube_six_diag();
    if (t.rfind("rect:", 0) == 0) return VertexSet::rectangle(parse_rat(t.substr(5), "rect:a"));
    if (t.rfind("tetra:", 0) == 0) return VertexSet::tetrahedron(read_tetra_file(t.substr(6)));
    throw Usage("unknown target '" + t + "'");
}

void add_point_row(Output& o, const Point3& p, const DistanceReport& r, std::vector<std::string> lead = {}) {
    lead.insert(lead.end(), {q(p.x), q(p.y), q(p.z), std::to_string(r.count_rational), yes(r.all_rational)});
    o.rows.push_back(std::move(lead));
    o.ok = o.ok && r.all_rational;
}

// ---- verify --------------------------------------------------------------------

Output verify_table_cmd(int id) {
    TableReport rep = verify_table(id);
    Output o;
    o.doc["table"] = id;
    o.header = {"x", "y", "z", "rational", "pass"};
    if (id == 1) o.header.insert(o.header.begin(), "a");
    json rows = json::array();
    for (const auto& c : rep.rows) {
        json r{{"point", point_json(c.row.point)}, {"vertices", c.row.vertices.describe()}};
        if (id == 1) r["a"] = q(c.row.vertices.a);
        r["report"] = report_json(c.report);
        if (!c.row.printed.empty()) {
            json pr = json::array();
            for (const auto& d : c.row.printed) pr.push_back(q(d));
            r["printed"] = pr;
            r["printed_match"] = c.printed_match;
        }
        r["pass"] = c.pass;
        rows.push_back(r);
        std::vector<std::string> row{q(c.row.point.x), q(c.row.point.y), q(c.row.point.z),
                                     std::to_string(c.report.count_rational), yes(c.pass)};
        if (id == 1) row.insert(row.begin(), q(c.row.vertices.a));
        o.rows.push_back(row);
    }
    o.doc["rows"] = rows;
    o.doc["passed"] = rep.passed;
    o.doc["total"] = rep.rows.size();
    o.ok = rep.all_pass();
    return o;
}

Output verify_point_cmd(const std::string& xyz, const std::string& target) {
    Point3 p = parse_point(xyz, "--xyz");
    VertexSet vs = parse_target(target);
    DistanceReport r = distance_report(p, vs);
    Output o;
    o.doc = {{"point", point_json(p)}, {"target", vs.describe()}, {"report", report_json(r)}};
    o.header = {"vertex", "dist2", "root"};
    for (const auto& e : r.entries)
        o.rows.push_back({e.vertex.str(), q(e.dist2), e.root ? q(*e.root) : "-"});
    o.ok = r.all_rational;
    return o;
}

// ---- search ------------------------------------------------------------------

json hit_json(const SearchHit& h) {
    json w = json::array();
    for (const auto& r : h.witness) w.push_back(q(r));
    return {{"kind", to_string(h.kind)},
            {"witness", w},
            {"point", point_json(h.point)},
            {"vertices", h.vertices.describe()},
            {"report", report_json(h.report)}};
}

Output search_cmd(const std::string& kind, const SearchConfig& cfg, std::ostream& err) {
    Output o;
    auto t0 = std::chrono::steady_clock::now();
    err << "search " << kind << " on " << cfg.threads << " thread(s)\n";
    std::vector<SearchHit> hits;
    if (kind == "rect") {
        RectSearchResult r = search_rect(cfg);
        hits = std::move(r.hits);
        o.doc["degenerate"] = {{"x_zero", r.x_zero}, {"x_half", r.x_half}, {"y_half", r.y_half},
                               {"other", r.other_equal}};
        o.doc["excluded_square_family"] = r.excluded_square_family;
        o.header = {"a", "x", "y"};
    } else if (kind == "square3d") {
        hits = search_square3d(cfg);
        o.header = {"x", "y", "z"};
    } else {
        hits = search_cube_surface(cfg);
        o.header = {"m", "t", "U"};
    }
    json arr = json::array();
    for (const auto& h : hits) {
        arr.push_back(hit_json(h));
        o.rows.push_back({q(h.witness[0]), q(h.witness[1]), q(h.witness[2])});
        // Independent re-check of every emitted hit.
        o.ok = o.ok && distance_report(h.point, h.vertices).all_rational;
    }
    o.doc["kind"] = kind;
    o.doc["hits"] = arr;
    err << hits.size() << " hit(s) in "
        << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() << " s\n";
    return o;
}

// ---- family ------------------------------------------------------------------

struct FamilyArgs {
    std::map<std::string, std::string> given;
    Rational get(const std::string& name) const {
        auto it = given.find(name);
        if (it == given.end() || it->second.empty()) throw Usage("--" + name + " is required");
        return parse_rat(it->second, "--" + name);
    }
    Rational get_or(const std::string& name, const Rational& dflt) const {
        auto it = given.find(name);
        return it == given.end() || it->second.empty() ? dflt : parse_rat(it->second, "--" + name);
    }
};

Output point_output(const std::string& name, const json& params, const Point3& p, const VertexSet& vs) {
    Output o;
    DistanceReport r = distance_report(p, vs);
    o.doc = {{"family", name}, {"params", params}, {"point", point_json(p)}, {"target", vs.describe()},
             {"report", report_json(r)}};
    o.header = {"x", "y", "z", "rational", "pass"};
    add_point_row(o, p, r);
    return o;
}

Output family_cmd(const std::string& name, const FamilyArgs& a) {
    json params = json::object();
    auto P = [&](const std::string& n) {
        Rational v = a.get(n);
        params[n] = q(v);
        return v;
    };
    if (name == "rect") {
        Rational t = P("t"), u = P("u"), v = P("v");
        RectPoint rp = rect_family(t, u, v);
        Output o = point_output(name, params, rp.point, VertexSet::rectangle(rp.a));
        o.doc["a"] = q(rp.a);
        return o;
    }
    if (name == "sqrt2") {
        Rational u = P("u"), w = a.get_or("w", 0);
        params["w"] = q(w);
        Sqrt2Point s = rect_sqrt2_family(QuadElem(u, w, 2));
        Output o;
        const std::array<std::pair<long, long>, 4> vs{{{0, 0}, {0, 1}, {1, 0}, {1, 1}}};
        json d = json::array();
        o.header = {"vertex", "distance", "pass"};
        for (std::size_t i = 0; i < 4; ++i) {
            QuadElem dx = s.x - Rational(vs[i].first), dy = s.y - Rational(vs[i].second);
            bool pass = s.dist[i] * s.dist[i] == dx * dx + dy * dy;
            o.ok = o.ok && pass;
            d.push_back(s.dist[i].str());
            o.rows.push_back({"(" + std::to_string(vs[i].first) + ", " + std::to_string(vs[i].second) + ")",
                              s.dist[i].str(), yes(pass)});
        }
        o.doc = {{"family", name}, {"params", params}, {"x", s.x.str()}, {"y", s.y.str()}, {"distances", d}};
        return o;
    }
    if (name == "line") {
        Rational u = P("u");
        return point_output(name, params, axis_line_family(u), VertexSet::unit_square());
    }
    if (name == "half-plane") {
        Rational u = P("u"), v = P("v");
        return point_output(name, params, half_plane_point(u, v).point, VertexSet::unit_square());
    }
    if (name == "diag") {
        Rational k = P("k");
        return point_output(name, params, diag_plane_family(k), VertexSet::unit_square());
    }
    if (name == "square3d") {
        Rational t = P("t");
        static const TangentConstruction tc = square3d_tangent_construct(2, Rational(1, 12), Rational(19, 36),
                                                                         Rational(7, 27));
        return point_output(name, params, tc.family.eval({{"t", t}}), VertexSet::unit_square());
    }
    Rational t = P("t");
    return point_output(name, params, cube_six_family(t), VertexSet::cube_six_half());
}

// ---- generate ------------------------------------------------------------------

Output generate_cmd(const std::string& kind, const FamilyArgs& a, int n) {
    Output o;
    o.header = {"x", "y", "z", "rational", "pass"};
    json pts = json::array();
    auto emit = [&](const Point3& p, const VertexSet& vs, json extra = json::object()) {
        DistanceReport r = distance_report(p, vs);
        extra["point"] = point_json(p);
        extra["pass"] = r.all_rational;
        pts.push_back(extra);
        add_point_row(o, p, r);
    };
    if (kind == "interior-rect") {
        Rational t = a.get("t");
        o.header.insert(o.header.begin(), {"a", "interior"});
        for (const auto& [U, V] : interior_rect_generate(t, n)) {
            ShuteYocom sy;
            try {
                sy = shute_yocom_point(U, V);
            } catch (const InvalidArgument&) {
                continue;
            }
            DistanceReport r = distance_report(sy.point, VertexSet::rectangle(sy.a));
            pts.push_back({{"U", q(U)}, {"V", q(V)}, {"a", q(sy.a)}, {"point", point_json(sy.point)},
                           {"interior", sy.interior}, {"pass", r.all_rational}});
            add_point_row(o, sy.point, r, {q(sy.a), yes(sy.interior)});
        }
    } else if (kind == "diag") {
        Rational k = a.get("k");
        for (const auto& p : diag_plane_generate(k, n)) emit(p, VertexSet::unit_square());
    } else {
        Rational t = a.get("t");
        std::set<Point3> seen;
        for (int m = 1; m <= n; ++m)
            for (const auto& p : cube_six_generate(t, m))
                if (seen.insert(p).second) emit(p, VertexSet::cube_six_half(), {{"multiple", m}});
    }
    o.doc = {{"kind", kind}, {"n", n}, {"points", pts}};
    return o;
}

// ---- tetra -------------------------------------------------------------------

json tetra_json(const Tetrahedron& t) {
    json j = json::array();
    for (const auto& p : t) j.push_back(point_json(p));
    return j;
}

Output tetra_construct_cmd(const Tetrahedron& tet, int samples, std::uint64_t seed) {
    TetraConstruction tc = tetra_construct(tet);
    Output o;
    json fam = json::object();
    for (const auto& [n, f] : tc.family.coords) fam[n] = f.str();
    o.header = {"q1", "q2", "q3", "x", "y", "z", "rational", "pass"};
    json pts = json::array();
    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
    VertexSet vs = VertexSet::tetrahedron(tet);
    for (int i = 0, got = 0; got < samples && i < 50 * std::max(samples, 1); ++i) {
        Params at;
        for (const char* v : {"q1", "q2", "q3"}) at[v] = Rational(num(gen), den(gen));
        Point3 p;
        try {
            p = tc.family.eval(at);
        } catch (const EvaluationAtPole&) {
            continue;
        } catch (const DivisionByZero&) {
            continue;
        }
        ++got;
        DistanceReport r = distance_report(p, vs);
        pts.push_back({{"q", {q(at["q1"]), q(at["q2"]), q(at["q3"])}}, {"point", point_json(p)},
                       {"report", report_json(r)}});
        add_point_row(o, p, r, {q(at["q1"]), q(at["q2"]), q(at["q3"])});
    }
    o.doc = {{"tetrahedron", tetra_json(tet)}, {"det", q(tc.trace.detA)}, {"family", fam}, {"samples", pts}};
    return o;
}

Output tetra_singular_cmd(const Tetrahedron& tet) {
    MultiPoly F = tetra_quartic(tet);
    Output o;
    o.header = {"label", "R0", "R1", "R2", "R3", "R4", "singular"};
    json arr = json::array();
    for (const auto& s : tetra_singular_points(tet)) {
        std::map<std::string, Rational> at;
        for (std::size_t i = 0; i < 5; ++i) at["R" + std::to_string(i)] = s.R[i];
        bool ok = F.eval(at).is_zero();
        for (std::size_t i = 0; i < 5; ++i) ok = ok && F.partial("R" + std::to_string(i)).eval(at).is_zero();
        o.ok = o.ok && ok;
        json R = json::array();
        std::vector<std::string> row{s.label};
        for (const auto& r : s.R) {
            R.push_back(q(r));
            row.push_back(q(r));
        }
        row.push_back(yes(ok));
        o.rows.push_back(row);
        arr.push_back({{"label", s.label}, {"R", R}, {"singular", ok}});
    }
    o.doc = {{"tetrahedron", tetra_json(tet)}, {"points", arr}};
    return o;
}

Output tetra_heron_cmd(const Rational& m) {
    HeronTetraReport h = heron_tetra(m);
    Output o;
    json edges = json::array(), areas = json::array();
    for (const auto& e : h.edges) edges.push_back(q(e));
    for (const auto& a : h.face_area_sq) areas.push_back(q(a));
    o.doc = {{"m", q(m)},
             {"tetrahedron", tetra_json(h.tet)},
             {"edges", edges},
             {"pqr", {q(h.p), q(h.q), q(h.r)}},
             {"edges_match", h.edges_match},
             {"three_equal_pairs", h.three_equal_pairs},
             {"face_area_sq", areas},
             {"printed_area", q(h.printed_area)},
             {"areas_match", h.areas_match},
             {"volume_sq", q(h.volume_sq)},
             {"printed_volume", q(h.printed_volume)},
             {"volume_match", h.volume_match}};
    o.header = {"check", "pass"};
    o.rows = {{"edges", yes(h.edges_match)},
              {"three_equal_pairs", yes(h.three_equal_pairs)},
              {"face_areas", yes(h.areas_match)},
              {"volume", yes(h.volume_match)}};
    o.ok = h.edges_match && h.three_equal_pairs && h.areas_match && h.volume_match;
    return o;
}

// ---- audit -------------------------------------------------------------------

Output audit_cmd() {
    Prop31Audit a = audit_prop31();
    Output o;
    o.header = {"family", "u", "z", "pass"};
    auto rows = [&](const std::string& name, const std::vector<AuditRow>& rs) {
        json arr = json::array();
        for (const auto& r : rs) {
            arr.push_back({{"u", q(r.u)}, {"point", point_json(r.point)}, {"pass", r.passes}});
            o.rows.push_back({name, q(r.u), q(r.point.z), yes(r.passes)});
        }
        return arr;
    };
    o.doc = {{"printed", {{"condition", a.printed_condition}, {"family", a.printed_family}, {"passed", a.printed_pass},
                          {"rows", rows("printed", a.printed)}}},
             {"corrected", {{"condition", a.corrected_condition}, {"family", a.corrected_family},
                            {"passed", a.corrected_pass}, {"rows", rows("corrected", a.corrected)}}}};
    // The audit passes when it reproduces its finding.
    o.ok = a.printed_pass == 0 && a.corrected_pass == static_cast<int>(a.corrected.size());
    return o;
}

// ---- output ------------------------------------------------------------------

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string r = "\"";
    for (char c : s) r += c == '"' ? std::string("\"\"") : std::string(1, c);
    return r + "\"";
}

void render(const Output& o, const std::string& format, std::ostream& out) {
    if (format == "json") {
        out << o.doc.dump(2) << "\n";
        return;
    }
    const char* sep = format == "csv" ? "," : "  ";
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            out << (i ? sep : "") << (format == "csv" ? csv_field(cells[i]) : cells[i]);
        out << "\n";
    };
    line(o.header);
    for (const auto& r : o.rows) line(r);
}

unsigned default_threads() {
    if (const char* e = std::getenv("RATDIST_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(e, &end, 10);
        if (end && *end == '\0' && v > 0 && v <= 1024) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

} // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rational distance toolkit", "ratdist-cli"};
    app.require_subcommand(1);
    std::string format = "text";
    std::uint64_t seed = 0;
    unsigned threads = default_threads();
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--seed", seed, "Seed for random specializations and shard order");

    // verify
    auto* verify = app.add_subcommand("verify", "Check tables or a single point")->require_subcommand(1);
    verify->fallthrough();
    int table_id = 0;
    auto* vtable = verify->add_subcommand("table", "Verify a built-in table")->fallthrough();
    vtable->add_option("id", table_id, "Table number")->required()->check(CLI::Range(1, 3));
    std::string xyz, target;
    auto* vpoint = verify->add_subcommand("point", "Distances from a point to a vertex set")->fallthrough();
    vpoint->add_option("--xyz", xyz, "x,y,z as p/q")->required();
    vpoint->add_option("--target", target,
                       "square3d | cube | cube-five | cube-six-half | cube-six-diag | rect:<a> | tetra:<file>")
        ->required();

    // search
    SearchConfig cfg;
    std::string search_kind;
    bool keep_degenerate = false, keep_square_family = false;
    auto* search = app.add_subcommand("search", "Exhaustive search in a box")->fallthrough();
    search->add_option("kind", search_kind)->required()->check(CLI::IsMember({"rect", "square3d", "cube-surface"}));
    search->add_option("--a-height", cfg.a_height, "rect: height bound for a")->capture_default_str();
    search->add_option("--sum", cfg.sum_bound, "rect: X + Y + Z bound")->capture_default_str();
    search->add_option("--den", cfg.den_bound, "square3d: denominator bound")->capture_default_str();
    search->add_option("--z-factor", cfg.z_factor, "square3d: z <= z-factor")->capture_default_str();
    search->add_option("--m", cfg.m_bound, "cube-surface: |m| bound")->capture_default_str();
    search->add_option("--t", cfg.t_bound, "cube-surface: t bound")->capture_default_str();
    search->add_option("--threads", threads, "Worker threads (default RATDIST_THREADS or all cores)");
    search->add_flag("--keep-degenerate", keep_degenerate, "rect: keep hits with equal distances");
    search->add_flag("--keep-square-family", keep_square_family, "rect: keep a with a^2 + 1 a square");

    // family and generate share named parameters
    FamilyArgs fargs;
    std::string family_name;
    auto* family = app.add_subcommand("family", "Evaluate a parametric family")->fallthrough();
    family->add_option("name", family_name)
        ->required()
        ->check(CLI::IsMember({"rect", "sqrt2", "line", "half-plane", "diag", "square3d", "cube-six"}));
    for (const char* p : {"t", "u", "v", "w", "k"})
        family->add_option(std::string("--") + p, fargs.given[p], std::string("parameter ") + p);

    std::string gen_kind;
    int gen_n = 3;
    FamilyArgs gargs;
    auto* generate = app.add_subcommand("generate", "Points from multiples on an elliptic curve")->fallthrough();
    generate->add_option("kind", gen_kind)->required()->check(CLI::IsMember({"interior-rect", "diag", "cube-six"}));
    generate->add_option("--n", gen_n, "Largest multiple")->check(CLI::Range(1, 64))->capture_default_str();
    for (const char* p : {"t", "k"}) generate->add_option(std::string("--") + p, gargs.given[p]);

    // tetra
    auto* tetra = app.add_subcommand("tetra", "Tetrahedron pipelines")->require_subcommand(1)->fallthrough();
    std::string tfile, tverts, heron_m;
    int samples = 10;
    auto* tcons = tetra->add_subcommand("construct", "Three-parameter family for a tetrahedron")->fallthrough();
    tcons->add_option("--file", tfile, "JSON file with four vertices, the first the origin");
    tcons->add_option("--vertices", tverts, "x,y,z;x,y,z;x,y,z;x,y,z");
    tcons->add_option("--samples", samples, "Random specializations to check")->check(CLI::Range(0, 1000));
    auto* tsing = tetra->add_subcommand("singular", "The 40 singular points")->fallthrough();
    tsing->add_option("--file", tfile);
    tsing->add_option("--vertices", tverts);
    auto* theron = tetra->add_subcommand("heron", "Heron tetrahedron family")->fallthrough();
    theron->add_option("--m", heron_m, "Parameter m")->required();

    // audit
    auto* audit = app.add_subcommand("audit", "Audits of printed formulas")->require_subcommand(1)->fallthrough();
    auto* prop31 = audit->add_subcommand("prop31", "Axis line family against the oracle")->fallthrough();

    std::vector<std::string> argv_s{"ratdist-cli"};
    argv_s.insert(argv_s.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_s) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        Output o;
        if (*vtable) {
            o = verify_table_cmd(table_id);
        } else if (*vpoint) {
            o = verify_point_cmd(xyz, target);
        } else if (*search) {
            cfg.threads = threads;
            cfg.seed = seed;
            cfg.exclude_degenerate = !keep_degenerate;
            cfg.exclude_square_family = !keep_square_family;
            cfg.validate();
            o = search_cmd(search_kind, cfg, err);
        } else if (*family) {
            o = family_cmd(family_name, fargs);
        } else if (*generate) {
            o = generate_cmd(gen_kind, gargs, gen_n);
        } else if (*tcons) {
            o = tetra_construct_cmd(tetra_from(tfile, tverts), samples, seed);
        } else if (*tsing) {
            o = tetra_singular_cmd(tetra_from(tfile, tverts));
        } else if (*theron) {
            o = tetra_heron_cmd(parse_rat(heron_m, "--m"));
        } else if (*prop31) {
            o = audit_cmd();
        }
        render(o, format, out);
        if (!o.ok) err << "verification failed\n";
        return o.ok ? 0 : 2;
    } catch (const ConstructionFailure& e) {
        err << "verification failed: " << e.what() << "\n";
        return 2;
    } catch (const Usage& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace ratdist::cli
