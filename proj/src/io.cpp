#include "hcp/io.h"

#include <openssl/evp.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include <json.hpp>

#include "hcp/errors.h"
#include "hcp/oracle.h"
#include "hcp/structured_pack.h"

namespace hcp {

namespace {

using json = nlohmann::ordered_json;

constexpr Coord kRadius = 1'000'000;

// Uniform in [0, bound) by rejection; stable across standard libraries.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do x = rng();
    while (x >= limit);
    return x % bound;
}

Coord draw_between(std::mt19937_64& rng, Coord lo, Coord hi) {
    return lo + static_cast<Coord>(draw_below(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

Point on_circle(int i, int m) {
    double a = 2.0 * std::numbers::pi * i / m;
    return {std::llround(kRadius * std::cos(a)), std::llround(kRadius * std::sin(a))};
}

bool valid(const PointSet& ps) {
    try {
        ps.validate();
        return true;
    } catch (const Error&) {
        return false;
    }
}

InstanceFile generate_convex(int n, std::uint64_t seed) {
    if (n < 3) throw Error(Errc::InvalidN, "convex instances need n >= 3");
    // Keep each vertex well inside the band where its neighbours' chord
    // cannot swallow it.
    double depth = kRadius * (1.0 - std::cos(2.0 * std::numbers::pi / n));
    Coord guard = static_cast<Coord>(depth / 8);
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 100; ++attempt) {
        PointSet ps;
        ps.config = Config::Convex;
        for (int i = 0; i < n; ++i) {
            Point p = on_circle(i, n);
            p.x += draw_between(rng, -guard, guard);
            p.y += draw_between(rng, -guard, guard);
            ps.points.push_back(p);
        }
        if (valid(ps)) return {ps, seed};
    }
    throw Error(Errc::InvalidN, "no convex position on the grid for n = " + std::to_string(n));
}

InstanceFile generate_wheel(int n, std::uint64_t seed) {
    if (n < 4 || n % 2 != 0) throw Error(Errc::InvalidN, "wheel instances need even n >= 4");
    PointSet ps;
    ps.config = Config::Wheel;
    for (int i = 0; i + 1 < n; ++i) ps.points.push_back(on_circle(i, n - 1));
    ps.points.push_back({0, 0});
    ps.center_index = n - 1;
    if (!valid(ps)) throw Error(Errc::InvalidN, "rounded wheel for n = " + std::to_string(n) + " fails validation");
    return {ps, seed};
}

InstanceFile generate_general(int n, std::uint64_t seed) {
    if (n < 1) throw Error(Errc::InvalidN, "general instances need n >= 1");
    std::mt19937_64 rng(seed);
    PointSet ps;
    ps.config = Config::General;
    while (ps.size() < n) {
        Point p{draw_between(rng, -kRadius, kRadius), draw_between(rng, -kRadius, kRadius)};
        bool ok = true;
        for (std::size_t i = 0; ok && i < ps.points.size(); ++i) {
            if (ps.points[i] == p) ok = false;
            for (std::size_t j = i + 1; ok && j < ps.points.size(); ++j)
                if (orientation_sign(ps.points[i], ps.points[j], p) == 0) ok = false;
        }
        if (ok) ps.points.push_back(p);
    }
    return {ps, seed};
}

[[noreturn]] void malformed(const std::string& field, const std::string& why) {
    throw Error(Errc::MalformedInput, field + ": " + why);
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(Errc::MalformedInput, e.what());
    }
}

const json& field(const json& j, const char* name) {
    if (!j.is_object()) malformed("<root>", "expected an object");
    if (!j.contains(name)) malformed(name, "missing");
    return j.at(name);
}

long long integer(const json& v, const std::string& where) {
    if (!v.is_number_integer()) malformed(where, "expected an integer");
    return v.get<long long>();
}

std::vector<int> index_list(const json& v, const std::string& where) {
    if (!v.is_array()) malformed(where, "expected an array of indices");
    std::vector<int> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        long long x = integer(v[i], where + "[" + std::to_string(i) + "]");
        if (x < 0 || x > std::numeric_limits<int>::max()) malformed(where + "[" + std::to_string(i) + "]", "index out of range");
        out.push_back(static_cast<int>(x));
    }
    return out;
}

std::string edge_text(EdgeRef e) { return "(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")"; }

}  // namespace

InstanceFile generate(Config config, int n, std::uint64_t seed) {
    switch (config) {
        case Config::Convex: return generate_convex(n, seed);
        case Config::Wheel: return generate_wheel(n, seed);
        case Config::General: return generate_general(n, seed);
    }
    throw Error(Errc::InvalidN, "unknown configuration");
}

std::string serialize(const InstanceFile& f) {
    std::ostringstream os;
    os << "{\n  \"config\": \"" << config_name(f.set.config) << "\",\n  \"points\": [";
    for (std::size_t i = 0; i < f.set.points.size(); ++i)
        os << (i ? ",\n    " : "\n    ") << "[" << f.set.points[i].x << ", " << f.set.points[i].y << "]";
    os << (f.set.points.empty() ? "]" : "\n  ]");
    if (f.set.center_index) os << ",\n  \"center_index\": " << *f.set.center_index;
    if (f.seed) os << ",\n  \"seed\": " << *f.seed;
    os << "\n}\n";
    return os.str();
}

std::string serialize(const PackingFile& f) {
    std::ostringstream os;
    auto list = [&](const std::vector<int>& v) {
        os << "[";
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
        os << "]";
    };
    os << "{\n  \"instance_hash\": \"" << f.instance_hash << "\",\n  \"cycles\": [";
    for (std::size_t i = 0; i < f.cycles.size(); ++i) {
        os << (i ? ",\n    " : "\n    ");
        list(f.cycles[i]);
    }
    os << (f.cycles.empty() ? "]" : "\n  ]") << ",\n  \"removed_edges\": [";
    for (std::size_t i = 0; i < f.removed_edges.size(); ++i) {
        os << (i ? ",\n    " : "\n    ") << "[";
        for (std::size_t j = 0; j < f.removed_edges[i].size(); ++j)
            os << (j ? ", " : "") << "[" << f.removed_edges[i][j].a << ", " << f.removed_edges[i][j].b << "]";
        os << "]";
    }
    os << (f.removed_edges.empty() ? "]" : "\n  ]") << "\n}\n";
    return os.str();
}

InstanceFile parse_instance(const std::string& text) {
    json j = parse_json(text);
    InstanceFile f;
    const json& cfg = field(j, "config");
    if (!cfg.is_string()) malformed("config", "expected a string");
    f.set.config = parse_config(cfg.get<std::string>());
    const json& pts = field(j, "points");
    if (!pts.is_array()) malformed("points", "expected an array of [x, y] pairs");
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::string where = "points[" + std::to_string(i) + "]";
        if (!pts[i].is_array() || pts[i].size() != 2) malformed(where, "expected [x, y]");
        f.set.points.push_back({integer(pts[i][0], where + "[0]"), integer(pts[i][1], where + "[1]")});
    }
    if (j.contains("center_index") && !j["center_index"].is_null()) {
        long long c = integer(j["center_index"], "center_index");
        if (c < 0 || c >= f.set.size()) malformed("center_index", "not a point index");
        f.set.center_index = static_cast<int>(c);
    }
    if (j.contains("seed") && !j["seed"].is_null()) {
        if (!j["seed"].is_number_unsigned() && !j["seed"].is_number_integer()) malformed("seed", "expected an integer");
        if (j["seed"].is_number_integer() && j["seed"].get<long long>() < 0) malformed("seed", "expected a non-negative integer");
        f.seed = j["seed"].get<std::uint64_t>();
    }
    try {
        f.set.validate();
    } catch (const Error& e) {
        malformed("points", e.what());
    }
    return f;
}

PackingFile parse_packing(const std::string& text) {
    json j = parse_json(text);
    PackingFile f;
    const json& h = field(j, "instance_hash");
    if (!h.is_string()) malformed("instance_hash", "expected a string");
    f.instance_hash = h.get<std::string>();
    const json& cs = field(j, "cycles");
    if (!cs.is_array()) malformed("cycles", "expected an array");
    for (std::size_t i = 0; i < cs.size(); ++i) f.cycles.push_back(index_list(cs[i], "cycles[" + std::to_string(i) + "]"));
    if (j.contains("removed_edges")) {
        const json& rs = j["removed_edges"];
        if (!rs.is_array()) malformed("removed_edges", "expected an array");
        for (std::size_t i = 0; i < rs.size(); ++i) {
            std::string where = "removed_edges[" + std::to_string(i) + "]";
            if (!rs[i].is_array()) malformed(where, "expected an array of edges");
            std::vector<EdgeRef> es;
            for (std::size_t k = 0; k < rs[i].size(); ++k) {
                auto e = index_list(rs[i][k], where + "[" + std::to_string(k) + "]");
                if (e.size() != 2 || e[0] == e[1]) malformed(where + "[" + std::to_string(k) + "]", "expected two distinct indices");
                es.emplace_back(e[0], e[1]);
            }
            f.removed_edges.push_back(es);
        }
    }
    return f;
}

std::string instance_hash(const InstanceFile& f) {
    std::string text = serialize(f);
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr))
        throw std::runtime_error("SHA-256 digest failed");
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return os.str();
}

PackOutcome pack_instance(const InstanceFile& inst) {
    const PointSet& ps = inst.set;
    PackOutcome out;
    out.file.instance_hash = instance_hash(inst);
    int n = ps.size();
    switch (ps.config) {
        case Config::Convex:
        case Config::Wheel: {
            Packing p = ps.config == Config::Convex ? pack_convex(n) : pack_wheel(n);
            auto vertex = ps.vertices_by_label();
            for (const auto& c : p.cycles) {
                std::vector<int> order;
                for (int label : c.order) order.push_back(vertex[label]);
                out.file.cycles.push_back(order);
                out.file.removed_edges.emplace_back();
            }
            break;
        }
        case Config::General: {
            auto r = pack_general(ps);
            for (std::size_t i = 0; i < r.packing.cycles.size(); ++i) {
                out.file.cycles.push_back(r.packing.cycles[i].order);
                std::vector<EdgeRef> removed;
                if (i < r.joins.size())
                    for (const auto& m : r.joins[i]) removed.insert(removed.end(), {m.removed[0], m.removed[1]});
                out.file.removed_edges.push_back(removed);
            }
            out.complete = r.complete;
            out.diagnostics = r.diagnostics;
            out.fallbacks = r.fallbacks;
            break;
        }
    }
    auto v = verify_files(inst, out.file);
    if (!v.ok) throw Error(Errc::ConstructionFailed, "packer output fails verification: " + verify_text(v));
    return out;
}

VerifyOutcome verify_files(const InstanceFile& inst, const PackingFile& pack) {
    VerifyOutcome v;
    v.hash_matches = pack.instance_hash == instance_hash(inst);
    if (!v.hash_matches) v.message = "instance_hash does not match the instance";
    int n = inst.set.size();
    Packing p;
    for (std::size_t i = 0; i < pack.cycles.size(); ++i) {
        for (int x : pack.cycles[i])
            if (x >= n) {
                v.message = "cycle " + std::to_string(i) + " references index " + std::to_string(x) + " >= n = " +
                            std::to_string(n);
                return v;
            }
        p.cycles.push_back(HamCycle{pack.cycles[i]});
    }
    v.report = verify_packing(p, n, CrossingOracle::for_point_set(inst.set));
    v.ok = v.hash_matches && v.report.ok;
    return v;
}

std::string verify_text(const VerifyOutcome& v) {
    std::ostringstream os;
    os << "instance hash: " << (v.hash_matches ? "match" : "MISMATCH") << "\n";
    if (!v.message.empty()) os << "error: " << v.message << "\n";
    const auto& r = v.report;
    std::size_t m = r.hamiltonian.size();
    os << "cycles: " << m << "\n";
    for (std::size_t i = 0; i < m; ++i)
        os << "cycle " << i << ": hamiltonian " << (r.hamiltonian[i] ? "yes" : "NO") << ", max crossings per edge "
           << r.max_crossings[i] << (r.max_crossings[i] > 1 ? " (TOO MANY)" : "") << "\n";
    if (m > 1) {
        os << "shared edges matrix:\n    ";
        for (std::size_t j = 0; j < m; ++j) os << std::setw(4) << j;
        os << "\n";
        for (std::size_t i = 0; i < m; ++i) {
            os << std::setw(4) << i;
            for (std::size_t j = 0; j < m; ++j) {
                if (i == j) os << std::setw(4) << "-";
                else os << std::setw(4) << r.shared[std::min(i, j)][std::max(i, j)].size();
            }
            os << "\n";
        }
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                for (const auto& e : r.shared[i][j])
                    os << "shared edge " << edge_text(e) << " in cycles " << i << " and " << j << "\n";
    }
    os << "result: " << (v.ok ? "PASS" : "FAIL") << "\n";
    return os.str();
}

std::string verify_json(const VerifyOutcome& v) {
    json j;
    j["ok"] = v.ok;
    j["hash_matches"] = v.hash_matches;
    if (!v.message.empty()) j["message"] = v.message;
    const auto& r = v.report;
    std::size_t m = r.hamiltonian.size();
    j["cycles"] = json::array();
    for (std::size_t i = 0; i < m; ++i)
        j["cycles"].push_back({{"hamiltonian", static_cast<bool>(r.hamiltonian[i])}, {"max_crossings", r.max_crossings[i]}});
    json matrix = json::array(), shared = json::array();
    for (std::size_t i = 0; i < m; ++i) {
        json row = json::array();
        for (std::size_t j2 = 0; j2 < m; ++j2)
            row.push_back(i == j2 ? 0 : r.shared[std::min(i, j2)][std::max(i, j2)].size());
        matrix.push_back(row);
        for (std::size_t j2 = i + 1; j2 < m; ++j2)
            for (const auto& e : r.shared[i][j2]) shared.push_back({{"cycles", {i, j2}}, {"edge", {e.a, e.b}}});
    }
    j["shared_counts"] = matrix;
    j["shared_edges"] = shared;
    return j.dump(2) + "\n";
}

std::string oracle_json(const PointSet& ps, int cap) {
    auto rep = max_packing_exact(ps, cap);
    json j;
    j["n"] = rep.n;
    j["config"] = config_name(ps.config);
    j["total_ham_cycles"] = rep.total_ham_cycles;
    j["one_plane_count"] = rep.one_plane_count;
    j["max_packing_size"] = rep.max_packing_size;
    j["witness"] = json::array();
    for (const auto& c : rep.witness.cycles) j["witness"].push_back(c.order);
    return j.dump(2) + "\n";
}

std::string render_svg(const InstanceFile& inst, const PackingFile& pack) {
    static const char* colors[] = {"green", "blue", "red", "gold", "purple", "darkorange", "teal", "magenta", "brown", "gray"};
    const auto& pts = inst.set.points;
    if (pts.empty()) throw Error(Errc::MalformedInput, "points: empty instance");
    Coord lox = pts[0].x, hix = lox, loy = -pts[0].y, hiy = loy;
    for (const auto& p : pts) {
        lox = std::min(lox, p.x);
        hix = std::max(hix, p.x);
        loy = std::min(loy, -p.y);
        hiy = std::max(hiy, -p.y);
    }
    Coord span = std::max<Coord>({hix - lox, hiy - loy, 1});
    Coord margin = span / 20 + 1;
    Coord stroke = std::max<Coord>(span / 400, 1);
    Coord radius = std::max<Coord>(span / 120, 1);
    Coord font = std::max<Coord>(span / 40, 1);
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << lox - margin << " " << loy - margin << " "
       << span + 2 * margin << " " << span + 2 * margin << "\" width=\"800\" height=\"800\">\n";
    os << "<rect x=\"" << lox - margin << "\" y=\"" << loy - margin << "\" width=\"" << span + 2 * margin
       << "\" height=\"" << span + 2 * margin << "\" fill=\"white\"/>\n";
    auto line = [&](EdgeRef e, const char* color, bool dashed) {
        const Point& a = pts.at(e.a);
        const Point& b = pts.at(e.b);
        os << "<line x1=\"" << a.x << "\" y1=\"" << -a.y << "\" x2=\"" << b.x << "\" y2=\"" << -b.y << "\" stroke=\""
           << color << "\" stroke-width=\"" << stroke << "\"";
        if (dashed) os << " stroke-dasharray=\"" << 4 * stroke << " " << 3 * stroke << "\"";
        os << "/>\n";
    };
    for (std::size_t i = 0; i < pack.cycles.size(); ++i) {
        const char* color = colors[i % std::size(colors)];
        os << "<g id=\"cycle-" << i << "\">\n";
        const auto& c = pack.cycles[i];
        for (std::size_t k = 0; k < c.size(); ++k) line(EdgeRef(c[k], c[(k + 1) % c.size()]), color, false);
        if (i < pack.removed_edges.size())
            for (const auto& e : pack.removed_edges[i]) line(e, color, true);
        os << "</g>\n";
    }
    for (std::size_t i = 0; i < pts.size(); ++i) {
        os << "<circle cx=\"" << pts[i].x << "\" cy=\"" << -pts[i].y << "\" r=\"" << radius << "\" fill=\"black\"/>\n";
        os << "<text x=\"" << pts[i].x + radius << "\" y=\"" << -pts[i].y - radius << "\" font-size=\"" << font
           << "\">" << i << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::MalformedInput, path + ": cannot open");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error(path + ": cannot write");
    out << text;
    if (!out) throw std::runtime_error(path + ": write failed");
}

}  // namespace hcp
