#include "hcp/point_set.h"

#include <algorithm>

#include "hcp/errors.h"

namespace hcp {

const char* config_name(Config c) {
    switch (c) {
        case Config::Convex: return "convex";
        case Config::Wheel: return "wheel";
        case Config::General: return "general";
    }
    return "general";
}

Config parse_config(std::string_view s) {
    if (s == "convex") return Config::Convex;
    if (s == "wheel") return Config::Wheel;
    if (s == "general") return Config::General;
    throw Error(Errc::MalformedInput, "unknown config '" + std::string(s) + "'");
}

std::vector<int> PointSet::labels() const {
    int n = size();
    std::vector<int> lab(n);
    if (config != Config::Wheel || !center_index) {
        for (int i = 0; i < n; ++i) lab[i] = i;
        return lab;
    }
    int next = 0;
    for (int i = 0; i < n; ++i) lab[i] = i == *center_index ? n - 1 : next++;
    return lab;
}

std::vector<int> PointSet::vertices_by_label() const {
    auto lab = labels();
    std::vector<int> inv(lab.size());
    for (std::size_t i = 0; i < lab.size(); ++i) inv[lab[i]] = static_cast<int>(i);
    return inv;
}

void PointSet::validate() const {
    int n = size();
    if (n < 3) throw Error(Errc::InvalidN, "need at least 3 points, got " + std::to_string(n));
    if (!in_general_position(points)) throw Error(Errc::DegenerateInput, "points not in general position");
    if (config != Config::Wheel && center_index)
        throw Error(Errc::ConfigMismatch, "center_index given for a non-wheel set");

    auto cyclic_equal = [](std::vector<int> hull, const std::vector<int>& want) {
        if (hull.size() != want.size()) return false;
        auto it = std::find(hull.begin(), hull.end(), want.front());
        std::rotate(hull.begin(), it, hull.end());
        return hull == want;
    };

    if (config == Config::Convex) {
        std::vector<int> want(n);
        for (int i = 0; i < n; ++i) want[i] = i;
        if (!cyclic_equal(convex_hull(points), want))
            throw Error(Errc::ConfigMismatch, "convex set is not listed in CCW convex order");
    } else if (config == Config::Wheel) {
        if (n % 2 != 0) throw Error(Errc::InvalidN, "wheel sets need even n");
        if (!center_index || *center_index < 0 || *center_index >= n)
            throw Error(Errc::ConfigMismatch, "wheel set needs a valid center_index");
        auto by_label = vertices_by_label();
        std::vector<Point> rim;
        for (int l = 0; l + 1 < n; ++l) rim.push_back(points[by_label[l]]);
        std::vector<int> want(n - 1);
        for (int i = 0; i + 1 < n; ++i) want[i] = i;
        if (!cyclic_equal(convex_hull(rim), want))
            throw Error(Errc::ConfigMismatch, "wheel rim is not listed in CCW convex order");
        // Radial edges must cross exactly the chords the combinatorial oracle says.
        int m = n - 1;
        Point x = points[*center_index];
        for (int j = 0; j < m; ++j)
            for (int a = 0; a < m; ++a)
                for (int b = a + 1; b < m; ++b) {
                    if (a == j || b == j) continue;
                    bool geo = segments_properly_cross(x, rim[j], rim[a], rim[b]);
                    if (geo != wheel_cross(m, EdgeRef(j, m), EdgeRef(a, b)))
                        throw Error(Errc::ConfigMismatch, "wheel center is not regular enough for the rim");
                }
    }
}

CrossingOracle CrossingOracle::convex(int n) {
    return CrossingOracle(n, [n](EdgeRef e1, EdgeRef e2) { return convex_cross(n, e1, e2); });
}

CrossingOracle CrossingOracle::wheel(int n) {
    return CrossingOracle(n, [m = n - 1](EdgeRef e1, EdgeRef e2) { return wheel_cross(m, e1, e2); });
}

CrossingOracle CrossingOracle::geometric(std::vector<Point> pts) {
    int n = static_cast<int>(pts.size());
    return CrossingOracle(n, [pts = std::move(pts)](EdgeRef e1, EdgeRef e2) {
        return segments_properly_cross(pts[e1.a], pts[e1.b], pts[e2.a], pts[e2.b]);
    });
}

CrossingOracle CrossingOracle::for_point_set(const PointSet& ps) {
    int n = ps.size();
    switch (ps.config) {
        case Config::Convex: return convex(n);
        case Config::Wheel: {
            auto lab = ps.labels();
            return CrossingOracle(n, [lab = std::move(lab), m = n - 1](EdgeRef e1, EdgeRef e2) {
                return wheel_cross(m, EdgeRef(lab[e1.a], lab[e1.b]), EdgeRef(lab[e2.a], lab[e2.b]));
            });
        }
        case Config::General: return geometric(ps.points);
    }
    return geometric(ps.points);
}

}  // namespace hcp
