#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hcp/geometry.h"

namespace hcp {

enum class Config { Convex, Wheel, General };

const char* config_name(Config c);
Config parse_config(std::string_view s);  // throws MalformedInput

struct PointSet {
    std::vector<Point> points;
    Config config = Config::General;
    std::optional<int> center_index;

    int size() const { return static_cast<int>(points.size()); }

    // Index -> combinatorial label. Convex: identity. Wheel: rim position in
    // listed order, the center gets label n - 1. General: identity.
    std::vector<int> labels() const;
    // Inverse of labels().
    std::vector<int> vertices_by_label() const;

    // Throws DegenerateInput, InvalidN or ConfigMismatch.
    void validate() const;
};

class CrossingOracle {
public:
    using Fn = std::function<bool(EdgeRef, EdgeRef)>;

    CrossingOracle(int n, Fn fn) : n_(n), fn_(std::move(fn)) {}

    static CrossingOracle convex(int n);
    // Center label is n - 1.
    static CrossingOracle wheel(int n);
    static CrossingOracle geometric(std::vector<Point> pts);
    // Works in point-index space for every configuration.
    static CrossingOracle for_point_set(const PointSet& ps);

    // False whenever the edges share an endpoint.
    bool operator()(EdgeRef e1, EdgeRef e2) const {
        if (e1.touches(e2)) return false;
        return fn_(e1, e2);
    }
    int size() const { return n_; }

private:
    int n_;
    Fn fn_;
};

}  // namespace hcp
