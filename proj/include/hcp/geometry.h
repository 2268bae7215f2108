#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hcp {

using Coord = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;

struct Point {
    Coord x = 0;
    Coord y = 0;
    auto operator<=>(const Point&) const = default;
};

enum class Orientation { CW = -1, Collinear = 0, CCW = 1 };
enum class Side { Right = -1, On = 0, Left = 1 };

inline Side opposite(Side s) { return static_cast<Side>(-static_cast<int>(s)); }

// Unordered vertex pair kept as a < b.
struct EdgeRef {
    int a = 0;
    int b = 1;

    EdgeRef() = default;
    EdgeRef(int u, int v);

    bool has(int v) const { return a == v || b == v; }
    bool touches(const EdgeRef& o) const { return has(o.a) || has(o.b); }
    int other(int v) const { return v == a ? b : a; }
    std::uint64_t key() const {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
               static_cast<std::uint32_t>(b);
    }
    auto operator<=>(const EdgeRef&) const = default;
};

struct EdgeRefHash {
    std::size_t operator()(const EdgeRef& e) const noexcept {
        return std::hash<std::uint64_t>{}(e.key());
    }
};

// Sign of det(q - p, r - p), exact for every int64 input.
int orientation_sign(Point p, Point q, Point r);
Orientation orientation(Point p, Point q, Point r);

// Proper interior crossing. Shared endpoints never cross; collinear
// overlapping or touching segments throw CollinearOverlap.
bool segments_properly_cross(Point a1, Point a2, Point b1, Point b2);

// Labels 0..n-1 in cyclic order. Throws SharedEndpoint.
bool convex_cross(int n, EdgeRef e1, EdgeRef e2);

// Rim labels 0..m-1 in cyclic order, the center is label m. Throws SharedEndpoint.
bool wheel_cross(int m, EdgeRef e1, EdgeRef e2);

// CCW hull vertex indices, starting from the lexicographically smallest point.
std::vector<int> convex_hull(std::span<const Point> ps);
// Hull of a subset, returned as original indices.
std::vector<int> convex_hull(std::span<const Point> ps, std::span<const int> subset);

bool in_general_position(std::span<const Point> ps);

struct BigPoint {
    BigInt x;
    BigInt y;
    bool operator==(const BigPoint&) const = default;
};

// Line through anchor/scale with direction `direction`. LEFT is the side the
// direction turns towards counter-clockwise.
struct OrientedLine {
    BigPoint anchor;
    BigPoint direction;
    BigInt scale = 1;

    static OrientedLine through(Point anchor, Coord dx, Coord dy);
    OrientedLine reversed() const;
    bool operator==(const OrientedLine&) const = default;
};

Side side_of_line(const OrientedLine& l, Point p);

}  // namespace hcp
