#include "hcp/geometry.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "hcp/errors.h"

namespace hcp {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::CollinearOverlap: return "CollinearOverlap";
        case Errc::SharedEndpoint: return "SharedEndpoint";
        case Errc::DegenerateInput: return "DegenerateInput";
        case Errc::ConfigMismatch: return "ConfigMismatch";
        case Errc::ConstructionFailed: return "ConstructionFailed";
        case Errc::InvalidN: return "InvalidN";
        case Errc::NonHamiltonian: return "NonHamiltonian";
        case Errc::NotSeparable: return "NotSeparable";
        case Errc::MarchFailed: return "MarchFailed";
        case Errc::StillCrossing: return "StillCrossing";
        case Errc::NoJoinFound: return "NoJoinFound";
        case Errc::TooLarge: return "TooLarge";
        case Errc::MalformedInput: return "MalformedInput";
    }
    return "Unknown";
}

EdgeRef::EdgeRef(int u, int v) {
    if (u == v) throw Error(Errc::DegenerateInput, "edge with equal endpoints " + std::to_string(u));
    a = std::min(u, v);
    b = std::max(u, v);
}

namespace {

template <class T>
int sign_of(const T& v) {
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

bool within(Point p, Coord bound) {
    return p.x > -bound && p.x < bound && p.y > -bound && p.y < bound;
}

}  // namespace

int orientation_sign(Point p, Point q, Point r) {
    constexpr Coord kSmall = Coord{1} << 30;
    constexpr Coord kMid = Coord{1} << 61;
    if (within(p, kSmall) && within(q, kSmall) && within(r, kSmall)) {
        Coord d = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
        return sign_of(d);
    }
    if (within(p, kMid) && within(q, kMid) && within(r, kMid)) {
        using I = __int128;
        I d = I(q.x - p.x) * I(r.y - p.y) - I(q.y - p.y) * I(r.x - p.x);
        return sign_of(d);
    }
    BigInt d = (BigInt(q.x) - p.x) * (BigInt(r.y) - p.y) - (BigInt(q.y) - p.y) * (BigInt(r.x) - p.x);
    return sign_of(d);
}

Orientation orientation(Point p, Point q, Point r) {
    return static_cast<Orientation>(orientation_sign(p, q, r));
}

namespace {

// q collinear with segment [p, r]; is it inside the closed box?
bool in_box(Point p, Point r, Point q) {
    return std::min(p.x, r.x) <= q.x && q.x <= std::max(p.x, r.x) && std::min(p.y, r.y) <= q.y &&
           q.y <= std::max(p.y, r.y);
}

}  // namespace

bool segments_properly_cross(Point a1, Point a2, Point b1, Point b2) {
    if (a1 == a2 || b1 == b2) throw Error(Errc::DegenerateInput, "zero-length segment");
    int o1 = orientation_sign(a1, a2, b1);
    int o2 = orientation_sign(a1, a2, b2);

    Point shared{};
    Point oa{};
    Point ob{};
    bool has_shared = true;
    if (a1 == b1) { shared = a1; oa = a2; ob = b2; }
    else if (a1 == b2) { shared = a1; oa = a2; ob = b1; }
    else if (a2 == b1) { shared = a2; oa = a1; ob = b2; }
    else if (a2 == b2) { shared = a2; oa = a1; ob = b1; }
    else has_shared = false;

    if (has_shared) {
        if (oa == ob) throw Error(Errc::CollinearOverlap, "identical segments");
        if (orientation_sign(shared, oa, ob) == 0) {
            // Same ray from the shared point means overlap.
            auto dot = (BigInt(oa.x) - shared.x) * (BigInt(ob.x) - shared.x) +
                       (BigInt(oa.y) - shared.y) * (BigInt(ob.y) - shared.y);
            if (dot > 0) throw Error(Errc::CollinearOverlap, "segments overlap past a shared endpoint");
        }
        return false;
    }

    int o3 = orientation_sign(b1, b2, a1);
    int o4 = orientation_sign(b1, b2, a2);
    if (o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) return o1 != o2 && o3 != o4;

    if ((o1 == 0 && in_box(a1, a2, b1)) || (o2 == 0 && in_box(a1, a2, b2)) ||
        (o3 == 0 && in_box(b1, b2, a1)) || (o4 == 0 && in_box(b1, b2, a2)))
        throw Error(Errc::CollinearOverlap, "an endpoint lies on the other segment");
    return false;
}

bool convex_cross(int n, EdgeRef e1, EdgeRef e2) {
    if (e1.touches(e2)) throw Error(Errc::SharedEndpoint, "convex_cross on adjacent edges");
    if (e1.a < 0 || e2.a < 0 || e1.b >= n || e2.b >= n)
        throw Error(Errc::DegenerateInput, "vertex label out of range");
    bool in_a = e1.a < e2.a && e2.a < e1.b;
    bool in_b = e1.a < e2.b && e2.b < e1.b;
    return in_a != in_b;
}

bool wheel_cross(int m, EdgeRef e1, EdgeRef e2) {
    if (e1.touches(e2)) throw Error(Errc::SharedEndpoint, "wheel_cross on adjacent edges");
    if (e1.a < 0 || e2.a < 0 || e1.b > m || e2.b > m)
        throw Error(Errc::DegenerateInput, "vertex label out of range");
    bool r1 = e1.b == m;
    bool r2 = e2.b == m;
    if (!r1 && !r2) return convex_cross(m, e1, e2);
    const EdgeRef& chord = r1 ? e2 : e1;
    int j = r1 ? e1.a : e2.a;
    int inner = chord.b - chord.a;
    bool j_inner = chord.a < j && j < chord.b;
    return inner < m - inner ? j_inner : !j_inner;
}

std::vector<int> convex_hull(std::span<const Point> ps) {
    std::vector<int> all(ps.size());
    std::iota(all.begin(), all.end(), 0);
    return convex_hull(ps, all);
}

std::vector<int> convex_hull(std::span<const Point> ps, std::span<const int> subset) {
    if (subset.size() < 3) throw Error(Errc::DegenerateInput, "hull needs at least 3 points");
    std::vector<int> idx(subset.begin(), subset.end());
    std::sort(idx.begin(), idx.end(), [&](int i, int j) { return ps[i] < ps[j]; });
    for (std::size_t i = 1; i < idx.size(); ++i)
        if (ps[idx[i]] == ps[idx[i - 1]]) throw Error(Errc::DegenerateInput, "duplicate points");

    std::vector<int> h(2 * idx.size());
    std::size_t k = 0;
    for (int i : idx) {
        while (k >= 2 && orientation_sign(ps[h[k - 2]], ps[h[k - 1]], ps[i]) <= 0) --k;
        h[k++] = i;
    }
    for (std::size_t t = idx.size() - 1, lo = k + 1; t-- > 0;) {
        int i = idx[t];
        while (k >= lo && orientation_sign(ps[h[k - 2]], ps[h[k - 1]], ps[i]) <= 0) --k;
        h[k++] = i;
    }
    h.resize(k - 1);
    if (h.size() < 3) throw Error(Errc::DegenerateInput, "all points collinear");
    return h;
}

bool in_general_position(std::span<const Point> ps) {
    std::vector<Point> sorted(ps.begin(), ps.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = i + 1; j < ps.size(); ++j)
            for (std::size_t k = j + 1; k < ps.size(); ++k)
                if (orientation_sign(ps[i], ps[j], ps[k]) == 0) return false;
    return true;
}

OrientedLine OrientedLine::through(Point anchor, Coord dx, Coord dy) {
    if (dx == 0 && dy == 0) throw Error(Errc::DegenerateInput, "zero line direction");
    return OrientedLine{{anchor.x, anchor.y}, {dx, dy}, 1};
}

OrientedLine OrientedLine::reversed() const {
    return OrientedLine{anchor, {-direction.x, -direction.y}, scale};
}

Side side_of_line(const OrientedLine& l, Point p) {
    BigInt vx = l.scale * p.x - l.anchor.x;
    BigInt vy = l.scale * p.y - l.anchor.y;
    BigInt c = l.direction.x * vy - l.direction.y * vx;
    int s = sign_of(c);
    if (l.scale < 0) s = -s;
    return static_cast<Side>(s);
}

}  // namespace hcp
