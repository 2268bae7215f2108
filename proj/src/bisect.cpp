#include "hcp/bisect.h"

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <stdexcept>

#include "hcp/errors.h"

namespace hcp {

namespace {

BigInt cross(const BigInt& dx, const BigInt& dy, Point p) { return dx * p.y - dy * p.x; }

// Line with side(p) = sign(2 * (D x p) - c).
OrientedLine threshold_line(const BigInt& dx, const BigInt& dy, const BigInt& c) {
    BigInt norm = dx * dx + dy * dy;
    return OrientedLine{{-dy * c, dx * c}, {dx, dy}, 2 * norm};
}

std::vector<int> sorted_copy(std::span<const int> s) {
    std::vector<int> v(s.begin(), s.end());
    std::sort(v.begin(), v.end());
    return v;
}

void expect_side(const OrientedLine& l, const PointSet& ps, std::span<const int> ids, Side want) {
    for (int i : ids)
        if (side_of_line(l, ps.points[i]) != want)
            throw std::logic_error("realized line disagrees with its combinatorial split");
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

Bisection bisecting_line(const PointSet& ps, std::span<const int> subset) {
    int k = static_cast<int>(subset.size());
    if (k < 2) throw Error(Errc::DegenerateInput, "bisecting_line needs at least 2 points");
    Coord lox = ps.points[subset[0]].x, hix = lox, loy = ps.points[subset[0]].y, hiy = loy;
    for (int i : subset) {
        lox = std::min(lox, ps.points[i].x);
        hix = std::max(hix, ps.points[i].x);
        loy = std::min(loy, ps.points[i].y);
        hiy = std::max(hiy, ps.points[i].y);
    }
    BigInt span = std::max(BigInt(hix) - lox, BigInt(hiy) - loy);
    std::array<std::pair<BigInt, BigInt>, 5> dirs{{{0, 1}, {1, 0}, {1, 1}, {1, -1}, {1, 2 * span + 1}}};

    int t = (k + 1) / 2;
    for (const auto& [dx, dy] : dirs) {
        std::vector<std::pair<BigInt, int>> pi;
        for (int i : subset) pi.emplace_back(cross(dx, dy, ps.points[i]), i);
        std::sort(pi.begin(), pi.end(), [](const auto& a, const auto& b) {
            return a.first != b.first ? a.first > b.first : a.second < b.second;
        });
        if (pi[t - 1].first == pi[t].first) continue;
        Bisection b{threshold_line(dx, dy, pi[t - 1].first + pi[t].first), {}, {}};
        for (int j = 0; j < k; ++j) (j < t ? b.left : b.right).push_back(pi[j].second);
        std::sort(b.left.begin(), b.left.end());
        std::sort(b.right.begin(), b.right.end());
        expect_side(b.line, ps, b.left, Side::Left);
        expect_side(b.line, ps, b.right, Side::Right);
        return b;
    }
    throw std::logic_error("steep direction failed to separate distinct points");
}

void for_each_bisection(const PointSet& ps, std::span<const int> subset,
                        const std::function<bool(const Bisection&)>& visit) {
    int k = static_cast<int>(subset.size());
    Bisection first = bisecting_line(ps, subset);
    std::set<std::vector<int>> seen{first.left};
    if (!visit(first)) return;
    int t = (k + 1) / 2;
    // Directions just either side of each pair direction; keys order by
    // cross(d, p) first and the tilt breaks ties.
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) {
            const Point& P = ps.points[subset[a]];
            const Point& Q = ps.points[subset[b]];
            BigInt dx = BigInt(Q.x) - P.x, dy = BigInt(Q.y) - P.y;
            for (int sgn : {1, -1}) {
                BigInt ex = -dy * sgn, ey = dx * sgn;
                BigInt reach = 0;
                for (int i : subset) reach = std::max(reach, BigInt(abs(cross(ex, ey, ps.points[i]))));
                BigInt K = 2 * reach + 1;
                BigInt Dx = K * dx + ex, Dy = K * dy + ey;
                std::vector<std::pair<BigInt, int>> pi;
                for (int i : subset) pi.emplace_back(cross(Dx, Dy, ps.points[i]), i);
                std::sort(pi.begin(), pi.end(), [](const auto& x, const auto& y) {
                    return x.first != y.first ? x.first > y.first : x.second < y.second;
                });
                if (pi[t - 1].first == pi[t].first) continue;
                Bisection bis{threshold_line(Dx, Dy, pi[t - 1].first + pi[t].first), {}, {}};
                for (int j = 0; j < k; ++j) (j < t ? bis.left : bis.right).push_back(pi[j].second);
                std::sort(bis.left.begin(), bis.left.end());
                std::sort(bis.right.begin(), bis.right.end());
                if (!seen.insert(bis.left).second) continue;
                expect_side(bis.line, ps, bis.left, Side::Left);
                expect_side(bis.line, ps, bis.right, Side::Right);
                if (!visit(bis)) return;
            }
        }
}

OrientedLine perturbed_line(const PointSet& ps, int p, int q, Side side_p, Side side_q) {
    if (side_p == Side::On || side_q == Side::On) throw Error(Errc::DegenerateInput, "perturbed side must be LEFT or RIGHT");
    const Point& P = ps.points[p];
    const Point& Q = ps.points[q];
    Coord lox = P.x, hix = P.x, loy = P.y, hiy = P.y;
    for (const auto& r : ps.points) {
        lox = std::min(lox, r.x);
        hix = std::max(hix, r.x);
        loy = std::min(loy, r.y);
        hiy = std::max(hiy, r.y);
    }
    BigInt wx = BigInt(hix) - lox, wy = BigInt(hiy) - loy;
    BigInt bound = 4 * (wx * wx + wy * wy) + 4;
    BigInt s = 1;
    while (s <= bound) s <<= 1;

    BigInt dx = BigInt(Q.x) - P.x, dy = BigInt(Q.y) - P.y;
    BigInt nx = -dy, ny = dx;
    int ep = side_p == Side::Left ? -1 : 1;
    int eq = side_q == Side::Left ? -1 : 1;
    return OrientedLine{{s * P.x + ep * nx, s * P.y + ep * ny}, {s * dx + (eq - ep) * nx, s * dy + (eq - ep) * ny}, s};
}

namespace {

struct Candidate {
    int a, b;
    Side sa, sb;
};

// Calls visit(candidate, left-set) for every pair line and side assignment.
template <class Visit>
bool scan_pair_lines(const PointSet& ps, const std::vector<int>& s1, const std::vector<int>& s2, Visit&& visit) {
    std::vector<std::pair<int, int>> pairs;
    for (int a : s1)
        for (int b : s2) pairs.emplace_back(a, b);
    for (std::size_t i = 0; i < s1.size(); ++i)
        for (std::size_t j = i + 1; j < s1.size(); ++j) pairs.emplace_back(s1[i], s1[j]);
    for (std::size_t i = 0; i < s2.size(); ++i)
        for (std::size_t j = i + 1; j < s2.size(); ++j) pairs.emplace_back(s2[i], s2[j]);

    std::vector<int> all = s1;
    all.insert(all.end(), s2.begin(), s2.end());
    constexpr std::array<std::pair<Side, Side>, 4> assign{
        {{Side::Left, Side::Left}, {Side::Left, Side::Right}, {Side::Right, Side::Left}, {Side::Right, Side::Right}}};

    for (auto [p, q] : pairs) {
        for (int flip = 0; flip < 2; ++flip) {
            int a = flip ? q : p;
            int b = flip ? p : q;
            std::vector<int> base_left;
            for (int r : all)
                if (r != a && r != b && orientation_sign(ps.points[a], ps.points[b], ps.points[r]) > 0)
                    base_left.push_back(r);
            for (auto [sa, sb] : assign) {
                std::vector<int> left = base_left;
                if (sa == Side::Left) left.push_back(a);
                if (sb == Side::Left) left.push_back(b);
                std::sort(left.begin(), left.end());
                if (!visit(Candidate{a, b, sa, sb}, left)) return false;
            }
        }
    }
    return true;
}

HamSandwich realize(const PointSet& ps, const Candidate& c, const std::vector<int>& s1, const std::vector<int>& s2,
                    const std::vector<int>& left) {
    HamSandwich h{perturbed_line(ps, c.a, c.b, c.sa, c.sb), {}, {}, {}, {}};
    auto in_left = [&](int r) { return std::binary_search(left.begin(), left.end(), r); };
    for (int r : s1) (in_left(r) ? h.left1 : h.right1).push_back(r);
    for (int r : s2) (in_left(r) ? h.left2 : h.right2).push_back(r);
    expect_side(h.line, ps, h.left1, Side::Left);
    expect_side(h.line, ps, h.left2, Side::Left);
    expect_side(h.line, ps, h.right1, Side::Right);
    expect_side(h.line, ps, h.right2, Side::Right);
    return h;
}

}  // namespace

void for_each_ham_sandwich(const PointSet& ps, std::span<const int> s1_in, std::span<const int> s2_in,
                           const std::function<bool(const HamSandwich&)>& visit) {
    auto s1 = sorted_copy(s1_in);
    auto s2 = sorted_copy(s2_in);
    if (s1.empty() || s2.empty()) throw Error(Errc::DegenerateInput, "ham sandwich needs two nonempty sets");
    std::vector<char> in1(ps.size(), 0);
    for (int r : s1) in1[r] = 1;
    for (int r : s2)
        if (in1[r]) throw Error(Errc::DegenerateInput, "ham sandwich sets overlap");
    std::size_t c1 = (s1.size() + 1) / 2, c2 = (s2.size() + 1) / 2;

    std::set<std::vector<int>> seen;
    scan_pair_lines(ps, s1, s2, [&](const Candidate& c, const std::vector<int>& left) {
        std::size_t n1 = 0;
        for (int r : left) n1 += in1[r];
        if (n1 != c1 || left.size() - n1 != c2) return true;
        if (!seen.insert(left).second) return true;
        return visit(realize(ps, c, s1, s2, left));
    });
}

HamSandwich ham_sandwich(const PointSet& ps, std::span<const int> s1, std::span<const int> s2) {
    std::optional<HamSandwich> out;
    for_each_ham_sandwich(ps, s1, s2, [&](const HamSandwich& h) {
        out = h;
        return false;
    });
    if (!out) throw std::logic_error("no simultaneous bisection found");
    return *out;
}

std::optional<HamSandwich> constrained_ham_sandwich(const PointSet& ps, std::span<const int> s1,
                                                    std::span<const int> s2, ConstrainedPair pair) {
    if (std::find(s1.begin(), s1.end(), pair.u) == s1.end() || std::find(s1.begin(), s1.end(), pair.w) == s1.end() ||
        pair.u == pair.w)
        throw Error(Errc::DegenerateInput, "constrained pair must be two points of s1");
    if (s1.size() + s2.size() < 6) return std::nullopt;
    std::optional<HamSandwich> out;
    for_each_ham_sandwich(ps, s1, s2, [&](const HamSandwich& h) {
        auto has = [](const std::vector<int>& v, int x) { return std::binary_search(v.begin(), v.end(), x); };
        bool together = (has(h.left1, pair.u) && has(h.left1, pair.w)) || (has(h.right1, pair.u) && has(h.right1, pair.w));
        if (!together) return true;
        out = h;
        return false;
    });
    return out;
}

SubsetSeparation separating_subset_line(const PointSet& ps, std::span<const int> subset_in, ConstrainedPair pair,
                                        std::optional<int> target) {
    auto subset = sorted_copy(subset_in);
    int s = static_cast<int>(subset.size());
    if (s < 3) throw Error(Errc::DegenerateInput, "separating_subset_line needs at least 3 points");
    if (pair.u == pair.w || !std::binary_search(subset.begin(), subset.end(), pair.u) ||
        !std::binary_search(subset.begin(), subset.end(), pair.w))
        throw Error(Errc::DegenerateInput, "pair must be two points of the subset");
    int t = target ? *target : std::clamp((s + 1) / 2, 2, s - 1);
    if (t < 2 || t > s - 1) throw Error(Errc::DegenerateInput, "target size out of range");

    // Directions parallel to a point pair, tilted either way, cover every
    // order a sweeping line can produce.
    for (int a : subset)
        for (int b : subset) {
            if (a == b) continue;
            BigInt dx = BigInt(ps.points[b].x) - ps.points[a].x;
            BigInt dy = BigInt(ps.points[b].y) - ps.points[a].y;
            for (int tilt : {1, -1}) {
                BigInt ex = -dy * tilt, ey = dx * tilt;
                std::vector<std::pair<std::pair<BigInt, BigInt>, int>> keyed;
                for (int r : subset) keyed.push_back({{cross(dx, dy, ps.points[r]), cross(ex, ey, ps.points[r])}, r});
                std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
                int f0 = keyed[0].second, f1 = keyed[1].second;
                if (!((f0 == pair.u && f1 == pair.w) || (f0 == pair.w && f1 == pair.u))) continue;

                BigInt reach = 0;
                for (const auto& kv : keyed) reach = std::max(reach, BigInt(abs(kv.first.second)));
                BigInt k = 2 * reach + 1;
                BigInt Dx = k * dx + ex, Dy = k * dy + ey;
                BigInt hi = cross(Dx, Dy, ps.points[keyed[t - 1].second]);
                BigInt lo = cross(Dx, Dy, ps.points[keyed[t].second]);
                SubsetSeparation out{threshold_line(Dx, Dy, hi + lo), {}, {}};
                for (int j = 0; j < s; ++j) (j < t ? out.inside : out.outside).push_back(keyed[j].second);
                std::sort(out.inside.begin(), out.inside.end());
                std::sort(out.outside.begin(), out.outside.end());
                expect_side(out.line, ps, out.inside, Side::Left);
                expect_side(out.line, ps, out.outside, Side::Right);
                return out;
            }
        }
    throw Error(Errc::NotSeparable, "no line cuts {" + std::to_string(pair.u) + "," + std::to_string(pair.w) +
                                        "} off from the rest");
}

OrientedLine perpendicular_baseline(const OrientedLine& l, const PointSet& ps, std::span<const int> subset) {
    if (subset.empty()) throw Error(Errc::DegenerateInput, "baseline of an empty set");
    const BigInt& dx = l.direction.x;
    const BigInt& dy = l.direction.y;
    BigInt lo = height_along(l, ps.points[subset[0]]);
    for (int i : subset) lo = std::min(lo, height_along(l, ps.points[i]));
    BigInt t = floor_div(lo - 1, dx * dx + dy * dy);
    OrientedLine out{{t * dx, t * dy}, {dy, -dx}, 1};
    expect_side(out, ps, subset, Side::Left);
    return out;
}

OrientedLine perpendicular_baseline(const OrientedLine& l, const PointSet& ps) {
    std::vector<int> all(ps.size());
    for (int i = 0; i < ps.size(); ++i) all[i] = i;
    return perpendicular_baseline(l, ps, all);
}

BigInt height_along(const OrientedLine& l, Point p) { return l.direction.x * p.x + l.direction.y * p.y; }

}  // namespace hcp
