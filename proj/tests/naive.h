#pragma once

// Brute-force reference implementations. Deliberately share no code with the
// library: plain __int128 arithmetic, permutation enumeration, no pruning.

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "hcp/geometry.h"

namespace naive {

using P = hcp::Point;
using Edge = std::pair<int, int>;
using EdgeSet = std::set<Edge>;

inline int orient(P a, P b, P c) {
    __int128 v = static_cast<__int128>(b.x - a.x) * (c.y - a.y) - static_cast<__int128>(b.y - a.y) * (c.x - a.x);
    return (v > 0) - (v < 0);
}

// Proper crossing for points in general position.
inline bool cross(P a, P b, P c, P d) {
    if (a == c || a == d || b == c || b == d) return false;
    return orient(a, b, c) * orient(a, b, d) < 0 && orient(c, d, a) * orient(c, d, b) < 0;
}

inline Edge edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

inline std::vector<Edge> cycle_edges(const std::vector<int>& order) {
    std::vector<Edge> es;
    for (std::size_t i = 0; i < order.size(); ++i) es.push_back(edge(order[i], order[(i + 1) % order.size()]));
    return es;
}

inline std::vector<Edge> path_edges(const std::vector<int>& order) {
    std::vector<Edge> es;
    for (std::size_t i = 0; i + 1 < order.size(); ++i) es.push_back(edge(order[i], order[i + 1]));
    return es;
}

inline int max_crossings(const std::vector<Edge>& es, const std::vector<P>& pts) {
    int worst = 0;
    for (const auto& e : es) {
        int c = 0;
        for (const auto& f : es) c += cross(pts[e.first], pts[e.second], pts[f.first], pts[f.second]);
        worst = std::max(worst, c);
    }
    return worst;
}

inline bool hamiltonian(const std::vector<int>& order, int n) {
    if (static_cast<int>(order.size()) != n) return false;
    std::vector<int> s = order;
    std::sort(s.begin(), s.end());
    for (int i = 0; i < n; ++i)
        if (s[i] != i) return false;
    return true;
}

// Every 1-plane Hamiltonian cycle on pts, each as its edge set.
inline std::set<EdgeSet> one_plane_cycles(const std::vector<P>& pts) {
    int n = static_cast<int>(pts.size());
    std::set<EdgeSet> out;
    if (n < 3) return out;
    std::vector<int> rest(n - 1);
    std::iota(rest.begin(), rest.end(), 1);
    do {
        std::vector<int> order{0};
        order.insert(order.end(), rest.begin(), rest.end());
        auto es = cycle_edges(order);
        if (max_crossings(es, pts) <= 1) out.insert(EdgeSet(es.begin(), es.end()));
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

// Every 1-plane Hamiltonian path, one direction each (front < back).
inline std::vector<std::vector<int>> one_plane_paths(const std::vector<P>& pts) {
    int n = static_cast<int>(pts.size());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        if (perm.front() > perm.back()) continue;
        if (max_crossings(path_edges(perm), pts) <= 1) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// Largest family of pairwise edge-disjoint sets, plain recursion.
inline int max_disjoint(const std::vector<EdgeSet>& sets) {
    int best = 0;
    std::function<void(std::size_t, EdgeSet&, int)> rec = [&](std::size_t i, EdgeSet& used, int got) {
        best = std::max(best, got);
        if (got + static_cast<int>(sets.size() - i) <= best) return;
        for (std::size_t j = i; j < sets.size(); ++j) {
            bool free = std::none_of(sets[j].begin(), sets[j].end(), [&](const Edge& e) { return used.count(e) > 0; });
            if (!free) continue;
            for (const auto& e : sets[j]) used.insert(e);
            rec(j + 1, used, got + 1);
            for (const auto& e : sets[j]) used.erase(e);
        }
    };
    EdgeSet used;
    rec(0, used, 0);
    return best;
}

// Points (i, i^2): strictly convex, counter-clockwise in index order.
inline std::vector<P> parabola(int n) {
    std::vector<P> pts;
    for (int i = 0; i < n; ++i) pts.push_back({i, static_cast<hcp::Coord>(i) * i});
    return pts;
}

inline bool general_position(const std::vector<P>& pts) {
    int n = static_cast<int>(pts.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (pts[i] == pts[j]) return false;
            for (int k = j + 1; k < n; ++k)
                if (orient(pts[i], pts[j], pts[k]) == 0) return false;
        }
    return true;
}

inline bool edge_disjoint(const std::vector<std::vector<int>>& cycles) {
    EdgeSet seen;
    for (const auto& c : cycles)
        for (const auto& e : cycle_edges(c))
            if (!seen.insert(e).second) return false;
    return true;
}

}  // namespace naive
