#include "hcp/cycle.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "hcp/errors.h"

namespace hcp {

std::vector<EdgeRef> HamCycle::edges() const {
    std::vector<EdgeRef> out;
    int n = size();
    if (n < 2) return out;
    if (n == 2) return {EdgeRef(order[0], order[1])};
    out.reserve(n);
    for (int i = 0; i < n; ++i) out.emplace_back(order[i], order[(i + 1) % n]);
    return out;
}

HamCycle canonical(const HamCycle& c) {
    if (c.order.size() < 3) return c;
    std::vector<int> o = c.order;
    std::rotate(o.begin(), std::min_element(o.begin(), o.end()), o.end());
    if (o.back() < o[1]) std::reverse(o.begin() + 1, o.end());
    return HamCycle{o};
}

bool verify_hamiltonian(const HamCycle& c, int n) {
    if (n < 3 || c.size() != n) return false;
    std::vector<char> seen(n, 0);
    for (int v : c.order) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

bool spans_exactly(const HamCycle& c, std::span<const int> subset) {
    if (c.order.size() != subset.size()) return false;
    std::vector<int> a = c.order;
    std::vector<int> b(subset.begin(), subset.end());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b && std::adjacent_find(a.begin(), a.end()) == a.end();
}

CrossReport crossing_report(const HamCycle& c, const CrossingOracle& oracle) {
    CrossReport r;
    auto es = c.edges();
    std::vector<int> cnt(es.size(), 0);
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j)
            if (oracle(es[i], es[j])) {
                ++cnt[i];
                ++cnt[j];
            }
    for (std::size_t i = 0; i < es.size(); ++i) {
        r.counts[es[i]] = cnt[i];
        r.max_count = std::max(r.max_count, cnt[i]);
    }
    return r;
}

bool edges_one_plane(std::span<const EdgeRef> es, const CrossingOracle& oracle) {
    std::vector<int> cnt(es.size(), 0);
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j)
            if (oracle(es[i], es[j]) && (++cnt[i] > 1 || ++cnt[j] > 1)) return false;
    return true;
}

bool is_one_plane(const HamCycle& c, const CrossingOracle& oracle) {
    auto es = c.edges();
    return edges_one_plane(es, oracle);
}

bool are_edge_disjoint(const HamCycle& a, const HamCycle& b) {
    auto ea = a.edges();
    std::set<EdgeRef> sa(ea.begin(), ea.end());
    for (const auto& e : b.edges())
        if (sa.count(e)) return false;
    return true;
}

PackingReport verify_packing(const Packing& p, int n, const CrossingOracle& oracle) {
    PackingReport r;
    std::size_t k = p.cycles.size();
    r.shared.assign(k, std::vector<std::vector<EdgeRef>>(k));
    std::vector<std::set<EdgeRef>> sets(k);
    for (std::size_t i = 0; i < k; ++i) {
        const auto& c = p.cycles[i];
        bool ham = verify_hamiltonian(c, n);
        r.hamiltonian.push_back(ham);
        r.max_crossings.push_back(ham ? crossing_report(c, oracle).max_count : -1);
        if (!ham || r.max_crossings.back() > 1) r.ok = false;
        if (ham)
            for (const auto& e : c.edges()) sets[i].insert(e);
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            std::set_intersection(sets[i].begin(), sets[i].end(), sets[j].begin(), sets[j].end(),
                                  std::back_inserter(r.shared[i][j]));
            if (!r.shared[i][j].empty()) r.ok = false;
        }
    return r;
}

bool is_boundary(EdgeRef e, int n) { return e.b - e.a == 1 || (e.a == 0 && e.b == n - 1); }

int boundary_edge_count(const HamCycle& c, int n) {
    int cnt = 0;
    for (const auto& e : c.edges()) cnt += is_boundary(e, n);
    return cnt;
}

int boundary_edge_count(const PointSet& ps, const HamCycle& c) {
    int n = ps.size();
    switch (ps.config) {
        case Config::Convex: return boundary_edge_count(c, n);
        case Config::Wheel: {
            auto lab = ps.labels();
            int cnt = 0;
            for (const auto& e : c.edges()) {
                EdgeRef le(lab[e.a], lab[e.b]);
                if (le.b != n - 1 && is_boundary(le, n - 1)) ++cnt;
            }
            return cnt;
        }
        case Config::General: break;
    }
    throw Error(Errc::ConfigMismatch, "boundary edges are undefined for general point sets");
}

bool check_lemma1(const HamCycle& c, int n) {
    return boundary_edge_count(c, n) >= (n % 2 == 0 ? 2 : 3);
}

namespace {

using EdgeSet = std::set<EdgeRef>;

bool has_edge(const EdgeSet& es, int u, int v, int n) {
    u = ((u % n) + n) % n;
    v = ((v % n) + n) % n;
    return u != v && es.count(EdgeRef(u, v)) > 0;
}

// Boundary edges (k, k+1) of `es` with k running cyclically from i up to j - 1.
int side_count(const EdgeSet& es, int i, int j, int n) {
    int cnt = 0;
    for (int k = i; k != j; k = (k + 1) % n) cnt += has_edge(es, k, k + 1, n);
    return cnt;
}

EdgeSet edge_set(const HamCycle& c) {
    auto es = c.edges();
    return EdgeSet(es.begin(), es.end());
}

EdgeSet path_edges(std::span<const int> path) {
    EdgeSet es;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) es.insert(EdgeRef(path[i], path[i + 1]));
    return es;
}

}  // namespace

bool check_prop2(const HamCycle& c, int n) {
    auto es = edge_set(c);
    for (const auto& e : es) {
        if (is_boundary(e, n)) continue;
        for (auto [i, j] : {std::pair{e.a, e.b}, std::pair{e.b, e.a}}) {
            int part = (j - i + n) % n + 1;
            if (side_count(es, i, j, n) < (part % 2 ? 1 : 2)) return false;
        }
    }
    return true;
}

bool check_prop3(const HamCycle& c, int n) {
    if (n < 4) return true;
    auto es = edge_set(c);
    std::vector<int> ks;
    for (int k = 0; k < n; ++k)
        if (has_edge(es, k, k + 1, n)) ks.push_back(k);
    auto companions = [&](int k) { return has_edge(es, k, k + 2, n) && has_edge(es, k + 1, k - 1, n); };
    if (ks.size() == 2) return std::all_of(ks.begin(), ks.end(), companions);
    if (ks.size() == 3)
        return std::any_of(ks.begin(), ks.end(), [&](int k) {
            bool single = !has_edge(es, k - 1, k, n) && !has_edge(es, k + 1, k + 2, n);
            return single && companions(k);
        });
    return true;
}

bool lemma2_count_clause(std::span<const int> path, int n) {
    if (path.size() < 2) return true;
    auto es = path_edges(path);
    int cnt = 0;
    for (const auto& e : es) cnt += is_boundary(e, n);
    int gap = (path.front() - path.back() + n) % n;
    bool adjacent = gap == 1 || gap == n - 1;
    return cnt >= (adjacent ? 1 : 2);
}

bool lemma2_side_clause(std::span<const int> path, int n) {
    auto es = path_edges(path);
    for (const auto& e : es) {
        if (is_boundary(e, n)) continue;
        if (side_count(es, e.a, e.b, n) < 1 || side_count(es, e.b, e.a, n) < 1) return false;
    }
    return true;
}

bool check_lemma2_path(std::span<const int> path, int n) {
    return lemma2_count_clause(path, n) && lemma2_side_clause(path, n);
}

int radial_edge_count(const HamCycle& c, int m) {
    int cnt = 0;
    for (const auto& e : c.edges()) cnt += e.b == m;
    return cnt;
}

bool check_wheel_structure(const HamCycle& c, int m) {
    auto all = edge_set(c);
    EdgeSet rim;
    for (const auto& e : all)
        if (e.b != m) rim.insert(e);
    int boundary = 0;
    for (const auto& e : rim) boundary += is_boundary(e, m);
    if (boundary < 2) return false;
    for (const auto& e : rim) {
        if (is_boundary(e, m)) continue;
        if (side_count(rim, e.a, e.b, m) < 1 || side_count(rim, e.b, e.a, m) < 1) return false;
    }
    return true;
}

std::string to_string(const HamCycle& c) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < c.order.size(); ++i) os << (i ? "," : "") << c.order[i];
    os << ']';
    return os.str();
}

std::string to_string(EdgeRef e) {
    return "(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
}

}  // namespace hcp
