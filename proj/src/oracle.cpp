#include "hcp/oracle.h"

#include <algorithm>
#include <bitset>
#include <cstdlib>
#include <numeric>

#include "hcp/errors.h"

namespace hcp {

int default_oracle_cap() {
    if (const char* env = std::getenv("HCP_MAX_ORACLE_N")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 3) return static_cast<int>(std::min<long>(v, kOracleHardMax));
    }
    return 9;
}

namespace {

void check_cap(int size, int cap) {
    int limit = std::min(cap, kOracleHardMax);
    if (size > limit)
        throw Error(Errc::TooLarge, "oracle cap is " + std::to_string(limit) + ", got " + std::to_string(size));
}

// Local labels 0..s-1 with a dense crossing table.
class LocalGraph {
public:
    explicit LocalGraph(int s, const std::function<bool(int, int, int, int)>& cross) : s_(s), id_(s * s, -1) {
        for (int u = 0; u < s; ++u)
            for (int v = u + 1; v < s; ++v) {
                id_[u * s + v] = id_[v * s + u] = static_cast<int>(ends_.size());
                ends_.push_back({u, v});
            }
        int e = static_cast<int>(ends_.size());
        cross_.assign(e * e, 0);
        for (int i = 0; i < e; ++i)
            for (int j = i + 1; j < e; ++j) {
                auto [a, b] = ends_[i];
                auto [c, d] = ends_[j];
                if (a == c || a == d || b == c || b == d) continue;
                cross_[i * e + j] = cross_[j * e + i] = cross(a, b, c, d);
            }
    }

    int size() const { return s_; }
    int edge_count() const { return static_cast<int>(ends_.size()); }
    int id(int u, int v) const { return id_[u * s_ + v]; }
    bool crosses(int i, int j) const { return cross_[i * edge_count() + j] != 0; }

private:
    int s_;
    std::vector<int> id_;
    std::vector<std::pair<int, int>> ends_;
    std::vector<char> cross_;
};

// Incremental crossing bookkeeping for a growing 1-plane edge list.
class PlaneStack {
public:
    explicit PlaneStack(const LocalGraph& g) : g_(g), cnt_(g.edge_count(), 0) {}

    bool push(int e) {
        int hit = -1;
        for (int f : edges_) {
            if (!g_.crosses(e, f)) continue;
            if (hit >= 0 || cnt_[f] >= 1) return false;
            hit = f;
        }
        if (hit >= 0) {
            cnt_[hit] = 1;
            cnt_[e] = 1;
        }
        edges_.push_back(e);
        partner_.push_back(hit);
        return true;
    }

    void pop() {
        int e = edges_.back();
        int hit = partner_.back();
        if (hit >= 0) {
            cnt_[hit] = 0;
            cnt_[e] = 0;
        }
        edges_.pop_back();
        partner_.pop_back();
    }

private:
    const LocalGraph& g_;
    std::vector<int> cnt_;
    std::vector<int> edges_;
    std::vector<int> partner_;
};

template <class Visit>
void walk_paths(const LocalGraph& g, bool closed, Visit&& visit) {
    int s = g.size();
    PlaneStack stack(g);
    std::vector<int> path;
    std::vector<char> used(s, 0);
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(path.size()) == s) {
            if (!closed) {
                if (path.front() < path.back()) visit(path);
                return;
            }
            if (s >= 3 && path[1] > path.back()) return;
            if (s < 3) return;
            int e = g.id(path.back(), path.front());
            if (stack.push(e)) {
                visit(path);
                stack.pop();
            }
            return;
        }
        for (int v = 0; v < s; ++v) {
            if (used[v]) continue;
            if (!path.empty()) {
                if (!stack.push(g.id(path.back(), v))) continue;
            }
            used[v] = 1;
            path.push_back(v);
            self(self);
            path.pop_back();
            used[v] = 0;
            if (path.size() >= 1) stack.pop();
        }
    };
    if (closed) {
        // Vertex 0 first kills rotations.
        used[0] = 1;
        path.push_back(0);
        rec(rec);
    } else {
        rec(rec);
    }
}

std::vector<HamCycle> enumerate_local(const LocalGraph& g, std::span<const int> names) {
    std::vector<HamCycle> out;
    walk_paths(g, true, [&](const std::vector<int>& path) {
        HamCycle c;
        for (int v : path) c.order.push_back(names[v]);
        out.push_back(canonical(c));
    });
    std::sort(out.begin(), out.end(), [](const HamCycle& a, const HamCycle& b) { return a.order < b.order; });
    return out;
}

long long ham_cycle_total(int s) {
    if (s < 3) return 0;
    long long f = 1;
    for (int i = 2; i < s; ++i) f *= i;
    return f / 2;
}

}  // namespace

std::vector<HamCycle> enumerate_1phc(const PointSet& ps, std::span<const int> subset, int cap) {
    int s = static_cast<int>(subset.size());
    check_cap(s, cap);
    if (s < 3) return {};
    std::vector<int> names(subset.begin(), subset.end());
    std::sort(names.begin(), names.end());
    auto oracle = CrossingOracle::for_point_set(ps);
    LocalGraph g(s, [&](int a, int b, int c, int d) {
        return oracle(EdgeRef(names[a], names[b]), EdgeRef(names[c], names[d]));
    });
    return enumerate_local(g, names);
}

std::vector<HamCycle> enumerate_1phc(const PointSet& ps, std::span<const int> subset) {
    return enumerate_1phc(ps, subset, default_oracle_cap());
}

std::vector<HamCycle> enumerate_1phc(const CrossingOracle& oracle, int cap) {
    int n = oracle.size();
    check_cap(n, cap);
    if (n < 3) return {};
    std::vector<int> names(n);
    std::iota(names.begin(), names.end(), 0);
    LocalGraph g(n, [&](int a, int b, int c, int d) { return oracle(EdgeRef(a, b), EdgeRef(c, d)); });
    return enumerate_local(g, names);
}

std::vector<std::vector<int>> enumerate_1plane_paths(const CrossingOracle& oracle, int cap) {
    int n = oracle.size();
    check_cap(n, cap);
    LocalGraph g(n, [&](int a, int b, int c, int d) { return oracle(EdgeRef(a, b), EdgeRef(c, d)); });
    std::vector<std::vector<int>> out;
    walk_paths(g, false, [&](const std::vector<int>& path) { out.push_back(path); });
    return out;
}

EnumerationReport max_packing_exact(const std::vector<HamCycle>& cycles, int n) {
    using Mask = std::bitset<kOracleHardMax * (kOracleHardMax - 1) / 2>;
    if (n > kOracleHardMax) throw Error(Errc::TooLarge, "packing search beyond the hard cap");
    EnumerationReport rep;
    rep.n = n;
    rep.total_ham_cycles = ham_cycle_total(n);
    rep.one_plane_count = static_cast<long long>(cycles.size());

    auto edge_id = [n](EdgeRef e) { return e.a * n - e.a * (e.a + 1) / 2 + (e.b - e.a - 1); };
    std::vector<Mask> masks;
    for (const auto& c : cycles) {
        Mask m;
        for (const auto& e : c.edges()) m.set(edge_id(e));
        masks.push_back(m);
    }
    int total_edges = n * (n - 1) / 2;
    int per_cycle = std::max(n, 1);

    std::vector<int> best;
    std::vector<int> chosen;
    auto rec = [&](auto&& self, const std::vector<int>& cands, const Mask& used) -> void {
        if (chosen.size() > best.size()) best = chosen;
        int cnt = static_cast<int>(chosen.size());
        int free_edges = total_edges - static_cast<int>(used.count());
        int edge_bound = cnt + free_edges / per_cycle;
        if (edge_bound <= static_cast<int>(best.size())) return;
        for (std::size_t t = 0; t < cands.size(); ++t) {
            int remaining = static_cast<int>(cands.size() - t);
            if (cnt + remaining <= static_cast<int>(best.size())) return;
            int i = cands[t];
            std::vector<int> next;
            for (std::size_t u = t + 1; u < cands.size(); ++u)
                if ((masks[cands[u]] & masks[i]).none()) next.push_back(cands[u]);
            chosen.push_back(i);
            self(self, next, used | masks[i]);
            chosen.pop_back();
        }
    };
    std::vector<int> all(cycles.size());
    std::iota(all.begin(), all.end(), 0);
    rec(rec, all, Mask{});

    rep.max_packing_size = static_cast<int>(best.size());
    for (int i : best) rep.witness.cycles.push_back(cycles[i]);
    return rep;
}

EnumerationReport max_packing_exact(const PointSet& ps, std::span<const int> subset, int cap) {
    auto cycles = enumerate_1phc(ps, subset, cap);
    // Relabel to 0..s-1 for the bitmask search, then map back.
    std::vector<int> names(subset.begin(), subset.end());
    std::sort(names.begin(), names.end());
    std::vector<int> local(ps.size(), -1);
    for (std::size_t i = 0; i < names.size(); ++i) local[names[i]] = static_cast<int>(i);
    std::vector<HamCycle> relabeled;
    for (const auto& c : cycles) {
        HamCycle r;
        for (int v : c.order) r.order.push_back(local[v]);
        relabeled.push_back(r);
    }
    auto rep = max_packing_exact(relabeled, static_cast<int>(names.size()));
    for (auto& c : rep.witness.cycles)
        for (int& v : c.order) v = names[v];
    return rep;
}

EnumerationReport max_packing_exact(const PointSet& ps, int cap) {
    std::vector<int> all(ps.size());
    std::iota(all.begin(), all.end(), 0);
    return max_packing_exact(ps, all, cap);
}

SweepReport property_sweep(const PointSet& ps, int cap) {
    if (ps.config == Config::General)
        throw Error(Errc::ConfigMismatch, "property sweep needs a convex or wheel set");
    SweepReport rep;
    rep.n = ps.size();
    rep.config = ps.config;
    std::vector<int> all(ps.size());
    std::iota(all.begin(), all.end(), 0);
    auto cycles = enumerate_1phc(ps, all, cap);
    rep.cycles_checked = static_cast<long long>(cycles.size());
    int n = ps.size();
    auto note = [&](long long& counter, const char* what, const HamCycle& c) {
        ++counter;
        rep.counterexamples.push_back(std::string(what) + " " + to_string(c));
    };
    if (ps.config == Config::Convex) {
        for (const auto& c : cycles) {
            if (!check_lemma1(c, n)) note(rep.lemma1_violations, "lemma1", c);
            if (!check_prop2(c, n)) note(rep.prop2_violations, "prop2", c);
            if (!check_prop3(c, n)) note(rep.prop3_violations, "prop3", c);
        }
    } else {
        auto lab = ps.labels();
        int m = n - 1;
        for (const auto& c : cycles) {
            HamCycle lc;
            for (int v : c.order) lc.order.push_back(lab[v]);
            if (radial_edge_count(lc, m) != 2) note(rep.radial_violations, "radial", c);
            if (!check_wheel_structure(lc, m)) note(rep.wheel_structure_violations, "wheel-structure", c);
        }
    }
    return rep;
}

}  // namespace hcp
