#include <functional>
#include <algorithm>
#include <deque>
#include <numeric>
#include <string>
#include <utility>

#include "hcp/errors.h"
#include "hcp/general_pack.h"

namespace hcp {

namespace {

// Ladder march. Invariant: every placed edge stays outside the interior of
// K = conv(R + ends), so only edges of one move can cross each other.
class March {
public:
    March(const PointSet& ps, std::span<const int> subset, const Bisection& bis, const AlgorithmAOptions& opt)
        : ps_(ps), P_(ps.points), subset_(subset.begin(), subset.end()), forbidden_(opt.forbidden),
          budget_(opt.node_budget), side_(ps.size(), 0), in_r_(ps.size(), 0), rank_(ps.size(), 0) {
        for (int v : bis.left) side_[v] = 1;
        for (int v : bis.right) side_[v] = -1;
        dx_ = bis.line.direction.x;
        dy_ = bis.line.direction.y;
        std::vector<std::pair<BigInt, int>> h;
        for (int v : subset_) h.emplace_back(dx_ * P_[v].x + dy_ * P_[v].y, v);
        std::sort(h.begin(), h.end());
        for (std::size_t i = 0; i < h.size(); ++i)
            rank_[h[i].second] = (i > 0 && h[i].first == h[i - 1].first) ? rank_[h[i - 1].second] : static_cast<int>(i);
    }

    bool run(std::vector<int>& cycle, std::optional<std::pair<int, int>>& stone, int& extensions) {
        for (auto [a, b] : start_edges()) {
            if (blocked(a, b)) continue;
            reset(a, b);
            if (step()) {
                std::vector<int> order(path_.begin(), path_.end());
                std::rotate(order.begin(), std::find(order.begin(), order.end(), a), order.end());
                cycle = order;
                stone = stone_;
                extensions = extensions_;
                return true;
            }
            if (nodes_ > budget_) break;
        }
        return false;
    }

    std::size_t nodes() const { return nodes_; }

private:
    struct Step {
        bool front;
        int v;
    };
    struct Move {
        std::vector<Step> steps;
        bool ladder;
    };

    const PointSet& ps_;
    const std::vector<Point>& P_;
    std::vector<int> subset_;
    const EdgeSet* forbidden_;
    std::size_t budget_;
    std::size_t nodes_ = 0;
    std::vector<int> side_;
    std::vector<char> in_r_;
    std::vector<int> rank_;
    BigInt dx_, dy_;

    std::deque<int> path_;
    int r_count_ = 0;
    int extensions_ = 0;
    std::optional<std::pair<int, int>> stone_;

    bool blocked(int u, int v) const { return forbidden_ && forbidden_->count(EdgeRef(u, v)); }

    std::vector<int> remaining() const {
        std::vector<int> r;
        for (int v : subset_)
            if (in_r_[v]) r.push_back(v);
        return r;
    }

    void reset(int a, int b) {
        path_ = {a, b};
        for (int v : subset_) in_r_[v] = 1;
        in_r_[a] = in_r_[b] = 0;
        r_count_ = static_cast<int>(subset_.size()) - 2;
        extensions_ = 0;
        stone_.reset();
    }

    // Hull edges, the upper bridge first, then the lower one, then the rest CCW.
    std::vector<std::pair<int, int>> start_edges() const {
        auto hull = convex_hull(P_, subset_);
        std::size_t h = hull.size();
        std::size_t first = 0;
        for (std::size_t i = 0; i < h; ++i)
            if (side_[hull[i]] == -1 && side_[hull[(i + 1) % h]] == 1) first = i;
        std::vector<std::pair<int, int>> out;
        std::vector<std::pair<int, int>> rest;
        for (std::size_t t = 0; t < h; ++t) {
            int x = hull[(first + t) % h], y = hull[(first + t + 1) % h];
            // Left end first so the cycle reads from P1 towards P2.
            auto e = side_[y] == 1 ? std::pair{y, x} : std::pair{x, y};
            if (side_[x] != side_[y]) out.push_back(e);
            else rest.push_back(e);
        }
        out.insert(out.end(), rest.begin(), rest.end());
        return out;
    }

    int down_sign(int x, int y) const {
        BigInt ex = BigInt(P_[y].x) - P_[x].x, ey = BigInt(P_[y].y) - P_[x].y;
        BigInt c = ex * (-dy_) - ey * (-dx_);
        return c > 0 ? 1 : (c < 0 ? -1 : 0);
    }
    // Strictly farther from the baseline than line(x, y).
    bool above(int p, int x, int y) const {
        int down = down_sign(x, y);
        int s = orientation_sign(P_[x], P_[y], P_[p]);
        return down != 0 && s != 0 && s == -down;
    }
    bool below(int p, int x, int y) const {
        int down = down_sign(x, y);
        int s = orientation_sign(P_[x], P_[y], P_[p]);
        return down != 0 && s == down;
    }

    // Edge from `from` to u leaves conv(pts) at u without entering it.
    bool visible(const std::vector<int>& hull, int u, int from) const {
        if (hull.size() < 3) return true;
        auto it = std::find(hull.begin(), hull.end(), u);
        if (it == hull.end()) return false;
        std::size_t i = static_cast<std::size_t>(it - hull.begin());
        int next = hull[(i + 1) % hull.size()];
        int prev = hull[(i + hull.size() - 1) % hull.size()];
        return !(orientation_sign(P_[u], P_[next], P_[from]) > 0 && orientation_sign(P_[prev], P_[u], P_[from]) > 0);
    }

    std::vector<int> hull_with(int extra) const {
        auto pts = remaining();
        if (extra >= 0) pts.push_back(extra);
        if (pts.size() < 3) return pts;
        return convex_hull(P_, pts);
    }

    bool valid_single(bool front, int u) const {
        int from = front ? path_.front() : path_.back();
        int other = front ? path_.back() : path_.front();
        if (!in_r_[u] || blocked(from, u)) return false;
        return visible(hull_with(other), u, from);
    }

    void apply(const Step& s) {
        int from = s.front ? path_.front() : path_.back();
        (void)from;
        if (s.front) path_.push_front(s.v);
        else path_.push_back(s.v);
        in_r_[s.v] = 0;
        --r_count_;
    }
    void undo(const Step& s) {
        if (s.front) path_.pop_front();
        else path_.pop_back();
        in_r_[s.v] = 1;
        ++r_count_;
    }

    // Sequential validity of a multi-step move, restoring the state.
    bool valid_sequence(const std::vector<Step>& steps) {
        std::size_t done = 0;
        bool ok = true;
        for (const auto& s : steps) {
            if (!valid_single(s.front, s.v)) {
                ok = false;
                break;
            }
            apply(s);
            ++done;
        }
        while (done > 0) undo(steps[--done]);
        return ok;
    }

    bool valid_x(int v, int w) const {
        int a = path_.front(), b = path_.back();
        if (v == w || !in_r_[v] || !in_r_[w] || blocked(a, v) || blocked(b, w)) return false;
        auto hull = hull_with(-1);
        return visible(hull, v, a) && visible(hull, w, b);
    }

    std::optional<Move> ladder_move() {
        int a = path_.front(), b = path_.back();
        if (side_[a] == side_[b]) return std::nullopt;
        bool a_is_1 = side_[a] == 1;
        int e1 = a_is_1 ? a : b, e2 = a_is_1 ? b : a;
        auto rem = remaining();
        int v1 = -1, v2 = -1;
        if (rem.size() == 2) {
            if (side_[rem[0]] == side_[rem[1]]) return std::nullopt;
            v1 = side_[rem[0]] == 1 ? rem[0] : rem[1];
            v2 = side_[rem[0]] == 1 ? rem[1] : rem[0];
        } else {
            auto hull = convex_hull(P_, rem);
            for (std::size_t i = 0; i < hull.size(); ++i) {
                int x = hull[i], y = hull[(i + 1) % hull.size()];
                if (side_[x] == -1 && side_[y] == 1) {
                    v1 = y;
                    v2 = x;
                }
            }
            if (v1 < 0) return std::nullopt;
        }
        // Both ends above the bridge: link across.
        if (above(e1, v1, v2) && above(e2, v1, v2)) {
            int to_a = a_is_1 ? v2 : v1;
            int to_b = a_is_1 ? v1 : v2;
            if (valid_x(to_a, to_b)) return Move{{{true, to_a}, {false, to_b}}, true};
            return std::nullopt;
        }
        // One end lags: the other side's bridge vertex takes it over.
        for (int i = 1; i <= 2; ++i) {
            int vi = i == 1 ? v1 : v2, ei = i == 1 ? e1 : e2;
            int vo = i == 1 ? v2 : v1, eo = i == 1 ? e2 : e1;
            if (!above(eo, vi, ei)) continue;
            bool all_below = std::all_of(rem.begin(), rem.end(), [&](int r) { return r == vi || below(r, vi, ei); });
            if (!all_below) continue;
            bool front = eo == a;
            std::vector<Step> steps{{front, vi}, {front, vo}};
            if (valid_sequence(steps)) return Move{steps, true};
        }
        return std::nullopt;
    }

    std::vector<Move> generic_moves() {
        int a = path_.front(), b = path_.back();
        auto rem = remaining();
        struct Keyed {
            int cat;
            int height;
            int kind;
            std::vector<int> targets;
            Move m;
        };
        std::vector<Keyed> ks;
        auto crosses_l = [&](int u, int v) { return side_[u] != side_[v]; };
        for (int u : rem) {
            if (valid_single(true, u))
                ks.push_back({crosses_l(a, u) ? 0 : 1, -rank_[u], 1, {u}, Move{{{true, u}}, false}});
            if (valid_single(false, u))
                ks.push_back({crosses_l(b, u) ? 0 : 1, -rank_[u], 1, {u}, Move{{{false, u}}, false}});
        }
        for (int v : rem)
            for (int w : rem) {
                if (!valid_x(v, w)) continue;
                int cat = crosses_l(a, v) && crosses_l(b, w) ? 0 : 1;
                ks.push_back({cat, -std::max(rank_[v], rank_[w]), 0, {v, w}, Move{{{true, v}, {false, w}}, false}});
            }
        std::stable_sort(ks.begin(), ks.end(), [](const Keyed& x, const Keyed& y) {
            return std::tie(x.cat, x.height, x.kind, x.targets) < std::tie(y.cat, y.height, y.kind, y.targets);
        });
        std::vector<Move> out;
        for (auto& k : ks) out.push_back(std::move(k.m));
        return out;
    }

    bool finish() {
        int a = path_.front(), b = path_.back();
        if (r_count_ == 0) {
            if (blocked(a, b)) return false;
            if (side_[a] == side_[b]) stone_ = std::pair{a, b};
            return true;
        }
        int u = remaining().front();
        if (blocked(a, u) || blocked(u, b)) return false;
        path_.push_back(u);
        in_r_[u] = 0;
        r_count_ = 0;
        if (side_[b] == side_[u]) stone_ = std::pair{b, u};
        else if (side_[a] == side_[u]) stone_ = std::pair{a, u};
        return true;
    }

    bool step() {
        if (++nodes_ > budget_) return false;
        if (r_count_ <= 1) return finish();
        std::vector<Move> moves;
        auto pm = ladder_move();
        if (pm) moves.push_back(*pm);
        for (auto& m : generic_moves()) moves.push_back(std::move(m));
        for (const auto& m : moves) {
            for (const auto& s : m.steps) apply(s);
            if (!m.ladder) ++extensions_;
            if (step()) return true;
            if (!m.ladder) --extensions_;
            for (auto it = m.steps.rbegin(); it != m.steps.rend(); ++it) undo(*it);
            if (nodes_ > budget_) return false;
        }
        return false;
    }
};

}  // namespace

AlgorithmAResult algorithm_a(const PointSet& ps, std::span<const int> subset_in, const AlgorithmAOptions& opt) {
    std::vector<int> subset(subset_in.begin(), subset_in.end());
    std::sort(subset.begin(), subset.end());
    if (subset.size() < 3) throw Error(Errc::DegenerateInput, "algorithm_a needs at least 3 points");
    AlgorithmAResult res;
    res.bisection = opt.bisection ? *opt.bisection : bisecting_line(ps, subset);

    March march(ps, subset, res.bisection, opt);
    std::optional<std::pair<int, int>> stone;
    if (!march.run(res.cycle.order, stone, res.extension_moves))
        throw Error(Errc::MarchFailed, "no march on " + std::to_string(subset.size()) + " points after " +
                                           std::to_string(march.nodes()) + " nodes");
    if (stone) res.stones.push_back({stone->first, stone->second, opt.part_id});

    auto oracle = CrossingOracle::geometric(ps.points);
    if (!spans_exactly(res.cycle, subset) || !is_one_plane(res.cycle, oracle))
        throw Error(Errc::MarchFailed, "march produced an invalid cycle " + to_string(res.cycle));
    if (opt.forbidden)
        for (const auto& e : res.cycle.edges())
            if (opt.forbidden->count(e)) throw Error(Errc::MarchFailed, "march used forbidden edge " + to_string(e));
    return res;
}

std::size_t for_each_1phc(const PointSet& ps, std::span<const int> subset_in, const EdgeSet* forbidden,
                          std::size_t node_budget, const std::function<bool(const HamCycle&)>& visit) {
    std::vector<int> names(subset_in.begin(), subset_in.end());
    std::sort(names.begin(), names.end());
    int s = static_cast<int>(names.size());
    if (s < 3) return 0;
    const auto& P = ps.points;

    auto eid = [s](int u, int v) { return u < v ? u * s + v : v * s + u; };
    std::vector<signed char> cross(static_cast<std::size_t>(s) * s * s * s, -1);
    auto crosses = [&](int a, int b, int c, int d) {
        auto& slot = cross[static_cast<std::size_t>(eid(a, b)) * s * s + eid(c, d)];
        if (slot < 0) slot = segments_properly_cross(P[names[a]], P[names[b]], P[names[c]], P[names[d]]) ? 1 : 0;
        return slot == 1;
    };
    auto allowed = [&](int u, int v) { return !forbidden || !forbidden->count(EdgeRef(names[u], names[v])); };

    std::vector<std::vector<int>> near(s);
    for (int u = 0; u < s; ++u) {
        for (int v = 0; v < s; ++v)
            if (v != u) near[u].push_back(v);
        auto d2 = [&](int v) {
            BigInt dx = BigInt(P[names[v]].x) - P[names[u]].x, dy = BigInt(P[names[v]].y) - P[names[u]].y;
            return BigInt(dx * dx + dy * dy);
        };
        std::vector<BigInt> key(s);
        for (int v : near[u]) key[v] = d2(v);
        std::stable_sort(near[u].begin(), near[u].end(), [&](int x, int y) { return key[x] < key[y]; });
    }

    std::vector<std::pair<int, int>> edges;
    std::vector<int> cnt;
    std::vector<int> partner;
    auto push = [&](int u, int v) {
        int hit = -1;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            auto [c, d] = edges[i];
            if (c == u || c == v || d == u || d == v || !crosses(u, v, c, d)) continue;
            if (hit >= 0 || cnt[i] >= 1) return false;
            hit = static_cast<int>(i);
        }
        edges.emplace_back(u, v);
        cnt.push_back(hit >= 0 ? 1 : 0);
        partner.push_back(hit);
        if (hit >= 0) cnt[hit] = 1;
        return true;
    };
    auto pop = [&]() {
        if (partner.back() >= 0) cnt[partner.back()] = 0;
        edges.pop_back();
        cnt.pop_back();
        partner.pop_back();
    };

    std::vector<int> path{0};
    std::vector<char> used(s, 0);
    used[0] = 1;
    std::size_t nodes = 0;
    bool stop = false;
    auto rec = [&](auto&& self) -> void {
        if (++nodes > node_budget) {
            stop = true;
            return;
        }
        int u = path.back();
        if (static_cast<int>(path.size()) == s) {
            if (path[1] > path.back() || !allowed(u, 0) || !push(u, 0)) return;
            HamCycle c;
            for (int v : path) c.order.push_back(names[v]);
            if (!visit(c)) stop = true;
            pop();
            return;
        }
        for (int v : near[u]) {
            if (used[v] || !allowed(u, v) || !push(u, v)) continue;
            used[v] = 1;
            path.push_back(v);
            self(self);
            path.pop_back();
            used[v] = 0;
            pop();
            if (stop) return;
        }
    };
    rec(rec);
    return nodes;
}

std::optional<HamCycle> search_1phc(const PointSet& ps, std::span<const int> subset, const EdgeSet* forbidden,
                                    std::size_t node_budget) {
    std::optional<HamCycle> out;
    for_each_1phc(ps, subset, forbidden, node_budget, [&](const HamCycle& c) {
        out = c;
        return false;
    });
    return out;
}

}  // namespace hcp
