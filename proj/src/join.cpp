#include <algorithm>
#include <functional>
#include <map>
#include <string>

#include "hcp/errors.h"
#include "hcp/general_pack.h"

namespace hcp {

namespace {

// Position i such that (order[i], order[i+1]) is e, or -1.
int edge_position(const HamCycle& c, EdgeRef e) {
    int n = c.size();
    for (int i = 0; i < n; ++i)
        if (EdgeRef(c.order[i], c.order[(i + 1) % n]) == e) return i;
    return -1;
}

// Crossing bookkeeping for the union of two cycles, queried per join move.
class JoinChecker {
public:
    JoinChecker(const HamCycle& c1, const HamCycle& c2, const CrossingOracle& oracle) : oracle_(oracle) {
        for (const auto& e : c1.edges()) base_.push_back(e);
        for (const auto& e : c2.edges()) base_.push_back(e);
        std::sort(base_.begin(), base_.end());
        hits_.assign(base_.size(), {});
        for (std::size_t i = 0; i < base_.size(); ++i)
            for (std::size_t j = i + 1; j < base_.size(); ++j)
                if (oracle_(base_[i], base_[j])) {
                    hits_[i].push_back(static_cast<int>(j));
                    hits_[j].push_back(static_cast<int>(i));
                }
        for (std::size_t i = 0; i < base_.size(); ++i)
            if (hits_[i].size() > 1) crowded_.push_back(static_cast<int>(i));
    }

    bool ok(EdgeRef r1, EdgeRef r2, EdgeRef f1, EdgeRef f2) {
        int i1 = index(r1), i2 = index(r2);
        const auto& y1 = crossing(f1);
        const auto& y2 = crossing(f2);
        bool mutual = oracle_(f1, f2);
        auto live = [&](int g) { return g != i1 && g != i2; };
        int n1 = mutual, n2 = mutual;
        for (int g : y1) n1 += live(g);
        for (int g : y2) n2 += live(g);
        if (n1 > 1 || n2 > 1) return false;
        auto check = [&](int g) {
            if (!live(g)) return true;
            int c = 0;
            for (int h : hits_[g]) c += live(h);
            c += std::count(y1.begin(), y1.end(), g) + std::count(y2.begin(), y2.end(), g);
            return c <= 1;
        };
        return std::all_of(y1.begin(), y1.end(), check) && std::all_of(y2.begin(), y2.end(), check) &&
               std::all_of(crowded_.begin(), crowded_.end(), check);
    }

private:
    const CrossingOracle& oracle_;
    std::vector<EdgeRef> base_;
    std::vector<std::vector<int>> hits_;
    std::vector<int> crowded_;  // base edges crossed more than once
    std::map<EdgeRef, std::vector<int>> cache_;

    int index(EdgeRef e) const {
        return static_cast<int>(std::lower_bound(base_.begin(), base_.end(), e) - base_.begin());
    }
    const std::vector<int>& crossing(EdgeRef f) {
        auto it = cache_.find(f);
        if (it != cache_.end()) return it->second;
        std::vector<int> ys;
        for (std::size_t g = 0; g < base_.size(); ++g)
            if (oracle_(f, base_[g])) ys.push_back(static_cast<int>(g));
        return cache_.emplace(f, std::move(ys)).first->second;
    }
};

std::vector<std::pair<EdgeRef, EdgeRef>> crossing_pairs(const HamCycle& c, const CrossingOracle& oracle) {
    auto es = c.edges();
    std::vector<std::pair<EdgeRef, EdgeRef>> out;
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j)
            if (oracle(es[i], es[j])) out.emplace_back(es[i], es[j]);
    return out;
}

struct Variant {
    HamCycle c1, c2;
    std::vector<Uncrossing> uncrossings;
};

// Visits plain joins of the variant; false once visit asked to stop.
bool plain_joins(const Variant& v, const HamCycle& orig1, const HamCycle& orig2, const EdgeSet& forbidden,
                 const CrossingOracle& oracle, const std::function<bool(const JoinResult&)>& visit) {
    JoinChecker checker(v.c1, v.c2, oracle);
    EdgeSet original;
    for (const auto& e : orig1.edges()) original.insert(e);
    for (const auto& e : orig2.edges()) original.insert(e);
    int n1 = v.c1.size(), n2 = v.c2.size();
    for (int i = 0; i < n1; ++i) {
        int x1 = v.c1.order[i], y1 = v.c1.order[(i + 1) % n1];
        for (int j = 0; j < n2; ++j) {
            int x2 = v.c2.order[j], y2 = v.c2.order[(j + 1) % n2];
            for (int pattern = 0; pattern < 2; ++pattern) {
                EdgeRef f1 = pattern == 0 ? EdgeRef(x1, x2) : EdgeRef(x1, y2);
                EdgeRef f2 = pattern == 0 ? EdgeRef(y1, y2) : EdgeRef(y1, x2);
                if (forbidden.count(f1) || forbidden.count(f2)) continue;
                EdgeRef r1(x1, y1), r2(x2, y2);
                if (!checker.ok(r1, r2, f1, f2)) continue;

                HamCycle out;
                for (int t = 0; t < n1; ++t) out.order.push_back(v.c1.order[(i + 1 + t) % n1]);  // y1 .. x1
                if (pattern == 0)
                    for (int t = 0; t < n2; ++t) out.order.push_back(v.c2.order[(j - t + n2) % n2]);  // x2 .. y2
                else
                    for (int t = 0; t < n2; ++t) out.order.push_back(v.c2.order[(j + 1 + t) % n2]);  // y2 .. x2

                bool clean = true;
                for (const auto& e : out.edges())
                    if (!original.count(e) && forbidden.count(e)) clean = false;
                if (!clean) continue;
                JoinResult res{out, JoinMove{{r1, r2}, {f1, f2}, v.uncrossings}};
                if (!is_one_plane(res.cycle, oracle))
                    throw std::logic_error("join checker accepted a cycle that is not 1-plane");
                if (!visit(res)) return false;
            }
        }
    }
    return true;
}

}  // namespace

HamCycle uncross(const HamCycle& c, EdgeRef e, EdgeRef f, const CrossingOracle& oracle) {
    int i = edge_position(c, e), j = edge_position(c, f);
    if (i < 0 || j < 0 || !oracle(e, f))
        throw Error(Errc::DegenerateInput, "uncross needs two crossing edges of the cycle");
    if (i > j) std::swap(i, j);
    HamCycle out = c;
    std::reverse(out.order.begin() + i + 1, out.order.begin() + j + 1);
    if (!is_one_plane(out, oracle)) throw Error(Errc::StillCrossing, "reconnection " + to_string(out) + " is not 1-plane");
    return out;
}

void for_each_join(const HamCycle& c1, const HamCycle& c2, const EdgeSet& forbidden, const CrossingOracle& oracle,
                   const std::function<bool(const JoinResult&)>& visit) {
    if (!plain_joins({c1, c2, {}}, c1, c2, forbidden, oracle, visit)) return;
    auto uncrossed = [&](const HamCycle& c, int which) {
        std::vector<std::pair<HamCycle, Uncrossing>> out;
        for (auto [e, f] : crossing_pairs(c, oracle)) {
            try {
                HamCycle u = uncross(c, e, f, oracle);
                auto before = c.edges(), after = u.edges();
                std::vector<EdgeRef> added;
                for (const auto& x : after)
                    if (std::find(before.begin(), before.end(), x) == before.end()) added.push_back(x);
                out.push_back({u, Uncrossing{which, {e, f}, {added.at(0), added.at(1)}}});
            } catch (const Error& err) {
                if (err.code() != Errc::StillCrossing) throw;
            }
        }
        return out;
    };
    auto u1 = uncrossed(c1, 1);
    auto u2 = uncrossed(c2, 2);
    for (const auto& [c, u] : u1)
        if (!plain_joins({c, c2, {u}}, c1, c2, forbidden, oracle, visit)) return;
    for (const auto& [c, u] : u2)
        if (!plain_joins({c1, c, {u}}, c1, c2, forbidden, oracle, visit)) return;
    for (const auto& [ca, ua] : u1)
        for (const auto& [cb, ub] : u2)
            if (!plain_joins({ca, cb, {ua, ub}}, c1, c2, forbidden, oracle, visit)) return;
}

JoinResult join_cycles(const HamCycle& c1, const HamCycle& c2, const EdgeSet& forbidden, const CrossingOracle& oracle) {
    std::optional<JoinResult> first;
    for_each_join(c1, c2, forbidden, oracle, [&](const JoinResult& r) {
        first = r;
        return false;
    });
    if (first) return *first;
    throw Error(Errc::NoJoinFound, "no join for cycles of sizes " + std::to_string(c1.size()) + " and " +
                                       std::to_string(c2.size()) + " with " + std::to_string(forbidden.size()) +
                                       " forbidden edges");
}

}  // namespace hcp
