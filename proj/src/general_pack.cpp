#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "hcp/errors.h"
#include "hcp/general_pack.h"

namespace hcp {

namespace {

// Parts sorted by the angle of their centroid about the global centroid.
std::vector<std::size_t> angular_order(const PointSet& ps, const std::vector<std::vector<int>>& parts) {
    BigInt sx = 0, sy = 0;
    for (const auto& p : ps.points) {
        sx += p.x;
        sy += p.y;
    }
    BigInt n = ps.size();
    std::vector<std::pair<BigInt, BigInt>> dir;
    for (const auto& part : parts) {
        BigInt qx = 0, qy = 0;
        for (int v : part) {
            qx += ps.points[v].x;
            qy += ps.points[v].y;
        }
        BigInt m = static_cast<long long>(part.size());
        dir.emplace_back(n * qx - m * sx, n * qy - m * sy);
    }
    auto half = [](const std::pair<BigInt, BigInt>& d) { return (d.second > 0 || (d.second == 0 && d.first >= 0)) ? 0 : 1; };
    std::vector<std::size_t> idx(parts.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        int ha = half(dir[a]), hb = half(dir[b]);
        if (ha != hb) return ha < hb;
        BigInt c = dir[a].first * dir[b].second - dir[a].second * dir[b].first;
        return c > 0;
    });
    return idx;
}

Bisection restrict(const OrientedLine& line, const PointSet& ps, const std::vector<int>& part) {
    Bisection b{line, {}, {}};
    for (int v : part) (side_of_line(line, ps.points[v]) == Side::Left ? b.left : b.right).push_back(v);
    return b;
}

bool balanced(const Bisection& b) {
    return b.left.size() == b.right.size() || b.left.size() == b.right.size() + 1;
}

struct PartCycle {
    HamCycle cycle;
    Bisection bisection;
    std::optional<Stone> stone;
};

// Cycles on part avoiding used edges: algorithm_a's march along bis first,
// then up to opt.cycle_alternatives others from the exhaustive search. The
// note names the fallback taken, empty for the march.
void for_each_part_cycle(const PointSet& ps, const std::vector<int>& part, const Bisection& bis, const EdgeSet& used,
                         int part_id, const GeneralPackOptions& opt,
                         const std::function<bool(const PartCycle&, const std::string&)>& visit) {
    AlgorithmAOptions ao;
    ao.forbidden = &used;
    ao.bisection = bis;
    ao.part_id = part_id;
    ao.node_budget = opt.march_budget;
    std::optional<HamCycle> marched;
    try {
        auto r = algorithm_a(ps, part, ao);
        PartCycle pc{r.cycle, r.bisection, {}};
        if (!r.stones.empty()) pc.stone = r.stones.front();
        marched = canonical(r.cycle);
        if (!visit(pc, "")) return;
    } catch (const Error& e) {
        if (e.code() != Errc::MarchFailed) throw;
    }
    std::string note = "part " + std::to_string(part_id) + " of size " + std::to_string(part.size()) +
                       (marched ? ": alternative cycle from search" : ": march blocked by used edges, cycle from search");
    int left = opt.cycle_alternatives;
    for_each_1phc(ps, part, &used, opt.search_budget, [&](const HamCycle& c) {
        if (marched && canonical(c) == *marched) return true;
        if (left-- <= 0) return false;
        return visit(PartCycle{c, bis, {}}, note);
    });
}

// Candidate bisections for a sibling pair, in preference order.
void pair_cuts(const PointSet& ps, const std::vector<int>& qa, const std::vector<int>& qb,
               const std::optional<Stone>& sa, const std::optional<Stone>& sb, int limit,
               const std::function<bool(const Bisection&, const Bisection&, const char*)>& visit) {
    int seen = 0;
    bool stop = false;
    auto emit = [&](const OrientedLine& l1, const std::vector<int>& p1, const OrientedLine& l2,
                    const std::vector<int>& p2, const char* tag) {
        if (stop || seen >= limit) return false;
        auto b1 = restrict(l1, ps, p1), b2 = restrict(l2, ps, p2);
        if (!balanced(b1) || !balanced(b2)) return true;
        ++seen;
        if (!visit(b1, b2, tag)) stop = true;
        return !stop && seen < limit;
    };
    const std::optional<Stone>& st = sa ? sa : sb;
    const auto& s1 = sa ? qa : qb;
    const auto& s2 = sa ? qb : qa;
    if (st && s1.size() + s2.size() >= 6) {
        for_each_ham_sandwich(ps, s1, s2, [&](const HamSandwich& h) {
            auto has = [&](const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); };
            bool together = (has(h.left1, st->v) && has(h.left1, st->w)) || (has(h.right1, st->v) && has(h.right1, st->w));
            if (!together) return true;
            return emit(h.line, qa, h.line, qb, "stone-cut");
        });
        if (stop || seen >= limit) return;
        if (s1.size() >= 3) {
            try {
                auto sep = separating_subset_line(ps, s1, {st->v, st->w});
                auto other = bisecting_line(ps, s2);
                bool ok = sa ? emit(sep.line, qa, other.line, qb, "separated") : emit(other.line, qa, sep.line, qb, "separated");
                if (!ok) return;
            } catch (const Error& e) {
                if (e.code() != Errc::NotSeparable) throw;
            }
        }
    }
    if (stop || seen >= limit) return;
    for_each_ham_sandwich(ps, qa, qb, [&](const HamSandwich& h) { return emit(h.line, qa, h.line, qb, st ? "free-cut" : "cut"); });
}

// Whether some 1-PHC on part avoids used plus extra; undecided counts as yes.
bool child_feasible(const PointSet& ps, const std::vector<int>& part, const EdgeSet& used, const HamCycle& extra,
                    std::size_t budget) {
    if (part.size() < 3) return true;
    EdgeSet forbidden;
    for (int v : part)
        for (int w : part)
            if (v < w && used.count(EdgeRef(v, w))) forbidden.insert(EdgeRef(v, w));
    for (const auto& e : extra.edges()) forbidden.insert(e);
    bool found = false;
    std::size_t nodes = for_each_1phc(ps, part, &forbidden, budget, [&](const HamCycle&) {
        found = true;
        return false;
    });
    return found || nodes > budget;
}

class Driver {
public:
    Driver(const PointSet& ps, const GeneralPackOptions& opt, GeneralPackResult& res)
        : ps_(ps), opt_(opt), res_(res), oracle_(CrossingOracle::geometric(ps.points)) {}

    bool run(const std::vector<int>& all) {
        bool done = false, any = false;
        int cuts = 0;
        for_each_bisection(ps_, all, [&](const Bisection& bis) {
            for_each_part_cycle(ps_, all, bis, used(), 0, opt_, [&](const PartCycle& pc, const std::string& note) {
                if (out_of_budget()) return false;
                ++work_;
                if (res_.target >= 2 && !children_ok(pc)) return true;
                any = true;
                std::size_t mark = notes_.size();
                if (cuts > 0) notes_.push_back("level 1: bisection number " + std::to_string(cuts + 1));
                if (!note.empty()) notes_.push_back("level 1 " + note);
                levels_.push_back({{all}, {std::nullopt}});
                cycles_.push_back(pc.cycle);
                joins_.emplace_back();
                for (const auto& e : pc.cycle.edges()) used().insert(e);
                std::vector<std::optional<Stone>> st(2);
                route_stone(pc, st[0], st[1]);
                done = level(2, {pc.bisection.left, pc.bisection.right}, st);
                if (done) return false;
                for (const auto& e : pc.cycle.edges()) used().erase(e);
                joins_.pop_back();
                cycles_.pop_back();
                levels_.pop_back();
                notes_.resize(mark);
                return true;
            });
            ++cuts;
            return !done && !out_of_budget() && cuts < opt_.max_cut_attempts;
        });
        if (!any && !done) fail(1, "no cycle on the whole set leaves its halves a cycle");
        return done;
    }

    std::size_t steps() const { return work_; }

private:
    const PointSet& ps_;
    const GeneralPackOptions& opt_;
    GeneralPackResult& res_;
    CrossingOracle oracle_;
    std::vector<PartitionLevel> levels_;
    std::vector<HamCycle> cycles_;
    std::vector<std::vector<JoinMove>> joins_;
    std::vector<std::string> notes_;
    std::size_t work_ = 0;
    int best_ = 0;

    EdgeSet& used() { return res_.tree.used; }

    bool children_ok(const PartCycle& pc) {
        return child_feasible(ps_, pc.bisection.left, used(), pc.cycle, opt_.lookahead_budget) &&
               child_feasible(ps_, pc.bisection.right, used(), pc.cycle, opt_.lookahead_budget);
    }
    bool out_of_budget() const { return work_ > opt_.backtrack_budget; }

    void push_notes(const std::string& where, const std::vector<std::string>& notes) {
        for (const auto& s : notes) notes_.push_back(where + " " + s);
    }

    static void route_stone(const PartCycle& pc, std::optional<Stone>& left, std::optional<Stone>& right) {
        if (!pc.stone) return;
        const auto& l = pc.bisection.left;
        (std::find(l.begin(), l.end(), pc.stone->v) != l.end() ? left : right) = pc.stone;
    }

    // Keeps the diagnostics of the attempt that got furthest.
    void fail(int level, const std::string& why) {
        int have = static_cast<int>(cycles_.size());
        if (have < best_ || (have == best_ && res_.failed_level != 0)) return;
        best_ = have;
        res_.failed_level = level;
        std::ostringstream os;
        os << "level " << level << ": " << why << " (cycles so far " << have << ", used edges " << used().size()
           << ")";
        res_.diagnostics = os.str();
        res_.packing.cycles = cycles_;
        res_.tree.levels = levels_;
        res_.joins = joins_;
        res_.fallbacks = notes_;
    }

    bool level(int r, const std::vector<std::vector<int>>& parts, const std::vector<std::optional<Stone>>& stones) {
        if (r > res_.target) {
            res_.packing.cycles = cycles_;
            res_.tree.levels = levels_;
            res_.joins = joins_;
            res_.fallbacks = notes_;
            res_.failed_level = 0;
            res_.diagnostics.clear();
            return true;
        }
        std::vector<PartCycle> chosen(parts.size());
        return choose(r, 0, parts, stones, chosen);
    }

    // Picks cycles for sibling pair j onwards.
    bool choose(int r, std::size_t j, const std::vector<std::vector<int>>& parts,
                const std::vector<std::optional<Stone>>& stones, std::vector<PartCycle>& chosen) {
        if (j + 1 >= parts.size()) return fold(r, parts, stones, chosen);
        const std::string where = "level " + std::to_string(r);
        bool done = false, any = false;
        bool last = r == res_.target;
        pair_cuts(ps_, parts[j], parts[j + 1], stones[j], stones[j + 1], opt_.max_cut_attempts,
                  [&](const Bisection& b1, const Bisection& b2, const char* tag) {
                      auto second = [&](const PartCycle& c1, const std::string& n1) {
                          if (out_of_budget()) return false;
                          ++work_;
                          if (!last && !children_ok(c1)) return true;
                          for_each_part_cycle(
                              ps_, parts[j + 1], b2, used(), static_cast<int>(j + 1), opt_,
                              [&](const PartCycle& c2, const std::string& n2) {
                                  if (out_of_budget()) return false;
                                  ++work_;
                                  if (!last && !children_ok(c2)) return true;
                                  any = true;
                                  std::size_t mark = notes_.size();
                                  for (const auto* note : {&n1, &n2})
                                      if (!note->empty()) notes_.push_back(where + " " + *note);
                                  if ((stones[j] || stones[j + 1]) && std::string(tag) == "free-cut")
                                      notes_.push_back(where + " parts " + std::to_string(j) + "," +
                                                       std::to_string(j + 1) + ": stone split by the cut");
                                  chosen[j] = c1;
                                  chosen[j + 1] = c2;
                                  done = choose(r, j + 2, parts, stones, chosen);
                                  notes_.resize(mark);
                                  return !done;
                              });
                          return !done;
                      };
                      for_each_part_cycle(ps_, parts[j], b1, used(), static_cast<int>(j), opt_, second);
                      // At the last level the search alternatives already cover every cut.
                      return !done && !last && !out_of_budget();
                  });
        if (!any && !done)
            fail(r, "no cut of parts " + std::to_string(j) + "," + std::to_string(j + 1) +
                        " admits cycles avoiding used edges");
        return done;
    }

    bool fold(int r, const std::vector<std::vector<int>>& parts, const std::vector<std::optional<Stone>>& stones,
              const std::vector<PartCycle>& chosen) {
        auto order = angular_order(ps_, parts);
        std::vector<char> taken(parts.size(), 0);
        std::vector<std::size_t> seq{order[0]};
        taken[order[0]] = 1;
        std::vector<JoinMove> moves;
        return fold_step(r, parts, stones, chosen, order, taken, seq, chosen[order[0]].cycle, moves);
    }

    bool fold_step(int r, const std::vector<std::vector<int>>& parts, const std::vector<std::optional<Stone>>& stones,
                   const std::vector<PartCycle>& chosen, const std::vector<std::size_t>& order,
                   std::vector<char>& taken, std::vector<std::size_t>& seq, const HamCycle& cur,
                   std::vector<JoinMove>& moves) {
        if (seq.size() == parts.size()) return commit(r, parts, stones, chosen, seq, cur, moves);
        bool any = false;
        // Angular order first; other parts only if the next one cannot be joined.
        for (std::size_t t : order) {
            if (taken[t]) continue;
            int tried = 0;
            bool done = false;
            for_each_join(cur, chosen[t].cycle, used(), oracle_, [&](const JoinResult& jr) {
                if (out_of_budget()) return false;
                ++work_;
                any = true;
                taken[t] = 1;
                seq.push_back(t);
                moves.push_back(jr.move);
                done = fold_step(r, parts, stones, chosen, order, taken, seq, jr.cycle, moves);
                moves.pop_back();
                seq.pop_back();
                taken[t] = 0;
                return !done && ++tried < opt_.join_alternatives;
            });
            if (done) return true;
            if (out_of_budget()) break;
        }
        if (!any)
            fail(r, "join failed: no join for a cycle of size " + std::to_string(cur.size()) + " with " +
                        std::to_string(used().size()) + " forbidden edges");
        return false;
    }

    bool commit(int r, const std::vector<std::vector<int>>& parts, const std::vector<std::optional<Stone>>& stones,
                const std::vector<PartCycle>& chosen, const std::vector<std::size_t>& seq, const HamCycle& joined,
                const std::vector<JoinMove>& moves) {
        PartitionLevel pl;
        for (std::size_t t : seq) {
            pl.parts.push_back(parts[t]);
            pl.stones.push_back(stones[t]);
        }
        std::size_t mark = notes_.size();
        auto angular = angular_order(ps_, parts);
        if (!std::equal(seq.begin(), seq.end(), angular.begin()))
            notes_.push_back("level " + std::to_string(r) + ": parts folded out of angular order");
        levels_.push_back(pl);
        cycles_.push_back(joined);
        joins_.push_back(moves);
        auto edges = joined.edges();
        for (const auto& e : edges) used().insert(e);

        std::vector<std::vector<int>> next;
        std::vector<std::optional<Stone>> next_stones;
        for (const auto& pc : chosen) {
            next.push_back(pc.bisection.left);
            next.push_back(pc.bisection.right);
            std::optional<Stone> sl, sr;
            route_stone(pc, sl, sr);
            next_stones.push_back(sl);
            next_stones.push_back(sr);
        }
        if (level(r + 1, next, next_stones)) return true;

        for (const auto& e : edges) used().erase(e);
        joins_.pop_back();
        cycles_.pop_back();
        levels_.pop_back();
        notes_.resize(mark);
        return false;
    }
};

}  // namespace

GeneralPackResult pack_general(const PointSet& ps, const GeneralPackOptions& opt) {
    int n = ps.size();
    if (n < 4) throw Error(Errc::InvalidN, "pack_general needs n >= 4");
    if (!in_general_position(ps.points)) throw Error(Errc::DegenerateInput, "points not in general position");
    int k = 0;
    while ((2 << k) <= n) ++k;  // floor(log2 n)
    GeneralPackResult res;
    res.target = k - 1;
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);

    Driver driver(ps, opt, res);
    res.complete = driver.run(all);
    res.search_steps = driver.steps();
    if (!res.complete && res.diagnostics.empty()) res.diagnostics = "search budget exhausted";

    auto report = verify_packing(res.packing, n, CrossingOracle::geometric(ps.points));
    if (!report.ok) throw std::logic_error("pack_general produced a packing that fails verification");
    res.tree.used.clear();
    for (const auto& c : res.packing.cycles)
        for (const auto& e : c.edges()) res.tree.used.insert(e);
    return res;
}

}  // namespace hcp
