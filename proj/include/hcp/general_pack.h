#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "hcp/bisect.h"
#include "hcp/cycle.h"

namespace hcp {

using EdgeSet = std::unordered_set<EdgeRef, EdgeRefHash>;

struct Stone {
    int v = 0;
    int w = 1;
    int part_id = 0;
};

struct AlgorithmAOptions {
    const EdgeSet* forbidden = nullptr;
    // Bisection to march along; computed with bisecting_line when absent.
    std::optional<Bisection> bisection;
    int part_id = 0;
    // Search nodes before giving up with MarchFailed.
    std::size_t node_budget = 20000;
};

struct AlgorithmAResult {
    HamCycle cycle;
    Bisection bisection;
    std::vector<Stone> stones;
    // Moves taken outside the plain ladder sequence.
    int extension_moves = 0;
};

// Throws MarchFailed when no cycle avoiding the forbidden edges is found.
AlgorithmAResult algorithm_a(const PointSet& ps, std::span<const int> subset, const AlgorithmAOptions& opt = {});

// Depth-first search for any 1-plane Hamiltonian cycle on subset avoiding
// forbidden edges. Nearest neighbours first.
std::optional<HamCycle> search_1phc(const PointSet& ps, std::span<const int> subset, const EdgeSet* forbidden,
                                    std::size_t node_budget);
// Visits each such cycle once (one direction) until visit returns false or
// the budget is spent. Returns the number of search nodes used.
std::size_t for_each_1phc(const PointSet& ps, std::span<const int> subset, const EdgeSet* forbidden,
                          std::size_t node_budget, const std::function<bool(const HamCycle&)>& visit);

struct Uncrossing {
    int cycle = 0;  // 1 or 2
    EdgeRef removed[2];
    EdgeRef added[2];
};

struct JoinMove {
    EdgeRef removed[2];
    EdgeRef added[2];
    std::vector<Uncrossing> created_uncrossings;
};

struct JoinResult {
    HamCycle cycle;
    JoinMove move;
};

// Replaces the crossing pair by the single-cycle reconnection.
// Throws StillCrossing if the result is not 1-plane, DegenerateInput if the
// pair is not two crossing edges of c.
HamCycle uncross(const HamCycle& c, EdgeRef e, EdgeRef f, const CrossingOracle& oracle);

// Throws NoJoinFound.
JoinResult join_cycles(const HamCycle& c1, const HamCycle& c2, const EdgeSet& forbidden, const CrossingOracle& oracle);
// Every valid join in search order, until visit returns false.
void for_each_join(const HamCycle& c1, const HamCycle& c2, const EdgeSet& forbidden, const CrossingOracle& oracle,
                   const std::function<bool(const JoinResult&)>& visit);

struct PartitionLevel {
    std::vector<std::vector<int>> parts;  // angular order
    std::vector<std::optional<Stone>> stones;
};

struct PartitionTree {
    std::vector<PartitionLevel> levels;
    EdgeSet used;
};

struct GeneralPackOptions {
    std::size_t march_budget = 20000;
    std::size_t search_budget = 200000;
    // Alternative cuts tried per sibling pair before a level gives up.
    int max_cut_attempts = 64;
    // Extra search cycles offered per part after algorithm_a's.
    int cycle_alternatives = 3;
    // Joins tried per fold step before moving on to another part.
    int join_alternatives = 4;
    // Search nodes spent proving a child part has no cycle left.
    std::size_t lookahead_budget = 5000;
    // Cut and join attempts across the whole backtracking search.
    std::size_t backtrack_budget = 20000;
};

struct GeneralPackResult {
    Packing packing;
    PartitionTree tree;
    // Per emitted cycle, the joins performed while building it.
    std::vector<std::vector<JoinMove>> joins;
    int target = 0;
    bool complete = false;
    int failed_level = 0;
    std::string diagnostics;
    // One note per fallback path taken.
    std::vector<std::string> fallbacks;
    std::size_t search_steps = 0;
};

// floor(log2 n) - 1 cycles, or complete = false with the cycles found so far.
GeneralPackResult pack_general(const PointSet& ps, const GeneralPackOptions& opt = {});

}  // namespace hcp
