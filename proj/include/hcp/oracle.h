#pragma once

#include <span>
#include <string>
#include <vector>

#include "hcp/cycle.h"
#include "hcp/point_set.h"

namespace hcp {

// Hard ceiling regardless of configuration: 12 vertices is 66 edges.
inline constexpr int kOracleHardMax = 12;

// HCP_MAX_ORACLE_N if set, else 9.
int default_oracle_cap();

// All 1-plane Hamiltonian cycles through `subset`, each once, in canonical
// form and sorted. Throws TooLarge if |subset| > cap.
std::vector<HamCycle> enumerate_1phc(const PointSet& ps, std::span<const int> subset, int cap);
std::vector<HamCycle> enumerate_1phc(const PointSet& ps, std::span<const int> subset);
// Label space 0..n-1 under an arbitrary oracle.
std::vector<HamCycle> enumerate_1phc(const CrossingOracle& oracle, int cap);

// 1-plane Hamiltonian paths on 0..n-1, one orientation each (front < back).
std::vector<std::vector<int>> enumerate_1plane_paths(const CrossingOracle& oracle, int cap);

struct EnumerationReport {
    int n = 0;
    long long total_ham_cycles = 0;
    long long one_plane_count = 0;
    int max_packing_size = 0;
    Packing witness;
};

// Branch-and-bound over the enumerated cycles with edge bitmasks.
EnumerationReport max_packing_exact(const PointSet& ps, std::span<const int> subset, int cap);
EnumerationReport max_packing_exact(const PointSet& ps, int cap);
EnumerationReport max_packing_exact(const std::vector<HamCycle>& cycles, int n);

struct SweepReport {
    int n = 0;
    Config config = Config::Convex;
    long long cycles_checked = 0;
    long long lemma1_violations = 0;
    long long prop2_violations = 0;
    long long prop3_violations = 0;
    long long radial_violations = 0;
    long long wheel_structure_violations = 0;
    std::vector<std::string> counterexamples;

    bool ok() const { return counterexamples.empty(); }
};

// Convex: check_lemma1, check_prop2 and check_prop3 on every cycle. Wheel:
// two radial edges and the rim boundary structure. Throws ConfigMismatch for
// general sets.
SweepReport property_sweep(const PointSet& ps, int cap);

}  // namespace hcp
