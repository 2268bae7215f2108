#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "hcp/geometry.h"
#include "hcp/point_set.h"

namespace hcp {

// Cyclic vertex sequence.
struct HamCycle {
    std::vector<int> order;

    int size() const { return static_cast<int>(order.size()); }
    std::vector<EdgeRef> edges() const;
    bool operator==(const HamCycle&) const = default;
};

// Smallest vertex first, then the direction with the smaller second element.
HamCycle canonical(const HamCycle& c);

struct Packing {
    std::vector<HamCycle> cycles;
    bool operator==(const Packing&) const = default;
};

struct CrossReport {
    std::map<EdgeRef, int> counts;
    int max_count = 0;
};

bool verify_hamiltonian(const HamCycle& c, int n);
// c visits exactly the vertices of `subset`, each once.
bool spans_exactly(const HamCycle& c, std::span<const int> subset);

CrossReport crossing_report(const HamCycle& c, const CrossingOracle& oracle);
bool is_one_plane(const HamCycle& c, const CrossingOracle& oracle);
// Same test on an edge list; stops at the first edge crossed twice.
bool edges_one_plane(std::span<const EdgeRef> edges, const CrossingOracle& oracle);

bool are_edge_disjoint(const HamCycle& a, const HamCycle& b);

struct PackingReport {
    std::vector<bool> hamiltonian;
    std::vector<int> max_crossings;
    // Pairwise shared edges, indexed [i][j] for i < j.
    std::vector<std::vector<std::vector<EdgeRef>>> shared;
    bool ok = true;
};

PackingReport verify_packing(const Packing& p, int n, const CrossingOracle& oracle);

// Boundary edges join cyclically consecutive labels of an n-vertex convex set.
bool is_boundary(EdgeRef e, int n);
int boundary_edge_count(const HamCycle& c, int n);
// Point-index cycle. Wheel sets count rim edges only; General throws ConfigMismatch.
int boundary_edge_count(const PointSet& ps, const HamCycle& c);

// At least 2 boundary edges, 3 when n is odd.
bool check_lemma1(const HamCycle& c, int n);
// Each side of every diagonal holds a boundary edge, two when that side
// (endpoints included) has an even number of vertices.
bool check_prop2(const HamCycle& c, int n);
// With exactly two boundary edges (k, k+1), both come with (k, k+2) and
// (k+1, k-1); with exactly three, some single one does.
bool check_prop3(const HamCycle& c, int n);

// Hamiltonian path given as a vertex sequence on a convex set.
// At least two boundary edges, one when the path ends are neighbours.
bool lemma2_count_clause(std::span<const int> path, int n);
// Each side of every diagonal holds a boundary edge of the path. Fails on
// some 1-plane paths (0 1 3 4 2 with n = 5 is the smallest kind).
bool lemma2_side_clause(std::span<const int> path, int n);
bool check_lemma2_path(std::span<const int> path, int n);

// Wheel cycles in label space: rim labels 0..m-1, center m.
int radial_edge_count(const HamCycle& c, int m);
// At least two rim boundary edges and every rim diagonal has a rim boundary
// edge on each side.
bool check_wheel_structure(const HamCycle& c, int m);

std::string to_string(const HamCycle& c);
std::string to_string(EdgeRef e);

}  // namespace hcp
