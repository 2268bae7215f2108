#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "hcp/geometry.h"
#include "hcp/point_set.h"

namespace hcp {

struct Bisection {
    OrientedLine line;
    std::vector<int> left;
    std::vector<int> right;
};

struct ConstrainedPair {
    int u = 0;
    int w = 1;
};

struct HamSandwich {
    OrientedLine line;
    std::vector<int> left1, right1;  // parts of s1
    std::vector<int> left2, right2;  // parts of s2
};

struct SubsetSeparation {
    OrientedLine line;
    std::vector<int> inside;   // LEFT, contains the pair
    std::vector<int> outside;  // RIGHT
};

// |left| = ceil(k/2). Tries the vertical, horizontal and diagonal directions
// before an always-injective steep one.
Bisection bisecting_line(const PointSet& ps, std::span<const int> subset);
// bisecting_line first, then each further balanced split reachable by a
// direction next to a point pair, until visit returns false.
void for_each_bisection(const PointSet& ps, std::span<const int> subset,
                        const std::function<bool(const Bisection&)>& visit);

// Line through input points p and q, nudged so p and q land on the requested
// sides while every other point of `ps` keeps its side.
OrientedLine perturbed_line(const PointSet& ps, int p, int q, Side side_p, Side side_q);

// |left ∩ s_i| = ceil(|s_i|/2). Candidate lines run through pairs of points,
// cross pairs first, in index order.
HamSandwich ham_sandwich(const PointSet& ps, std::span<const int> s1, std::span<const int> s2);

// Visits every distinct simultaneous bisection in canonical order until the
// visitor returns false.
void for_each_ham_sandwich(const PointSet& ps, std::span<const int> s1, std::span<const int> s2,
                           const std::function<bool(const HamSandwich&)>& visit);

// First cut keeping the pair inside one part of s1. Absent when none exists
// or when |s1| + |s2| < 6.
std::optional<HamSandwich> constrained_ham_sandwich(const PointSet& ps, std::span<const int> s1,
                                                    std::span<const int> s2, ConstrainedPair pair);

// Sweeps a line from the pair outwards until `target` points are inside.
// target defaults to ceil(|subset|/2), clamped to [2, |subset| - 1].
// Throws NotSeparable if no line cuts the pair off from the rest.
SubsetSeparation separating_subset_line(const PointSet& ps, std::span<const int> subset, ConstrainedPair pair,
                                        std::optional<int> target = std::nullopt);

// Perpendicular to l, with every point of `subset` strictly on its LEFT.
OrientedLine perpendicular_baseline(const OrientedLine& l, const PointSet& ps, std::span<const int> subset);
OrientedLine perpendicular_baseline(const OrientedLine& l, const PointSet& ps);

// Signed distance from the baseline of l, up to a positive factor.
BigInt height_along(const OrientedLine& l, Point p);

}  // namespace hcp
