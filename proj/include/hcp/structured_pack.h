#pragma once

#include <optional>
#include <vector>

#include "hcp/cycle.h"

namespace hcp {

enum class BoundaryPlan { TwoBoundary, FourBoundary, ThreeBoundary };

struct ZigzagSpec {
    int n = 3;
    int anchor = 0;
    BoundaryPlan plan = BoundaryPlan::ThreeBoundary;
    // Wheel only: the center (label n) goes right after position center_after.
    std::optional<int> center_after;
};

// Offsets from the anchor, before reduction mod n.
std::vector<int> zigzag_offsets(int n, BoundaryPlan plan);

// Throws NonHamiltonian if the schedule revisits a label.
HamCycle generate_zigzag(const ZigzagSpec& spec);

// The cycles of pack_convex(n), as specs.
std::vector<ZigzagSpec> convex_schedule(int n);

// floor(n/3) cycles over labels 0..n-1. Throws InvalidN for n < 3.
Packing pack_convex(int n);

// floor((n-1)/3) cycles over rim labels 0..n-2 and center n-1.
// Throws InvalidN unless n is even and n >= 10.
Packing pack_wheel(int n);

}  // namespace hcp
