#pragma once

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "hcp/cycle.h"
#include "hcp/point_set.h"

namespace fixtures {

using EdgeList = std::vector<std::pair<int, int>>;

// Drawn packings of the convex figures, one edge list per colour
// (green, blue, red, yellow). Labels run counter-clockwise.
inline const std::vector<EdgeList> kConvex12 = {
    {{0, 1}, {0, 2}, {1, 11}, {3, 11}, {2, 10}, {3, 9}, {4, 10}, {5, 9}, {4, 8}, {5, 7}, {6, 8}, {7, 6}},
    {{1, 2}, {2, 3}, {1, 4}, {3, 0}, {0, 5}, {4, 11}, {11, 6}, {5, 10}, {10, 7}, {6, 9}, {9, 8}, {7, 8}},
    {{3, 4}, {4, 2}, {3, 5}, {5, 1}, {2, 6}, {1, 7}, {0, 6}, {0, 8}, {11, 7}, {11, 9}, {10, 8}, {10, 9}},
    {{4, 5}, {5, 6}, {6, 3}, {4, 7}, {7, 2}, {3, 8}, {8, 1}, {2, 9}, {9, 0}, {1, 10}, {10, 11}, {0, 11}},
};

inline const std::vector<EdgeList> kConvex13 = {
    {{0, 1}, {1, 12}, {12, 3}, {3, 10}, {10, 5}, {5, 8}, {8, 7}, {7, 6}, {6, 9}, {9, 4}, {4, 11}, {11, 2}, {2, 0}},
    {{8, 9}, {9, 7}, {7, 11}, {11, 5}, {5, 0}, {0, 3}, {3, 2}, {2, 1}, {1, 4}, {4, 12}, {12, 6}, {6, 10}, {10, 8}},
    {{3, 4}, {4, 2}, {2, 6}, {6, 0}, {0, 8}, {8, 11}, {11, 10}, {10, 9}, {9, 12}, {12, 7}, {7, 1}, {1, 5}, {5, 3}},
    {{11, 12}, {12, 10}, {10, 1}, {1, 8}, {8, 3}, {3, 6}, {6, 5}, {5, 4}, {4, 7}, {7, 2}, {2, 9}, {9, 0}, {0, 11}},
};

// Wheel with 13 rim points; the center carries label 13.
inline const std::vector<EdgeList> kWheel14 = {
    {{0, 1}, {1, 12}, {12, 3}, {3, 10}, {10, 5}, {5, 8}, {8, 7}, {7, 6}, {6, 9}, {9, 4}, {4, 13}, {13, 11}, {11, 2}, {2, 0}},
    {{8, 9}, {9, 7}, {7, 11}, {11, 5}, {5, 0}, {0, 3}, {3, 2}, {2, 1}, {1, 4}, {4, 12}, {12, 13}, {13, 6}, {6, 10}, {10, 8}},
    {{3, 4}, {4, 2}, {2, 6}, {6, 0}, {0, 8}, {8, 11}, {11, 10}, {10, 9}, {9, 12}, {12, 7}, {7, 13}, {13, 1}, {1, 5}, {5, 3}},
    {{11, 12}, {12, 10}, {10, 1}, {1, 8}, {8, 3}, {3, 6}, {6, 5}, {5, 4}, {4, 7}, {7, 2}, {2, 13}, {13, 9}, {9, 0}, {0, 11}},
};

// The 13 points of the march figure, coordinates scaled by 10.
inline hcp::PointSet march_figure() {
    hcp::PointSet ps;
    ps.points = {{15, 15},  {-17, 11}, {30, 6},   {-20, -7},  {16, -5},  {-2, -12}, {-25, -17},
                 {37, -10}, {-5, -26}, {17, -27}, {-19, -37}, {40, -24}, {10, -35}};
    return ps;
}

// The 17 points of the three-cycle figure, coordinates scaled by 100. As
// drawn, points 3, 8 and 16 are collinear.
inline hcp::PointSet three_cycle_figure() {
    hcp::PointSet ps;
    ps.points = {{190, 300},  {-54, 270},  {-300, 150}, {200, 150},  {50, 80},    {-170, 50},
                 {380, 60},   {-300, -70}, {160, -50},  {-20, -120}, {-250, -170}, {370, -100},
                 {-50, -260}, {170, -270}, {-190, -370}, {400, -240}, {100, -350}};
    return ps;
}

// Same figure with point 16 moved one unit right, which restores general position.
inline hcp::PointSet three_cycle_figure_nudged() {
    auto ps = three_cycle_figure();
    ps.points[16].x += 1;
    return ps;
}

using EdgeFamily = std::set<std::set<std::pair<int, int>>>;

inline std::pair<int, int> norm(int a, int b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }

inline EdgeFamily family(const std::vector<EdgeList>& lists) {
    EdgeFamily f;
    for (const auto& l : lists) {
        std::set<std::pair<int, int>> s;
        for (auto [a, b] : l) s.insert(norm(a, b));
        f.insert(s);
    }
    return f;
}

inline EdgeFamily family(const hcp::Packing& p) {
    std::vector<EdgeList> lists;
    for (const auto& c : p.cycles) {
        EdgeList l;
        for (const auto& e : c.edges()) l.emplace_back(e.a, e.b);
        lists.push_back(l);
    }
    return family(lists);
}

// True when some rotation or reflection of the first m labels (labels >= m
// stay fixed) maps the packing's edge sets onto the figure's.
inline bool same_up_to_dihedral(const hcp::Packing& p, const std::vector<EdgeList>& figure, int m) {
    EdgeFamily want = family(figure);
    for (int refl = 0; refl < 2; ++refl)
        for (int rot = 0; rot < m; ++rot) {
            auto map = [&](int v) {
                if (v >= m) return v;
                int w = refl ? (m - v) % m : v;
                return (w + rot) % m;
            };
            hcp::Packing q;
            for (const auto& c : p.cycles) {
                hcp::HamCycle d;
                for (int v : c.order) d.order.push_back(map(v));
                q.cycles.push_back(d);
            }
            if (family(q) == want) return true;
        }
    return false;
}

}  // namespace fixtures
