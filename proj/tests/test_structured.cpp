#include <doctest.h>

#include "fixtures.h"
#include "hcp/errors.h"
#include "hcp/io.h"
#include "hcp/structured_pack.h"
#include "naive.h"

using namespace hcp;

namespace {

int naive_boundary(const std::vector<int>& order, int n) {
    int b = 0;
    for (auto [a, c] : naive::cycle_edges(order)) b += (c - a == 1) || (a == 0 && c == n - 1);
    return b;
}

std::vector<std::vector<int>> orders(const Packing& p) {
    std::vector<std::vector<int>> out;
    for (const auto& c : p.cycles) out.push_back(c.order);
    return out;
}

template <class F>
void expect_invalid(F f) {
    try {
        f();
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::InvalidN);
    }
}

}  // namespace

TEST_CASE("convex packing checked with plain geometry") {
    for (int n = 3; n <= 48; ++n) {
        CAPTURE(n);
        auto p = pack_convex(n);
        auto pts = naive::parabola(n);
        CHECK(static_cast<int>(p.cycles.size()) == n / 3);
        for (const auto& c : p.cycles) {
            CHECK(naive::hamiltonian(c.order, n));
            CHECK(naive::max_crossings(naive::cycle_edges(c.order), pts) <= 1);
        }
        CHECK(naive::edge_disjoint(orders(p)));
    }
}

TEST_CASE("wheel packing checked with plain geometry") {
    for (int n = 10; n <= 40; n += 2) {
        CAPTURE(n);
        auto ps = generate(Config::Wheel, n, 0).set;
        auto by_label = ps.vertices_by_label();
        std::vector<Point> pts;
        for (int l = 0; l < n; ++l) pts.push_back(ps.points[by_label[l]]);
        auto p = pack_wheel(n);
        CHECK(static_cast<int>(p.cycles.size()) == (n - 1) / 3);
        for (const auto& c : p.cycles) {
            CHECK(naive::hamiltonian(c.order, n));
            CHECK(naive::max_crossings(naive::cycle_edges(c.order), pts) <= 1);
            int radial = 0;
            for (auto [a, b] : naive::cycle_edges(c.order)) radial += b == n - 1;
            CHECK(radial == 2);
        }
        CHECK(naive::edge_disjoint(orders(p)));
    }
}

TEST_CASE("figure packings are reproduced") {
    CHECK(fixtures::same_up_to_dihedral(pack_convex(12), fixtures::kConvex12, 12));
    CHECK(fixtures::same_up_to_dihedral(pack_convex(13), fixtures::kConvex13, 13));
    CHECK(fixtures::same_up_to_dihedral(pack_wheel(14), fixtures::kWheel14, 13));
    // A different size cannot match by accident.
    CHECK_FALSE(fixtures::same_up_to_dihedral(pack_convex(13), fixtures::kConvex12, 13));
}

TEST_CASE("zigzag plans give their boundary counts") {
    for (int n = 5; n <= 31; n += 2) {
        auto c = generate_zigzag({n, 0, BoundaryPlan::ThreeBoundary, {}});
        CHECK(naive::hamiltonian(c.order, n));
        CHECK(naive_boundary(c.order, n) == 3);
    }
    for (int n = 6; n <= 30; n += 2) {
        CAPTURE(n);
        auto two = generate_zigzag({n, 0, BoundaryPlan::TwoBoundary, {}});
        auto four = generate_zigzag({n, 0, BoundaryPlan::FourBoundary, {}});
        CHECK(naive_boundary(two.order, n) == 2);
        CHECK(naive_boundary(four.order, n) == 4);
        CHECK(naive::max_crossings(naive::cycle_edges(two.order), naive::parabola(n)) <= 1);
        CHECK(naive::max_crossings(naive::cycle_edges(four.order), naive::parabola(n)) <= 1);
    }
}

TEST_CASE("zigzag offsets and anchors") {
    CHECK(zigzag_offsets(7, BoundaryPlan::ThreeBoundary) == std::vector<int>{0, 1, -1, 3, -3, 5, -5});
    auto c = generate_zigzag({7, 2, BoundaryPlan::ThreeBoundary, {}});
    CHECK(c.order == std::vector<int>{2, 3, 1, 5, 6, 0, 4});
    auto w = generate_zigzag({7, 0, BoundaryPlan::ThreeBoundary, 1});
    CHECK(w.order.size() == 8);
    CHECK(w.order[2] == 7);
    CHECK(convex_schedule(12).size() == 4);
    CHECK(convex_schedule(13).size() == 4);
}

TEST_CASE("structured packers reject unsupported sizes") {
    expect_invalid([] { pack_convex(2); });
    expect_invalid([] { pack_wheel(8); });
    expect_invalid([] { pack_wheel(11); });
    expect_invalid([] { generate_zigzag({2, 0, BoundaryPlan::ThreeBoundary, {}}); });
    expect_invalid([] { generate_zigzag({5, 5, BoundaryPlan::ThreeBoundary, {}}); });
}
