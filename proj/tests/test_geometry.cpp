#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <random>

#include "hcp/errors.h"
#include "hcp/geometry.h"
#include "hcp/io.h"
#include "naive.h"

using namespace hcp;
using boost::multiprecision::cpp_int;

namespace {

int big_orient(Point a, Point b, Point c) {
    cpp_int v = (cpp_int(b.x) - a.x) * (cpp_int(c.y) - a.y) - (cpp_int(b.y) - a.y) * (cpp_int(c.x) - a.x);
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

Point random_point(std::mt19937_64& rng, std::int64_t lim) {
    std::uniform_int_distribution<std::int64_t> d(-lim, lim);
    return {d(rng), d(rng)};
}

}  // namespace

TEST_CASE("orientation matches wide integer arithmetic at every magnitude") {
    std::mt19937_64 rng(11);
    for (std::int64_t lim : {std::int64_t{10}, std::int64_t{1} << 29, std::int64_t{1} << 40, std::int64_t{1} << 60,
                             std::numeric_limits<std::int64_t>::max()}) {
        for (int t = 0; t < 2000; ++t) {
            Point a = random_point(rng, lim), b = random_point(rng, lim), c = random_point(rng, lim);
            REQUIRE(orientation_sign(a, b, c) == big_orient(a, b, c));
        }
    }
}

TEST_CASE("orientation on exact collinear and near collinear triples") {
    const std::int64_t M = std::numeric_limits<std::int64_t>::max();
    const std::int64_t m = std::numeric_limits<std::int64_t>::min();
    CHECK(orientation_sign({0, 0}, {1, 1}, {2, 2}) == 0);
    CHECK(orientation({0, 0}, {1, 0}, {0, 1}) == Orientation::CCW);
    CHECK(orientation({0, 0}, {0, 1}, {1, 0}) == Orientation::CW);
    CHECK(orientation_sign({m, m}, {0, 0}, {M, M}) == big_orient({m, m}, {0, 0}, {M, M}));
    CHECK(orientation_sign({m, M}, {M, m}, {M - 1, m + 1}) == big_orient({m, M}, {M, m}, {M - 1, m + 1}));
    CHECK(orientation_sign({m, m}, {M, M - 1}, {M, M}) == 1);
}

TEST_CASE("proper crossing agrees with the naive test on random segments") {
    std::mt19937_64 rng(5);
    int crossings = 0;
    for (int t = 0; t < 20000; ++t) {
        Point p[4];
        for (auto& q : p) q = random_point(rng, 1000);
        std::vector<Point> v(p, p + 4);
        if (!naive::general_position(v)) continue;
        bool got = segments_properly_cross(p[0], p[1], p[2], p[3]);
        REQUIRE(got == naive::cross(p[0], p[1], p[2], p[3]));
        crossings += got;
    }
    CHECK(crossings > 1000);
}

TEST_CASE("crossing degenerate cases") {
    CHECK_FALSE(segments_properly_cross({0, 0}, {2, 2}, {0, 0}, {2, -2}));  // shared endpoint
    CHECK(segments_properly_cross({0, 0}, {2, 2}, {0, 2}, {2, 0}));
    CHECK_FALSE(segments_properly_cross({0, 0}, {1, 0}, {2, 0}, {3, 0}));  // collinear, apart
    auto overlap = [] { segments_properly_cross({0, 0}, {2, 0}, {1, 0}, {3, 0}); };
    auto touch = [] { segments_properly_cross({0, 0}, {2, 0}, {1, 0}, {1, 5}); };
    CHECK_THROWS_AS(overlap(), Error);
    try {
        overlap();
    } catch (const Error& e) {
        CHECK(e.code() == Errc::CollinearOverlap);
    }
    try {
        touch();
        FAIL("endpoint on a segment must throw");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::CollinearOverlap);
    }
}

TEST_CASE("edge references are canonical") {
    EdgeRef e(5, 2);
    CHECK(e.a == 2);
    CHECK(e.b == 5);
    CHECK(e == EdgeRef(2, 5));
    CHECK(e.touches(EdgeRef(5, 7)));
    CHECK_FALSE(e.touches(EdgeRef(1, 7)));
    CHECK(e.other(2) == 5);
    try {
        EdgeRef bad(3, 3);
        FAIL("loop edge accepted");
    } catch (const Error& err) {
        CHECK(err.code() == Errc::DegenerateInput);
    }
}

TEST_CASE("convex crossing rule equals geometry on a strictly convex set") {
    for (int n : {4, 5, 9, 12}) {
        auto pts = naive::parabola(n);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    for (int d = c + 1; d < n; ++d) {
                        if (a == c || a == d || b == c || b == d) continue;
                        REQUIRE(convex_cross(n, EdgeRef(a, b), EdgeRef(c, d)) ==
                                naive::cross(pts[a], pts[b], pts[c], pts[d]));
                    }
    }
    try {
        convex_cross(6, EdgeRef(0, 2), EdgeRef(2, 4));
        FAIL("shared endpoint accepted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::SharedEndpoint);
    }
}

TEST_CASE("wheel crossing rule equals geometry on generated wheels") {
    for (int n : {6, 10, 14, 20}) {
        auto pts = generate(Config::Wheel, n, 0).set.points;
        int m = n - 1;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    for (int d = c + 1; d < n; ++d) {
                        if (a == c || a == d || b == c || b == d) continue;
                        REQUIRE(wheel_cross(m, EdgeRef(a, b), EdgeRef(c, d)) ==
                                naive::cross(pts[a], pts[b], pts[c], pts[d]));
                    }
    }
}

TEST_CASE("convex hull against the triangle containment test") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        std::vector<Point> pts;
        int n = 3 + t % 12;
        while (static_cast<int>(pts.size()) < n) {
            pts.push_back(random_point(rng, 50));
            if (!naive::general_position(pts)) pts.pop_back();
        }
        std::set<int> want;
        for (int i = 0; i < n; ++i) {
            bool inside = false;
            for (int a = 0; a < n && !inside; ++a)
                for (int b = a + 1; b < n && !inside; ++b)
                    for (int c = b + 1; c < n && !inside; ++c) {
                        if (i == a || i == b || i == c) continue;
                        int s1 = naive::orient(pts[a], pts[b], pts[i]), s2 = naive::orient(pts[b], pts[c], pts[i]),
                            s3 = naive::orient(pts[c], pts[a], pts[i]);
                        inside = s1 == s2 && s2 == s3;
                    }
            if (!inside) want.insert(i);
        }
        auto hull = convex_hull(pts);
        REQUIRE(std::set<int>(hull.begin(), hull.end()) == want);
        REQUIRE(hull.size() == want.size());
        int lo = *std::min_element(hull.begin(), hull.end(), [&](int x, int y) { return pts[x] < pts[y]; });
        CHECK(hull.front() == lo);
        for (std::size_t k = 0; k < hull.size(); ++k)
            CHECK(naive::orient(pts[hull[k]], pts[hull[(k + 1) % hull.size()]], pts[hull[(k + 2) % hull.size()]]) == 1);
    }
}

TEST_CASE("hull of a subset reports original indices") {
    std::vector<Point> pts{{0, 0}, {10, 0}, {5, 1}, {10, 10}, {0, 10}, {5, 5}};
    std::vector<int> subset{1, 2, 5, 3};
    auto hull = convex_hull(pts, subset);
    CHECK(std::set<int>(hull.begin(), hull.end()) == std::set<int>{1, 2, 3, 5});
    CHECK(hull.size() == 4);
}

TEST_CASE("general position detection") {
    CHECK(in_general_position(std::vector<Point>{{0, 0}, {1, 0}, {0, 1}}));
    CHECK_FALSE(in_general_position(std::vector<Point>{{0, 0}, {1, 1}, {3, 3}, {0, 5}}));
    CHECK_FALSE(in_general_position(std::vector<Point>{{0, 0}, {0, 0}, {1, 5}}));
}

TEST_CASE("oriented lines and sides") {
    auto l = OrientedLine::through({0, 0}, 1, 0);
    CHECK(side_of_line(l, {0, 1}) == Side::Left);
    CHECK(side_of_line(l, {3, -1}) == Side::Right);
    CHECK(side_of_line(l, {5, 0}) == Side::On);
    CHECK(side_of_line(l.reversed(), {0, 1}) == Side::Right);
    CHECK(opposite(Side::Left) == Side::Right);
    CHECK_THROWS_AS(OrientedLine::through({0, 0}, 0, 0), Error);
}
