#include "hcp/structured_pack.h"

#include <functional>
#include <set>
#include <string>

#include "hcp/errors.h"

namespace hcp {

std::vector<int> zigzag_offsets(int n, BoundaryPlan plan) {
    std::vector<int> s{0};
    int m = n / 2;
    switch (plan) {
        case BoundaryPlan::ThreeBoundary:
            for (int j = 1; j < n - 1; j += 2) {
                s.push_back(j);
                s.push_back(-j);
            }
            break;
        case BoundaryPlan::TwoBoundary: {
            for (int j = 1; j < m; j += 2) {
                s.push_back(j);
                s.push_back(-j);
            }
            s.push_back(m);
            int j = m - 2;
            if (m % 2 == 1) {
                s.push_back(-(m - 1));
                s.push_back(m - 1);
                j = m - 3;
            }
            for (; j >= 2; j -= 2) {
                s.push_back(-j);
                s.push_back(j);
            }
            break;
        }
        case BoundaryPlan::FourBoundary:
            for (int t = 1; t <= m; ++t) s.push_back(t % 2 ? -t : t);
            for (int t = m - 1; t >= 1; --t) s.push_back(t % 2 ? t : -t);
            break;
    }
    return s;
}

HamCycle generate_zigzag(const ZigzagSpec& spec) {
    int n = spec.n;
    if (n < 3) throw Error(Errc::InvalidN, "zigzag needs n >= 3");
    if (spec.anchor < 0 || spec.anchor >= n) throw Error(Errc::InvalidN, "anchor out of range");
    HamCycle c;
    std::vector<char> seen(n, 0);
    for (int off : zigzag_offsets(n, spec.plan)) {
        int v = ((spec.anchor + off) % n + n) % n;
        if (seen[v])
            throw Error(Errc::NonHamiltonian, "offset schedule revisits label " + std::to_string(v) +
                                                  " for n=" + std::to_string(n));
        seen[v] = 1;
        c.order.push_back(v);
    }
    if (c.size() != n) throw Error(Errc::NonHamiltonian, "offset schedule misses labels");
    if (spec.center_after) {
        int p = *spec.center_after;
        if (p < 0 || p >= n) throw Error(Errc::InvalidN, "center position out of range");
        c.order.insert(c.order.begin() + p + 1, n);
    }
    return c;
}

std::vector<ZigzagSpec> convex_schedule(int n) {
    if (n < 3) throw Error(Errc::InvalidN, "convex packing needs n >= 3");
    std::vector<ZigzagSpec> out;
    int k = n / 3;
    if (n % 2 == 1) {
        int m = (n - 1) / 2;
        for (int i = 0; i < k; ++i)
            out.push_back({n, static_cast<int>((static_cast<long long>(m + 2) * i) % n), BoundaryPlan::ThreeBoundary, {}});
        return out;
    }
    // Family A anchors use label sums {2a, 2a+1, 2a+2}, family B {2b-1, 2b+1}.
    int q = n / 6;
    for (int t = 0; t < q; ++t) {
        out.push_back({n, 3 * t, BoundaryPlan::TwoBoundary, {}});
        out.push_back({n, (3 * t + 2) % n, BoundaryPlan::FourBoundary, {}});
    }
    if (n % 6 == 4) out.push_back({n, 3 * q, BoundaryPlan::TwoBoundary, {}});
    return out;
}

namespace {

void check_packing(const Packing& p, int n, const CrossingOracle& oracle, const char* what) {
    auto r = verify_packing(p, n, oracle);
    if (!r.ok) throw Error(Errc::ConstructionFailed, std::string(what) + " packing failed verification for n=" + std::to_string(n));
}

}  // namespace

Packing pack_convex(int n) {
    Packing p;
    for (const auto& spec : convex_schedule(n)) p.cycles.push_back(generate_zigzag(spec));
    check_packing(p, n, CrossingOracle::convex(n), "convex");
    return p;
}

Packing pack_wheel(int n) {
    if (n % 2 != 0 || n < 10) throw Error(Errc::InvalidN, "wheel packing needs even n >= 10, got " + std::to_string(n));
    int rim = n - 1;
    int half = (rim - 1) / 2;
    int k = rim / 3;
    auto oracle = CrossingOracle::wheel(n);

    // Splice candidates per cycle: position rim-3 first, then the rest in order.
    std::vector<std::vector<HamCycle>> cands(k);
    for (int i = 0; i < k; ++i) {
        int anchor = static_cast<int>((static_cast<long long>(half + 2) * i) % rim);
        HamCycle base = generate_zigzag({rim, anchor, BoundaryPlan::ThreeBoundary, {}});
        std::vector<int> positions{rim - 3};
        for (int p = 0; p < rim; ++p)
            if (p != rim - 3) positions.push_back(p);
        for (int p : positions) {
            EdgeRef split(base.order[p], base.order[(p + 1) % rim]);
            if (is_boundary(split, rim)) continue;
            HamCycle c = generate_zigzag({rim, anchor, BoundaryPlan::ThreeBoundary, p});
            if (is_one_plane(c, oracle)) cands[i].push_back(c);
        }
    }

    // Radial edges of different cycles must not coincide.
    Packing p;
    std::set<int> used;
    std::function<bool(int)> place = [&](int i) {
        if (i == k) return true;
        for (const auto& c : cands[i]) {
            std::vector<int> ends;
            for (const auto& e : c.edges())
                if (e.b == rim) ends.push_back(e.a);
            if (used.count(ends[0]) || used.count(ends[1])) continue;
            used.insert(ends.begin(), ends.end());
            p.cycles.push_back(c);
            if (place(i + 1)) return true;
            p.cycles.pop_back();
            for (int v : ends) used.erase(v);
        }
        return false;
    };
    if (!place(0)) throw Error(Errc::ConstructionFailed, "no radial assignment for wheel n=" + std::to_string(n));
    check_packing(p, n, oracle, "wheel");
    return p;
}

}  // namespace hcp
