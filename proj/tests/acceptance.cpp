// Acceptance suite: one PASS/FAIL line per criterion on stdout, details on
// stderr. Exit status 0 iff every criterion passes.
#include <algorithm>
#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>

#include "fixtures.h"
#include "hcp/errors.h"
#include "hcp/general_pack.h"
#include "hcp/io.h"
#include "hcp/oracle.h"
#include "hcp/structured_pack.h"

using namespace hcp;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

bool run(int id, const std::string& name, double limit_s, const std::function<Outcome()>& body) {
    auto t0 = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    bool in_time = secs < limit_s;
    bool pass = o.ok && in_time;
    std::ostringstream os;
    os.precision(3);
    os << (pass ? "PASS" : "FAIL") << " criterion " << id << ": " << name << " (" << o.detail << "; " << std::fixed
       << secs << " s";
    if (!in_time) os << ", over the " << limit_s << " s limit";
    os << ")";
    std::cout << os.str() << std::endl;
    return pass;
}

int floor_log2(int n) {
    int k = 0;
    while ((2 << k) <= n) ++k;
    return k;
}

Outcome convex_packing() {
    Outcome o;
    int checked = 0;
    for (int n = 3; n <= 48; ++n) {
        auto inst = generate(Config::Convex, n, static_cast<std::uint64_t>(n));
        auto r = pack_instance(inst);
        auto v = verify_files(inst, r.file);
        int want = n / 3;
        if (!v.ok || static_cast<int>(r.file.cycles.size()) != want) {
            o.ok = false;
            std::cerr << "convex n=" << n << ": " << r.file.cycles.size() << " cycles, want " << want << "\n"
                      << verify_text(v);
        }
        ++checked;
    }
    o.detail = std::to_string(checked) + " sizes n=3..48, floor(n/3) verified cycles each";
    return o;
}

Outcome wheel_packing() {
    Outcome o;
    int checked = 0;
    for (int n = 10; n <= 48; n += 2) {
        auto inst = generate(Config::Wheel, n, 0);
        auto r = pack_instance(inst);
        auto v = verify_files(inst, r.file);
        int want = (n - 1) / 3;
        bool radial_ok = true;
        int center = *inst.set.center_index;
        for (const auto& c : r.file.cycles) {
            int radial = 0;
            for (const auto& e : HamCycle{c}.edges()) radial += e.has(center);
            radial_ok = radial_ok && radial == 2;
        }
        if (!v.ok || !radial_ok || static_cast<int>(r.file.cycles.size()) != want) {
            o.ok = false;
            std::cerr << "wheel n=" << n << ": " << r.file.cycles.size() << " cycles, want " << want
                      << ", radial edges ok " << radial_ok << "\n";
        }
        ++checked;
    }
    o.detail = std::to_string(checked) + " even sizes n=10..48, floor((n-1)/3) verified cycles with two radial edges";
    return o;
}

Outcome tightness(bool with_n9) {
    Outcome o;
    std::ostringstream d;
    int hi = with_n9 ? 9 : 8;
    for (int n = 3; n <= hi; ++n) {
        auto ps = generate(Config::Convex, n, 0).set;
        auto rep = max_packing_exact(ps, n);
        d << "convex n=" << n << ": " << rep.max_packing_size << "; ";
        if (rep.max_packing_size != n / 3) o.ok = false;
    }
    auto ws = generate(Config::Wheel, 10, 0).set;
    auto rep = max_packing_exact(ws, 10);
    d << "wheel n=10: " << rep.max_packing_size;
    if (rep.max_packing_size != 3) o.ok = false;
    o.detail = d.str();
    return o;
}

Outcome structure_lemmas() {
    Outcome o;
    long long cycles = 0, bad = 0;
    for (int n = 3; n <= 8; ++n) {
        auto rep = property_sweep(generate(Config::Convex, n, 0).set, n);
        cycles += rep.cycles_checked;
        long long v = rep.lemma1_violations + rep.prop2_violations + rep.prop3_violations;
        bad += v;
        for (const auto& c : rep.counterexamples) std::cerr << "convex n=" << n << " counterexample " << c << "\n";
    }
    auto rep = property_sweep(generate(Config::Wheel, 10, 0).set, 10);
    cycles += rep.cycles_checked;
    bad += rep.radial_violations;
    o.ok = bad == 0;
    o.detail = std::to_string(cycles) + " cycles swept, " + std::to_string(bad) + " counterexamples";
    return o;
}

Outcome march_corpus() {
    Outcome o;
    int passed = 0, members = 0, small = 0;
    for (int i = 0; i < 200; ++i) {
        int n = 5 + i % 28;
        auto ps = generate(Config::General, n, 5000 + static_cast<std::uint64_t>(i)).set;
        std::vector<int> all(n);
        std::iota(all.begin(), all.end(), 0);
        bool ok = false;
        try {
            auto r = algorithm_a(ps, all);
            ok = verify_hamiltonian(r.cycle, n) && is_one_plane(r.cycle, CrossingOracle::geometric(ps.points));
            if (ok && n <= 8) {
                ++small;
                auto cycles = enumerate_1phc(ps, all, n);
                bool member = std::find(cycles.begin(), cycles.end(), canonical(r.cycle)) != cycles.end();
                members += member;
                ok = member;
            }
        } catch (const Error& e) {
            std::cerr << "march instance " << i << " (n=" << n << "): " << e.what() << "\n";
        }
        passed += ok;
    }
    o.ok = passed == 200;
    o.detail = std::to_string(passed) + "/200 verified, " + std::to_string(members) + "/" + std::to_string(small) +
               " small outputs found by enumeration";
    return o;
}

Outcome general_packing() {
    Outcome o;
    int complete = 0, total = 0, fallback_instances = 0;
    for (int n : {8, 16, 17, 32, 33}) {
        int target = floor_log2(n) - 1;
        for (int s = 1; s <= 50; ++s) {
            ++total;
            auto inst = generate(Config::General, n, static_cast<std::uint64_t>(s));
            auto r = pack_general(inst.set);
            auto rep = verify_packing(r.packing, n, CrossingOracle::geometric(inst.set.points));
            bool ok = r.complete && rep.ok && static_cast<int>(r.packing.cycles.size()) >= target;
            complete += ok;
            if (!ok) std::cerr << "general n=" << n << " seed " << s << ": incomplete, " << r.diagnostics << "\n";
            if (!r.fallbacks.empty()) {
                ++fallback_instances;
                for (const auto& f : r.fallbacks) std::cerr << "general n=" << n << " seed " << s << " fallback: " << f << "\n";
            }
        }
    }
    o.ok = complete == total;
    o.detail = std::to_string(complete) + "/" + std::to_string(total) + " instances reach k-1 cycles, " +
               std::to_string(fallback_instances) + " used a fallback path";
    return o;
}

Outcome figures() {
    Outcome o;
    bool a = fixtures::same_up_to_dihedral(pack_convex(12), fixtures::kConvex12, 12);
    bool b = fixtures::same_up_to_dihedral(pack_convex(13), fixtures::kConvex13, 13);
    bool c = fixtures::same_up_to_dihedral(pack_wheel(14), fixtures::kWheel14, 13);
    o.ok = a && b && c;
    o.detail = std::string("convex 12 ") + (a ? "match" : "differs") + ", convex 13 " + (b ? "match" : "differs") +
               ", wheel 14 " + (c ? "match" : "differs");
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    bool with_n9 = false;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--with-n9") == 0) with_n9 = true;
        else {
            std::cerr << "usage: acceptance [--with-n9]\n";
            return 2;
        }
    }
    bool all = true;
    all &= run(1, "convex packing reaches floor(n/3)", 1.0, convex_packing);
    all &= run(2, "wheel packing reaches floor((n-1)/3)", 1.0, wheel_packing);
    all &= run(3, "exhaustive maximum packing is tight", with_n9 ? 600.0 : 120.0, [&] { return tightness(with_n9); });
    all &= run(4, "structure lemmas hold on every enumerated cycle", 120.0, structure_lemmas);
    all &= run(5, "march yields a verified 1-PHC on the seeded corpus", 30.0, march_corpus);
    all &= run(6, "general packing reaches k-1 cycles on the seeded corpus", 300.0, general_packing);
    all &= run(7, "figure packings reproduced up to relabeling", 10.0, figures);
    return all ? 0 : 1;
}
