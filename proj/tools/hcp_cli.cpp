// Command-line front end: generate, pack, verify, oracle, render.
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hcp/errors.h"
#include "hcp/io.h"
#include "hcp/oracle.h"

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kMalformed = 2, kConstruction = 3 };

int exit_code(hcp::Errc c) {
    switch (c) {
        case hcp::Errc::MalformedInput:
        case hcp::Errc::InvalidN:
        case hcp::Errc::TooLarge:
        case hcp::Errc::DegenerateInput:
        case hcp::Errc::ConfigMismatch:
            return kMalformed;
        default:
            return kConstruction;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Edge-disjoint 1-plane Hamiltonian cycle packings"};
    app.require_subcommand(1);

    std::string config = "general", in, out, instance, packing;
    int n = 0;
    std::uint64_t seed = 0;
    bool as_json = false;
    int max_n = hcp::default_oracle_cap();

    auto* gen = app.add_subcommand("generate", "Write a seeded point set");
    gen->add_option("--config", config, "convex, wheel or general")
        ->check(CLI::IsMember({"convex", "wheel", "general"}))
        ->required();
    gen->add_option("--n", n, "Number of points")->required();
    gen->add_option("--seed", seed, "Generator seed");
    gen->add_option("--out", out, "Instance file")->required();

    auto* pack = app.add_subcommand("pack", "Pack edge-disjoint 1-PHCs for an instance");
    pack->add_option("--in", in, "Instance file")->required();
    pack->add_option("--out", out, "Packing file")->required();

    auto* verify = app.add_subcommand("verify", "Check a packing against its instance");
    verify->add_option("--instance", instance, "Instance file")->required();
    verify->add_option("--packing", packing, "Packing file")->required();
    verify->add_flag("--json", as_json, "Machine-readable report");

    auto* oracle = app.add_subcommand("oracle", "Exhaustive enumeration and maximum packing");
    oracle->add_option("--in", in, "Instance file")->required();
    oracle->add_option("--max-n", max_n, "Refuse larger instances (HCP_MAX_ORACLE_N sets the default)")
        ->check(CLI::Range(1, hcp::kOracleHardMax));

    auto* render = app.add_subcommand("render", "Draw a packing as SVG");
    render->add_option("--instance", instance, "Instance file")->required();
    render->add_option("--packing", packing, "Packing file")->required();
    render->add_option("--out", out, "SVG file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kMalformed;
    }

    try {
        if (*gen) {
            auto f = hcp::generate(hcp::parse_config(config), n, seed);
            hcp::write_file(out, hcp::serialize(f));
            std::cout << "wrote " << f.set.size() << " " << config << " points to " << out << "\n";
        } else if (*pack) {
            auto inst = hcp::parse_instance(hcp::read_file(in));
            auto r = hcp::pack_instance(inst);
            hcp::write_file(out, hcp::serialize(r.file));
            for (const auto& note : r.fallbacks) std::cerr << "fallback: " << note << "\n";
            std::cout << "wrote " << r.file.cycles.size() << " cycles to " << out << "\n";
            if (!r.complete) {
                std::cerr << "packing incomplete: " << r.diagnostics << "\n";
                return kConstruction;
            }
        } else if (*verify) {
            auto inst = hcp::parse_instance(hcp::read_file(instance));
            auto p = hcp::parse_packing(hcp::read_file(packing));
            auto v = hcp::verify_files(inst, p);
            std::cout << (as_json ? hcp::verify_json(v) : hcp::verify_text(v));
            return v.ok ? kOk : kVerifyFailed;
        } else if (*oracle) {
            auto inst = hcp::parse_instance(hcp::read_file(in));
            std::cout << hcp::oracle_json(inst.set, max_n);
        } else if (*render) {
            auto inst = hcp::parse_instance(hcp::read_file(instance));
            auto p = hcp::parse_packing(hcp::read_file(packing));
            hcp::write_file(out, hcp::render_svg(inst, p));
            std::cout << "wrote " << out << "\n";
        }
    } catch (const hcp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConstruction;
    }
    return kOk;
}
