#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hcp/cycle.h"
#include "hcp/general_pack.h"
#include "hcp/point_set.h"

namespace hcp {

struct InstanceFile {
    PointSet set;
    std::optional<std::uint64_t> seed;
    bool operator==(const InstanceFile& o) const {
        return set.points == o.set.points && set.config == o.set.config && set.center_index == o.set.center_index &&
               seed == o.seed;
    }
};

struct PackingFile {
    std::string instance_hash;
    std::vector<std::vector<int>> cycles;
    // Per cycle, the joining edges removed while it was built.
    std::vector<std::vector<EdgeRef>> removed_edges;
    bool operator==(const PackingFile&) const = default;
};

// Throws InvalidN for sizes the configuration cannot take.
InstanceFile generate(Config config, int n, std::uint64_t seed);

// Fixed field order; the hash covers exactly this text.
std::string serialize(const InstanceFile& f);
std::string serialize(const PackingFile& f);
// Throw MalformedInput naming the offending field.
InstanceFile parse_instance(const std::string& text);
PackingFile parse_packing(const std::string& text);

// SHA-256 of serialize(f), lowercase hex.
std::string instance_hash(const InstanceFile& f);

// Structured packing for convex and wheel sets, pack_general otherwise.
struct PackOutcome {
    PackingFile file;
    bool complete = true;
    std::string diagnostics;
    std::vector<std::string> fallbacks;
};
PackOutcome pack_instance(const InstanceFile& inst);

struct VerifyOutcome {
    bool ok = false;
    bool hash_matches = false;
    std::string message;  // set when the files do not fit together
    PackingReport report;
};
VerifyOutcome verify_files(const InstanceFile& inst, const PackingFile& pack);
std::string verify_text(const VerifyOutcome& v);
std::string verify_json(const VerifyOutcome& v);

std::string oracle_json(const PointSet& ps, int cap);

std::string render_svg(const InstanceFile& inst, const PackingFile& pack);

std::string read_file(const std::string& path);  // throws MalformedInput
void write_file(const std::string& path, const std::string& text);

}  // namespace hcp
