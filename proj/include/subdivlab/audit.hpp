#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "subdivlab/graph.hpp"
#include "subdivlab/packing.hpp"
#include "subdivlab/subdivision.hpp"
#include "subdivlab/threshold.hpp"

namespace subdiv {

inline constexpr const char* kLibraryVersion = "0.1.0";

struct HostSpec {
    std::string kind;  // erdos-renyi | random-regular | file
    int n = 0;
    double param = 0.0;
    std::string path;  // kind == file
};

struct ExperimentConfig {
    std::vector<HostSpec> hosts;
    std::vector<std::uint64_t> seeds;
    int k = 1;
    std::string pattern_spec = "K3";     // "Kt", "parallel:m", or a file path
    std::string family_kind = "paper";   // paper | pigeonhole | custom:FILE
    std::string L_text = "2";
    std::string C_text = "1";            // constant for O/Omega trend bounds
    std::string s_rule = "all";          // all | random:SIZE | ball:RADIUS
    std::string mode = "exact";          // greedy | exact
    std::vector<std::string> audits;
    bool enforce_delta_precondition = false;
    std::uint64_t hfree_budget = 20'000'000;
    std::uint64_t packing_nodes = 10'000'000;
    std::uint64_t tuple_budget = 2'000'000;
    std::uint64_t path_budget = 50'000'000;
    std::uint64_t walk_budget = 5'000'000;
    int workers = 0;  // 0: use SUBDIVLAB_WORKERS env var, default 1

    static ExperimentConfig from_toml_file(const std::string& path);
    static ExperimentConfig from_toml_text(const std::string& text);
    std::string to_json() const;  // canonical echo for the report sidecar
};

enum class AuditFlag { pass, fail, not_applicable };

struct AuditRecord {
    std::string lemma;
    std::string generator;
    int n = 0;
    std::string param;
    std::uint64_t seed = 0;
    int delta = 0;
    int max_degree = 0;
    std::string ratio;        // exact rational "p/q"
    std::string hfree;        // yes | no | unknown | -
    int k = 0;
    std::string L;
    std::string family;
    std::string pattern;
    std::size_t s_size = 0;
    std::string mode;
    std::string measured;     // exact integer or rational
    std::string bound;        // exact rational (includes C where applicable)
    std::string ratio_value;  // measured / raw bound, exact rational, "-" if undefined
    AuditFlag flag = AuditFlag::not_applicable;
    int alpha = -1;
    int beta = -1;
    std::string note;
};

std::string audit_flag_name(AuditFlag flag);

// All known audit ids, in report order.
const std::vector<std::string>& known_audits();

// One record per (audit, host, seed), ordered by (audit, host index, seed
// index); the grid is never silently shrunk (budget problems produce
// not-applicable records).
std::vector<AuditRecord> run_lemma_audit(const ExperimentConfig& config);

bool any_strict_failure(const std::vector<AuditRecord>& records);

std::string records_to_csv(const std::vector<AuditRecord>& records);

// Writes audit.csv and audit_config.json (config echo + library version).
void write_audit_report(const std::string& out_dir, const ExperimentConfig& config,
                        const std::vector<AuditRecord>& records);

// "Kt" -> complete multigraph, "parallel:m" -> two vertices with m parallel
// edges, anything else is read as a multigraph edge-list file.
MultiGraph parse_pattern_spec(const std::string& text);

ThresholdFamily make_family(const std::string& kind, const std::string& L_text, int max_len);

}  // namespace subdiv
