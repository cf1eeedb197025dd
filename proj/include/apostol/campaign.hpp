#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "apostol/render.hpp"
#include "apostol/report.hpp"

namespace apostol {

struct CampaignConfig {
  std::uint64_t seed = 0;
  int instances_per_identity = 10;
  int max_n = 16;
  int order = 64;                       // series truncation budget; max_n + 2 <= order
  std::vector<std::string> identities;  // identity ids, or empty / {"all"}
  OutputFormat output = OutputFormat::Text;
};

struct CampaignSummary {
  int total = 0;
  int equal = 0;
  int documented = 0;    // equal = false but carrying an erratum note
  int undocumented = 0;  // genuine counterexamples
  std::vector<std::string> lines;
};

struct CampaignResult {
  std::vector<CheckReport> reports;  // sorted by (identity_id, index)
  CampaignSummary summary;
  int exit_code = 0;  // 0 pass (possibly with documented errata), 1 counterexample
};

enum class RunMode { Serial, Parallel };

/// All identity ids in canonical order.
const std::vector<std::string>& identity_catalog();

/// Expands "all" / family shorthands ("upsilon", "raabe_classical") and
/// validates ids; std::invalid_argument on unknown names.
std::vector<std::string> resolve_identities(const std::vector<std::string>& requested);

/// Throws std::invalid_argument on bad config (headroom, counts, ids).
void validate(const CampaignConfig& config);

// Runs every selected identity over a fixed deterministic edge-case set plus
// instances_per_identity seeded instances. Instance generation depends only on
// (seed, identity, index), so Serial and Parallel produce identical reports
// and identical configs replay byte-identically. Serial is the reference
// implementation; Parallel fans the instances out across OpenMP threads.
CampaignResult run_campaign(const CampaignConfig& config, RunMode mode = RunMode::Parallel);

}  // namespace apostol
