#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "pcg/consistency.hpp"
#include "pcg/engel.hpp"
#include "pcg/pc_model.hpp"
#include "pcg/subgroups.hpp"
#include "pcg/textio.hpp"

namespace pcg::corpus {

// Names of the built-in presentations, in canonical order.
std::vector<std::string> corpus_names();

// Raw text of a built-in presentation file.  If the environment variable
// PCENGEL_CORPUS_DIR is set, the file <dir>/<name>.pc is read instead of the
// embedded copy.  Throws Error for unknown names or unreadable overrides.
std::string raw_presentation_text(const std::string& name);

// Parse and validate a built-in presentation.
PcPresentation load_named(const std::string& name);

// One executable verification claim.  `params` is a kind-specific JSON
// object; words inside it use a small expression language:
//   "x12 x13"                 literal word over generator names
//   {"comm": [w1, w2, ...]}   left-normed commutator (>= 2 entries)
//   {"prod": [w1, w2, ...]}   product
//   {"conj": [w, by]}         conjugate w^by
//   {"inv":  w}               inverse
//   {"pow":  [w, k]}          integer power
struct Claim {
  std::string claim_id;
  std::string description;
  std::string presentation;
  std::string kind;
  std::int64_t budget_ms = 0;
  nlohmann::json params;
};

// The built-in claim suite (18 claims, sorted by claim_id).  Subject to the
// same PCENGEL_CORPUS_DIR override, reading <dir>/claims.json.
std::vector<Claim> claim_suite();

struct RunOptions {
  std::uint64_t seed = 0;
  std::uint64_t max_enumeration = kDefaultEnumerationBound;
  std::uint64_t max_orbit = kDefaultOrbitLimit;
  // When false (the default) elapsed_ms is reported as 0 so that repeated
  // runs with the same seed produce byte-identical reports.
  bool record_time = false;
};

// Evaluate a word expression (see Claim) to a normal-form element.
Element eval_word_spec(const PcPresentation& p, const nlohmann::json& spec);

// Evaluate a subgroup expression: {"subgroup": [words]} for the generated
// subgroup, {"normal_closure": [words]} for its normal closure.
InducedPcs eval_subgroup_spec(const PcPresentation& p,
                              const nlohmann::json& spec);

// Run one claim to a verdict.  Failures are results, not exceptions.
textio::ClaimRecord run_claim(const Claim& c, const RunOptions& opts);

// Run the suite (optionally restricted to the ids in `only`), in parallel
// over `threads` workers, returning records sorted by claim_id.
std::vector<textio::ClaimRecord> run_suite(const std::vector<std::string>& only,
                                           const RunOptions& opts,
                                           unsigned threads = 1);

}  // namespace pcg::corpus
