#pragma once

#include <unordered_set>

#include "pcg/pc_model.hpp"

namespace pcg::oracle {

// Independent reference implementations used only by property checks and
// tests.  They share no code path with the main collector: words are kept as
// flat letter strings and rewritten one relation application at a time,
// always at the rightmost applicable position (the main collector works from
// the left).  These are exponentially slower and limited to small groups.

// Normal form by rightmost-first single-relation rewriting.  The input word
// may contain negative exponents.
Element collect_rightmost(const PcPresentation& p, const Word& w);

// All elements of the subgroup generated by gens, computed as a plain
// closure under multiplication (no sifting), as packed keys.
std::unordered_set<uint64_t> subgroup_elements(const PcPresentation& p,
                                               const std::vector<Element>& gens,
                                               uint64_t size_limit);

// All elements of the normal closure of gens.
std::unordered_set<uint64_t> normal_closure_elements(
    const PcPresentation& p, const std::vector<Element>& gens,
    uint64_t size_limit);

}  // namespace pcg::oracle
