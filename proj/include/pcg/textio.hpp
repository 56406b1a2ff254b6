#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pcg/pc_model.hpp"

namespace pcg::textio {

// Line-oriented presentation format.  '#' starts a comment running to the
// end of the line; blank lines are ignored; record order is irrelevant.
//
//   group NAME
//   gen NAME order PRIME            (generator indices follow file order)
//   pow NAME = WORD                 (x^order = WORD; omitted when trivial)
//   conj NAME ^ NAME = WORD         (lower ^ higher = WORD; omitted when trivial)
//
// WORD is "1" for the empty word or a space-separated sequence of NAME or
// NAME^INT letters.  Relation lines reject negative exponents; query words
// parsed via parse_word accept them.
PcPresentation parse_presentation(std::string_view text);

// Canonical serialization: the group line, gen lines in ascending index
// order, pow lines ascending by i, conj lines ascending by (j, i), only
// non-trivial relations.  parse(serialize(p)) == p, and serializing the
// parse of canonical text reproduces it byte for byte.
std::string serialize_presentation(const PcPresentation& p);

// Parses a query word over p's generator names, e.g. "x12 x13^-1 x12^2".
// Returns the empty word for "1".  Errors mention offset of the bad token.
Word parse_word(const PcPresentation& p, std::string_view text);

// Word/element rendering using generator names; the identity prints as "1".
std::string word_to_text(const PcPresentation& p, const Word& w);
std::string element_to_text(const PcPresentation& p, const Element& e);

// One row of a claim report.
struct ClaimRecord {
  std::string claim_id;
  std::string description;
  std::string status;  // "pass" | "fail" | "skipped"
  std::string details;
  int64_t elapsed_ms = 0;

  bool passed() const { return status == "pass"; }
};

// Renders records as a JSON array of objects with fields
// {claim_id, description, status, details, elapsed_ms}.
std::string claim_report_json(const std::vector<ClaimRecord>& records);

}  // namespace pcg::textio
