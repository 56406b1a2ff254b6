#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "pcg/collector.hpp"
#include "pcg/consistency.hpp"
#include "pcg/rng.hpp"
#include "test_support.hpp"

using namespace pcg;
using test_support::named;

TEST_CASE("all corpus presentations are consistent with the pinned orders") {
  const std::map<std::string, uint64_t> expected = {
      {"F_2_13", 8192},          {"G_BETA", 268435456},
      {"G_GAMMA", 1048576},      {"COMPLETE_C2_4", 16},
      {"FIVE_EDGE_32", 32},      {"FOUR_EDGE_64", 64},
      {"FOUR_EDGE_256", 256}};
  for (const auto& [name, order] : expected) {
    CAPTURE(name);
    PcPresentation p = named(name);
    ConsistencyReport rep = check_consistency(p);
    CHECK(rep.consistent);
    CHECK(rep.failures.empty());
    CHECK(group_order(p) == order);
  }
}

TEST_CASE("hand-built fixtures are consistent") {
  CHECK(group_order(test_support::d10()) == 10);
  CHECK(group_order(test_support::heis5()) == 125);
  CHECK(group_order(textio::parse_presentation("group T\n")) == 1);
}

namespace {

std::vector<std::string> file_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

std::string joined(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) {
    out += l;
    out += '\n';
  }
  return out;
}

}  // namespace

TEST_CASE("single-relation mutations are caught or define a real group") {
  // Toggle a trailing x1 factor on each conjugation relation of the
  // 13-generator presentation.  Most mutants break the overlap conditions;
  // the checker's verdict is cross-validated with random associativity
  // probes whenever it accepts a mutant.
  std::vector<std::string> lines =
      file_lines(pcg::corpus::raw_presentation_text("F_2_13"));
  int total = 0, caught = 0;
  for (size_t li = 0; li < lines.size(); ++li) {
    if (lines[li].rfind("conj ", 0) != 0) continue;
    ++total;
    std::vector<std::string> mod = lines;
    std::string& l = mod[li];
    if (l.size() >= 3 && l.compare(l.size() - 3, 3, " x1") == 0 &&
        l[l.size() - 4] != 'x')
      l = l.substr(0, l.size() - 3);
    else
      l += " x1";

    PcPresentation mp = textio::parse_presentation(joined(mod));
    ConsistencyReport rep = check_consistency(mp);
    if (!rep.consistent) {
      ++caught;
      // Every reported failure is a genuine overlap mismatch.
      for (const auto& f : rep.failures) CHECK(f.lhs != f.rhs);
      CHECK_THROWS_AS(group_order(mp), Error);
    } else {
      // Accepted mutants must behave associatively.
      SplitMix64 rng(0xfeedULL + li);
      for (int t = 0; t < 200; ++t) {
        Element a = random_element(mp, rng);
        Element b = random_element(mp, rng);
        Element c = random_element(mp, rng);
        CHECK(multiply(mp, multiply(mp, a, b), c) ==
              multiply(mp, a, multiply(mp, b, c)));
      }
    }
  }
  CHECK(total == 27);
  CHECK(caught == 24);  // the three weight-2 definitions survive the toggle
}

TEST_CASE("a dropped conjugation tail is reported with overlap detail") {
  std::vector<std::string> lines =
      file_lines(pcg::corpus::raw_presentation_text("F_2_13"));
  for (auto& l : lines)
    if (l == "conj x13 ^ x14 = x13 x10") l = "conj x13 ^ x14 = x13";
  PcPresentation mp = textio::parse_presentation(joined(lines));
  ConsistencyReport rep = check_consistency(mp);
  REQUIRE_FALSE(rep.consistent);
  CHECK(rep.failures.size() == 5);
  for (const auto& f : rep.failures) {
    CHECK(f.lhs != f.rhs);
    // Indices identify generators of the presentation.
    CHECK(f.j >= 0);
    CHECK(f.k <= mp.size());
  }
}

TEST_CASE("inconsistency is detected in a minimal broken presentation") {
  // c^2 = a with c acting on b by squaring: b^(c^2) = b^4, but the
  // presentation leaves b^a = b trivial, so the power overlap fails.
  PcPresentation bad = textio::parse_presentation(
      "group bad\ngen b order 5\ngen a order 2\ngen c order 2\n"
      "pow c = a\nconj b ^ c = b^2\n");
  CHECK_FALSE(check_consistency(bad).consistent);

  // Supplying the matching action of a repairs it (C5 : C4, order 20).
  PcPresentation good = textio::parse_presentation(
      "group good\ngen b order 5\ngen a order 2\ngen c order 2\n"
      "pow c = a\nconj b ^ a = b^4\nconj b ^ c = b^2\n");
  CHECK(check_consistency(good).consistent);
  CHECK(group_order(good) == 20);
}

TEST_CASE("element enumeration respects limits and covers the group") {
  PcPresentation f = named("F_2_13");

  std::set<uint64_t> keys;
  uint64_t count = 0;
  for (const Element& e : enumerate_elements(f)) {
    keys.insert(f.pack(e));
    // Stream yields reduced exponent vectors.
    for (int32_t i = 1; i <= f.size(); ++i) {
      CHECK(e.exp(i) >= 0);
      CHECK(e.exp(i) < f.relative_order(i));
    }
    if (++count > 8192) break;
  }
  CHECK(count == 8192);
  CHECK(keys.size() == 8192);

  CHECK(enumerate_elements(f, 100).size() == 100);
  CHECK(enumerate_elements(f, 1 << 20).size() == 8192);

  // A 2^28 group exceeds the default ceiling; the guard names the flag.
  PcPresentation g = named("G_BETA");
  try {
    enumerate_elements(g);
    CHECK(false);
  } catch (const LimitError& e) {
    CHECK(std::string(e.what()).find("--max-enumeration") != std::string::npos);
  }
  CHECK(enumerate_elements(g, 10).size() == 10);
}

TEST_CASE("failure report order is deterministic") {
  std::vector<std::string> lines =
      file_lines(pcg::corpus::raw_presentation_text("F_2_13"));
  for (auto& l : lines)
    if (l == "conj x13 ^ x14 = x13 x10") l = "conj x13 ^ x14 = x13";
  PcPresentation mp = textio::parse_presentation(joined(lines));
  ConsistencyReport a = check_consistency(mp);
  ConsistencyReport b = check_consistency(mp);
  REQUIRE(a.failures.size() == b.failures.size());
  for (size_t i = 0; i < a.failures.size(); ++i)
    CHECK(a.failures[i] == b.failures[i]);
}
