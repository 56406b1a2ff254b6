#include <algorithm>
#include <set>
#include <unordered_set>
#include <vector>

#include "doctest.h"
#include "pcg/collector.hpp"
#include "pcg/consistency.hpp"
#include "pcg/oracle.hpp"
#include "pcg/rng.hpp"
#include "pcg/subgroups.hpp"
#include "test_support.hpp"

using namespace pcg;
using test_support::elt;
using test_support::named;

namespace {

// Brute-force membership mask for cross-checking sift-based containment.
std::unordered_set<uint64_t> oracle_closure(const PcPresentation& p,
                                            const std::vector<Element>& gens,
                                            bool normal) {
  return normal ? oracle::normal_closure_elements(p, gens, 1 << 20)
                : oracle::subgroup_elements(p, gens, 1 << 20);
}

void check_against_oracle(const PcPresentation& p,
                          const std::vector<Element>& gens, bool normal) {
  InducedPcs s = normal ? normal_closure(p, gens)
                        : induced_pcs(p, gens, ClosureKind::kPlain);
  std::unordered_set<uint64_t> ref = oracle_closure(p, gens, normal);
  CHECK(subgroup_order(p, s) == ref.size());
  uint64_t hits = 0;
  for (const Element& e : enumerate_elements(p)) {
    bool in_ref = ref.count(p.pack(e)) > 0;
    CHECK(contains(p, s, e) == in_ref);
    hits += in_ref;
  }
  CHECK(hits == ref.size());
}

}  // namespace

TEST_CASE("induced sequences match the brute-force closure oracle") {
  PcPresentation f = named("F_2_13");
  SUBCASE("two top generators, plain") {
    check_against_oracle(f, {elt(f, "x12"), elt(f, "x13")}, false);
  }
  SUBCASE("single generator, plain") {
    check_against_oracle(f, {elt(f, "x14")}, false);
    CHECK(subgroup_order(f, induced_pcs(f, {elt(f, "x14")},
                                        ClosureKind::kPlain)) == 2);
  }
  SUBCASE("single generator, normal closure") {
    check_against_oracle(f, {elt(f, "x14")}, true);
    CHECK(subgroup_order(f, normal_closure(f, {elt(f, "x14")})) == 1024);
    CHECK(subgroup_order(f, normal_closure(f, {elt(f, "x12")})) == 1024);
  }
  SUBCASE("mixed products in a wreath-like group") {
    PcPresentation p = named("FOUR_EDGE_256");
    check_against_oracle(p, {elt(p, "r1 a"), elt(p, "c")}, false);
    check_against_oracle(p, {elt(p, "r1"), elt(p, "x")}, true);
  }
}

TEST_CASE("member tables are canonical across generating sets") {
  PcPresentation f = named("F_2_13");
  Element x12 = elt(f, "x12"), x13 = elt(f, "x13");
  InducedPcs a = induced_pcs(f, {x12, x13}, ClosureKind::kPlain);
  InducedPcs b = induced_pcs(
      f, {x13, multiply(f, x12, x13), multiply(f, x13, x12)},
      ClosureKind::kPlain);
  CHECK(a == b);

  // Canonical members have exponent zero at every lower occupied slot and a
  // unit pivot.
  for (int32_t i : a.occupied_slots()) {
    const Element& m = a.member(i);
    CHECK(m.leading_index() == i);
    CHECK(m.exp(i) == 1);
    for (int32_t t : a.occupied_slots())
      if (t < i) CHECK(m.exp(t) == 0);
  }
}

TEST_CASE("random subgroups satisfy the order and membership laws") {
  SplitMix64 rng(0xc0ffee);
  for (const char* name : {"F_2_13", "G_GAMMA", "FOUR_EDGE_256"}) {
    CAPTURE(name);
    PcPresentation p = named(name);
    uint64_t order = p.order_product();
    for (int t = 0; t < 10; ++t) {
      std::vector<Element> gens{random_element(p, rng),
                                random_element(p, rng)};
      InducedPcs s = induced_pcs(p, gens, ClosureKind::kPlain);
      uint64_t so = subgroup_order(p, s);
      CHECK(so >= 1);
      CHECK(order % so == 0);  // Lagrange
      for (const auto& g : gens) CHECK(contains(p, s, g));
      // Products and inverses of members stay inside.
      std::vector<Element> ms = s.member_list();
      for (size_t i = 0; i < ms.size(); ++i) {
        CHECK(contains(p, s, inverse(p, ms[i])));
        for (size_t j = 0; j < ms.size(); ++j)
          CHECK(contains(p, s, multiply(p, ms[i], ms[j])));
      }
      // Sift residue contract: r = u*g with u in the subgroup, r's leading
      // slot is unoccupied, and sifting is idempotent.
      Element g = random_element(p, rng);
      Element r = sift(p, s, g);
      CHECK(contains(p, s, multiply(p, r, inverse(p, g))));
      int32_t lead = r.leading_index();
      CHECK((lead == 0 || !s.has_member(lead)));
      CHECK(sift(p, s, r) == r);
    }
  }
}

TEST_CASE("normal closures are closed under conjugation") {
  PcPresentation g = named("G_GAMMA");
  InducedPcs n = normal_closure(g, {elt(g, "e9"), elt(g, "e10"), elt(g, "e11")});
  CHECK(subgroup_order(g, n) == 2048);
  for (const Element& m : n.member_list())
    for (int32_t j = 1; j <= g.size(); ++j)
      CHECK(contains(g, n, conjugate(g, m, g.generator_element(j))));
}

TEST_CASE("subgroup comparison and the full group") {
  PcPresentation f = named("F_2_13");
  InducedPcs whole = full_group(f);
  CHECK(subgroup_order(f, whole) == 8192);
  InducedPcs n = normal_closure(f, {elt(f, "x14")});
  CHECK(subgroup_leq(f, whole, n));        // n <= whole
  CHECK_FALSE(subgroup_leq(f, n, whole));  // whole is not inside n
  CHECK(subgroup_leq(f, n, n));

  InducedPcs trivial_sub = induced_pcs(f, {}, ClosureKind::kPlain);
  CHECK(trivial_sub.trivial());
  CHECK(subgroup_order(f, trivial_sub) == 1);
  CHECK(contains(f, trivial_sub, f.identity()));
  CHECK_FALSE(contains(f, trivial_sub, elt(f, "x1")));
}

TEST_CASE("coset reduction is constant on cosets and needs normality") {
  PcPresentation f = named("F_2_13");
  InducedPcs n = normal_closure(f, {elt(f, "x14")});
  SplitMix64 rng(424242);
  for (int t = 0; t < 40; ++t) {
    Element g = random_element(f, rng);
    Element r = reduce_mod(f, n, g);
    // r is in the same coset: g^-1 r lies in n.
    CHECK(contains(f, n, multiply(f, inverse(f, g), r)));
    // Occupied slots of n are cleared in r.
    for (int32_t s : n.occupied_slots()) CHECK(r.exp(s) == 0);
    // Same representative for every element of the coset.
    std::vector<Element> ms = n.member_list();
    Element h = ms[rng.next_below(ms.size())];
    CHECK(reduce_mod(f, n, multiply(f, g, h)) == r);
  }
  InducedPcs plain = induced_pcs(f, {elt(f, "x14")}, ClosureKind::kPlain);
  CHECK_THROWS_AS(reduce_mod(f, plain, elt(f, "x12")), Error);
  CHECK_THROWS_AS(quotient(f, plain), Error);
}

TEST_CASE("quotients are consistent homomorphic images") {
  PcPresentation f = named("F_2_13");
  InducedPcs n = normal_closure(f, {elt(f, "x14")});
  QuotientResult q = quotient(f, n);
  CHECK(q.pres.order_product() == 8);
  CHECK(q.pres.size() == 3);
  CHECK(check_consistency(q.pres).consistent);

  // Projection is a homomorphism that kills exactly n.
  SplitMix64 rng(777);
  for (int t = 0; t < 60; ++t) {
    Element a = random_element(f, rng);
    Element b = random_element(f, rng);
    CHECK(q.project(f, n, multiply(f, a, b)) ==
          multiply(q.pres, q.project(f, n, a), q.project(f, n, b)));
  }
  for (const Element& m : n.member_list())
    CHECK(q.project(f, n, m) == q.pres.identity());
  CHECK(q.project(f, n, elt(f, "x12")) != q.pres.identity());

  // Generator images line up with the index map.
  for (int32_t i = 1; i <= f.size(); ++i) {
    CHECK(q.generator_images[static_cast<size_t>(i) - 1] ==
          q.project(f, n, f.generator_element(i)));
  }

  // The quotient of the path-graph group by the closure pinned above.
  PcPresentation g = named("G_GAMMA");
  InducedPcs ng =
      normal_closure(g, {elt(g, "e9"), elt(g, "e10"), elt(g, "e11")});
  QuotientResult qg = quotient(g, ng);
  CHECK(qg.pres.order_product() == 512);
  CHECK(check_consistency(qg.pres).consistent);
}
