#include "pcg/series.hpp"

#include <numeric>

#include "pcg/collector.hpp"
#include "pcg/consistency.hpp"

namespace pcg {
namespace {

// Subgroup generated by `gens`, closed under conjugation by the members of
// `conjugators` (on top of the plain member/power closure).  This is the
// closure operation shared by both series: each new term must be normal in
// the starting group but not necessarily in the whole presentation.
InducedPcs closure_under(const PcPresentation& p,
                         const std::vector<Element>& gens,
                         const std::vector<Element>& conjugators) {
  InducedPcs s = induced_pcs(p, gens, ClosureKind::kPlain);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Element& m : s.member_list()) {
      for (const Element& c : conjugators) {
        Element g = conjugate(p, m, c);
        if (!contains(p, s, g)) {
          std::vector<Element> enlarged = s.member_list();
          enlarged.push_back(g);
          s = induced_pcs(p, enlarged, ClosureKind::kPlain);
          changed = true;
        }
      }
    }
  }
  return s;
}

SeriesChain run_series(const PcPresentation& p, const InducedPcs* within,
                       SeriesKind kind) {
  SeriesChain chain;
  chain.kind = kind;
  InducedPcs start = within ? *within : full_group(p);
  chain.terms.push_back(start);

  const std::vector<Element> base_members = start.member_list();
  while (true) {
    const InducedPcs& cur = chain.terms.back();
    if (cur.trivial()) {
      chain.reached_trivial = true;
      break;
    }
    const std::vector<Element> cur_members = cur.member_list();
    std::vector<Element> gens;
    if (kind == SeriesKind::kLowerCentral) {
      for (const Element& g : cur_members)
        for (const Element& h : base_members)
          gens.push_back(commutator(p, g, h));
    } else {
      for (const Element& g : cur_members)
        for (const Element& h : cur_members)
          gens.push_back(commutator(p, g, h));
    }
    const std::vector<Element>& conjugators =
        kind == SeriesKind::kLowerCentral ? base_members : cur_members;
    InducedPcs next = closure_under(p, gens, conjugators);
    if (next.members == cur.members) {
      chain.reached_trivial = false;
      break;
    }
    chain.terms.push_back(std::move(next));
  }
  return chain;
}

}  // namespace

int32_t SeriesChain::steps_to_trivial() const {
  if (!reached_trivial)
    throw Error("series chain stabilized without reaching the trivial subgroup");
  return static_cast<int32_t>(terms.size()) - 1;
}

SeriesChain lower_central_series(const PcPresentation& p,
                                 const InducedPcs* within) {
  return run_series(p, within, SeriesKind::kLowerCentral);
}

SeriesChain derived_series(const PcPresentation& p, const InducedPcs* within) {
  return run_series(p, within, SeriesKind::kDerived);
}

int32_t nilpotency_class(const PcPresentation& p, const InducedPcs* within) {
  return lower_central_series(p, within).steps_to_trivial();
}

int32_t derived_length(const PcPresentation& p, const InducedPcs* within) {
  return derived_series(p, within).steps_to_trivial();
}

bool centralizes(const PcPresentation& p, const Element& g,
                 const InducedPcs& s) {
  for (const Element& m : s.member_list())
    if (!commutator(p, g, m).is_identity()) return false;
  return true;
}

bool in_hypercentre(const PcPresentation& p, const Element& g, int32_t k) {
  if (k < 0) throw Error("in_hypercentre: negative level");
  if (k == 0) return g.is_identity();
  // Depth-first over generator tuples with pruning: once a partial
  // commutator hits the identity, all its extensions vanish.  Membership in
  // Z_k only needs commutators with generators because Z_{k-1} is normal and
  // [g, ab] = [g, b] [g, a]^b.
  struct Walker {
    const PcPresentation& p;
    int32_t depth;
    bool walk(const Element& cur, int32_t level) {
      if (cur.is_identity()) return true;
      if (level == depth) return cur.is_identity();
      for (int32_t j = 1; j <= p.size(); ++j) {
        Element next = commutator(p, cur, p.generator_element(j));
        if (!walk(next, level + 1)) return false;
      }
      return true;
    }
  };
  Walker w{p, k};
  return w.walk(g, 0);
}

uint64_t element_order(const PcPresentation& p, const Element& g) {
  uint64_t k = p.order_product();
  std::vector<int64_t> primes;
  for (int32_t i = 1; i <= p.size(); ++i) {
    int64_t o = p.relative_order(i);
    bool seen = false;
    for (int64_t q : primes) seen = seen || q == o;
    if (!seen) primes.push_back(o);
  }
  for (int64_t q : primes)
    while (k % static_cast<uint64_t>(q) == 0 &&
           power(p, g, static_cast<int64_t>(k / static_cast<uint64_t>(q)))
               .is_identity())
      k /= static_cast<uint64_t>(q);
  return k;
}

ExponentResult exponent_exhaustive(const PcPresentation& p,
                                   std::optional<uint64_t> limit) {
  ExponentResult res;
  res.exact = !limit || *limit >= p.order_product();
  uint64_t exp = 1;
  for (const Element& g : enumerate_elements(p, limit))
    exp = std::lcm(exp, element_order(p, g));
  res.value = exp;
  return res;
}

ExponentResult exponent_sampled(const PcPresentation& p, uint64_t samples,
                                uint64_t seed) {
  ExponentResult res;
  res.exact = false;
  res.seed = seed;
  res.samples = samples;
  SplitMix64 rng(seed);
  uint64_t exp = 1;
  for (uint64_t t = 0; t < samples; ++t)
    exp = std::lcm(exp, element_order(p, random_element(p, rng)));
  res.value = exp;
  return res;
}

}  // namespace pcg
