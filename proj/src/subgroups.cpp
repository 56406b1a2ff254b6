#include "pcg/subgroups.hpp"

#include <deque>
#include <tuple>

#include "pcg/collector.hpp"
#include "pcg/consistency.hpp"

namespace pcg {
namespace {

// Multiplicative inverse mod a prime.
int64_t inv_mod(int64_t a, int64_t m) {
  int64_t r = 1;
  int64_t b = a % m;
  int64_t e = m - 2;
  while (e > 0) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

// Normalizes a non-identity residue to leading exponent 1.
Element normalize_pivot(const PcPresentation& p, const Element& r) {
  int32_t lead = r.leading_index();
  int64_t e = r.exp(lead);
  if (e == 1) return r;
  int64_t k = inv_mod(e, p.relative_order(lead));
  return power(p, r, k);
}

// Clears the exponent of g at slot s by right multiplication with a power of
// m_s (a member whose leading index is s with leading exponent 1).  Slots
// above s are untouched: collecting x_s^{-e} leftward past letters of lower
// index only produces letters of lower index, so exponents at and above s add
// directly and the slot-s exponents cancel.  The multiplier is itself a
// member power, so the product stays inside the subgroup the table spans.
// Used both for member canonicalization and for coset reduction.
Element clear_slot_low(const PcPresentation& p, const Element& g,
                       const Element& m_s, int32_t s) {
  int32_t e = g.exp(s);
  if (e == 0) return g;
  return multiply(p, g, power(p, m_s, -static_cast<int64_t>(e)));
}

// Inserts g (and the closure obligations it spawns) into the member table.
// Returns true if the table changed.
bool sift_insert(const PcPresentation& p, InducedPcs& s, Element g,
                 std::deque<Element>& queue) {
  Element r = sift(p, s, g);
  if (r.is_identity()) return false;
  r = normalize_pivot(p, r);
  int32_t lead = r.leading_index();
  s.members[static_cast<size_t>(lead) - 1] = r;

  // New closure obligations for the new member.
  queue.push_back(power(p, r, p.relative_order(lead)));
  for (int32_t i = 1; i <= p.size(); ++i) {
    if (!s.has_member(i) || i == lead) continue;
    queue.push_back(conjugate(p, r, s.member(i)));
    queue.push_back(conjugate(p, s.member(i), r));
  }
  queue.push_back(conjugate(p, r, r));  // trivial, kept for uniformity
  if (s.kind == ClosureKind::kNormal)
    for (int32_t j = 1; j <= p.size(); ++j)
      queue.push_back(conjugate(p, r, p.generator_element(j)));
  return true;
}

}  // namespace

std::vector<int32_t> InducedPcs::occupied_slots() const {
  std::vector<int32_t> out;
  for (size_t i = 0; i < members.size(); ++i)
    if (members[i]) out.push_back(static_cast<int32_t>(i) + 1);
  return out;
}

std::vector<Element> InducedPcs::member_list() const {
  std::vector<Element> out;
  for (const auto& m : members)
    if (m) out.push_back(*m);
  return out;
}

Element sift(const PcPresentation& p, const InducedPcs& s, const Element& g) {
  Element r = g;
  while (true) {
    int32_t lead = r.leading_index();
    if (lead == 0) return r;
    if (!s.has_member(lead)) return r;
    int32_t e = r.exp(lead);
    // Member has leading exponent 1, so m^{-e} * r drops the leading index.
    r = multiply(p, power(p, s.member(lead), -static_cast<int64_t>(e)), r);
  }
}

InducedPcs induced_pcs(const PcPresentation& p, const std::vector<Element>& gens,
                       ClosureKind kind) {
  InducedPcs s;
  s.kind = kind;
  s.members.assign(static_cast<size_t>(p.size()), std::nullopt);

  std::deque<Element> queue(gens.begin(), gens.end());
  if (kind == ClosureKind::kNormal) {
    // Conjugates of the seed generators feed the closure as members appear;
    // seeding the generators themselves is enough because every inserted
    // member is conjugated by all presentation generators.
  }
  while (!queue.empty()) {
    Element g = std::move(queue.front());
    queue.pop_front();
    sift_insert(p, s, std::move(g), queue);
  }

  // Re-verify the closure conditions until stable (a new member inserted by
  // a late obligation can invalidate earlier ones).
  bool changed = true;
  while (changed) {
    changed = false;
    std::deque<Element> obligations;
    for (int32_t i = 1; i <= p.size(); ++i) {
      if (!s.has_member(i)) continue;
      const Element& m = s.member(i);
      obligations.push_back(power(p, m, p.relative_order(i)));
      for (int32_t j = 1; j <= p.size(); ++j) {
        if (!s.has_member(j) || j == i) continue;
        obligations.push_back(conjugate(p, m, s.member(j)));
      }
      if (s.kind == ClosureKind::kNormal)
        for (int32_t j = 1; j <= p.size(); ++j)
          obligations.push_back(conjugate(p, m, p.generator_element(j)));
    }
    while (!obligations.empty()) {
      Element g = std::move(obligations.front());
      obligations.pop_front();
      if (sift_insert(p, s, std::move(g), obligations)) changed = true;
    }
  }

  // Canonicalize: clear every lower occupied slot of every member.  The
  // result is the unique zero-pivot-slot representative of its coset, so the
  // member set depends only on the subgroup.
  for (int32_t i = p.size(); i >= 1; --i) {
    if (!s.has_member(i)) continue;
    Element m = s.member(i);
    for (int32_t t = i - 1; t >= 1; --t)
      if (s.has_member(t) && m.exp(t) != 0)
        m = clear_slot_low(p, m, s.member(t), t);
    s.members[static_cast<size_t>(i) - 1] = m;
  }
  return s;
}

InducedPcs normal_closure(const PcPresentation& p,
                          const std::vector<Element>& gens) {
  return induced_pcs(p, gens, ClosureKind::kNormal);
}

InducedPcs full_group(const PcPresentation& p) {
  InducedPcs s;
  s.kind = ClosureKind::kNormal;
  s.members.assign(static_cast<size_t>(p.size()), std::nullopt);
  for (int32_t i = 1; i <= p.size(); ++i)
    s.members[static_cast<size_t>(i) - 1] = p.generator_element(i);
  return s;
}

bool contains(const PcPresentation& p, const InducedPcs& s, const Element& g) {
  return sift(p, s, g).is_identity();
}

uint64_t subgroup_order(const PcPresentation& p, const InducedPcs& s) {
  uint64_t order = 1;
  for (int32_t i : s.occupied_slots()) {
    uint64_t o = static_cast<uint64_t>(p.relative_order(i));
    if (order > (uint64_t{1} << 62) / o)
      throw Error("subgroup order exceeds 2^63");
    order *= o;
  }
  return order;
}

bool subgroup_leq(const PcPresentation& p, const InducedPcs& a,
                  const InducedPcs& b) {
  for (const Element& m : b.member_list())
    if (!contains(p, a, m)) return false;
  return true;
}

Element reduce_mod(const PcPresentation& p, const InducedPcs& n_sub,
                   const Element& g) {
  if (n_sub.kind != ClosureKind::kNormal)
    throw Error("reduce_mod requires a normal-closed subgroup");
  Element r = g;
  for (int32_t s = p.size(); s >= 1; --s)
    if (n_sub.has_member(s) && r.exp(s) != 0)
      r = clear_slot_low(p, r, n_sub.member(s), s);
  return r;
}

Element QuotientResult::project(const PcPresentation& p,
                                const InducedPcs& n_sub,
                                const Element& g) const {
  Element r = reduce_mod(p, n_sub, g);
  Element out = pres.identity();
  for (int32_t i = 1; i <= p.size(); ++i)
    if (r.exp(i) != 0) out.set_exp(new_index_of_old[static_cast<size_t>(i) - 1],
                                   r.exp(i));
  return out;
}

QuotientResult quotient(const PcPresentation& p, const InducedPcs& n_sub) {
  if (n_sub.kind != ClosureKind::kNormal)
    throw Error("quotient requires a normal-closed subgroup");

  QuotientResult q;
  q.new_index_of_old.assign(static_cast<size_t>(p.size()), 0);
  std::vector<int32_t> surviving;
  for (int32_t i = 1; i <= p.size(); ++i) {
    if (!n_sub.has_member(i)) {
      surviving.push_back(i);
      q.new_index_of_old[static_cast<size_t>(i) - 1] =
          static_cast<int32_t>(surviving.size());
    }
  }

  auto reduce_to_word = [&](const Element& g) -> Word {
    Element r = reduce_mod(p, n_sub, g);
    Word w;
    for (int32_t t = p.size(); t >= 1; --t)
      if (r.exp(t) != 0)
        w.letters.push_back(
            Letter{q.new_index_of_old[static_cast<size_t>(t) - 1], r.exp(t)});
    return w;
  };

  RawPresentation raw;
  raw.name = p.name() + "_quo";
  for (int32_t i : surviving)
    raw.generators.push_back(
        {p.generator(i).name + "'", p.relative_order(i)});
  for (size_t a = 0; a < surviving.size(); ++a) {
    int32_t i = surviving[a];
    Word tail = reduce_to_word(
        power(p, p.generator_element(i), p.relative_order(i)));
    if (!tail.empty())
      raw.powers.emplace_back(static_cast<int32_t>(a) + 1, tail);
    for (size_t b = a + 1; b < surviving.size(); ++b) {
      int32_t j = surviving[b];
      Word rhs = reduce_to_word(
          conjugate(p, p.generator_element(i), p.generator_element(j)));
      Word trivial = Word::single(static_cast<int32_t>(a) + 1);
      if (!(rhs == trivial))
        raw.conjs.emplace_back(static_cast<int32_t>(a) + 1,
                               static_cast<int32_t>(b) + 1, rhs);
    }
  }

  q.pres = validate(raw);
  ConsistencyReport rep = check_consistency(q.pres);
  if (!rep.consistent)
    throw Error("internal error: quotient presentation of " + p.name() +
                " failed its consistency check");

  for (int32_t i = 1; i <= p.size(); ++i)
    q.generator_images.push_back(
        q.project(p, n_sub, p.generator_element(i)));
  return q;
}

}  // namespace pcg
