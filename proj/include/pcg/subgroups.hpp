#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pcg/pc_model.hpp"

namespace pcg {

enum class ClosureKind : uint8_t {
  kPlain,   // closed under member powers and member-by-member conjugation
  kNormal,  // additionally closed under conjugation by every presentation generator
};

// An induced polycyclic sequence: at most one member per leading index, each
// member with leading exponent 1 and, once canonicalized, zero exponents at
// every lower occupied slot.  Membership in the generated subgroup is
// decidable by sifting, and the subgroup order is the product of the
// relative orders at the occupied slots.
struct InducedPcs {
  std::vector<std::optional<Element>> members;  // members[i-1] has leading index i
  ClosureKind kind = ClosureKind::kPlain;

  bool has_member(int32_t i) const {
    return members[static_cast<size_t>(i) - 1].has_value();
  }
  const Element& member(int32_t i) const {
    return *members[static_cast<size_t>(i) - 1];
  }
  std::vector<int32_t> occupied_slots() const;  // ascending
  std::vector<Element> member_list() const;     // ascending by leading index
  bool trivial() const { return occupied_slots().empty(); }

  friend bool operator==(const InducedPcs&, const InducedPcs&) = default;
};

// Reduces g against s: repeatedly cancels the leading index of the residue
// using the member at that slot.  Returns the residue r with g in <s> * r;
// r is the identity exactly when g lies in the subgroup (for a closed s).
Element sift(const PcPresentation& p, const InducedPcs& s, const Element& g);

// Builds the induced sequence for the subgroup generated by gens (kPlain) or
// for its normal closure (kNormal).  Members are canonicalized, so the
// result depends only on the subgroup, not on generator order.
InducedPcs induced_pcs(const PcPresentation& p, const std::vector<Element>& gens,
                       ClosureKind kind);

// Normal closure <gens>^G.
InducedPcs normal_closure(const PcPresentation& p,
                          const std::vector<Element>& gens);

// The whole group as an induced sequence (unit vector at every slot).
InducedPcs full_group(const PcPresentation& p);

bool contains(const PcPresentation& p, const InducedPcs& s, const Element& g);

// Product of relative orders over occupied slots.
uint64_t subgroup_order(const PcPresentation& p, const InducedPcs& s);

// True if every member of b sifts to the identity against a.
bool subgroup_leq(const PcPresentation& p, const InducedPcs& a,
                  const InducedPcs& b);

// Canonical coset representative of g modulo the normal subgroup N: the
// unique element of gN with zero exponents at every slot occupied by N.
// Requires N.kind == kNormal.
Element reduce_mod(const PcPresentation& p, const InducedPcs& n_sub,
                   const Element& g);

// Quotient presentation G/N on the surviving generators (original names with
// a prime suffix), together with the images of the original generators.
struct QuotientResult {
  PcPresentation pres;
  std::vector<int32_t> new_index_of_old;  // [i-1]; 0 when x_i dies in the quotient
  std::vector<Element> generator_images;  // [i-1], elements of pres

  // Image of an arbitrary element of the source presentation.
  Element project(const PcPresentation& p, const InducedPcs& n_sub,
                  const Element& g) const;
};

// Requires N normal-closed and the source presentation consistent; the
// quotient presentation is consistency-checked before being returned.
QuotientResult quotient(const PcPresentation& p, const InducedPcs& n_sub);

}  // namespace pcg
