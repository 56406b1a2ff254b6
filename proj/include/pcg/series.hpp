#pragma once

#include <cstdint>
#include <optional>

#include "pcg/rng.hpp"
#include "pcg/subgroups.hpp"

namespace pcg {

enum class SeriesKind : uint8_t { kLowerCentral, kDerived };

// A descending chain of subgroups.  terms.front() is the starting group;
// the chain stops at the first trivial or repeated term.
struct SeriesChain {
  SeriesKind kind = SeriesKind::kLowerCentral;
  std::vector<InducedPcs> terms;
  bool reached_trivial = false;  // false means the chain stabilized non-trivially

  // Length of the chain before the trivial term; for a lower central series
  // of a nilpotent group this is the nilpotency class.
  int32_t steps_to_trivial() const;
};

// gamma_1 = within (or the whole group); gamma_{k+1} is the closure, under
// conjugation by gamma_1's members, of the commutators [g, h] with g a
// member of gamma_k and h a member of gamma_1.
SeriesChain lower_central_series(const PcPresentation& p,
                                 const InducedPcs* within = nullptr);

// G^(0) = within (or the whole group); G^(k+1) is the closure, under
// conjugation by G^(k)'s members, of the commutators of G^(k)'s members.
SeriesChain derived_series(const PcPresentation& p,
                           const InducedPcs* within = nullptr);

// Nilpotency class of the group (or subgroup): 0 for the trivial group, 1
// for a non-trivial abelian one.  Errors if the lower central series
// stabilizes without reaching the trivial subgroup.
int32_t nilpotency_class(const PcPresentation& p,
                         const InducedPcs* within = nullptr);

// Derived length; errors on non-trivial stabilization.
int32_t derived_length(const PcPresentation& p,
                       const InducedPcs* within = nullptr);

// True if g commutes with every member of s.
bool centralizes(const PcPresentation& p, const Element& g,
                 const InducedPcs& s);

// Membership in the k-th term of the upper central series, decided by
// vanishing of all left-normed commutators [g, y_1, ..., y_k] over
// presentation generators y_t (with early pruning).  k = 0 tests g == 1.
bool in_hypercentre(const PcPresentation& p, const Element& g, int32_t k);

// Order of the element (the relative orders give the prime factorization of
// the group order, so this runs in a logarithmic number of multiplications).
uint64_t element_order(const PcPresentation& p, const Element& g);

struct ExponentResult {
  uint64_t value = 1;
  bool exact = false;  // true for an exhaustive scan, false for a sampled lower bound
  uint64_t seed = 0;   // recorded for sampled runs
  uint64_t samples = 0;
};

// Exact exponent by exhaustive enumeration.  Errors (LimitError) when the
// group order exceeds kDefaultEnumerationBound and no limit was supplied.
ExponentResult exponent_exhaustive(const PcPresentation& p,
                                   std::optional<uint64_t> limit = std::nullopt);

// Lower bound for the exponent from `samples` random elements.
ExponentResult exponent_sampled(const PcPresentation& p, uint64_t samples,
                                uint64_t seed);

}  // namespace pcg
