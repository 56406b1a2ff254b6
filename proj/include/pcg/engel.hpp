#pragma once

#include <cstdint>
#include <string>

#include "pcg/rng.hpp"
#include "pcg/pc_model.hpp"

namespace pcg {

// Default ceiling for conjugacy orbits (2^22).
inline constexpr uint64_t kDefaultOrbitLimit = uint64_t{1} << 22;

// How a quantifier over group elements is discharged: exhaustively over a
// conjugacy orbit, or by seeded random sampling.
struct CheckMode {
  enum class Kind : uint8_t { kExhaustiveOrbit, kSampled } kind =
      Kind::kExhaustiveOrbit;
  uint64_t samples = 0;  // sampled mode only
  uint64_t seed = 0;     // sampled mode only

  static CheckMode exhaustive() { return {}; }
  static CheckMode sampled(uint64_t samples, uint64_t seed) {
    return {Kind::kSampled, samples, seed};
  }
};

// The conjugacy class of base, stored as packed canonical keys in ascending
// order.
struct OrbitSet {
  Element base;
  std::vector<uint64_t> keys;  // sorted ascending
  bool exhausted = true;       // frontier fully explored (always true on success)

  uint64_t size() const { return keys.size(); }
};

// Breadth-first closure of {g} under conjugation by the presentation
// generators.  Throws LimitError if the orbit grows past size_limit.
OrbitSet conjugacy_orbit(const PcPresentation& p, const Element& g,
                         uint64_t size_limit = kDefaultOrbitLimit);

// True iff <u, v> has nilpotency class at most 2, decided by the vanishing
// of the weight-3 left-normed commutators [[u,v],u] and [[u,v],v].
bool is_pair_class_le2(const PcPresentation& p, const Element& u,
                       const Element& v);

// Outcome of a quantified verification.
struct VerificationReport {
  std::string predicate;
  CheckMode mode;
  uint64_t checked = 0;  // number of (pair, conjugate) instances tested
  std::vector<std::string> counterexamples;  // rendered words; empty = pass

  bool passed() const { return counterexamples.empty(); }
};

// Sandwich property for the tuple X of generator indices: for all x, y in X
// and every conjugate z of y (whole orbit, or sampled conjugates), the pair
// <x, z> has class at most 2.
VerificationReport sandwich_verify(const PcPresentation& p,
                                   const std::vector<int32_t>& xs,
                                   CheckMode mode = CheckMode::exhaustive(),
                                   uint64_t orbit_limit = kDefaultOrbitLimit);

// Left 3-Engel property of the element x: [g, x, x, x] = 1 for all g.  Since
// [g, x] = (x^g)^{-1} x, it suffices to check [(x')^{-1} x, x, x] = 1 for
// every conjugate x' of x (orbit mode), or for sampled conjugates.
VerificationReport engel3_verify(const PcPresentation& p, const Element& x,
                                 CheckMode mode = CheckMode::exhaustive(),
                                 uint64_t orbit_limit = kDefaultOrbitLimit);

// True iff for every pair of distinct graph vertices the commutator of the
// corresponding generators vanishes exactly when the pair is an edge.
bool graph_check(const PcPresentation& p, const CommutativityGraph& graph);

}  // namespace pcg
