#pragma once

#include <cstdint>
#include <optional>

#include "pcg/pc_model.hpp"

namespace pcg {

// Default ceiling for exhaustive element streams (2^22).
inline constexpr uint64_t kDefaultEnumerationBound = uint64_t{1} << 22;

// One failed overlap test.  kind identifies the family; unused indices are 0.
struct ConsistencyFailure {
  enum class Kind : uint8_t {
    kTriple,      // (x_i x_j) x_k  vs  x_i (x_j x_k),      i < j < k
    kPowerSwap,   // (x_i^{o_i}) x_j  vs  x_i^{o_i-1} (x_i x_j),   i < j
    kSwapPower,   // x_i (x_j^{o_j})  vs  (x_i x_j) x_j^{o_j-1},   i < j
    kSelf,        // x_i (x_i^{o_i})  vs  (x_i^{o_i}) x_i
  };
  Kind kind;
  int32_t i = 0, j = 0, k = 0;
  Element lhs, rhs;

  friend bool operator==(const ConsistencyFailure&,
                         const ConsistencyFailure&) = default;
};

struct ConsistencyReport {
  bool consistent = true;
  std::vector<ConsistencyFailure> failures;  // deterministic (kind, k, j, i) order
};

// Evaluates every overlap identity of the rewriting system by collecting
// both bracketings of the test words.  The presentation defines a group of
// order prod(o_i) exactly when all overlaps agree.
ConsistencyReport check_consistency(const PcPresentation& p);

// Product of the relative orders; errors if the presentation is inconsistent.
uint64_t group_order(const PcPresentation& p);

// Ordered stream of all group elements, lexicographic by (e_1, ..., e_n).
// Without an explicit limit the group order must not exceed
// kDefaultEnumerationBound (LimitError otherwise); with a limit, at most
// `limit` elements are produced.
class ElementRange {
 public:
  ElementRange(const PcPresentation& p, std::optional<uint64_t> limit);

  class iterator {
   public:
    iterator(const PcPresentation* p, uint64_t pos) : p_(p), pos_(pos) {}
    Element operator*() const;
    iterator& operator++() {
      ++pos_;
      return *this;
    }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.pos_ == b.pos_;
    }

   private:
    const PcPresentation* p_;
    uint64_t pos_;
  };

  iterator begin() const { return iterator(p_, 0); }
  iterator end() const { return iterator(p_, count_); }
  uint64_t size() const { return count_; }

 private:
  const PcPresentation* p_;
  uint64_t count_;
};

ElementRange enumerate_elements(const PcPresentation& p,
                                std::optional<uint64_t> limit = std::nullopt);

}  // namespace pcg
