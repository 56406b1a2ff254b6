#include "pcg/consistency.hpp"

#include <algorithm>

#include "pcg/collector.hpp"

namespace pcg {
namespace {

// The normal word here puts the highest index leftmost, so the words needing
// collection are the ascending ones: x_i x_j with i < j.  The critical pairs
// of the rewrite rules R1: x_i x_j -> x_j (x_i^{x_j}) (i < j) and
// R2: x_i^{o_i} -> power_tail(i) are the words
//   x_i x_j x_k        (i < j < k)   R1/R1 overlap,
//   x_i^{o_i} x_j      (i < j)       R2/R1,
//   x_i x_j^{o_j}      (i < j)       R1/R2,
//   x_i^{o_i + 1}                    R2/R2,
// each collected with both bracketings.
void add_failure(ConsistencyReport& rep, ConsistencyFailure f) {
  rep.consistent = false;
  rep.failures.push_back(std::move(f));
}

}  // namespace

ConsistencyReport check_consistency(const PcPresentation& p) {
  ConsistencyReport rep;
  const int32_t n = p.size();

  std::vector<Element> gen(static_cast<size_t>(n) + 1, p.identity());
  std::vector<Element> full_pow(static_cast<size_t>(n) + 1, p.identity());
  std::vector<Element> pow_less1(static_cast<size_t>(n) + 1, p.identity());
  for (int32_t i = 1; i <= n; ++i) {
    gen[static_cast<size_t>(i)] = p.generator_element(i);
    pow_less1[static_cast<size_t>(i)] =
        power(p, gen[static_cast<size_t>(i)], p.relative_order(i) - 1);
    // x_i^{o_i} collected via the power relation directly.
    full_pow[static_cast<size_t>(i)] = collect(p, p.power_tail(i));
  }

  for (int32_t k = 3; k <= n; ++k)
    for (int32_t j = 2; j < k; ++j)
      for (int32_t i = 1; i < j; ++i) {
        Element lhs = multiply(p, multiply(p, gen[size_t(i)], gen[size_t(j)]),
                               gen[size_t(k)]);
        Element rhs = multiply(p, gen[size_t(i)],
                               multiply(p, gen[size_t(j)], gen[size_t(k)]));
        if (lhs != rhs)
          add_failure(rep, {ConsistencyFailure::Kind::kTriple, i, j, k,
                            std::move(lhs), std::move(rhs)});
      }

  for (int32_t j = 2; j <= n; ++j)
    for (int32_t i = 1; i < j; ++i) {
      {
        // (x_i^{o_i}) x_j  vs  x_i^{o_i-1} (x_i x_j)
        Element lhs = multiply(p, full_pow[size_t(i)], gen[size_t(j)]);
        Element rhs = multiply(p, pow_less1[size_t(i)],
                               multiply(p, gen[size_t(i)], gen[size_t(j)]));
        if (lhs != rhs)
          add_failure(rep, {ConsistencyFailure::Kind::kPowerSwap, i, j, 0,
                            std::move(lhs), std::move(rhs)});
      }
      {
        // x_i (x_j^{o_j})  vs  (x_i x_j) x_j^{o_j-1}
        Element lhs = multiply(p, gen[size_t(i)], full_pow[size_t(j)]);
        Element rhs = multiply(p, multiply(p, gen[size_t(i)], gen[size_t(j)]),
                               pow_less1[size_t(j)]);
        if (lhs != rhs)
          add_failure(rep, {ConsistencyFailure::Kind::kSwapPower, i, j, 0,
                            std::move(lhs), std::move(rhs)});
      }
    }

  for (int32_t i = 1; i <= n; ++i) {
    Element lhs = multiply(p, gen[size_t(i)], full_pow[size_t(i)]);
    Element rhs = multiply(p, full_pow[size_t(i)], gen[size_t(i)]);
    if (lhs != rhs)
      add_failure(rep, {ConsistencyFailure::Kind::kSelf, i, 0, 0,
                        std::move(lhs), std::move(rhs)});
  }

  std::sort(rep.failures.begin(), rep.failures.end(),
            [](const ConsistencyFailure& a, const ConsistencyFailure& b) {
              return std::tuple(a.kind, a.k, a.j, a.i) <
                     std::tuple(b.kind, b.k, b.j, b.i);
            });
  return rep;
}

uint64_t group_order(const PcPresentation& p) {
  ConsistencyReport rep = check_consistency(p);
  if (!rep.consistent)
    throw Error("group_order: presentation '" + p.name() +
                "' is inconsistent (" + std::to_string(rep.failures.size()) +
                " failed overlaps)");
  return p.order_product();
}

ElementRange::ElementRange(const PcPresentation& p,
                           std::optional<uint64_t> limit)
    : p_(&p) {
  uint64_t order = p.order_product();
  if (limit) {
    count_ = std::min(order, *limit);
  } else {
    if (order > kDefaultEnumerationBound)
      throw LimitError("enumeration of " + p.name() + " (order " +
                       std::to_string(order) + ") exceeds the default bound " +
                       std::to_string(kDefaultEnumerationBound) +
                       "; raise it with --max-enumeration");
    count_ = order;
  }
}

Element ElementRange::iterator::operator*() const {
  // Lexicographic by (e_1, ..., e_n): e_n varies fastest.
  Element e = p_->identity();
  uint64_t rem = pos_;
  for (int32_t i = p_->size(); i >= 1; --i) {
    uint64_t o = static_cast<uint64_t>(p_->relative_order(i));
    e.set_exp(i, static_cast<int32_t>(rem % o));
    rem /= o;
  }
  return e;
}

ElementRange enumerate_elements(const PcPresentation& p,
                                std::optional<uint64_t> limit) {
  return ElementRange(p, limit);
}

}  // namespace pcg
