#pragma once

#include <span>

#include "pcg/pc_model.hpp"

namespace pcg {

// Rewrites an arbitrary word into normal form.  Negative exponents are
// eliminated eagerly via x_i^{-1} = x_i^{o_i-1} * power_tail(i)^{-1}; the
// positive word is then collected by repeated application of the rewrite
// rules x_i x_j -> x_j (x_i^{x_j}) for i < j and x_i^{o_i} -> power_tail(i).
// The strategy is deterministic; any terminating strategy computes the same
// normal form once the presentation is consistent.
Element collect(const PcPresentation& p, const Word& w);

// Normal form of a * b.
Element multiply(const PcPresentation& p, const Element& a, const Element& b);

// Normal form of a^{-1}.
Element inverse(const PcPresentation& p, const Element& a);

// Normal form of a^k; k may be negative or zero.
Element power(const PcPresentation& p, const Element& a, int64_t k);

// b^{-1} a b.
Element conjugate(const PcPresentation& p, const Element& a, const Element& b);

// a^{-1} b^{-1} a b.
Element commutator(const PcPresentation& p, const Element& a, const Element& b);

// Left-normed commutator [a_1, a_2, ..., a_k] = [[...[a_1,a_2],...],a_k].
// Errors on an empty sequence; k = 1 returns a_1.
Element left_normed_commutator(const PcPresentation& p,
                               std::span<const Element> as);

// The normal word of an element as a Word (letters in descending index
// order, exponents in [1, o-1]); the identity gives the empty word.
Word element_to_word(const Element& e);

}  // namespace pcg
