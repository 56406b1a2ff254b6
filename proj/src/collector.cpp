#include "pcg/collector.hpp"

#include <vector>

namespace pcg {
namespace {

// acc := acc * x_j, maintaining acc in normal form.
//
// Splitting acc = H * L with H the slice of indices >= j and L the slice of
// indices < j, we have acc * x_j = H x_j * L^{x_j}.  The bump of slot j may
// overflow, in which case the power tail is multiplied in first; the
// conjugated low slice is then re-multiplied letter by letter.  Every
// recursive call strictly lowers the top index involved, so this terminates.
void rmul_letter(const PcPresentation& p, Element& acc, int32_t j) {
  // Stash and clear the low slice.
  struct LowSlot {
    int32_t gen;
    int32_t count;
  };
  std::vector<LowSlot> low;
  for (int32_t t = j - 1; t >= 1; --t) {
    int32_t c = acc.exp(t);
    if (c != 0) {
      low.push_back({t, c});
      acc.set_exp(t, 0);
    }
  }

  bool overflow = false;
  int32_t e = acc.exp(j) + 1;
  if (e == p.relative_order(j)) {
    acc.set_exp(j, 0);
    overflow = true;
  } else {
    acc.set_exp(j, e);
  }

  if (overflow) {
    for (const Letter& l : p.power_tail(j).letters)
      for (int32_t c = 0; c < l.exp; ++c) rmul_letter(p, acc, l.gen);
  }
  for (const LowSlot& s : low) {
    const Word& w = p.conj_rhs(s.gen, j);
    for (int32_t c = 0; c < s.count; ++c)
      for (const Letter& l : w.letters)
        for (int32_t k = 0; k < l.exp; ++k) rmul_letter(p, acc, l.gen);
  }
}

void rmul_letter_signed(const PcPresentation& p, Element& acc, int32_t gen,
                        int32_t exp) {
  if (exp >= 0) {
    for (int32_t c = 0; c < exp; ++c) rmul_letter(p, acc, gen);
    return;
  }
  const Word& inv = p.inverse_expansion(gen);
  for (int32_t c = 0; c < -exp; ++c)
    for (const Letter& l : inv.letters)
      for (int32_t k = 0; k < l.exp; ++k) rmul_letter(p, acc, l.gen);
}

void check_element(const PcPresentation& p, const Element& a, const char* what) {
  if (a.size() != p.size())
    throw Error(std::string(what) + ": element length does not match presentation");
  for (int32_t i = 1; i <= p.size(); ++i)
    if (a.exp(i) < 0 || a.exp(i) >= p.relative_order(i))
      throw Error(std::string(what) + ": exponent out of range at index " +
                  std::to_string(i));
}

}  // namespace

Element collect(const PcPresentation& p, const Word& w) {
  Element acc = p.identity();
  for (const Letter& l : w.letters) {
    if (l.gen < 1 || l.gen > p.size())
      throw Error("collect: generator index " + std::to_string(l.gen) +
                  " out of range");
    rmul_letter_signed(p, acc, l.gen, l.exp);
  }
  return acc;
}

Element multiply(const PcPresentation& p, const Element& a, const Element& b) {
  check_element(p, a, "multiply");
  check_element(p, b, "multiply");
  Element acc = a;
  for (int32_t i = p.size(); i >= 1; --i)
    rmul_letter_signed(p, acc, i, b.exp(i));
  return acc;
}

Element inverse(const PcPresentation& p, const Element& a) {
  check_element(p, a, "inverse");
  Element acc = p.identity();
  // (x_n^{e_n} ... x_1^{e_1})^{-1} = x_1^{-e_1} ... x_n^{-e_n}.
  for (int32_t i = 1; i <= p.size(); ++i)
    rmul_letter_signed(p, acc, i, -a.exp(i));
  return acc;
}

Element power(const PcPresentation& p, const Element& a, int64_t k) {
  check_element(p, a, "power");
  Element base = a;
  if (k < 0) {
    base = inverse(p, a);
    k = -k;
  }
  Element acc = p.identity();
  while (k > 0) {
    if (k & 1) acc = multiply(p, acc, base);
    k >>= 1;
    if (k > 0) base = multiply(p, base, base);
  }
  return acc;
}

Element conjugate(const PcPresentation& p, const Element& a, const Element& b) {
  return multiply(p, multiply(p, inverse(p, b), a), b);
}

Element commutator(const PcPresentation& p, const Element& a, const Element& b) {
  return multiply(p, multiply(p, inverse(p, a), inverse(p, b)),
                  multiply(p, a, b));
}

Element left_normed_commutator(const PcPresentation& p,
                               std::span<const Element> as) {
  if (as.empty())
    throw Error("left_normed_commutator: empty sequence");
  Element acc = as[0];
  for (size_t t = 1; t < as.size(); ++t) acc = commutator(p, acc, as[t]);
  return acc;
}

Word element_to_word(const Element& e) {
  Word w;
  for (int32_t i = e.size(); i >= 1; --i)
    if (e.exp(i) != 0) w.letters.push_back(Letter{i, e.exp(i)});
  return w;
}

}  // namespace pcg
