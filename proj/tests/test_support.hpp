#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "pcg/collector.hpp"
#include "pcg/corpus.hpp"
#include "pcg/textio.hpp"

namespace test_support {

inline pcg::PcPresentation named(const std::string& name) {
  return pcg::corpus::load_named(name);
}

// Word from a letter list; Word's explicit vector constructor makes nested
// brace initialization ambiguous at call sites.
inline pcg::Word make_word(std::initializer_list<pcg::Letter> ls) {
  return pcg::Word(std::vector<pcg::Letter>(ls));
}

// Collected element of a query word.
inline pcg::Element elt(const pcg::PcPresentation& p, std::string_view w) {
  return pcg::collect(p, pcg::textio::parse_word(p, w));
}

inline uint64_t fnv1a(std::string_view s) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

// Dihedral group of order 10: r of order 5, s of order 2, r^s = r^-1.
// Smallest non-nilpotent polycyclic fixture.
inline constexpr const char* kD10 =
    "group D10\ngen r order 5\ngen s order 2\nconj r ^ s = r^4\n";

// Heisenberg group mod 5 (order 125, class 2, exponent 5).
inline constexpr const char* kHeis5 =
    "group H5\ngen z order 5\ngen a order 5\ngen b order 5\n"
    "conj a ^ b = a z\n";

inline pcg::PcPresentation d10() {
  return pcg::textio::parse_presentation(kD10);
}
inline pcg::PcPresentation heis5() {
  return pcg::textio::parse_presentation(kHeis5);
}

}  // namespace test_support
