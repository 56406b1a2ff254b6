#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pcg {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when an enumeration or orbit walk exceeds its configured bound.
struct LimitError : Error {
  using Error::Error;
};

// One letter x_g^e of a word.  Generator indices are 1-based throughout.
struct Letter {
  int32_t gen = 0;
  int32_t exp = 1;
  friend bool operator==(const Letter&, const Letter&) = default;
};

// A free word over the generators.  Query words may be unreduced and may
// carry negative exponents; relation words stored in a presentation are kept
// in reduced positive form (exponents in [1, o-1]).
struct Word {
  std::vector<Letter> letters;

  Word() = default;
  explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}
  static Word single(int32_t gen, int32_t exp = 1) {
    return Word({Letter{gen, exp}});
  }

  bool empty() const { return letters.empty(); }
  friend bool operator==(const Word&, const Word&) = default;
};

struct GeneratorInfo {
  std::string name;
  int32_t index = 0;           // 1..n
  int32_t relative_order = 2;  // prime
  friend bool operator==(const GeneratorInfo&, const GeneratorInfo&) = default;
};

// Exponent vector in normal form: (e_1, ..., e_n) denotes the normal word
// x_n^{e_n} ... x_1^{e_1} with 0 <= e_i < o_i.  The highest index is leftmost
// in the normal word; x_1 generates the deepest term of the polycyclic
// series <x_1> <= <x_1,x_2> <= ... <= <x_1,...,x_n>.
struct Element {
  std::vector<int32_t> exps;  // exps[i-1] = e_i

  Element() = default;
  explicit Element(size_t n) : exps(n, 0) {}

  int32_t exp(int32_t i) const { return exps[static_cast<size_t>(i) - 1]; }
  void set_exp(int32_t i, int32_t v) { exps[static_cast<size_t>(i) - 1] = v; }
  int32_t size() const { return static_cast<int32_t>(exps.size()); }

  bool is_identity() const {
    for (int32_t v : exps)
      if (v != 0) return false;
    return true;
  }

  // Largest i with e_i != 0, or 0 for the identity.
  int32_t leading_index() const {
    for (int32_t i = size(); i >= 1; --i)
      if (exp(i) != 0) return i;
    return 0;
  }

  friend bool operator==(const Element&, const Element&) = default;
  friend bool operator<(const Element& a, const Element& b) {
    return a.exps < b.exps;
  }
};

// Unvalidated presentation data as produced by the text parser or built by
// hand.  validate() turns this into a PcPresentation.
struct RawPresentation {
  struct RawGen {
    std::string name;
    int32_t order = 2;
  };
  std::string name;
  std::vector<RawGen> generators;
  std::vector<std::pair<int32_t, Word>> powers;           // (i, tail)
  std::vector<std::tuple<int32_t, int32_t, Word>> conjs;  // (i, j, rhs), i < j
};

// A validated power-conjugate presentation with prime relative orders.
//
// Power relations:        x_i^{o_i} = power_tail(i), a word in indices < i.
// Conjugation relations:  x_i^{x_j} = conj_rhs(i, j) for i < j, a word in
//                         indices < j (general polycyclic form; the tail may
//                         mention indices between i and j, as happens when a
//                         higher generator permutes lower ones).
// Defaults are materialized explicitly: a trivial power tail is the empty
// word, a trivial conjugation rhs is the single letter x_i.
class PcPresentation {
 public:
  PcPresentation() = default;

  const std::string& name() const { return name_; }
  int32_t size() const { return static_cast<int32_t>(gens_.size()); }

  const GeneratorInfo& generator(int32_t i) const {
    check_index(i);
    return gens_[static_cast<size_t>(i) - 1];
  }
  const std::vector<GeneratorInfo>& generators() const { return gens_; }
  int32_t relative_order(int32_t i) const { return generator(i).relative_order; }

  // Index of a generator by name, or nullopt.
  std::optional<int32_t> index_of(std::string_view gen_name) const;

  const Word& power_tail(int32_t i) const {
    check_index(i);
    return power_tails_[static_cast<size_t>(i) - 1];
  }
  bool has_power_tail(int32_t i) const { return !power_tail(i).empty(); }

  const Word& conj_rhs(int32_t i, int32_t j) const;
  bool has_conj(int32_t i, int32_t j) const;  // true iff non-default

  // Positive-word expansion of x_i^{-1}, precomputed at validation.
  const Word& inverse_expansion(int32_t i) const {
    check_index(i);
    return inv_expansion_[static_cast<size_t>(i) - 1];
  }

  Element identity() const { return Element(static_cast<size_t>(size())); }
  // Unit exponent vector for x_i.  Errors if i is out of range.
  Element generator_element(int32_t i) const;

  // Product of the relative orders (the group order once consistency holds).
  // Errors if the product does not fit in 63 bits.
  uint64_t order_product() const;

  // Mixed-radix packing of exponent vectors into [0, order_product()).
  uint64_t pack(const Element& e) const;
  Element unpack(uint64_t key) const;

  // Export back to raw data (non-default relations only).
  RawPresentation raw() const;

  friend bool operator==(const PcPresentation&, const PcPresentation&) = default;

 private:
  friend PcPresentation validate(const RawPresentation& raw);

  void check_index(int32_t i) const {
    if (i < 1 || i > size())
      throw Error("generator index " + std::to_string(i) + " out of range 1.." +
                  std::to_string(size()));
  }
  size_t pair_slot(int32_t i, int32_t j) const {
    // Triangular index for 1 <= i < j <= n.
    return static_cast<size_t>(j - 1) * static_cast<size_t>(j - 2) / 2 +
           static_cast<size_t>(i - 1);
  }

  std::string name_;
  std::vector<GeneratorInfo> gens_;
  std::vector<Word> power_tails_;        // [i-1], empty = trivial
  std::vector<Word> conjs_;              // triangular (i,j), single letter x_i = trivial
  std::vector<uint8_t> conj_nontrivial_; // parallel to conjs_
  std::vector<Word> inv_expansion_;      // [i-1]
  std::vector<uint64_t> pack_weights_;   // [i-1]; empty if order exceeds 2^63
  uint64_t order_product_ = 1;
  bool order_fits_ = true;
};

// Checks structural invariants and materializes defaults.
//
// Errors: duplicate or malformed generator names; non-prime relative order;
// power tail touching an index >= i; conjugation key with i >= j or an rhs
// touching an index >= j; stored relation words not in reduced positive form;
// duplicate relation keys.
PcPresentation validate(const RawPresentation& raw);

// An undirected graph on a subset of the generators; an edge means the two
// generators are required to commute, a missing edge that they must not.
struct CommutativityGraph {
  std::vector<int32_t> vertices;                    // generator indices
  std::vector<std::pair<int32_t, int32_t>> edges;   // normalized (min, max)

  // Validates and normalizes: vertices must be distinct indices of p, edges
  // must join distinct vertices, duplicates are rejected.
  static CommutativityGraph make(const PcPresentation& p,
                                 std::vector<int32_t> vertices,
                                 std::vector<std::pair<int32_t, int32_t>> edges);
  bool has_edge(int32_t u, int32_t v) const;
};

}  // namespace pcg
