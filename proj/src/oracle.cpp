#include "pcg/oracle.hpp"

#include <deque>

#include "pcg/collector.hpp"

namespace pcg::oracle {
namespace {

// Flat string of single letters (every entry has exponent 1).
using Flat = std::vector<int32_t>;

void append_positive(const PcPresentation& p, Flat& out, int32_t gen,
                     int64_t exp);

// x^{-1} = x^{o-1} * tail^{-1}; the tail inverse reverses the word and
// inverts each letter, recursing into strictly lower indices.
void append_inverse(const PcPresentation& p, Flat& out, int32_t gen) {
  for (int32_t c = 0; c < p.relative_order(gen) - 1; ++c) out.push_back(gen);
  const Word& tail = p.power_tail(gen);
  for (auto it = tail.letters.rbegin(); it != tail.letters.rend(); ++it)
    for (int32_t c = 0; c < it->exp; ++c) append_inverse(p, out, it->gen);
}

void append_positive(const PcPresentation& p, Flat& out, int32_t gen,
                     int64_t exp) {
  if (exp >= 0) {
    for (int64_t c = 0; c < exp; ++c) out.push_back(gen);
  } else {
    for (int64_t c = 0; c < -exp; ++c) append_inverse(p, out, gen);
  }
}

}  // namespace

Element collect_rightmost(const PcPresentation& p, const Word& w) {
  Flat word;
  for (const Letter& l : w.letters) {
    if (l.gen < 1 || l.gen > p.size())
      throw Error("oracle: generator index out of range");
    append_positive(p, word, l.gen, l.exp);
  }

  // One rewrite per iteration, always at the rightmost applicable position.
  while (true) {
    size_t pos = word.size();
    bool is_swap = false;
    // Rightmost ascending adjacent pair.
    for (size_t t = word.size(); t >= 2; --t) {
      if (word[t - 2] < word[t - 1]) {
        pos = t - 2;
        is_swap = true;
        break;
      }
    }
    // Rightmost run of o_i equal letters starting at or right of pos.
    size_t run_pos = word.size();
    if (!word.empty()) {
      size_t t = word.size();
      while (t >= 1) {
        int32_t g = word[t - 1];
        size_t o = static_cast<size_t>(p.relative_order(g));
        size_t start = t;
        while (start >= 1 && word[start - 1] == g) --start;
        size_t len = t - start;
        if (len >= o) {
          run_pos = t - o;  // rightmost o consecutive copies within the run
          break;
        }
        t = start;
      }
    }
    if (is_swap && (run_pos == word.size() || pos > run_pos)) {
      // Apply the swap x_i x_j -> x_j (x_i^{x_j}).
      int32_t i = word[pos], j = word[pos + 1];
      Flat repl{j};
      for (const Letter& l : p.conj_rhs(i, j).letters)
        for (int32_t c = 0; c < l.exp; ++c) repl.push_back(l.gen);
      word.erase(word.begin() + static_cast<ptrdiff_t>(pos),
                 word.begin() + static_cast<ptrdiff_t>(pos) + 2);
      word.insert(word.begin() + static_cast<ptrdiff_t>(pos), repl.begin(),
                  repl.end());
      continue;
    }
    if (run_pos != word.size()) {
      // Apply x_g^{o} -> power tail.
      int32_t g = word[run_pos];
      size_t o = static_cast<size_t>(p.relative_order(g));
      Flat repl;
      for (const Letter& l : p.power_tail(g).letters)
        for (int32_t c = 0; c < l.exp; ++c) repl.push_back(l.gen);
      word.erase(word.begin() + static_cast<ptrdiff_t>(run_pos),
                 word.begin() + static_cast<ptrdiff_t>(run_pos + o));
      word.insert(word.begin() + static_cast<ptrdiff_t>(run_pos), repl.begin(),
                  repl.end());
      continue;
    }
    break;  // no rule applies: descending with in-range exponents
  }

  Element e = p.identity();
  for (int32_t g : word) e.set_exp(g, e.exp(g) + 1);
  return e;
}

std::unordered_set<uint64_t> subgroup_elements(const PcPresentation& p,
                                               const std::vector<Element>& gens,
                                               uint64_t size_limit) {
  std::unordered_set<uint64_t> seen;
  std::deque<Element> frontier;
  Element id = p.identity();
  seen.insert(p.pack(id));
  frontier.push_back(id);
  while (!frontier.empty()) {
    Element cur = frontier.front();
    frontier.pop_front();
    for (const Element& g : gens) {
      for (const Element& next :
           {multiply(p, cur, g), multiply(p, g, cur)}) {
        if (seen.insert(p.pack(next)).second) {
          if (seen.size() > size_limit)
            throw LimitError("oracle subgroup closure exceeds limit");
          frontier.push_back(next);
        }
      }
    }
  }
  return seen;
}

std::unordered_set<uint64_t> normal_closure_elements(
    const PcPresentation& p, const std::vector<Element>& gens,
    uint64_t size_limit) {
  // Close the generating set under conjugation by presentation generators,
  // then take the plain closure.
  std::unordered_set<uint64_t> conj_seen;
  std::deque<Element> frontier;
  for (const Element& g : gens) {
    if (conj_seen.insert(p.pack(g)).second) frontier.push_back(g);
  }
  std::vector<Element> closed_gens(frontier.begin(), frontier.end());
  while (!frontier.empty()) {
    Element cur = frontier.front();
    frontier.pop_front();
    for (int32_t j = 1; j <= p.size(); ++j) {
      Element img = conjugate(p, cur, p.generator_element(j));
      if (conj_seen.insert(p.pack(img)).second) {
        if (conj_seen.size() > size_limit)
          throw LimitError("oracle normal closure exceeds limit");
        frontier.push_back(img);
        closed_gens.push_back(img);
      }
    }
  }
  return subgroup_elements(p, closed_gens, size_limit);
}

}  // namespace pcg::oracle
