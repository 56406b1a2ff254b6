#include "pcg/pc_model.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <unordered_map>
#include <unordered_set>

namespace pcg {
namespace {

bool is_prime(int64_t v) {
  if (v < 2) return false;
  for (int64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

bool valid_name(std::string_view s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '\'')
      return false;
  }
  return true;
}

// Merge adjacent letters with equal generator; drop zero exponents.
Word merge_adjacent(const Word& w) {
  Word out;
  for (const Letter& l : w.letters) {
    if (l.exp == 0) continue;
    if (!out.letters.empty() && out.letters.back().gen == l.gen) {
      out.letters.back().exp += l.exp;
      if (out.letters.back().exp == 0) out.letters.pop_back();
    } else {
      out.letters.push_back(l);
    }
  }
  return out;
}

}  // namespace

std::optional<int32_t> PcPresentation::index_of(std::string_view gen_name) const {
  for (const GeneratorInfo& g : gens_)
    if (g.name == gen_name) return g.index;
  return std::nullopt;
}

const Word& PcPresentation::conj_rhs(int32_t i, int32_t j) const {
  check_index(i);
  check_index(j);
  if (i >= j)
    throw Error("conj_rhs requires i < j, got (" + std::to_string(i) + ", " +
                std::to_string(j) + ")");
  return conjs_[pair_slot(i, j)];
}

bool PcPresentation::has_conj(int32_t i, int32_t j) const {
  check_index(i);
  check_index(j);
  if (i >= j)
    throw Error("has_conj requires i < j, got (" + std::to_string(i) + ", " +
                std::to_string(j) + ")");
  return conj_nontrivial_[pair_slot(i, j)] != 0;
}

Element PcPresentation::generator_element(int32_t i) const {
  check_index(i);
  Element e = identity();
  e.set_exp(i, 1);
  return e;
}

uint64_t PcPresentation::order_product() const {
  if (!order_fits_)
    throw Error("group order of " + name_ + " exceeds 2^63");
  return order_product_;
}

uint64_t PcPresentation::pack(const Element& e) const {
  if (!order_fits_)
    throw Error("cannot pack elements: group order of " + name_ + " exceeds 2^63");
  if (e.size() != size()) throw Error("element size mismatch in pack");
  uint64_t key = 0;
  for (int32_t i = 1; i <= size(); ++i)
    key += static_cast<uint64_t>(e.exp(i)) * pack_weights_[static_cast<size_t>(i) - 1];
  return key;
}

Element PcPresentation::unpack(uint64_t key) const {
  if (!order_fits_)
    throw Error("cannot unpack elements: group order of " + name_ + " exceeds 2^63");
  Element e = identity();
  for (int32_t i = size(); i >= 1; --i) {
    uint64_t w = pack_weights_[static_cast<size_t>(i) - 1];
    e.set_exp(i, static_cast<int32_t>(key / w));
    key %= w;
  }
  return e;
}

RawPresentation PcPresentation::raw() const {
  RawPresentation r;
  r.name = name_;
  for (const GeneratorInfo& g : gens_)
    r.generators.push_back({g.name, g.relative_order});
  for (int32_t i = 1; i <= size(); ++i)
    if (has_power_tail(i)) r.powers.emplace_back(i, power_tail(i));
  for (int32_t j = 2; j <= size(); ++j)
    for (int32_t i = 1; i < j; ++i)
      if (has_conj(i, j)) r.conjs.emplace_back(i, j, conj_rhs(i, j));
  return r;
}

PcPresentation validate(const RawPresentation& raw) {
  PcPresentation p;
  p.name_ = raw.name;
  if (!valid_name(raw.name))
    throw Error("invalid group name '" + raw.name + "'");

  const int32_t n = static_cast<int32_t>(raw.generators.size());
  std::unordered_set<std::string> seen;
  for (int32_t i = 1; i <= n; ++i) {
    const auto& rg = raw.generators[static_cast<size_t>(i) - 1];
    if (!valid_name(rg.name))
      throw Error("invalid generator name '" + rg.name + "'");
    if (!seen.insert(rg.name).second)
      throw Error("duplicate generator name '" + rg.name + "'");
    if (!is_prime(rg.order))
      throw Error("relative order of " + rg.name + " must be prime, got " +
                  std::to_string(rg.order));
    p.gens_.push_back(GeneratorInfo{rg.name, i, rg.order});
  }

  // A stored relation word must be reduced positive: exponents in [1, o-1]
  // after merging adjacent equal-generator letters.
  auto check_relation_word = [&](const Word& w, int32_t max_index,
                                 const std::string& what) -> Word {
    Word m = merge_adjacent(w);
    for (const Letter& l : m.letters) {
      if (l.gen < 1 || l.gen > n)
        throw Error(what + ": generator index " + std::to_string(l.gen) +
                    " out of range");
      if (l.gen > max_index)
        throw Error(what + ": index " + std::to_string(l.gen) +
                    " exceeds allowed bound " + std::to_string(max_index));
      int32_t o = p.gens_[static_cast<size_t>(l.gen) - 1].relative_order;
      if (l.exp < 1 || l.exp >= o)
        throw Error(what + ": exponent " + std::to_string(l.exp) + " of " +
                    p.gens_[static_cast<size_t>(l.gen) - 1].name +
                    " not in [1, " + std::to_string(o - 1) + "]");
    }
    return m;
  };

  p.power_tails_.assign(static_cast<size_t>(n), Word{});
  std::vector<uint8_t> pow_seen(static_cast<size_t>(n), 0);
  for (const auto& [i, w] : raw.powers) {
    if (i < 1 || i > n)
      throw Error("power relation index " + std::to_string(i) + " out of range");
    if (pow_seen[static_cast<size_t>(i) - 1]++)
      throw Error("duplicate power relation for " +
                  p.gens_[static_cast<size_t>(i) - 1].name);
    p.power_tails_[static_cast<size_t>(i) - 1] = check_relation_word(
        w, i - 1, "power tail of " + p.gens_[static_cast<size_t>(i) - 1].name);
  }

  const size_t npairs = static_cast<size_t>(n) * (static_cast<size_t>(n) - 1) / 2;
  p.conjs_.assign(npairs, Word{});
  p.conj_nontrivial_.assign(npairs, 0);
  for (int32_t j = 2; j <= n; ++j)
    for (int32_t i = 1; i < j; ++i)
      p.conjs_[p.pair_slot(i, j)] = Word::single(i);

  for (const auto& [i, j, w] : raw.conjs) {
    if (i < 1 || i > n || j < 1 || j > n)
      throw Error("conjugation relation index out of range");
    if (i >= j)
      throw Error("conjugation relation requires i < j, got (" +
                  std::to_string(i) + ", " + std::to_string(j) + ")");
    size_t slot = p.pair_slot(i, j);
    if (p.conj_nontrivial_[slot])
      throw Error("duplicate conjugation relation for (" +
                  p.gens_[static_cast<size_t>(i) - 1].name + ", " +
                  p.gens_[static_cast<size_t>(j) - 1].name + ")");
    Word m = check_relation_word(
        w, j - 1,
        "conjugation rhs of " + p.gens_[static_cast<size_t>(i) - 1].name + " ^ " +
            p.gens_[static_cast<size_t>(j) - 1].name);
    if (m == Word::single(i)) {
      // Explicitly trivial relation; keep the default.
      continue;
    }
    p.conjs_[slot] = m;
    p.conj_nontrivial_[slot] = 1;
  }

  // Positive expansion of x_i^{-1} = x_i^{o_i - 1} * power_tail(i)^{-1},
  // built bottom-up so tails (indices < i) are already expandable.
  auto append_word_inverse = [&](Word& out, const Word& w) {
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
      for (int32_t c = 0; c < it->exp; ++c) {
        const Word& inv = p.inv_expansion_[static_cast<size_t>(it->gen) - 1];
        out.letters.insert(out.letters.end(), inv.letters.begin(),
                           inv.letters.end());
      }
    }
  };
  p.inv_expansion_.reserve(static_cast<size_t>(n));
  for (int32_t i = 1; i <= n; ++i) {
    Word inv;
    int32_t o = p.gens_[static_cast<size_t>(i) - 1].relative_order;
    if (o > 2)
      inv.letters.push_back(Letter{i, o - 1});
    else
      inv.letters.push_back(Letter{i, 1});
    append_word_inverse(inv, p.power_tails_[static_cast<size_t>(i) - 1]);
    p.inv_expansion_.push_back(merge_adjacent(inv));
  }

  p.order_product_ = 1;
  p.order_fits_ = true;
  p.pack_weights_.clear();
  for (int32_t i = 1; i <= n; ++i) {
    p.pack_weights_.push_back(p.order_product_);
    uint64_t o = static_cast<uint64_t>(p.gens_[static_cast<size_t>(i) - 1].relative_order);
    if (p.order_fits_ && p.order_product_ > (uint64_t{1} << 62) / o) {
      p.order_fits_ = false;
    } else if (p.order_fits_) {
      p.order_product_ *= o;
    }
  }
  return p;
}

CommutativityGraph CommutativityGraph::make(
    const PcPresentation& p, std::vector<int32_t> vertices,
    std::vector<std::pair<int32_t, int32_t>> edges) {
  CommutativityGraph g;
  std::unordered_set<int32_t> vset;
  for (int32_t v : vertices) {
    if (v < 1 || v > p.size())
      throw Error("graph vertex index " + std::to_string(v) + " out of range");
    if (!vset.insert(v).second)
      throw Error("duplicate graph vertex " + std::to_string(v));
  }
  g.vertices = std::move(vertices);
  std::unordered_set<uint64_t> eset;
  for (auto [u, v] : edges) {
    if (u == v) throw Error("graph edge must join distinct vertices");
    if (!vset.count(u) || !vset.count(v))
      throw Error("graph edge endpoint not a declared vertex");
    if (u > v) std::swap(u, v);
    uint64_t key = (static_cast<uint64_t>(u) << 32) | static_cast<uint32_t>(v);
    if (!eset.insert(key).second) throw Error("duplicate graph edge");
    g.edges.emplace_back(u, v);
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

bool CommutativityGraph::has_edge(int32_t u, int32_t v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

}  // namespace pcg
