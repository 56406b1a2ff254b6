#include "pcg/engel.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "pcg/collector.hpp"
#include "pcg/textio.hpp"

namespace pcg {

OrbitSet conjugacy_orbit(const PcPresentation& p, const Element& g,
                         uint64_t size_limit) {
  OrbitSet orbit;
  orbit.base = g;
  std::unordered_set<uint64_t> seen;
  std::deque<uint64_t> frontier;
  seen.insert(p.pack(g));
  frontier.push_back(p.pack(g));
  while (!frontier.empty()) {
    Element cur = p.unpack(frontier.front());
    frontier.pop_front();
    for (int32_t j = 1; j <= p.size(); ++j) {
      Element img = conjugate(p, cur, p.generator_element(j));
      uint64_t key = p.pack(img);
      if (seen.insert(key).second) {
        if (seen.size() > size_limit)
          throw LimitError("conjugacy orbit exceeds the size limit " +
                           std::to_string(size_limit) +
                           "; raise it with --max-orbit");
        frontier.push_back(key);
      }
    }
  }
  orbit.keys.assign(seen.begin(), seen.end());
  std::sort(orbit.keys.begin(), orbit.keys.end());
  orbit.exhausted = true;
  return orbit;
}

bool is_pair_class_le2(const PcPresentation& p, const Element& u,
                       const Element& v) {
  Element c = commutator(p, u, v);
  return commutator(p, c, u).is_identity() &&
         commutator(p, c, v).is_identity();
}

namespace {

std::string render(const PcPresentation& p, const Element& e) {
  return textio::element_to_text(p, e);
}

}  // namespace

VerificationReport sandwich_verify(const PcPresentation& p,
                                   const std::vector<int32_t>& xs,
                                   CheckMode mode, uint64_t orbit_limit) {
  VerificationReport rep;
  rep.predicate = "sandwich";
  rep.mode = mode;
  std::vector<Element> gens;
  for (int32_t i : xs) gens.push_back(p.generator_element(i));

  if (mode.kind == CheckMode::Kind::kExhaustiveOrbit) {
    for (const Element& y : gens) {
      OrbitSet orbit = conjugacy_orbit(p, y, orbit_limit);
      for (uint64_t key : orbit.keys) {
        Element z = p.unpack(key);
        for (const Element& x : gens) {
          ++rep.checked;
          if (!is_pair_class_le2(p, x, z))
            rep.counterexamples.push_back("<" + render(p, x) + ", " +
                                          render(p, z) + "> has class > 2");
        }
      }
    }
  } else {
    SplitMix64 rng(mode.seed);
    for (uint64_t t = 0; t < mode.samples; ++t) {
      Element g = random_element(p, rng);
      for (const Element& y : gens) {
        Element z = conjugate(p, y, g);
        for (const Element& x : gens) {
          ++rep.checked;
          if (!is_pair_class_le2(p, x, z))
            rep.counterexamples.push_back("<" + render(p, x) + ", " +
                                          render(p, z) + "> has class > 2");
        }
      }
    }
  }
  return rep;
}

VerificationReport engel3_verify(const PcPresentation& p, const Element& x,
                                 CheckMode mode, uint64_t orbit_limit) {
  VerificationReport rep;
  rep.predicate = "engel3";
  rep.mode = mode;

  auto check_conjugate = [&](const Element& xg) {
    ++rep.checked;
    // [g, x] = (x^g)^{-1} x ranges over these words as g ranges over the
    // group, so this discharges [g, x, x, x] = 1 for every g.
    Element w = multiply(p, inverse(p, xg), x);
    Element c = commutator(p, commutator(p, w, x), x);
    if (!c.is_identity())
      rep.counterexamples.push_back("[(x')^-1 x, x, x] = " + render(p, c) +
                                    " for x' = " + render(p, xg));
  };

  if (mode.kind == CheckMode::Kind::kExhaustiveOrbit) {
    OrbitSet orbit = conjugacy_orbit(p, x, orbit_limit);
    for (uint64_t key : orbit.keys) check_conjugate(p.unpack(key));
  } else {
    SplitMix64 rng(mode.seed);
    for (uint64_t t = 0; t < mode.samples; ++t)
      check_conjugate(conjugate(p, x, random_element(p, rng)));
  }
  return rep;
}

bool graph_check(const PcPresentation& p, const CommutativityGraph& graph) {
  for (size_t a = 0; a < graph.vertices.size(); ++a)
    for (size_t b = a + 1; b < graph.vertices.size(); ++b) {
      int32_t u = graph.vertices[a];
      int32_t v = graph.vertices[b];
      bool commute = commutator(p, p.generator_element(u),
                                p.generator_element(v))
                         .is_identity();
      if (commute != graph.has_edge(u, v)) return false;
    }
  return true;
}

}  // namespace pcg
