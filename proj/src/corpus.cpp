#include "pcg/corpus.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <future>
#include <set>
#include <sstream>
#include <unordered_set>

#include "pcg/collector.hpp"
#include "pcg/oracle.hpp"
#include "pcg/rng.hpp"
#include "pcg/series.hpp"

namespace pcg::corpus {

namespace {

struct EmbeddedFile {
  const char* file_name;
  const char* content;
};

#include "corpus_data.inc"  // defines kEmbeddedFiles / kEmbeddedFileCount

std::string read_override_file(const std::string& dir,
                               const std::string& file_name) {
  std::string path = dir + "/" + file_name;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read corpus override file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string raw_file_text(const std::string& file_name) {
  if (const char* dir = std::getenv("PCENGEL_CORPUS_DIR"))
    return read_override_file(dir, file_name);
  for (size_t k = 0; k < kEmbeddedFileCount; ++k)
    if (file_name == kEmbeddedFiles[k].file_name)
      return kEmbeddedFiles[k].content;
  throw Error("no embedded corpus file named " + file_name);
}

int32_t generator_index(const PcPresentation& p, const std::string& name) {
  if (auto i = p.index_of(name)) return *i;
  throw Error("presentation " + p.name() + " has no generator named '" + name +
              "'");
}

std::vector<Element> eval_word_list(const PcPresentation& p,
                                    const nlohmann::json& arr,
                                    const char* what) {
  if (!arr.is_array())
    throw Error(std::string(what) + " must be an array of word expressions");
  std::vector<Element> out;
  out.reserve(arr.size());
  for (const auto& w : arr) out.push_back(eval_word_spec(p, w));
  return out;
}

CheckMode mode_from_params(const nlohmann::json& params,
                           const RunOptions& opts) {
  std::string mode = params.value("mode", std::string("exhaustive"));
  if (mode == "exhaustive") return CheckMode::exhaustive();
  if (mode == "sampled") {
    uint64_t samples = params.value("samples", uint64_t{1000});
    return CheckMode::sampled(samples, opts.seed);
  }
  throw Error("unknown check mode '" + mode + "'");
}

// Members of a series term described by
//   {"series": "lower"|"derived", "term": k, "subgroup"|"normal_closure": [...]}.
std::vector<Element> series_term_members(const PcPresentation& p,
                                         const nlohmann::json& spec,
                                         std::string& described) {
  std::string series = spec.value("series", std::string("lower"));
  int64_t term = spec.value("term", int64_t{1});
  if (term < 1) throw Error("series term index must be >= 1");
  nlohmann::json sub;
  if (spec.contains("subgroup")) sub = {{"subgroup", spec.at("subgroup")}};
  else if (spec.contains("normal_closure"))
    sub = {{"normal_closure", spec.at("normal_closure")}};
  InducedPcs within;
  const InducedPcs* within_ptr = nullptr;
  if (!sub.is_null()) {
    within = eval_subgroup_spec(p, sub);
    within_ptr = &within;
  }
  SeriesChain chain = series == "derived" ? derived_series(p, within_ptr)
                                          : lower_central_series(p, within_ptr);
  size_t idx = std::min(static_cast<size_t>(term) - 1, chain.terms.size() - 1);
  const InducedPcs& t = chain.terms[idx];
  std::ostringstream os;
  os << series << "-series term " << term << " (order "
     << subgroup_order(p, t) << ")";
  described = os.str();
  return t.member_list();
}

struct Verdict {
  bool ok = true;
  std::vector<std::string> problems;
  std::ostringstream detail;

  void fail(std::string msg) {
    ok = false;
    problems.push_back(std::move(msg));
  }
  std::string details_text() {
    std::string base = detail.str();
    if (problems.empty()) return base;
    std::string out = base.empty() ? "" : base + "; ";
    out += "FAILED: ";
    size_t shown = std::min<size_t>(problems.size(), 4);
    for (size_t k = 0; k < shown; ++k) {
      if (k) out += " | ";
      out += problems[k];
    }
    if (problems.size() > shown)
      out += " | (+" + std::to_string(problems.size() - shown) + " more)";
    return out;
  }
};

void check_order_target(const PcPresentation& p, uint64_t expected,
                        Verdict& v) {
  ConsistencyReport rep = check_consistency(p);
  if (!rep.consistent) {
    v.fail(p.name() + ": " + std::to_string(rep.failures.size()) +
           " overlap failures");
    return;
  }
  uint64_t order = group_order(p);
  if (order != expected)
    v.fail(p.name() + ": order " + std::to_string(order) + " != expected " +
           std::to_string(expected));
}

void run_order(const PcPresentation& p, const nlohmann::json& params,
               Verdict& v) {
  uint64_t expected = params.at("expected_order").get<uint64_t>();
  check_order_target(p, expected, v);
  if (v.ok) v.detail << "consistent; order " << expected;
}

void run_consistency(const PcPresentation& p, Verdict& v) {
  ConsistencyReport rep = check_consistency(p);
  if (!rep.consistent)
    v.fail(p.name() + ": " + std::to_string(rep.failures.size()) +
           " overlap failures");
  else
    v.detail << "consistent; order " << group_order(p);
}

void run_class_bound(const PcPresentation& p, const nlohmann::json& params,
                     Verdict& v) {
  InducedPcs within;
  const InducedPcs* within_ptr = nullptr;
  if (params.contains("within")) {
    within = eval_subgroup_spec(p, params.at("within"));
    within_ptr = &within;
  }
  int32_t cls = nilpotency_class(p, within_ptr);
  int64_t bound = params.at("bound").get<int64_t>();
  if (within_ptr)
    v.detail << "subgroup order " << subgroup_order(p, within) << "; ";
  v.detail << "nilpotency class " << cls << ", bound " << bound;
  if (cls > bound)
    v.fail("class " + std::to_string(cls) + " exceeds bound " +
           std::to_string(bound));
  if (params.contains("exact")) {
    int64_t exact = params.at("exact").get<int64_t>();
    if (cls != exact)
      v.fail("class " + std::to_string(cls) + " != expected exact " +
             std::to_string(exact));
  }
}

void run_equal_pairs(const PcPresentation& p, const nlohmann::json& params,
                     Verdict& v, size_t& count) {
  if (!params.contains("equal")) return;
  for (const auto& pair : params.at("equal")) {
    if (!pair.is_array() || pair.size() != 2)
      throw Error("each 'equal' entry must be a pair of word expressions");
    Element a = eval_word_spec(p, pair[0]);
    Element b = eval_word_spec(p, pair[1]);
    ++count;
    if (!(a == b))
      v.fail("pair " + std::to_string(count) + ": " +
             textio::element_to_text(p, a) + " != " +
             textio::element_to_text(p, b));
  }
}

void run_identity(const PcPresentation& p, const nlohmann::json& params,
                  Verdict& v) {
  size_t pairs = 0;
  run_equal_pairs(p, params, v, pairs);
  size_t words = 0;
  if (params.contains("words")) {
    for (const auto& w : params.at("words")) {
      Element g = eval_word_spec(p, w);
      ++words;
      if (!g.is_identity())
        v.fail("word " + std::to_string(words) +
               " collects to " + textio::element_to_text(p, g));
    }
  }
  v.detail << words << " identity words, " << pairs << " equal pairs";
}

void run_hypercentre(const PcPresentation& p, const nlohmann::json& params,
                     Verdict& v) {
  size_t pairs = 0;
  run_equal_pairs(p, params, v, pairs);
  size_t checks = 0;
  for (const auto& entry : params.at("members")) {
    if (!entry.is_array() || entry.size() != 2)
      throw Error("each hypercentre member must be [word, level]");
    Element g = eval_word_spec(p, entry[0]);
    int64_t level = entry[1].get<int64_t>();
    ++checks;
    if (!in_hypercentre(p, g, static_cast<int32_t>(level)))
      v.fail(textio::element_to_text(p, g) + " is not in hypercentre level " +
             std::to_string(level));
  }
  v.detail << checks << " membership checks, " << pairs << " equal pairs";
}

void run_central_membership(const PcPresentation& p,
                            const nlohmann::json& params, Verdict& v) {
  InducedPcs target = eval_subgroup_spec(p, params.at("centralizes"));
  std::vector<std::pair<Element, std::string>> members;
  if (params.contains("members")) {
    size_t k = 0;
    for (const auto& w : params.at("members"))
      members.emplace_back(eval_word_spec(p, w),
                           "member " + std::to_string(++k));
  }
  std::vector<std::string> sources;
  if (params.contains("members_from")) {
    for (const auto& spec : params.at("members_from")) {
      std::string described;
      std::vector<Element> ms = series_term_members(p, spec, described);
      sources.push_back(described);
      size_t k = 0;
      for (auto& m : ms)
        members.emplace_back(std::move(m),
                             described + " member " + std::to_string(++k));
    }
  }
  for (const auto& [g, label] : members)
    if (!centralizes(p, g, target))
      v.fail(label + " (" + textio::element_to_text(p, g) +
             ") does not centralize the target");
  v.detail << members.size() << " members against a subgroup of order "
           << subgroup_order(p, target);
  for (const auto& s : sources) v.detail << "; " << s;
}

void run_series_trivial(const PcPresentation& p, const nlohmann::json& params,
                        Verdict& v) {
  std::string series = params.value("series", std::string("lower"));
  int64_t trivial_at = params.at("trivial_at").get<int64_t>();
  InducedPcs within;
  const InducedPcs* within_ptr = nullptr;
  if (params.contains("within")) {
    within = eval_subgroup_spec(p, params.at("within"));
    within_ptr = &within;
  }
  SeriesChain chain = series == "derived" ? derived_series(p, within_ptr)
                                          : lower_central_series(p, within_ptr);
  size_t idx =
      std::min(static_cast<size_t>(trivial_at) - 1, chain.terms.size() - 1);
  const InducedPcs& t = chain.terms[idx];
  bool trivial = t.trivial() && (chain.reached_trivial ||
                                 static_cast<size_t>(trivial_at) <=
                                     chain.terms.size());
  v.detail << series << "-series term " << trivial_at << " has order "
           << subgroup_order(p, t) << " (chain of " << chain.terms.size()
           << " terms)";
  if (!trivial)
    v.fail("term " + std::to_string(trivial_at) + " has order " +
           std::to_string(subgroup_order(p, t)));
}

void run_sandwich_target(const nlohmann::json& t,
                         const std::string& default_pres,
                         const nlohmann::json& outer_params,
                         const RunOptions& opts, Verdict& v) {
  std::string pres_name = t.value("presentation", default_pres);
  PcPresentation p = load_named(pres_name);
  if (t.contains("expected_order"))
    check_order_target(p, t.at("expected_order").get<uint64_t>(), v);
  std::vector<int32_t> vertices;
  for (const auto& name : t.at("vertices"))
    vertices.push_back(generator_index(p, name.get<std::string>()));
  nlohmann::json mode_src = t.contains("mode") ? t : outer_params;
  CheckMode mode = mode_from_params(mode_src, opts);
  VerificationReport rep = sandwich_verify(p, vertices, mode, opts.max_orbit);
  v.detail << pres_name << ": " << rep.checked << " sandwich instances";
  for (const auto& c : rep.counterexamples)
    v.fail(pres_name + " sandwich counterexample: " + c);
  if (t.contains("edges")) {
    std::vector<std::pair<int32_t, int32_t>> edges;
    for (const auto& e : t.at("edges"))
      edges.emplace_back(generator_index(p, e[0].get<std::string>()),
                         generator_index(p, e[1].get<std::string>()));
    CommutativityGraph graph = CommutativityGraph::make(p, vertices, edges);
    if (graph_check(p, graph))
      v.detail << ", commutativity graph matches (" << edges.size()
               << " edges)";
    else
      v.fail(pres_name + ": commutativity graph mismatch");
  }
}

void run_sandwich(const std::string& default_pres, const nlohmann::json& params,
                  const RunOptions& opts, Verdict& v) {
  if (params.contains("targets")) {
    bool first = true;
    for (const auto& t : params.at("targets")) {
      if (!first) v.detail << "; ";
      first = false;
      run_sandwich_target(t, default_pres, params, opts, v);
    }
  } else {
    run_sandwich_target(params, default_pres, params, opts, v);
  }
}

void run_engel3(const std::string& default_pres, const nlohmann::json& params,
                const RunOptions& opts, Verdict& v) {
  nlohmann::json targets = params.contains("targets")
                               ? params.at("targets")
                               : nlohmann::json::array({params});
  bool first = true;
  for (const auto& t : targets) {
    if (!first) v.detail << "; ";
    first = false;
    std::string pres_name = t.value("presentation", default_pres);
    PcPresentation p = load_named(pres_name);
    int32_t xi = generator_index(p, t.at("x").get<std::string>());
    nlohmann::json mode_src = t.contains("mode") ? t : params;
    CheckMode mode = mode_from_params(mode_src, opts);
    VerificationReport rep =
        engel3_verify(p, p.generator_element(xi), mode, opts.max_orbit);
    v.detail << pres_name << ": " << rep.checked << " orbit instances for "
             << t.at("x").get<std::string>();
    for (const auto& c : rep.counterexamples)
      v.fail(pres_name + " engel3 counterexample: " + c);
  }
}

void run_graph(const PcPresentation& p, const nlohmann::json& params,
               Verdict& v) {
  std::vector<int32_t> vertices;
  for (const auto& name : params.at("vertices"))
    vertices.push_back(generator_index(p, name.get<std::string>()));
  std::vector<std::pair<int32_t, int32_t>> edges;
  for (const auto& e : params.at("edges"))
    edges.emplace_back(generator_index(p, e[0].get<std::string>()),
                       generator_index(p, e[1].get<std::string>()));
  CommutativityGraph graph = CommutativityGraph::make(p, vertices, edges);
  if (graph_check(p, graph))
    v.detail << vertices.size() << " vertices, " << edges.size()
             << " edges match";
  else
    v.fail("commutativity graph mismatch");
}

void run_quotient_class_exponent(const PcPresentation& p,
                                 const nlohmann::json& params, Verdict& v) {
  std::vector<Element> gens;
  for (const auto& name : params.at("normal_closure"))
    gens.push_back(
        p.generator_element(generator_index(p, name.get<std::string>())));
  InducedPcs n_sub = normal_closure(p, gens);
  v.detail << "normal closure order " << subgroup_order(p, n_sub);
  if (params.contains("contains"))
    for (const auto& name : params.at("contains")) {
      Element g = p.generator_element(
          generator_index(p, name.get<std::string>()));
      if (!contains(p, n_sub, g))
        v.fail("normal closure does not contain " + name.get<std::string>());
    }
  QuotientResult q = quotient(p, n_sub);
  uint64_t q_order = group_order(q.pres);
  v.detail << "; quotient order " << q_order;
  int32_t cls = nilpotency_class(q.pres);
  v.detail << ", class " << cls;
  if (params.contains("class_bound")) {
    int64_t bound = params.at("class_bound").get<int64_t>();
    if (cls > bound)
      v.fail("quotient class " + std::to_string(cls) + " exceeds bound " +
             std::to_string(bound));
  }
  if (params.contains("exponent_divides")) {
    uint64_t divisor = params.at("exponent_divides").get<uint64_t>();
    ExponentResult exp = exponent_exhaustive(q.pres);
    v.detail << ", exponent " << exp.value;
    if (divisor % exp.value != 0)
      v.fail("quotient exponent " + std::to_string(exp.value) +
             " does not divide " + std::to_string(divisor));
  }
}

// ---- the cross-cutting property battery (claim kind "properties") ----

Word random_word(const PcPresentation& p, SplitMix64& rng, size_t max_len) {
  size_t len = rng.next_below(max_len + 1);
  Word w;
  for (size_t k = 0; k < len; ++k) {
    int32_t gen =
        static_cast<int32_t>(rng.next_below(static_cast<uint64_t>(p.size()))) +
        1;
    // Exponent in {-2, -1, 1, 2}: exercises the negative-exponent path.
    static constexpr int32_t kExps[4] = {-2, -1, 1, 2};
    w.letters.push_back(Letter{gen, kExps[rng.next_below(4)]});
  }
  return w;
}

void props_round_trips(Verdict& v, uint64_t& checked) {
  for (const auto& name : corpus_names()) {
    PcPresentation p = load_named(name);
    std::string s1 = textio::serialize_presentation(p);
    PcPresentation p2 = textio::parse_presentation(s1);
    std::string s2 = textio::serialize_presentation(p2);
    ++checked;
    if (s1 != s2 || !(p2 == p))
      v.fail(name + ": parse/serialize round-trip is not a fixed point");
  }
}

void props_oracle_agreement(const RunOptions& opts, Verdict& v,
                            uint64_t& checked) {
  SplitMix64 rng(opts.seed ^ 0xa5a5a5a5ULL);
  for (const char* name :
       {"COMPLETE_C2_4", "FIVE_EDGE_32", "FOUR_EDGE_64", "FOUR_EDGE_256"}) {
    PcPresentation p = load_named(name);
    for (int k = 0; k < 40; ++k) {
      Word w = random_word(p, rng, 10);
      ++checked;
      Element fast = collect(p, w);
      Element slow = oracle::collect_rightmost(p, w);
      if (!(fast == slow)) {
        v.fail(std::string(name) + ": collector disagrees with oracle on " +
               textio::word_to_text(p, w));
        return;  // one counterexample is enough detail
      }
    }
  }
}

void props_group_laws(const RunOptions& opts, Verdict& v, uint64_t& checked) {
  SplitMix64 rng(opts.seed ^ 0x5bd1e995ULL);
  for (const char* name : {"F_2_13", "G_GAMMA"}) {
    PcPresentation p = load_named(name);
    for (int k = 0; k < 120; ++k) {
      Element a = random_element(p, rng);
      Element b = random_element(p, rng);
      Element c = random_element(p, rng);
      ++checked;
      if (!(multiply(p, multiply(p, a, b), c) ==
            multiply(p, a, multiply(p, b, c)))) {
        v.fail(std::string(name) + ": associativity fails at " +
               textio::element_to_text(p, a));
        return;
      }
    }
    for (int k = 0; k < 60; ++k) {
      Element g = random_element(p, rng);
      ++checked;
      if (!multiply(p, g, inverse(p, g)).is_identity() ||
          !multiply(p, inverse(p, g), g).is_identity()) {
        v.fail(std::string(name) + ": inverse law fails at " +
               textio::element_to_text(p, g));
        return;
      }
      Element h = p.unpack(p.pack(g));
      if (!(h == g)) {
        v.fail(std::string(name) + ": pack/unpack mismatch");
        return;
      }
    }
  }
}

void props_lagrange(const RunOptions& opts, Verdict& v, uint64_t& checked) {
  SplitMix64 rng(opts.seed ^ 0x2545f491ULL);
  for (const char* name : {"F_2_13", "G_GAMMA"}) {
    PcPresentation p = load_named(name);
    uint64_t order = p.order_product();
    for (int k = 0; k < 12; ++k) {
      std::vector<Element> gens{random_element(p, rng), random_element(p, rng)};
      InducedPcs s = induced_pcs(p, gens, ClosureKind::kPlain);
      uint64_t sub = subgroup_order(p, s);
      ++checked;
      if (sub == 0 || order % sub != 0) {
        v.fail(std::string(name) + ": subgroup order " + std::to_string(sub) +
               " does not divide " + std::to_string(order));
        return;
      }
      for (const auto& g : gens)
        if (!contains(p, s, g)) {
          v.fail(std::string(name) + ": generated subgroup misses a generator");
          return;
        }
    }
  }
}

void props_series_nesting(Verdict& v, uint64_t& checked) {
  for (const char* name : {"F_2_13", "G_GAMMA", "FOUR_EDGE_256"}) {
    PcPresentation p = load_named(name);
    SeriesChain lower = lower_central_series(p);
    for (size_t k = 0; k + 1 < lower.terms.size(); ++k) {
      ++checked;
      if (!subgroup_leq(p, lower.terms[k], lower.terms[k + 1])) {
        v.fail(std::string(name) + ": lower-central term " +
               std::to_string(k + 2) + " is not inside term " +
               std::to_string(k + 1));
        return;
      }
    }
    SeriesChain derived = derived_series(p);
    for (size_t k = 0; k + 1 < derived.terms.size(); ++k) {
      ++checked;
      if (!subgroup_leq(p, derived.terms[k], derived.terms[k + 1])) {
        v.fail(std::string(name) + ": derived term " + std::to_string(k + 1) +
               " is not inside term " + std::to_string(k));
        return;
      }
    }
    // Both series share the commutator subgroup as their second term.
    if (lower.terms.size() > 1 && derived.terms.size() > 1) {
      ++checked;
      if (!(subgroup_leq(p, lower.terms[1], derived.terms[1]) &&
            subgroup_leq(p, derived.terms[1], lower.terms[1]))) {
        v.fail(std::string(name) +
               ": commutator subgroup differs between the two series");
        return;
      }
    }
  }
}

void props_element_orders(const RunOptions& opts, Verdict& v,
                          uint64_t& checked) {
  SplitMix64 rng(opts.seed ^ 0x94d049bbULL);
  for (const char* name : {"F_2_13", "FOUR_EDGE_256"}) {
    PcPresentation p = load_named(name);
    uint64_t order = p.order_product();
    for (int k = 0; k < 30; ++k) {
      Element g = random_element(p, rng);
      uint64_t n = element_order(p, g);
      ++checked;
      if (n == 0 || order % n != 0 ||
          !power(p, g, static_cast<int64_t>(n)).is_identity()) {
        v.fail(std::string(name) + ": bad element order " + std::to_string(n) +
               " for " + textio::element_to_text(p, g));
        return;
      }
    }
  }
}

void props_orbit_closure(const RunOptions& opts, Verdict& v,
                         uint64_t& checked) {
  for (const char* name : {"F_2_13", "G_GAMMA"}) {
    PcPresentation p = load_named(name);
    int32_t base = generator_index(p, name[0] == 'F' ? "x12" : "e17");
    OrbitSet orbit =
        conjugacy_orbit(p, p.generator_element(base), opts.max_orbit);
    uint64_t order = p.order_product();
    if (orbit.size() == 0 || order % orbit.size() != 0) {
      v.fail(std::string(name) + ": orbit size " +
             std::to_string(orbit.size()) + " does not divide group order");
      return;
    }
    for (size_t k = 0; k < orbit.keys.size(); k += 7) {
      Element member = p.unpack(orbit.keys[k]);
      for (int32_t j = 1; j <= p.size(); ++j) {
        Element image = conjugate(p, member, p.generator_element(j));
        ++checked;
        if (!std::binary_search(orbit.keys.begin(), orbit.keys.end(),
                                p.pack(image))) {
          v.fail(std::string(name) + ": orbit is not closed under conjugation");
          return;
        }
      }
    }
  }
}

void run_properties(const RunOptions& opts, Verdict& v) {
  uint64_t checked = 0;
  props_round_trips(v, checked);
  props_oracle_agreement(opts, v, checked);
  props_group_laws(opts, v, checked);
  props_lagrange(opts, v, checked);
  props_series_nesting(v, checked);
  props_element_orders(opts, v, checked);
  props_orbit_closure(opts, v, checked);
  v.detail << checked << " property instances (seed " << opts.seed << ")";
}

}  // namespace

std::vector<std::string> corpus_names() {
  return {"F_2_13",       "G_BETA",       "G_GAMMA",      "COMPLETE_C2_4",
          "FIVE_EDGE_32", "FOUR_EDGE_64", "FOUR_EDGE_256"};
}

std::string raw_presentation_text(const std::string& name) {
  auto names = corpus_names();
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw Error("unknown corpus presentation: " + name);
  return raw_file_text(name + ".pc");
}

PcPresentation load_named(const std::string& name) {
  return textio::parse_presentation(raw_presentation_text(name));
}

std::vector<Claim> claim_suite() {
  nlohmann::json doc = nlohmann::json::parse(raw_file_text("claims.json"));
  std::vector<Claim> out;
  for (const auto& c : doc.at("claims")) {
    Claim claim;
    claim.claim_id = c.at("claim_id").get<std::string>();
    claim.description = c.at("description").get<std::string>();
    claim.presentation = c.at("presentation").get<std::string>();
    claim.kind = c.at("kind").get<std::string>();
    claim.budget_ms = c.value("budget_ms", int64_t{0});
    claim.params =
        c.contains("params") ? c.at("params") : nlohmann::json::object();
    out.push_back(std::move(claim));
  }
  std::sort(out.begin(), out.end(),
            [](const Claim& a, const Claim& b) { return a.claim_id < b.claim_id; });
  for (size_t k = 0; k + 1 < out.size(); ++k)
    if (out[k].claim_id == out[k + 1].claim_id)
      throw Error("duplicate claim id: " + out[k].claim_id);
  return out;
}

Element eval_word_spec(const PcPresentation& p, const nlohmann::json& spec) {
  if (spec.is_string())
    return collect(p, textio::parse_word(p, spec.get<std::string>()));
  if (!spec.is_object() || spec.size() != 1)
    throw Error("word expression must be a string or a single-key object");
  const auto it = spec.begin();
  const std::string& op = it.key();
  const nlohmann::json& arg = it.value();
  if (op == "comm") {
    std::vector<Element> parts = eval_word_list(p, arg, "comm");
    if (parts.size() < 2) throw Error("comm needs at least two entries");
    return left_normed_commutator(p, parts);
  }
  if (op == "prod") {
    std::vector<Element> parts = eval_word_list(p, arg, "prod");
    Element acc = p.identity();
    for (const auto& e : parts) acc = multiply(p, acc, e);
    return acc;
  }
  if (op == "conj") {
    if (!arg.is_array() || arg.size() != 2)
      throw Error("conj needs [word, by]");
    return conjugate(p, eval_word_spec(p, arg[0]), eval_word_spec(p, arg[1]));
  }
  if (op == "inv") return inverse(p, eval_word_spec(p, arg));
  if (op == "pow") {
    if (!arg.is_array() || arg.size() != 2)
      throw Error("pow needs [word, exponent]");
    return power(p, eval_word_spec(p, arg[0]), arg[1].get<int64_t>());
  }
  throw Error("unknown word operator '" + op + "'");
}

InducedPcs eval_subgroup_spec(const PcPresentation& p,
                              const nlohmann::json& spec) {
  if (!spec.is_object() || spec.size() != 1)
    throw Error(
        "subgroup expression must be {\"subgroup\": [...]} or "
        "{\"normal_closure\": [...]}");
  const auto it = spec.begin();
  std::vector<Element> gens = eval_word_list(p, it.value(), it.key().c_str());
  if (it.key() == "subgroup")
    return induced_pcs(p, gens, ClosureKind::kPlain);
  if (it.key() == "normal_closure") return normal_closure(p, gens);
  throw Error("unknown subgroup operator '" + it.key() + "'");
}

textio::ClaimRecord run_claim(const Claim& c, const RunOptions& opts) {
  textio::ClaimRecord rec;
  rec.claim_id = c.claim_id;
  rec.description = c.description;
  auto start = std::chrono::steady_clock::now();
  Verdict v;
  try {
    if (c.kind == "sandwich") {
      run_sandwich(c.presentation, c.params, opts, v);
    } else if (c.kind == "engel3") {
      run_engel3(c.presentation, c.params, opts, v);
    } else if (c.kind == "properties") {
      run_properties(opts, v);
    } else {
      PcPresentation p = load_named(c.presentation);
      if (c.kind == "order") run_order(p, c.params, v);
      else if (c.kind == "consistency") run_consistency(p, v);
      else if (c.kind == "class-bound") run_class_bound(p, c.params, v);
      else if (c.kind == "identity") run_identity(p, c.params, v);
      else if (c.kind == "hypercentre-membership")
        run_hypercentre(p, c.params, v);
      else if (c.kind == "central-membership")
        run_central_membership(p, c.params, v);
      else if (c.kind == "series-trivial") run_series_trivial(p, c.params, v);
      else if (c.kind == "graph") run_graph(p, c.params, v);
      else if (c.kind == "quotient-class-exponent")
        run_quotient_class_exponent(p, c.params, v);
      else
        v.fail("unknown claim kind '" + c.kind + "'");
    }
  } catch (const std::exception& e) {
    v.fail(std::string("error: ") + e.what());
  }
  rec.status = v.ok ? "pass" : "fail";
  rec.details = v.details_text();
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  rec.elapsed_ms = opts.record_time ? elapsed : 0;
  return rec;
}

std::vector<textio::ClaimRecord> run_suite(const std::vector<std::string>& only,
                                           const RunOptions& opts,
                                           unsigned threads) {
  std::vector<Claim> suite = claim_suite();
  if (!only.empty()) {
    std::set<std::string> wanted(only.begin(), only.end());
    for (const auto& id : wanted) {
      bool known = std::any_of(suite.begin(), suite.end(), [&](const Claim& c) {
        return c.claim_id == id;
      });
      if (!known) throw Error("unknown claim id: " + id);
    }
    std::erase_if(suite, [&](const Claim& c) {
      return wanted.find(c.claim_id) == wanted.end();
    });
  }
  std::vector<textio::ClaimRecord> records(suite.size());
  if (threads <= 1) {
    for (size_t k = 0; k < suite.size(); ++k)
      records[k] = run_claim(suite[k], opts);
  } else {
    std::vector<std::future<textio::ClaimRecord>> futures;
    futures.reserve(suite.size());
    for (const auto& c : suite)
      futures.push_back(std::async(std::launch::async,
                                   [&c, &opts] { return run_claim(c, opts); }));
    for (size_t k = 0; k < futures.size(); ++k) records[k] = futures[k].get();
  }
  std::sort(records.begin(), records.end(),
            [](const auto& a, const auto& b) { return a.claim_id < b.claim_id; });
  return records;
}

}  // namespace pcg::corpus
