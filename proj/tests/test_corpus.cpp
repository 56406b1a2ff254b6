#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "pcg/collector.hpp"
#include "pcg/corpus.hpp"
#include "pcg/subgroups.hpp"
#include "pcg/textio.hpp"
#include "test_support.hpp"

using namespace pcg;
using test_support::elt;
using test_support::named;

TEST_CASE("corpus inventory") {
  auto names = corpus::corpus_names();
  CHECK(names == std::vector<std::string>{"F_2_13", "G_BETA", "G_GAMMA",
                                          "COMPLETE_C2_4", "FIVE_EDGE_32",
                                          "FOUR_EDGE_64", "FOUR_EDGE_256"});
  for (const auto& n : names) CHECK(named(n).name() == n);
  CHECK_THROWS_AS(corpus::load_named("NO_SUCH_GROUP"), Error);
}

TEST_CASE("transcription audit: relation counts per corpus file") {
  struct Counts {
    int pow;
    int conj;
  };
  const std::map<std::string, Counts> expected = {
      {"F_2_13", {2, 27}},       {"G_BETA", {0, 164}},
      {"G_GAMMA", {0, 40}},      {"COMPLETE_C2_4", {0, 0}},
      {"FIVE_EDGE_32", {0, 1}},  {"FOUR_EDGE_64", {0, 2}},
      {"FOUR_EDGE_256", {2, 8}}};
  for (const auto& [name, counts] : expected) {
    CAPTURE(name);
    std::istringstream in(corpus::raw_presentation_text(name));
    std::string line;
    int pow = 0, conj = 0;
    while (std::getline(in, line)) {
      if (line.rfind("pow ", 0) == 0) ++pow;
      if (line.rfind("conj ", 0) == 0) ++conj;
    }
    CHECK(pow == counts.pow);
    CHECK(conj == counts.conj);
  }
}

TEST_CASE("transcription audit: canonical serialization checksums") {
  const std::map<std::string, uint64_t> expected = {
      {"F_2_13", 0x413abb1d3309f9f9ULL},
      {"G_BETA", 0xaf9ebd3db1e0779dULL},
      {"G_GAMMA", 0xa744549a803067f4ULL},
      {"COMPLETE_C2_4", 0x6c14a3b5f2b1a9f6ULL},
      {"FIVE_EDGE_32", 0x9c7ed7bbef75668fULL},
      {"FOUR_EDGE_64", 0x94f9b20c17ffbfcdULL},
      {"FOUR_EDGE_256", 0x95fb966764782c20ULL}};
  for (const auto& [name, sum] : expected) {
    CAPTURE(name);
    std::string canon = textio::serialize_presentation(named(name));
    CHECK(test_support::fnv1a(canon) == sum);
  }
}

TEST_CASE("every catalogued generator of the 13-generator group equals its "
          "defining commutator") {
  PcPresentation f = named("F_2_13");
  auto C = [&](const Element& u, const Element& v) {
    return commutator(f, u, v);
  };
  auto L = [&](std::vector<Element> es) {
    return left_normed_commutator(f, es);
  };
  Element x = elt(f, "x12"), y = elt(f, "x13"), z = elt(f, "x14");

  CHECK(C(x, y) == elt(f, "x11"));
  CHECK(C(z, y) == elt(f, "x10"));
  CHECK(C(z, x) == elt(f, "x9"));
  CHECK(L({z, y, x}) == elt(f, "x8"));
  CHECK(L({z, x, y}) == elt(f, "x7"));
  CHECK(C(C(y, z), C(y, x)) == elt(f, "x6"));
  CHECK(C(C(x, y), C(x, z)) == elt(f, "x5"));
  CHECK(C(C(z, x), C(z, y)) == elt(f, "x4"));
  CHECK(L({x, y, z, z}) == elt(f, "x2"));
  CHECK(L({z, x, y, y}) == elt(f, "x1"));
  // The dependent symbol: [y,z,x,x] = x2 x1.
  CHECK(L({y, z, x, x}) == elt(f, "x2 x1"));
}

TEST_CASE("every catalogued generator of the triangle-graph group equals its "
          "defining word") {
  PcPresentation g = named("G_BETA");
  auto C = [&](const Element& u, const Element& v) {
    return commutator(g, u, v);
  };
  auto cj = [&](const Element& u, const Element& v) {
    return conjugate(g, u, v);
  };
  auto mul = [&](const Element& u, const Element& v) {
    return multiply(g, u, v);
  };
  Element x = elt(g, "b18"), a = elt(g, "b26"), b = elt(g, "b27"),
          c = elt(g, "b28");

  Element xa = cj(x, a), xb = cj(x, b), xc = cj(x, c);
  CHECK(xa == elt(g, "b19"));
  CHECK(xb == elt(g, "b20"));
  CHECK(xc == elt(g, "b21"));
  Element xab = cj(xa, b), xca = cj(xc, a), xbc = cj(xb, c);
  CHECK(xab == elt(g, "b22"));
  CHECK(xca == elt(g, "b23"));
  CHECK(xbc == elt(g, "b24"));
  Element xabc = cj(xab, c);
  CHECK(xabc == elt(g, "b25"));

  CHECK(C(x, xabc) == elt(g, "b17"));
  CHECK(mul(C(x, xabc), C(xa, xbc)) == elt(g, "b16"));
  CHECK(mul(C(x, xabc), C(xc, xab)) == elt(g, "b15"));
  Element xac = cj(xa, c);
  CHECK(C(x, xac) == elt(g, "b14"));
  CHECK(mul(C(x, xac), C(xb, xabc)) == elt(g, "b13"));
  CHECK(C(x, xbc) == elt(g, "b12"));
  CHECK(mul(C(x, xbc), C(xa, xabc)) == elt(g, "b11"));
  CHECK(C(x, xab) == elt(g, "b10"));
  CHECK(mul(C(x, xab), C(xc, xabc)) == elt(g, "b9"));

  Element ya = C(C(x, xbc), xa);  // [x, x^bc, x^a]
  CHECK(ya == elt(g, "b6"));
  CHECK(cj(ya, b) == elt(g, "b7"));
  CHECK(cj(ya, c) == elt(g, "b8"));
  Element yb = C(C(x, xca), xb);  // [x, x^ca, x^b]
  CHECK(yb == elt(g, "b4"));
  CHECK(cj(yb, a) == elt(g, "b5"));

  Element ta = C(C(xc, xa), C(xa, xb));
  CHECK(ta == elt(g, "b2"));
  Element tb = C(C(xa, xb), C(xb, xc));
  CHECK(tb == elt(g, "b3"));
  CHECK(C(ta, b) == elt(g, "b1"));
}

TEST_CASE("every catalogued generator of the path-graph group equals its "
          "defining word") {
  PcPresentation q = named("G_GAMMA");
  auto C = [&](const Element& u, const Element& v) {
    return commutator(q, u, v);
  };
  Element x = elt(q, "e17"), y = elt(q, "e18"), a = elt(q, "e19"),
          b = elt(q, "e20");

  CHECK(C(y, a) == elt(q, "e16"));
  CHECK(C(x, b) == elt(q, "e15"));
  CHECK(C(x, y) == elt(q, "e14"));
  CHECK(C(x, C(y, a)) == elt(q, "e13"));
  CHECK(C(C(x, b), y) == elt(q, "e12"));
  Element w = C(C(x, b), C(y, a));  // [x,b,[y,a]]
  CHECK(w == elt(q, "e11"));
  CHECK(C(C(x, C(y, a)), y) == elt(q, "e10"));
  CHECK(C(C(C(x, b), y), x) == elt(q, "e9"));
  CHECK(C(w, y) == elt(q, "e8"));
  CHECK(C(w, x) == elt(q, "e7"));
  CHECK(C(C(w, y), x) == elt(q, "e6"));
  CHECK(C(C(w, x), y) == elt(q, "e5"));
  CHECK(C(C(C(w, y), x), y) == elt(q, "e4"));
  CHECK(C(C(C(w, x), y), x) == elt(q, "e3"));
  CHECK(C(C(C(w, y), x), C(y, a)) == elt(q, "e2"));
  CHECK(C(C(C(w, x), y), C(x, b)) == elt(q, "e1"));
}

TEST_CASE("claim suite inventory and hygiene") {
  std::vector<corpus::Claim> suite = corpus::claim_suite();
  REQUIRE(suite.size() == 18);
  for (size_t i = 0; i < suite.size(); ++i) {
    CAPTURE(suite[i].claim_id);
    char buf[8];
    std::snprintf(buf, sizeof buf, "C%02zu", i + 1);
    CHECK(suite[i].claim_id == buf);
    CHECK_FALSE(suite[i].description.empty());
    CHECK_FALSE(suite[i].kind.empty());
    CHECK(suite[i].budget_ms > 0);
    // Descriptions describe the computation, never a source.
    for (const char* banned : {"emma", "heorem", "roposition", "aper", "pec"})
      CHECK(suite[i].description.find(banned) == std::string::npos);
  }
}

TEST_CASE("word specs evaluate to the advertised operations") {
  PcPresentation g = named("G_BETA");
  using nlohmann::json;
  Element b18 = elt(g, "b18"), b22 = elt(g, "b22"), b26 = elt(g, "b26");

  CHECK(corpus::eval_word_spec(g, json("b18 b22")) == multiply(g, b18, b22));
  CHECK(corpus::eval_word_spec(g, json{{"comm", {"b18", "b22"}}}) ==
        commutator(g, b18, b22));
  CHECK(corpus::eval_word_spec(g, json{{"comm", {"b18", "b22", "b26"}}}) ==
        commutator(g, commutator(g, b18, b22), b26));
  CHECK(corpus::eval_word_spec(g, json{{"prod", {"b18", "b22"}}}) ==
        multiply(g, b18, b22));
  CHECK(corpus::eval_word_spec(g, json{{"conj", {"b18", "b26"}}}) ==
        conjugate(g, b18, b26));
  CHECK(corpus::eval_word_spec(g, json{{"inv", "b18"}}) == inverse(g, b18));
  CHECK(corpus::eval_word_spec(
            g, json{{"pow", {json{{"prod", {"b18", "b26"}}}, 2}}}) ==
        power(g, multiply(g, b18, b26), 2));
  CHECK_THROWS_AS(corpus::eval_word_spec(g, json{{"nosuch", "b18"}}), Error);

  InducedPcs plain = corpus::eval_subgroup_spec(
      g, json{{"subgroup", {"b19", "b20", "b21"}}});
  CHECK(subgroup_order(g, plain) == 1024);
  InducedPcs normal =
      corpus::eval_subgroup_spec(g, json{{"normal_closure", {"b18"}}});
  CHECK(subgroup_order(g, normal) == 33554432);
}

TEST_CASE("single claims run deterministically") {
  corpus::RunOptions opts;
  std::vector<corpus::Claim> suite = corpus::claim_suite();
  const corpus::Claim* c01 = nullptr;
  for (const auto& c : suite)
    if (c.claim_id == "C01") c01 = &c;
  REQUIRE(c01 != nullptr);

  textio::ClaimRecord r = corpus::run_claim(*c01, opts);
  CHECK(r.claim_id == "C01");
  CHECK(r.status == "pass");
  CHECK(r.elapsed_ms == 0);  // byte-stable reports by default
  CHECK(r.details.find("8192") != std::string::npos);

  opts.record_time = true;
  textio::ClaimRecord rt = corpus::run_claim(*c01, opts);
  CHECK(rt.passed());
  CHECK(rt.elapsed_ms >= 0);
}

TEST_CASE("suite runner filters, sorts, and parallelizes identically") {
  corpus::RunOptions opts;
  std::vector<std::string> pick{"C13", "C01", "C03"};
  auto seq = corpus::run_suite(pick, opts, 1);
  REQUIRE(seq.size() == 3);
  CHECK(seq[0].claim_id == "C01");
  CHECK(seq[1].claim_id == "C03");
  CHECK(seq[2].claim_id == "C13");
  for (const auto& r : seq) CHECK(r.passed());

  auto par = corpus::run_suite(pick, opts, 3);
  CHECK(textio::claim_report_json(par) == textio::claim_report_json(seq));

  CHECK_THROWS_AS(corpus::run_suite({"C99"}, opts, 1), Error);
}

TEST_CASE("claims fail with detail on impossible limits") {
  corpus::RunOptions opts;
  opts.max_orbit = 16;  // far below the orbit sizes the claim needs
  auto res = corpus::run_suite({"C17"}, opts, 1);
  REQUIRE(res.size() == 1);
  CHECK(res[0].status == "fail");
  CHECK(res[0].details.find("--max-orbit") != std::string::npos);
}
