#include "pcg/textio.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "json.hpp"
#include "pcg/collector.hpp"

namespace pcg::textio {
namespace {

struct Tok {
  std::string_view text;
  int col = 0;  // 1-based column of the first character
};

// Strips the comment and splits a line into whitespace-separated tokens.
std::vector<Tok> tokenize_line(std::string_view line) {
  if (size_t hash = line.find('#'); hash != std::string_view::npos)
    line = line.substr(0, hash);
  std::vector<Tok> toks;
  size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    toks.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return toks;
}

[[noreturn]] void fail(int line, int col, const std::string& msg) {
  throw Error("line " + std::to_string(line) + ", col " + std::to_string(col) +
              ": " + msg);
}

int64_t parse_int(std::string_view s, int line, int col) {
  int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    fail(line, col, "expected an integer, got '" + std::string(s) + "'");
  return v;
}

// Parses one word token sequence into letters of (name, exponent) with the
// name resolved later.  A letter is NAME or NAME^INT.
struct RawLetter {
  std::string name;
  int64_t exp;
  int col;
};

std::vector<RawLetter> parse_word_tokens(const std::vector<Tok>& toks,
                                         size_t from, int line) {
  if (from >= toks.size()) fail(line, 1, "missing word");
  if (toks.size() == from + 1 && toks[from].text == "1") return {};
  std::vector<RawLetter> out;
  for (size_t t = from; t < toks.size(); ++t) {
    std::string_view s = toks[t].text;
    int64_t exp = 1;
    size_t caret = s.find('^');
    if (caret != std::string_view::npos) {
      exp = parse_int(s.substr(caret + 1), line,
                      toks[t].col + static_cast<int>(caret) + 1);
      s = s.substr(0, caret);
    }
    if (s.empty()) fail(line, toks[t].col, "empty generator name in word");
    out.push_back({std::string(s), exp, toks[t].col});
  }
  return out;
}

Word resolve_word(const PcPresentation& p, const std::vector<RawLetter>& raw,
                  int line, bool allow_negative) {
  Word w;
  for (const RawLetter& l : raw) {
    auto idx = p.index_of(l.name);
    if (!idx) fail(line, l.col, "unknown generator '" + l.name + "'");
    if (!allow_negative && l.exp < 0)
      fail(line, l.col, "negative exponent not allowed in a relation word");
    if (l.exp > INT32_MAX || l.exp < INT32_MIN)
      fail(line, l.col, "exponent out of range");
    w.letters.push_back(Letter{*idx, static_cast<int32_t>(l.exp)});
  }
  return w;
}

}  // namespace

PcPresentation parse_presentation(std::string_view text) {
  RawPresentation raw;
  bool have_group = false;

  // First pass: group and gen lines establish names and indices.
  struct PendingRel {
    bool is_pow;
    std::string a, b;  // gen names (b unused for pow)
    std::vector<RawLetter> word;
    int line;
    int col;
  };
  std::vector<PendingRel> rels;

  std::istringstream in{std::string(text)};
  std::string line_buf;
  int line_no = 0;
  while (std::getline(in, line_buf)) {
    ++line_no;
    std::vector<Tok> toks = tokenize_line(line_buf);
    if (toks.empty()) continue;
    std::string_view kw = toks[0].text;
    if (kw == "group") {
      if (have_group) fail(line_no, toks[0].col, "duplicate group line");
      if (toks.size() != 2) fail(line_no, toks[0].col, "expected: group NAME");
      raw.name = std::string(toks[1].text);
      have_group = true;
    } else if (kw == "gen") {
      if (toks.size() != 4 || toks[2].text != "order")
        fail(line_no, toks[0].col, "expected: gen NAME order PRIME");
      int64_t o = parse_int(toks[3].text, line_no, toks[3].col);
      if (o < 2 || o > INT32_MAX)
        fail(line_no, toks[3].col, "relative order out of range");
      raw.generators.push_back(
          {std::string(toks[1].text), static_cast<int32_t>(o)});
    } else if (kw == "pow") {
      if (toks.size() < 4 || toks[2].text != "=")
        fail(line_no, toks[0].col, "expected: pow NAME = WORD");
      rels.push_back({true, std::string(toks[1].text), "",
                      parse_word_tokens(toks, 3, line_no), line_no,
                      toks[1].col});
    } else if (kw == "conj") {
      if (toks.size() < 6 || toks[2].text != "^" || toks[4].text != "=")
        fail(line_no, toks[0].col, "expected: conj NAME ^ NAME = WORD");
      rels.push_back({false, std::string(toks[1].text),
                      std::string(toks[3].text),
                      parse_word_tokens(toks, 5, line_no), line_no,
                      toks[1].col});
    } else {
      fail(line_no, toks[0].col,
           "unknown record '" + std::string(kw) + "'");
    }
  }
  if (!have_group) throw Error("line 1, col 1: missing group line");

  // Resolve names using a scratch presentation with no relations; the final
  // validate() call re-checks everything.
  RawPresentation names_only;
  names_only.name = raw.name;
  names_only.generators = raw.generators;
  PcPresentation scratch = validate(names_only);

  for (const PendingRel& r : rels) {
    auto ia = scratch.index_of(r.a);
    if (!ia) fail(r.line, r.col, "unknown generator '" + r.a + "'");
    Word w = resolve_word(scratch, r.word, r.line, /*allow_negative=*/false);
    if (r.is_pow) {
      raw.powers.emplace_back(*ia, w);
    } else {
      auto ib = scratch.index_of(r.b);
      if (!ib) fail(r.line, r.col, "unknown generator '" + r.b + "'");
      if (*ia >= *ib)
        fail(r.line, r.col,
             "conjugation must conjugate a lower generator by a higher one");
      raw.conjs.emplace_back(*ia, *ib, w);
    }
  }
  return validate(raw);
}

std::string serialize_presentation(const PcPresentation& p) {
  std::ostringstream out;
  out << "group " << p.name() << "\n";
  for (int32_t i = 1; i <= p.size(); ++i) {
    const GeneratorInfo& g = p.generator(i);
    out << "gen " << g.name << " order " << g.relative_order << "\n";
  }
  for (int32_t i = 1; i <= p.size(); ++i)
    if (p.has_power_tail(i))
      out << "pow " << p.generator(i).name << " = "
          << word_to_text(p, p.power_tail(i)) << "\n";
  for (int32_t j = 2; j <= p.size(); ++j)
    for (int32_t i = 1; i < j; ++i)
      if (p.has_conj(i, j))
        out << "conj " << p.generator(i).name << " ^ " << p.generator(j).name
            << " = " << word_to_text(p, p.conj_rhs(i, j)) << "\n";
  return out.str();
}

Word parse_word(const PcPresentation& p, std::string_view text) {
  std::vector<Tok> toks = tokenize_line(text);
  if (toks.empty()) throw Error("line 1, col 1: missing word");
  auto raw = parse_word_tokens(toks, 0, 1);
  return resolve_word(p, raw, 1, /*allow_negative=*/true);
}

std::string word_to_text(const PcPresentation& p, const Word& w) {
  if (w.letters.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const Letter& l : w.letters) {
    if (!first) out << ' ';
    first = false;
    out << p.generator(l.gen).name;
    if (l.exp != 1) out << '^' << l.exp;
  }
  return out.str();
}

std::string element_to_text(const PcPresentation& p, const Element& e) {
  return word_to_text(p, element_to_word(e));
}

std::string claim_report_json(const std::vector<ClaimRecord>& records) {
  nlohmann::json arr = nlohmann::json::array();
  for (const ClaimRecord& r : records) {
    arr.push_back({{"claim_id", r.claim_id},
                   {"description", r.description},
                   {"status", r.status},
                   {"details", r.details},
                   {"elapsed_ms", r.elapsed_ms}});
  }
  return arr.dump(2) + "\n";
}

}  // namespace pcg::textio
