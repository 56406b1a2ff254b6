// pcengel: command-line front-end for the polycyclic-presentation toolkit.
//
// Subcommands:
//   check    consistency of a presentation (built-in or file)
//   collect  normal form of a word
//   series   lower-central / derived series summary
//   claims   run the built-in verification claim suite
//
// Exit codes: 0 = verified / ok, 1 = a checked statement is false,
// 2 = usage or parse errors.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pcg/collector.hpp"
#include "pcg/consistency.hpp"
#include "pcg/corpus.hpp"
#include "pcg/series.hpp"
#include "pcg/subgroups.hpp"
#include "pcg/textio.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;

pcg::PcPresentation load_input(const std::string& named,
                               const std::string& file) {
  if (named.empty() == file.empty())
    throw pcg::Error("give exactly one of --named NAME or a presentation file");
  if (!named.empty()) return pcg::corpus::load_named(named);
  std::ifstream in(file, std::ios::binary);
  if (!in) throw pcg::Error("cannot read file: " + file);
  std::ostringstream buf;
  buf << in.rdbuf();
  return pcg::textio::parse_presentation(buf.str());
}

const char* failure_kind_name(pcg::ConsistencyFailure::Kind k) {
  using Kind = pcg::ConsistencyFailure::Kind;
  switch (k) {
    case Kind::kTriple: return "associativity overlap";
    case Kind::kPowerSwap: return "power-then-swap overlap";
    case Kind::kSwapPower: return "swap-then-power overlap";
    case Kind::kSelf: return "self overlap";
  }
  return "overlap";
}

int cmd_check(const pcg::PcPresentation& p) {
  pcg::ConsistencyReport rep = pcg::check_consistency(p);
  if (rep.consistent) {
    std::cout << "consistent, order " << pcg::group_order(p) << "\n";
    return kExitOk;
  }
  const pcg::ConsistencyFailure& f = rep.failures.front();
  std::cout << "inconsistent: " << rep.failures.size()
            << " failing overlap(s); first: " << failure_kind_name(f.kind)
            << " at (i=" << f.i << ", j=" << f.j << ", k=" << f.k
            << "): " << pcg::textio::element_to_text(p, f.lhs)
            << " != " << pcg::textio::element_to_text(p, f.rhs) << "\n";
  return kExitFalse;
}

int cmd_collect(const pcg::PcPresentation& p, const std::string& word_text) {
  pcg::Word w = pcg::textio::parse_word(p, word_text);
  pcg::Element e = pcg::collect(p, w);
  std::cout << pcg::textio::element_to_text(p, e) << "\n";
  return kExitOk;
}

std::vector<pcg::Element> parse_word_list(const pcg::PcPresentation& p,
                                          const std::string& text) {
  std::vector<pcg::Element> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ','))
    if (part.find_first_not_of(" \t") != std::string::npos)
      out.push_back(pcg::collect(p, pcg::textio::parse_word(p, part)));
  if (out.empty()) throw pcg::Error("--within needs a comma-separated word list");
  return out;
}

int cmd_series(const pcg::PcPresentation& p, const std::string& kind,
               const std::string& within_text, const std::string& within_kind) {
  pcg::InducedPcs within;
  const pcg::InducedPcs* within_ptr = nullptr;
  if (!within_text.empty()) {
    std::vector<pcg::Element> gens = parse_word_list(p, within_text);
    within = within_kind == "normal-closure"
                 ? pcg::normal_closure(p, gens)
                 : pcg::induced_pcs(p, gens, pcg::ClosureKind::kPlain);
    within_ptr = &within;
  }
  pcg::SeriesChain chain = kind == "derived"
                               ? pcg::derived_series(p, within_ptr)
                               : pcg::lower_central_series(p, within_ptr);
  const char* label = kind == "derived" ? "G^" : "gamma_";
  for (size_t k = 0; k < chain.terms.size(); ++k) {
    uint64_t order = pcg::subgroup_order(p, chain.terms[k]);
    if (kind == "derived")
      std::cout << label << "(" << k << ")";
    else
      std::cout << label << (k + 1);
    std::cout << " order " << order << "\n";
  }
  if (!chain.reached_trivial) {
    std::cout << "chain stabilizes without reaching the trivial subgroup\n";
    return kExitFalse;
  }
  std::cout << (kind == "derived" ? "derived length " : "class ")
            << chain.steps_to_trivial() << "\n";
  return kExitOk;
}

int cmd_claims(const std::vector<std::string>& only, const std::string& json_path,
               const pcg::corpus::RunOptions& opts, unsigned threads) {
  std::vector<pcg::textio::ClaimRecord> records =
      pcg::corpus::run_suite(only, opts, threads);
  bool all_pass = true;
  for (const auto& r : records) {
    all_pass = all_pass && (r.passed() || r.status == "skipped");
    std::cout << r.claim_id << " " << r.status << " - " << r.details << "\n";
  }
  std::string report = pcg::textio::claim_report_json(records);
  if (!json_path.empty()) {
    std::ofstream out(json_path, std::ios::binary);
    if (!out) throw pcg::Error("cannot write report file: " + json_path);
    out << report;
  }
  std::cout << (all_pass ? "all claims pass" : "CLAIM FAILURES PRESENT")
            << " (" << records.size() << " run)\n";
  return all_pass ? kExitOk : kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification toolkit for finite polycyclic presentations"};
  app.require_subcommand(1);

  std::string named, file, word_text;
  std::string series_kind = "lower", within_text, within_kind = "subgroup";
  std::string json_path, suite = "main", timing = "zero";
  std::vector<std::string> only;
  pcg::corpus::RunOptions opts;
  unsigned threads = 1;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("--named", named, "built-in presentation name");
    cmd->add_option("file", file, "presentation file in the line format");
  };

  CLI::App* check = app.add_subcommand("check", "check consistency");
  add_input(check);

  CLI::App* collect = app.add_subcommand("collect", "collect a word");
  add_input(collect);
  collect->add_option("--word", word_text, "word over the generator names")
      ->required();

  CLI::App* series = app.add_subcommand("series", "series summary");
  add_input(series);
  series->add_option("--kind", series_kind, "lower | derived")
      ->check(CLI::IsMember({"lower", "derived"}));
  series->add_option("--within", within_text,
                     "comma-separated generating words for the subgroup");
  series->add_option("--within-kind", within_kind,
                     "subgroup | normal-closure (default subgroup)")
      ->check(CLI::IsMember({"subgroup", "normal-closure"}));

  CLI::App* claims = app.add_subcommand("claims", "run the claim suite");
  claims->add_option("--suite", suite, "claim suite name (main)")
      ->check(CLI::IsMember({"main"}));
  claims->add_option("--json", json_path, "write the JSON report here");
  claims->add_option("--only", only, "claim ids to run")->delimiter(',');
  claims->add_option("--seed", opts.seed, "seed for sampled checks");
  claims->add_option("--threads", threads, "parallel claim workers");
  claims->add_option("--max-enumeration", opts.max_enumeration,
                     "exhaustive enumeration ceiling");
  claims->add_option("--max-orbit", opts.max_orbit, "conjugacy orbit ceiling");
  claims
      ->add_option("--timing", timing,
                   "zero | real; zero keeps reports byte-identical")
      ->check(CLI::IsMember({"zero", "real"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_check(load_input(named, file));
    if (collect->parsed())
      return cmd_collect(load_input(named, file), word_text);
    if (series->parsed())
      return cmd_series(load_input(named, file), series_kind, within_text,
                        within_kind);
    opts.record_time = timing == "real";
    return cmd_claims(only, json_path, opts, threads);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
