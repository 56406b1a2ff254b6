// Acceptance gate: runs every claim in the built-in suite sequentially with
// wall-clock timing, prints one line per criterion, and fails if any claim
// fails or exceeds its time budget.
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "pcg/corpus.hpp"

int main() {
  using pcg::corpus::Claim;
  using pcg::corpus::RunOptions;

  std::vector<Claim> suite;
  try {
    suite = pcg::corpus::claim_suite();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "cannot load claim suite: %s\n", e.what());
    return 1;
  }

  RunOptions opts;
  opts.record_time = true;

  size_t passed = 0;
  size_t within_budget = 0;
  for (const Claim& c : suite) {
    pcg::textio::ClaimRecord rec;
    try {
      rec = pcg::corpus::run_claim(c, opts);
    } catch (const std::exception& e) {
      rec.claim_id = c.claim_id;
      rec.status = "fail";
      rec.details = std::string("unexpected exception: ") + e.what();
    }
    bool on_time = rec.elapsed_ms <= c.budget_ms;
    if (rec.passed()) ++passed;
    if (on_time) ++within_budget;
    std::printf("%s %s%s [%lld ms / budget %lld ms] %s\n",
                rec.claim_id.c_str(), rec.status.c_str(),
                on_time ? "" : " OVER-BUDGET",
                static_cast<long long>(rec.elapsed_ms),
                static_cast<long long>(c.budget_ms), rec.details.c_str());
  }

  std::printf("acceptance: %zu/%zu criteria passed, %zu/%zu within budget\n",
              passed, suite.size(), within_budget, suite.size());
  bool ok = passed == suite.size() && within_budget == suite.size() &&
            suite.size() == 18;
  return ok ? 0 : 1;
}
