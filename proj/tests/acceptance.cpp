// Acceptance gate: every structural criterion, one pass/fail line each,
// nonzero exit if any fails.  Time limits are part of the contract and are
// enforced alongside the exactness checks.

#include <cstdio>
#include <functional>
#include <vector>

#include "fano/verify.hpp"

int main() {
  using namespace fano;
  VerifyOptions opt;  // GF(32003), seed 12345, graph sweep up to n = 12

  struct Criterion {
    const char* what;
    double limit_seconds;
    std::function<VerifyResult()> run;
  };
  std::vector<Criterion> criteria = {
      {"SD(6,6) figure regression: labels 14/11/11 and 10/9/9, components 1/2/1", 1.0,
       [&] { return verify_figure_regression(opt); }},
      {"cycle criterion == graph components, all variants, n <= 12, all k", 30.0,
       [&] { return verify_graph_equivalence(opt); }},
      {"line components: dim = nr+(s-1)(n-r)-5, and expected dimension at r = n", 1.0,
       [&] { return verify_line_dims(opt); }},
      {"tangent solver vs closed-form formulas: middle point and general point, gap check", 60.0,
       [&] { return verify_tangent_formula_values(opt); }},
      {"chart and block tangent methods agree on the n <= 6 grid", 600.0,
       [&] { return verify_tangent_cross(opt); }},
      {"closed-form p-minors match determinants (s <= 6); products full rank (s <= 5)",
       30.0, [&] { return verify_p_minors(opt); }},
      {"binomial convolution identity, exhaustive grid plus 200 random rationals", 10.0,
       [&] { return verify_jensen(opt); }},
      {"GF(3) scan of all 11,011 pencils in S_3 with flag classification", 300.0,
       [&] { return verify_lines_gf3(opt); }},
      {"Borel patterns: worked example, emptiness exactly above max kappa (n <= 8)", 60.0,
       [&] { return verify_borel(opt); }},
  };

  bool all_pass = true;
  for (size_t i = 0; i < criteria.size(); ++i) {
    VerifyResult res;
    bool threw = false;
    std::string err;
    try {
      res = criteria[i].run();
    } catch (const std::exception& e) {
      threw = true;
      err = e.what();
    }
    bool in_time = !threw && res.seconds < criteria[i].limit_seconds;
    bool ok = !threw && res.pass && in_time;
    all_pass = all_pass && ok;
    std::printf("[%s] criterion %zu: %s  (%.2fs, limit %.0fs)\n", ok ? "PASS" : "FAIL",
                i + 1, criteria[i].what, threw ? 0.0 : res.seconds,
                criteria[i].limit_seconds);
    if (threw) {
      std::printf("       exception: %s\n", err.c_str());
    } else if (!res.pass) {
      std::printf("       details: %s\n", res.details.dump().c_str());
    } else if (!in_time) {
      std::printf("       exceeded the time limit\n");
    }
  }
  std::printf("%s\n", all_pass ? "ACCEPTANCE: all criteria passed"
                               : "ACCEPTANCE: FAILURES PRESENT");
  return all_pass ? 0 : 1;
}
