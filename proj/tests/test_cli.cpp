#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>

#include "fano/oracle.hpp"
#include "fano/report.hpp"
#include "fano/tangent.hpp"

using namespace fano;

namespace {

Params sym(long n, long r, long k) { return {Variant::symmetric(), n, r, k}; }
const FqField F(32003);

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  RunResult res;
  std::string cmd = std::string(FANORANK_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  while (size_t got = fread(buf.data(), 1, buf.size(), pipe)) res.out.append(buf.data(), got);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

}  // namespace

TEST_CASE("polynomial parsing") {
  std::vector<std::string> vars = {"z0", "z1", "z2"};
  auto z0 = Poly<Fq>::variable(3, 0, F.one());
  auto z1 = Poly<Fq>::variable(3, 1, F.one());
  auto z2 = Poly<Fq>::variable(3, 2, F.one());
  CHECK(parse_poly(F, "z0 + 2*z1", vars) == z0 + z1.scaled(F.of(2)));
  CHECK(parse_poly(F, "-z0*z1^2 + 3", vars) ==
        Poly<Fq>::constant(3, F.of(3)) - z0 * z1 * z1);
  CHECK(parse_poly(F, "0", vars).is_zero_poly());
  CHECK(parse_poly(F, "", vars).is_zero_poly());
  CHECK(parse_poly(F, "z1^2 - z0*z2", vars) == z1 * z1 - z0 * z2);
  RatField Q;
  CHECK(parse_poly(Q, "1/2*z0 - 2/3", vars) ==
        Poly<Rat>::variable(3, 0, Rat(mpz_class(1), mpz_class(2))) -
            Poly<Rat>::constant(3, Rat(mpz_class(2), mpz_class(3))));
  CHECK_THROWS_AS(parse_poly(F, "w0", vars), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly(F, "z0 +", vars), std::invalid_argument);
}

TEST_CASE("matrix space JSON round trip") {
  auto q = middle_point_space(F, 5, 2);
  auto j = space_to_json(q);
  auto back = space_from_json(F, j);
  CHECK(back.rows == q.rows);
  CHECK(back.sym == q.sym);
  for (long i = 0; i < q.rows; ++i)
    for (long c = 0; c < q.cols; ++c) CHECK(back.entries(i, c) == q.entries(i, c));

  auto sc = standard_compression(F, sym(5, 4, 0), 1);
  auto back2 = space_from_json(F, space_to_json(sc));
  CHECK(back2.span_dim() == sc.span_dim());
  for (long i = 0; i < sc.rows; ++i)
    for (long c = 0; c < sc.cols; ++c) CHECK(back2.entries(i, c) == sc.entries(i, c));

  // vars are optional for z-named entries
  ordered_json j2;
  j2["rows"] = 2;
  j2["cols"] = 2;
  j2["symmetry"] = "symmetric";
  j2["entries"] = ordered_json::array({ordered_json::array({"z0", "z1"}),
                                       ordered_json::array({"z1", "0"})});
  auto sp2 = space_from_json(F, j2);
  CHECK(sp2.arity() == 2);
  CHECK(sp2.entries(0, 1) == Poly<Fq>::variable(2, 1, F.one()));
}

TEST_CASE("report JSON content") {
  auto rep = build_report(sym(6, 6, 10));
  CHECK(rep.at("empty") == false);
  CHECK(rep.at("component_count") == 2);
  CHECK(rep.at("connected") == false);
  CHECK(rep.at("irreducible") == false);
  CHECK(rep.at("kappa")[0].at("kappa") == 14);
  CHECK(rep.at("smoothness_conjecture").at("status").get<std::string>().find("CONJECTURE") !=
        std::string::npos);

  auto rep15 = build_report(sym(6, 6, 15));
  CHECK(rep15.at("empty") == true);
  CHECK_FALSE(rep15.contains("irreducible"));

  auto rect = build_report({Variant::rectangular(3), 4, 3, 5});
  CHECK_FALSE(rect.contains("irreducible"));
  CHECK_FALSE(rect.contains("components_per_s"));
  CHECK(rect.at("kappa").size() == 3);

  // every numeric claim is recomputed per call, so reports are identical
  CHECK(build_report(sym(6, 6, 10)).dump() == rep.dump());
}

TEST_CASE("graph DOT output") {
  Params p = sym(6, 6, 9);
  auto dot = graph_to_dot(p, build_graph(p));
  CHECK(dot.find("kappa=14") != std::string::npos);
  CHECK(dot.find("0 -- 1 [label=\"10\"]") != std::string::npos);
  CHECK(dot.find("1 -- 2 [label=\"9\"]") != std::string::npos);

  Params pe = sym(6, 6, 15);
  auto dote = graph_to_dot(pe, build_graph(pe));
  CHECK(dote.find("scheme empty") != std::string::npos);
  CHECK(dote.find(" -- ") == std::string::npos);
}

TEST_CASE("cli: report") {
  auto res = run_cli("report --variant sym -n 6 -r 6 -k 10");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("components: 2") != std::string::npos);

  auto empty = run_cli("report -v sym -n 6 -r 6 -k 15");
  CHECK(empty.exit_code == 0);
  CHECK(empty.out.find("scheme empty") != std::string::npos);

  auto rect = run_cli("report -v rect -m 3 -n 4 -r 3 -k 5 --json");
  CHECK(rect.exit_code == 0);
  CHECK(rect.out.find("\"kappa\"") != std::string::npos);
  CHECK(rect.out.find("irreducible") == std::string::npos);

  // deterministic bytes
  auto again = run_cli("report --variant sym -n 6 -r 6 -k 10");
  CHECK(again.out == res.out);
}

TEST_CASE("cli: usage errors exit 2") {
  CHECK(run_cli("report -v sym -n 2 -r 3 -k 0").exit_code == 2);
  CHECK(run_cli("report -v alt -n 5 -r 3 -k 0").exit_code == 2);
  CHECK(run_cli("verify no-such-suite").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("cli: graph") {
  auto res = run_cli("graph -v sym -n 6 -r 6 -k 12");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("s=0") != std::string::npos);
  CHECK(res.out.find(" -- ") == std::string::npos);  // single vertex, no edges
}

TEST_CASE("cli: tangent at named points") {
  auto res = run_cli("tangent --point middle -n 3 -r 3 -k 1 --method both");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("chart: tangent_dim = 4") != std::string::npos);
  CHECK(res.out.find("blocks: tangent_dim = 4") != std::string::npos);

  auto rnd = run_cli("tangent --point random-general -n 5 -r 4 -s 0 -k 1 --seed 7");
  CHECK(rnd.exit_code == 0);
  CHECK(rnd.out.find("tangent_dim = 20") != std::string::npos);
  CHECK(rnd.out.find("seed = 7") != std::string::npos);

  // identical seed, byte-identical report
  auto rnd2 = run_cli("tangent --point random-general -n 5 -r 4 -s 0 -k 1 --seed 7 --json");
  auto rnd3 = run_cli("tangent --point random-general -n 5 -r 4 -s 0 -k 1 --seed 7 --json");
  CHECK(rnd2.out == rnd3.out);

  // full standard compression space: k = kappa(1) = 4, tangent 12 (= the
  // s(s+1+n-r) + (s+1+n-r)(r-2s-1)(k+1) formula with the last term zero)
  auto std1 = run_cli("tangent --point standard -n 4 -r 4 -s 1 --method both");
  CHECK(std1.exit_code == 0);
  CHECK(std1.out.find("chart: tangent_dim = 12") != std::string::npos);
  CHECK(std1.out.find("blocks: tangent_dim = 12") != std::string::npos);
}

TEST_CASE("cli: off-scheme input exits 3") {
  // generic symmetric 3x3: determinant nonzero
  auto gen = generic_matrix(F, Variant::symmetric(), 3);
  auto j = space_to_json(gen);
  std::string path = "/tmp/fanorank_generic3.json";
  {
    std::ofstream out(path);
    out << j.dump();
  }
  auto res = run_cli("tangent --file " + path + " -r 3");
  CHECK(res.exit_code == 3);
  CHECK(res.out.find("offending minor") != std::string::npos);
}

TEST_CASE("cli: verify and scan") {
  auto res = run_cli("verify jensen");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("[PASS] jensen") != std::string::npos);

  auto scan = run_cli("scan -v alt -n 4 -r 4 -k 0 -q 3");
  CHECK(scan.exit_code == 0);
  long lines = 0;
  for (char c : scan.out)
    if (c == '\n') ++lines;
  // 130 JSON lines plus the stderr summary line
  CHECK(scan.out.find("130 on the scheme") != std::string::npos);
  CHECK(lines == 131);
}

TEST_CASE("cli: config file sets defaults, flags override") {
  std::string path = "/tmp/fanorank_config.ini";
  {
    std::ofstream out(path);
    out << "seed=99\n";
  }
  auto res = run_cli("--config " + path +
                     " tangent --point random-general -n 5 -r 4 -s 0 -k 1");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("seed = 99") != std::string::npos);
  auto over = run_cli("--config " + path +
                      " --seed 7 tangent --point random-general -n 5 -r 4 -s 0 -k 1");
  CHECK(over.exit_code == 0);
  CHECK(over.out.find("seed = 7") != std::string::npos);
}
