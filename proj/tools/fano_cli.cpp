// Command-line front door: parameter reports, graph export, tangent-space
// computations, verification suites, and finite-field point scans.
//
// Exit codes: 0 ok, 1 verification/computation failure, 2 usage error,
// 3 supplied matrix not on the Fano scheme.

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>

#include "fano/oracle.hpp"
#include "fano/report.hpp"
#include "fano/verify.hpp"

using namespace fano;

namespace {

struct ParamArgs {
  std::string variant = "sym";
  long m = 0;
  long n = 0;
  long r = 0;
  long k = 0;

  Params to_params() const {
    Variant v;
    if (variant == "sym" || variant == "symmetric") {
      v = Variant::symmetric();
    } else if (variant == "alt" || variant == "alternating") {
      v = Variant::alternating();
    } else if (variant == "rect" || variant == "rectangular") {
      if (m <= 0) throw std::invalid_argument("rectangular variant needs -m");
      v = Variant::rectangular(m);
    } else {
      throw std::invalid_argument("unknown variant '" + variant + "'");
    }
    Params p{v, n, r, k};
    p.validate();
    return p;
  }
};

void add_param_options(CLI::App* cmd, ParamArgs& args, bool need_k = true) {
  cmd->add_option("--variant,-v", args.variant, "sym | alt | rect")
      ->capture_default_str();
  cmd->add_option("-m", args.m, "rows (rectangular variant)");
  cmd->add_option("-n", args.n, "matrix size / columns")->required();
  cmd->add_option("-r", args.r, "rank bound")->required();
  auto* k = cmd->add_option("-k", args.k, "projective dimension of the linear space");
  if (need_k) k->required();
}

struct TangentArgs {
  std::string point;  // middle | standard | random-general
  std::string file;
  std::string method = "chart";
  std::string field = "gf";
  long n = 0, r = 0, k = -1, s = -1;
};

template <class F>
int run_tangent(const F& field, const TangentArgs& args, uint64_t seed, bool json_out) {
  using K = typename F::Elem;
  LinMatrixSpace<K> q;
  Params p{Variant::symmetric(), 0, 0, 0};
  long s = args.s;
  std::optional<uint64_t> used_seed;
  std::vector<std::string> notes;

  if (!args.file.empty()) {
    if (args.r <= 0) throw std::invalid_argument("tangent --file needs -r");
    std::ifstream in(args.file);
    if (!in) throw std::invalid_argument("cannot open " + args.file);
    ordered_json j = ordered_json::parse(in);
    q = space_from_json(field, j);
    long k = args.k >= 0 ? args.k : q.span_dim() - 1;
    p = Params{Variant::symmetric(), q.rows, args.r, k};
  } else if (args.point == "middle") {
    if (args.n <= 0 || args.k < 0)
      throw std::invalid_argument("tangent --point middle needs -n and -k");
    q = middle_point_space(field, args.n, args.k);
    p = Params{Variant::symmetric(), args.n, args.n, args.k};
    s = (args.n - 1) / 2;
    if (s == 1) notes.push_back("degenerate single-row D block (s=1)");
  } else if (args.point == "standard") {
    if (args.n <= 0 || args.r <= 0 || args.s < 0)
      throw std::invalid_argument("tangent --point standard needs -n, -r, -s");
    Params p0{Variant::symmetric(), args.n, args.r, 0};
    long kk = to_i64(kappa(p0, args.s));
    if (args.k >= 0 && args.k != kk)
      throw std::invalid_argument("standard compression space has k = kappa(s) = " +
                                  std::to_string(kk));
    p = Params{Variant::symmetric(), args.n, args.r, kk};
    q = standard_compression(field, p, args.s);
    s = args.s;
  } else if (args.point == "random-general") {
    if (args.n <= 0 || args.r <= 0 || args.k < 0 || args.s < 0)
      throw std::invalid_argument("tangent --point random-general needs -n, -r, -k, -s");
    p = Params{Variant::symmetric(), args.n, args.r, args.k};
    auto pt = random_general_point(field, p, args.s, seed);
    q = std::move(pt.space);
    used_seed = pt.seed;
    s = args.s;
  } else {
    throw std::invalid_argument(
        "tangent needs --point middle|standard|random-general or --file");
  }

  std::vector<TangentReport> reports;
  if (args.method == "chart" || args.method == "both") {
    auto rep = tangent_dim_chart(field, q, p);
    rep.s = s;
    rep.seed = used_seed;
    rep.notes.insert(rep.notes.end(), notes.begin(), notes.end());
    reports.push_back(std::move(rep));
  }
  if (args.method == "blocks" || args.method == "both") {
    if (s < 0) throw std::invalid_argument("blocks method needs -s");
    auto rep = tangent_dim_blocks(field, q, p, s);
    rep.seed = used_seed;
    reports.push_back(std::move(rep));
  }
  if (reports.empty()) throw std::invalid_argument("unknown --method " + args.method);

  if (json_out) {
    ordered_json out = ordered_json::array();
    for (const auto& r : reports) out.push_back(tangent_report_to_json(r));
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "point:\n" << space_to_json(q).dump(2) << "\n";
    for (const auto& r : reports) {
      std::cout << r.method << ": tangent_dim = " << r.tangent_dim.get_str()
                << "  (lift unknowns " << r.lift_unknowns << ", rows " << r.constraint_rows
                << ", rank " << r.rank << ")";
      if (r.seed) std::cout << "  seed = " << *r.seed;
      std::cout << "\n";
      for (const auto& note : r.notes) std::cout << "  note: " << note << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants, tangent spaces and finite-field checks for Fano "
               "schemes of bounded-rank matrix loci"};
  app.set_version_flag("--version", std::string(kToolName) + " " + kVersion);
  app.set_config("--config", "", "key=value configuration file (flags override)");
  app.require_subcommand(1);
  app.fallthrough();  // global --seed/--prime/--json may follow the subcommand

  int64_t prime = 32003;
  uint64_t seed = 12345;
  bool json_out = false;
  app.add_option("--prime", prime, "odd prime modulus for GF(p) computations")
      ->capture_default_str();
  app.add_option("--seed", seed, "seed for randomized constructions")->capture_default_str();
  app.add_flag("--json", json_out, "machine-readable JSON output");

  std::function<int()> action;

  // ---- report ----
  auto* creport = app.add_subcommand("report", "closed-form invariants for one instance");
  auto rargs = std::make_shared<ParamArgs>();
  add_param_options(creport, *rargs);
  creport->callback([&action, rargs, &json_out] {
    action = [rargs, &json_out] {
      auto rep = build_report(rargs->to_params());
      if (json_out)
        std::cout << rep.dump(2) << "\n";
      else
        std::cout << render_report_text(rep);
      return 0;
    };
  });

  // ---- graph ----
  auto* cgraph = app.add_subcommand("graph", "component graph as Graphviz DOT");
  auto gargs = std::make_shared<ParamArgs>();
  auto gout = std::make_shared<std::string>();
  add_param_options(cgraph, *gargs);
  cgraph->add_option("-o,--output", *gout, "write DOT to a file instead of stdout");
  cgraph->callback([&action, gargs, gout, &json_out] {
    action = [gargs, gout, &json_out] {
      Params p = gargs->to_params();
      auto g = build_graph(p);
      std::string text = json_out ? graph_to_json(p, g).dump(2) + "\n" : graph_to_dot(p, g);
      if (gout->empty()) {
        std::cout << text;
      } else {
        std::ofstream out(*gout);
        if (!out) throw std::runtime_error("cannot write " + *gout);
        out << text;
      }
      return 0;
    };
  });

  // ---- tangent ----
  auto* ctangent = app.add_subcommand("tangent", "Zariski tangent dimension at a point");
  auto targs = std::make_shared<TangentArgs>();
  ctangent->add_option("--point", targs->point, "middle | standard | random-general");
  ctangent->add_option("--file", targs->file, "JSON matrix-space file");
  ctangent->add_option("-n", targs->n, "matrix size");
  ctangent->add_option("-r", targs->r, "rank bound");
  ctangent->add_option("-k", targs->k, "projective dimension of the linear space");
  ctangent->add_option("-s", targs->s, "compression index");
  ctangent->add_option("--method", targs->method, "chart | blocks | both")
      ->capture_default_str();
  ctangent->add_option("--field", targs->field, "gf | rational")->capture_default_str();
  ctangent->callback([&action, targs, &prime, &seed, &json_out] {
    action = [targs, &prime, &seed, &json_out] {
      if (targs->field == "rational") return run_tangent(RatField{}, *targs, seed, json_out);
      if (targs->field == "gf") return run_tangent(FqField(prime), *targs, seed, json_out);
      throw std::invalid_argument("unknown --field " + targs->field);
    };
  });

  // ---- verify ----
  auto* cverify = app.add_subcommand("verify", "run a verification suite");
  auto suite = std::make_shared<std::string>();
  auto max_n = std::make_shared<long>(12);
  cverify->add_option("suite", *suite,
                      "graph-equivalence | jensen | p-minors | borel | lines-gf3 | "
                      "tangent-cross")
      ->required();
  cverify->add_option("--max-n", *max_n, "size bound for the graph-equivalence sweep")
      ->capture_default_str();
  cverify->callback([&action, suite, max_n, &prime, &seed, &json_out] {
    action = [suite, max_n, &prime, &seed, &json_out] {
      VerifyOptions opt;
      opt.max_n = *max_n;
      opt.seed = seed;
      opt.prime = prime;
      VerifyResult res = run_verify_suite(*suite, opt);
      // timing goes to stderr so stdout stays byte-identical across runs
      if (json_out) {
        ordered_json j;
        j["suite"] = res.name;
        j["pass"] = res.pass;
        j["details"] = res.details;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << (res.pass ? "[PASS] " : "[FAIL] ") << res.name << "  "
                  << res.details.dump() << "\n";
      }
      std::cerr << res.name << ": " << res.seconds << "s\n";
      return res.pass ? 0 : 1;
    };
  });

  // ---- scan ----
  auto* cscan = app.add_subcommand("scan", "stream GF(q) Fano points as JSON lines");
  auto sargs = std::make_shared<ParamArgs>();
  auto qorder = std::make_shared<int>(3);
  add_param_options(cscan, *sargs);
  cscan->add_option("-q", *qorder, "field order")->capture_default_str();
  cscan->callback([&action, sargs, qorder] {
    action = [sargs, qorder] {
      Params p = sargs->to_params();
      GfField field(*qorder);
      long on_scheme = 0;
      long scanned = scan_fano_points(field, p, [&](const LinMatrixSpace<Gf>& sp) {
        ++on_scheme;
        std::cout << space_to_json(sp).dump() << "\n";
      });
      std::cerr << "scanned " << scanned << " subspaces over GF(" << *qorder << "), "
                << on_scheme << " on the scheme\n";
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return action ? action() : 2;
  } catch (const NotOnSchemeError& e) {
    std::cerr << "error: " << e.what() << "\n  offending minor: rows {";
    for (size_t i = 0; i < e.minor_rows.size(); ++i)
      std::cerr << (i ? "," : "") << e.minor_rows[i];
    std::cerr << "} cols {";
    for (size_t i = 0; i < e.minor_cols.size(); ++i)
      std::cerr << (i ? "," : "") << e.minor_cols[i];
    std::cerr << "}\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
