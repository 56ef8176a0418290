#pragma once

// Verification suites: each one re-derives a structural claim from scratch
// (closed forms against graph combinatorics, solver against formulas,
// symbolic identities against brute force) and reports pass/fail with a
// machine-readable summary.  The acceptance gate and the `verify` CLI
// subcommand both run these.

#include <chrono>
#include <json.hpp>

#include "fano/binomials.hpp"
#include "fano/oracle.hpp"
#include "fano/tangent.hpp"

namespace fano {

struct VerifyResult {
  std::string name;
  bool pass = true;
  nlohmann::ordered_json details;
  double seconds = 0.0;
};

struct VerifyOptions {
  long max_n = 12;     // graph-equivalence sweep bound
  uint64_t seed = 12345;
  int64_t prime = 32003;
};

namespace detail_verify {

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

inline void expect(VerifyResult& res, bool ok, const std::string& what) {
  if (!ok) {
    res.pass = false;
    res.details["failures"].push_back(what);
  }
}

}  // namespace detail_verify

// Criterion 1: the n = r = 6 figure: vertex labels 14/11/11, edge labels
// 10/9/9, component counts 1 / 2 / 1 for k = 9, 10, 12.
inline VerifyResult verify_figure_regression(const VerifyOptions& = {}) {
  using detail_verify::expect;
  detail_verify::Timer t;
  VerifyResult res{"figure-n6", true, {}, 0};
  Params p{Variant::symmetric(), 6, 6, 9};
  auto g = build_graph(p);
  expect(res, g.vertices.size() == 3, "k=9: expected 3 vertices");
  const Int want_v[3] = {14, 11, 11};
  for (size_t i = 0; i < g.vertices.size(); ++i)
    expect(res, g.vertices[i].second == want_v[i], "vertex label mismatch");
  expect(res, g.edges.size() == 3, "k=9: expected 3 edges");
  const Int want_e[3] = {10, 9, 9};
  for (size_t i = 0; i < g.edges.size(); ++i)
    expect(res, std::get<2>(g.edges[i]) == want_e[i], "edge label mismatch");
  long comps9 = static_cast<long>(connected_components(g).size());
  p.k = 10;
  long comps10 = static_cast<long>(connected_components(build_graph(p)).size());
  p.k = 12;
  long comps12 = static_cast<long>(connected_components(build_graph(p)).size());
  expect(res, comps9 == 1 && comps10 == 2 && comps12 == 1, "component counts");
  res.details["components"] = {comps9, comps10, comps12};
  res.seconds = t.seconds();
  return res;
}

// Criterion 2: cycle criterion == graph components, all variants, n <= max_n.
inline VerifyResult verify_graph_equivalence(const VerifyOptions& opt = {}) {
  detail_verify::Timer t;
  VerifyResult res{"graph-equivalence", true, {}, 0};
  long cases = 0, mismatches = 0;
  auto sweep = [&](const Params& base) {
    Int top = std::max(kappa(base, 0), kappa(base, s_max(base)));
    for (long k = 0; k <= to_i64(top); ++k) {
      Params p = base;
      p.k = k;
      auto comps = connected_components(build_graph(p));
      if (comps.empty()) continue;
      ++cases;
      if (cycle_disconnected(p) != (comps.size() >= 2)) ++mismatches;
    }
  };
  for (long n = 3; n <= opt.max_n; ++n)
    for (long r = 3; r <= n; ++r) {
      sweep({Variant::symmetric(), n, r, 0});
      if (r % 2 == 0) sweep({Variant::alternating(), n, r, 0});
    }
  for (long n = 2; n <= opt.max_n; ++n)
    for (long m = 2; m <= n; ++m)
      for (long r = 2; r <= m; ++r) sweep({Variant::rectangular(m), n, r, 0});
  detail_verify::expect(res, mismatches == 0, "cycle criterion disagrees with components");
  res.details["cases"] = cases;
  res.details["mismatches"] = mismatches;
  res.seconds = t.seconds();
  return res;
}

// Criterion 3: dim of every line component is nr+(s-1)(n-r)-5; for r = n it
// equals the expected dimension of the Fano scheme of a hypersurface.
inline VerifyResult verify_line_dims(const VerifyOptions& = {}) {
  detail_verify::Timer t;
  VerifyResult res{"line-dims", true, {}, 0};
  long cases = 0;
  for (long n = 3; n <= 12; ++n)
    for (long r = 3; r <= n; ++r) {
      Params p{Variant::symmetric(), n, r, 1};
      for (long s = 0; s <= s_max(p); ++s) {
        ++cases;
        Int want = Int(n) * r + Int(s - 1) * (n - r) - 5;
        detail_verify::expect(res, dim_component(p, s) == want, "closed form mismatch");
        if (r == n)
          detail_verify::expect(res, dim_component(p, s) == expected_dim_hypersurface(p),
                                "expected-dimension mismatch");
      }
    }
  res.details["cases"] = cases;
  res.seconds = t.seconds();
  return res;
}

// Criterion 4: the deformation solver reproduces the closed forms: the
// middle point of SD(3,3) (tangent 4 = middle formula = component dim) and a
// random general point of C_0^1 on SD(4,5) (tangent 20, non-reduced gap 6).
inline VerifyResult verify_tangent_formula_values(const VerifyOptions& opt = {}) {
  using detail_verify::expect;
  detail_verify::Timer t;
  VerifyResult res{"tangent-formulas", true, {}, 0};
  FqField F(opt.prime);

  Params p33{Variant::symmetric(), 3, 3, 1};
  auto qm = middle_point_space(F, 3, 1);
  auto rm = tangent_dim_chart(F, qm, p33);
  expect(res, rm.tangent_dim == tangent_formula_middle(p33), "middle: solver != formula");
  expect(res, rm.tangent_dim == dim_component(p33, 1), "middle: not a smooth point");
  expect(res, rm.tangent_dim == 4, "middle: expected tangent 4");
  res.details["middle_tangent"] = to_i64(rm.tangent_dim);

  Params p54{Variant::symmetric(), 5, 4, 1};
  auto pt = random_general_point(F, p54, 0, opt.seed);
  auto rg = tangent_dim_chart(F, pt.space, p54);
  expect(res, rg.tangent_dim == 20, "general: expected tangent 20");
  expect(res, rg.tangent_dim == tangent_formula_general(p54, 0), "general: solver != formula");
  Int gap = rg.tangent_dim - dim_component(p54, 0);
  expect(res, gap == nonreduced_gap(p54, 0) && gap == 6, "general: gap != 6");
  res.details["general_tangent"] = to_i64(rg.tangent_dim);
  res.details["gap"] = to_i64(gap);
  res.details["seed"] = pt.seed;
  res.details["attempts"] = pt.attempts;
  res.seconds = t.seconds();
  return res;
}

// Criterion 5: chart and block methods agree on a grid of points, both with
// general blocks and with degenerate E blocks.
inline VerifyResult verify_tangent_cross(const VerifyOptions& opt = {}) {
  using detail_verify::expect;
  detail_verify::Timer t;
  VerifyResult res{"tangent-cross", true, {}, 0};
  FqField F(opt.prime);
  long cases = 0, mismatches = 0;
  for (long n = 3; n <= 6; ++n)
    for (long r = 3; r <= n; ++r) {
      Params p0{Variant::symmetric(), n, r, 0};
      for (long s = 0; s <= s_max(p0); ++s) {
        long kmax = std::min<long>(to_i64(kappa(p0, s)), 3);
        for (long k = 1; k <= kmax; ++k) {
          Params p{Variant::symmetric(), n, r, k};
          auto pt = random_general_point(F, p, s, opt.seed + 7919 * cases);
          auto ch = tangent_dim_chart(F, pt.space, p);
          auto bl = tangent_dim_blocks(F, pt.space, p, s);
          ++cases;
          if (ch.tangent_dim != bl.tangent_dim) ++mismatches;

          // degenerate E: zero out the middle block when it exists
          if (r - 2 * s - 1 > 0) {
            LinMatrixSpace<Fq> q = pt.space;
            for (long i = 0; i < r - 2 * s - 1; ++i)
              for (long j = 0; j < r - 2 * s - 1; ++j)
                q.entries(s + i, s + j) = Poly<Fq>(static_cast<int>(k + 1));
            if (q.span_dim() == k + 1) {
              auto ch2 = tangent_dim_chart(F, q, p);
              auto bl2 = tangent_dim_blocks(F, q, p, s);
              ++cases;
              if (ch2.tangent_dim != bl2.tangent_dim) ++mismatches;
            }
          }
        }
      }
    }
  expect(res, mismatches == 0, "method disagreement");
  expect(res, cases >= 40, "grid produced fewer than 40 cases");
  res.details["cases"] = cases;
  res.details["mismatches"] = mismatches;
  res.details["seed"] = opt.seed;
  res.seconds = t.seconds();
  return res;
}

// Criterion 6: closed-form p_i against symbolic determinants for s <= 6 and
// full rank of the C(s+2,2) products for s <= 5.
inline VerifyResult verify_p_minors(const VerifyOptions& = {}) {
  using detail_verify::expect;
  detail_verify::Timer t;
  VerifyResult res{"p-minors", true, {}, 0};
  RatField Q;
  auto z0 = Poly<Rat>::variable(3, 0, Q.one());
  auto z1 = Poly<Rat>::variable(3, 1, Q.one());
  auto z2 = Poly<Rat>::variable(3, 2, Q.one());
  for (long s = 1; s <= 6; ++s) {
    auto d = block_D(s, z0, z1, z2);
    DetCache<Rat> cache(d.entries);
    uint32_t rows = (uint32_t{1} << s) - 1;
    uint32_t cols = (uint32_t{1} << (s + 1)) - 1;
    for (long i = 1; i <= s + 1; ++i) {
      const auto& det = cache.minor_det(rows, cols & ~(uint32_t{1} << (i - 1)));
      expect(res, p_closed(Q, s, i) == det, "p_i != symbolic determinant");
    }
  }
  for (long s = 2; s <= 5; ++s) {
    std::vector<Poly<Rat>> prods;
    for (long i = 1; i <= s + 1; ++i)
      for (long j = i; j <= s + 1; ++j)
        prods.push_back(p_closed(Q, s, i) * p_closed(Q, s, j));
    std::map<Expo, int, MonoGrlexGreater> cols;
    for (const auto& pr : prods)
      for (const auto& [e, c] : pr.terms()) cols.emplace(e, 0);
    int nc = 0;
    for (auto& [e, idx] : cols) idx = nc++;
    Mat<Rat> m = Mat<Rat>::Constant(prods.size(), nc, Q.zero());
    for (size_t rI = 0; rI < prods.size(); ++rI)
      for (const auto& [e, c] : prods[rI].terms()) m(rI, cols.at(e)) = c;
    expect(res, rank_of(m) == static_cast<int>(prods.size()),
           "products p_i p_j are dependent at s = " + std::to_string(s));
  }
  res.seconds = t.seconds();
  return res;
}

// Criterion 7: the Jensen identity on the exhaustive grid plus random
// rational triples.
inline VerifyResult verify_jensen(const VerifyOptions& opt = {}) {
  detail_verify::Timer t;
  VerifyResult res{"jensen", true, {}, 0};
  RatField Q;
  long cases = 0, failures = 0;
  for (long a = -5; a <= 5; ++a)
    for (long b = -5; b <= 5; ++b)
      for (long g = -5; g <= 5; ++g)
        for (long L = 0; L <= 8; ++L) {
          ++cases;
          if (!jensen_check(Q.of(a), Q.of(b), Q.of(g), L)) ++failures;
        }
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<long> num(-100, 100), den(1, 10), Ld(0, 12);
  for (int i = 0; i < 200; ++i) {
    auto rnd = [&] {
      Rat v(mpz_class(num(rng)), mpz_class(den(rng)));
      // clamp into [-10, 10]
      if (v.value() > 10 || v.value() < -10) v = Rat(mpq_class(v.value() / 10));
      return v;
    };
    ++cases;
    if (!jensen_check(rnd(), rnd(), rnd(), Ld(rng))) ++failures;
  }
  detail_verify::expect(res, failures == 0, "identity failed");
  res.details["cases"] = cases;
  res.seconds = t.seconds();
  return res;
}

// Criterion 8: GF(3) scan of all 11,011 pencils in S_3; every line on the
// scheme is a nested 0- or 1-compression space; the diagonal example
// classifies as exactly {0}; the Kronecker pencil as exactly {1} with a
// unique flag.
inline VerifyResult verify_lines_gf3(const VerifyOptions& = {}) {
  using detail_verify::expect;
  detail_verify::Timer t;
  VerifyResult res{"lines-gf3", true, {}, 0};
  GfField G3(3);
  Params p{Variant::symmetric(), 3, 3, 1};
  long on_scheme = 0, classified = 0;
  long scanned = scan_fano_points(G3, p, [&](const LinMatrixSpace<Gf>& sp) {
    ++on_scheme;
    if (!classify_point(G3, sp, p).empty()) ++classified;
  });
  expect(res, scanned == 11011, "expected 11,011 pencils");
  expect(res, on_scheme > 0 && classified == on_scheme,
         "a line on the scheme admits no nested flag");

  LinMatrixSpace<Gf> diag;
  diag.rows = diag.cols = 3;
  diag.sym = Symmetry::symmetric;
  diag.vars = {"z0", "z1"};
  diag.entries = poly_mat<Gf>(3, 3, 2);
  diag.entries(0, 0) = Poly<Gf>::variable(2, 0, G3.one());
  diag.entries(1, 1) = Poly<Gf>::variable(2, 1, G3.one());
  expect(res, classify_point(G3, diag, p) == std::set<long>{0},
         "diag(z0,z1,0) must classify as exactly {0}");

  auto pencil = kronecker_pencil(G3, 1, 3);
  expect(res, classify_point(G3, pencil, p) == std::set<long>{1},
         "Kronecker pencil must classify as exactly {1}");
  expect(res, find_flags(G3, pencil, p, 1, true).size() == 1,
         "Kronecker pencil must have a unique flag");

  res.details["scanned"] = scanned;
  res.details["on_scheme"] = on_scheme;
  res.seconds = t.seconds();
  return res;
}

// Criterion 9: Borel pattern recognition on the worked example, and
// emptiness of the Borel enumeration exactly above max{kappa(0),
// kappa(s_max)}, for all variants with n <= 8.
inline VerifyResult verify_borel(const VerifyOptions& = {}) {
  using detail_verify::expect;
  detail_verify::Timer t;
  VerifyResult res{"borel", true, {}, 0};
  FqField F(32003);

  auto make = [&](std::vector<std::vector<int>> rows) {
    LinMatrixSpace<Fq> sp;
    sp.rows = sp.cols = 4;
    sp.sym = Symmetry::symmetric;
    for (int v = 0; v < 5; ++v) sp.vars.push_back("z" + std::to_string(v));
    sp.entries = poly_mat<Fq>(4, 4, 5);
    for (long i = 0; i < 4; ++i)
      for (long j = 0; j < 4; ++j)
        if (rows[i][j] >= 0) sp.entries(i, j) = Poly<Fq>::variable(5, rows[i][j], F.one());
    return sp;
  };
  auto right = make({{0, 1, 2, 3}, {1, 4, -1, -1}, {2, -1, -1, -1}, {3, -1, -1, -1}});
  auto left = make({{0, 1, 2, 3}, {1, 4, 3, -1}, {2, 3, -1, -1}, {3, -1, -1, -1}});
  expect(res, is_borel_pattern(right), "right example matrix must be accepted");
  expect(res, !is_borel_pattern(left), "left example matrix must be rejected");

  long cases = 0;
  auto sweep = [&](const Params& base) {
    Int top = std::max(kappa(base, 0), kappa(base, s_max(base)));
    Int ambient = base.ambient_dim();
    for (long k = 0; k <= std::min(to_i64(top) + 2, to_i64(ambient)); ++k) {
      Params p = base;
      p.k = k;
      ++cases;
      bool empty = enumerate_borel_fixed(p).empty();
      expect(res, empty == (Int(k) > top),
             "Borel enumeration emptiness mismatch at n=" + std::to_string(p.n) +
                 " r=" + std::to_string(p.r) + " k=" + std::to_string(k));
    }
  };
  for (long n = 3; n <= 8; ++n)
    for (long r = 3; r <= n; ++r) {
      sweep({Variant::symmetric(), n, r, 0});
      if (r % 2 == 0) sweep({Variant::alternating(), n, r, 0});
      for (long m = r; m <= n; ++m) sweep({Variant::rectangular(m), n, r, 0});
    }
  res.details["cases"] = cases;
  res.seconds = t.seconds();
  return res;
}

inline std::vector<std::string> verify_suite_names() {
  return {"graph-equivalence", "jensen", "p-minors", "borel", "lines-gf3", "tangent-cross"};
}

inline VerifyResult run_verify_suite(const std::string& name, const VerifyOptions& opt) {
  if (name == "graph-equivalence") return verify_graph_equivalence(opt);
  if (name == "jensen") return verify_jensen(opt);
  if (name == "p-minors") return verify_p_minors(opt);
  if (name == "borel") return verify_borel(opt);
  if (name == "lines-gf3") return verify_lines_gf3(opt);
  if (name == "tangent-cross") return verify_tangent_cross(opt);
  throw std::invalid_argument("unknown verify suite: " + name);
}

}  // namespace fano
