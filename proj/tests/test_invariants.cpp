#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fano/invariants.hpp"

using namespace fano;

namespace {

Params sym(long n, long r, long k) { return {Variant::symmetric(), n, r, k}; }
Params alt(long n, long r, long k) { return {Variant::alternating(), n, r, k}; }
Params rect(long m, long n, long r, long k) { return {Variant::rectangular(m), n, r, k}; }

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_NOTHROW(sym(6, 6, 10).validate());
  CHECK_THROWS_AS(sym(3, 2, 0).validate(), std::invalid_argument);
  CHECK_THROWS_AS(sym(3, 4, 0).validate(), std::invalid_argument);
  CHECK_THROWS_AS(alt(5, 3, 0).validate(), std::invalid_argument);   // r odd
  CHECK_THROWS_AS(alt(5, 2, 0).validate(), std::invalid_argument);   // r <= 2
  CHECK_NOTHROW(alt(5, 4, 0).validate());
  CHECK_THROWS_AS(rect(4, 3, 3, 0).validate(), std::invalid_argument);  // m > n
  CHECK_NOTHROW(rect(3, 4, 3, 0).validate());
  CHECK_THROWS_AS(sym(3, 3, 6).validate(), std::invalid_argument);  // k > ambient = 5
  CHECK_NOTHROW(sym(3, 3, 5).validate());
  CHECK_THROWS_AS(sym(3, 3, -1).validate(), std::invalid_argument);
}

TEST_CASE("s_max") {
  CHECK(s_max(sym(6, 6, 0)) == 2);
  CHECK(s_max(rect(3, 4, 3, 0)) == 2);
  CHECK(s_max(alt(6, 4, 0)) == 1);
}

TEST_CASE("kappa: figure and closed-form values") {
  // n = r = 6 figure vertex labels
  CHECK(kappa(sym(6, 6, 0), 0) == 14);
  CHECK(kappa(sym(6, 6, 0), 1) == 11);
  CHECK(kappa(sym(6, 6, 0), 2) == 11);
  // square rectangular: kappa(0) = n(n-1) - 1
  for (long n = 2; n <= 9; ++n)
    CHECK(kappa(rect(n, n, n, 0), 0) == n * (n - 1) - 1);
  // direct substitution: s(s+1+n-r) + C(r-s,2) - 1 at n = r = 3, s = 1
  CHECK(kappa(sym(3, 3, 0), 1) == 2);
  CHECK(kappa(sym(3, 3, 0), 0) == 2);
  CHECK_THROWS_AS(kappa(sym(6, 6, 0), 3), std::domain_error);
  CHECK_THROWS_AS(kappa(sym(6, 6, 0), -1), std::domain_error);
}

TEST_CASE("variety_dim") {
  CHECK(variety_dim(sym(3, 3, 0)) == 4);
  CHECK(variety_dim(sym(6, 6, 0)) == 19);
  CHECK(variety_dim(sym(4, 3, 0)) == 6);
  CHECK_THROWS_AS(variety_dim(rect(3, 3, 3, 0)), std::domain_error);
}

TEST_CASE("is_nonempty") {
  CHECK(is_nonempty(sym(6, 6, 14)));
  CHECK_FALSE(is_nonempty(sym(6, 6, 15)));
  CHECK(is_nonempty(sym(3, 3, 2)));
  CHECK_FALSE(is_nonempty(sym(3, 3, 3)));
  CHECK(is_nonempty(rect(3, 3, 3, 5)));
}

TEST_CASE("edge labels") {
  CHECK(edge_label(sym(6, 6, 0), 0, 1) == 10);
  CHECK(edge_label(sym(6, 6, 0), 0, 2) == 9);
  CHECK(edge_label(sym(6, 6, 0), 1, 2) == 9);
  CHECK(edge_label(sym(7, 6, 0), 0, 2) == 9);
  // n = r, consecutive: g({s,s+1}) = kappa(s+1) - (s+1)
  for (long s = 0; s < 2; ++s)
    CHECK(edge_label(sym(6, 6, 0), s, s + 1) == kappa(sym(6, 6, 0), s + 1) - (s + 1));
  CHECK_THROWS_AS(edge_label(sym(6, 6, 0), 1, 1), std::domain_error);
  CHECK_THROWS_AS(edge_label(sym(6, 6, 0), 2, 1), std::domain_error);
}

TEST_CASE("build_graph reproduces the n=6 figure") {
  auto g9 = build_graph(sym(6, 6, 9));
  CHECK(g9.vertices.size() == 3);
  CHECK(g9.edges.size() == 3);
  CHECK(connected_components(g9).size() == 1);

  auto g10 = build_graph(sym(6, 6, 10));
  CHECK(g10.vertices.size() == 3);
  REQUIRE(g10.edges.size() == 1);
  CHECK(std::get<0>(g10.edges[0]) == 0);
  CHECK(std::get<1>(g10.edges[0]) == 1);
  auto comps10 = connected_components(g10);
  REQUIRE(comps10.size() == 2);
  CHECK(comps10[0] == std::vector<long>{0, 1});
  CHECK(comps10[1] == std::vector<long>{2});

  auto g12 = build_graph(sym(6, 6, 12));
  CHECK(g12.vertices.size() == 1);
  CHECK(g12.vertices[0].first == 0);
  CHECK(g12.edges.empty());
  CHECK(connected_components(g12).size() == 1);

  auto gempty = build_graph(sym(6, 6, 15));
  CHECK(gempty.empty());
  CHECK(connected_components(gempty).empty());
}

TEST_CASE("cycle criterion on the figure cases") {
  CHECK(cycle_disconnected(sym(6, 6, 10)));
  CHECK_FALSE(cycle_disconnected(sym(6, 6, 9)));
  CHECK_FALSE(cycle_disconnected(sym(6, 6, 12)));  // single vertex
  CHECK_FALSE(cycle_disconnected(sym(6, 6, 15)));  // empty
}

TEST_CASE("irreducibility") {
  for (long k : {12, 13, 14}) CHECK(is_irreducible(sym(6, 6, k)));
  CHECK_FALSE(is_irreducible(sym(6, 6, 9)));
  // kappa(0) = kappa(1) = 2 at n = r = 3, so k = 2 leaves two components
  CHECK_FALSE(is_irreducible(sym(3, 3, 2)));
  CHECK_THROWS_AS(is_irreducible(sym(6, 6, 15)), std::domain_error);
  CHECK_THROWS_AS(is_irreducible(rect(3, 3, 3, 1)), std::domain_error);
}

TEST_CASE("dim_component") {
  for (long s : {0, 1, 2}) CHECK(dim_component(sym(6, 6, 1), s) == 31);
  CHECK(dim_component(sym(6, 4, 1), 1) == 19);
  CHECK(dim_component(sym(3, 3, 1), 1) == 4);  // = nr + (s-1)(n-r) - 5
  CHECK_THROWS_AS(dim_component(sym(6, 6, 12), 1), std::domain_error);  // k > kappa(1)
}

TEST_CASE("expected dimension in the hypersurface case") {
  CHECK(expected_dim_hypersurface(sym(6, 6, 1)) == 31);
  CHECK(expected_dim_hypersurface(sym(3, 3, 1)) == 4);
  CHECK(expected_dim_hypersurface(sym(4, 4, 1)) == 11);
  CHECK(dim_component(sym(4, 4, 1), 0) == 11);
  CHECK_THROWS_AS(expected_dim_hypersurface(sym(6, 4, 1)), std::domain_error);
}

TEST_CASE("nonreduced gap") {
  CHECK(nonreduced_gap(sym(5, 4, 1), 0) == 6);
  CHECK(nonreduced_gap(sym(6, 6, 1), 0) == 5);
  CHECK(nonreduced_gap(sym(6, 6, 1), 1) == 3);
  CHECK(nonreduced_gap(sym(6, 6, 1), 2) == 1);
  // r = 2s+1 is exactly the generically reduced case
  for (long n = 3; n <= 9; n += 2)
    CHECK(nonreduced_gap(sym(n, n, 1), (n - 1) / 2) == 0);
  CHECK(nonreduced_gap(sym(7, 5, 2), 2) == 0);
}

TEST_CASE("tangent formulas") {
  CHECK(tangent_formula_general(sym(5, 4, 1), 0) == 20);
  CHECK(tangent_formula_general(sym(5, 5, 2), 2) == 24);
  // r = n = 2s+1 collapses the middle term
  CHECK(tangent_formula_general(sym(5, 5, 1), 2) == tangent_formula_middle(sym(5, 5, 1)));
  CHECK(tangent_formula_middle(sym(3, 3, 1)) == 4);
  CHECK(tangent_formula_middle(sym(5, 5, 1)) == 20);
  // k = kappa(s): the flag-variety dimension s(s+1)
  Params p55(sym(5, 5, 8));
  CHECK(kappa(p55, 2) == 8);
  CHECK(tangent_formula_middle(p55) == 6);
  CHECK_THROWS_AS(tangent_formula_middle(sym(6, 6, 1)), std::domain_error);
  CHECK_THROWS_AS(tangent_formula_middle(sym(5, 3, 1)), std::domain_error);
}

TEST_CASE("smoothness conjecture predicate (conjecture, not theorem)") {
  CHECK_FALSE(smoothness_conjecture(sym(3, 3, 2)));
  for (long k = 0; k <= 10; ++k) CHECK_FALSE(smoothness_conjecture(sym(6, 6, k)));
  // n=7, r=3: kappa(0)=2, kappa(1)=6, so 2 < k <= 6 qualifies
  CHECK(smoothness_conjecture(sym(7, 3, 4)));
  CHECK(smoothness_conjecture(sym(7, 3, 6)));
  CHECK_FALSE(smoothness_conjecture(sym(7, 3, 2)));
  CHECK_FALSE(smoothness_conjecture(sym(7, 3, 7)));
}

// --- properties ------------------------------------------------------------

TEST_CASE("kappa is convex in s, all variants up to n = 14") {
  auto convex = [](const Params& p) {
    for (long s = 1; s + 1 <= s_max(p); ++s)
      CHECK(kappa(p, s - 1) + kappa(p, s + 1) >= 2 * kappa(p, s));
  };
  for (long n = 3; n <= 14; ++n)
    for (long r = 3; r <= n; ++r) {
      convex(sym(n, r, 0));
      if (r % 2 == 0) convex(alt(n, r, 0));
      for (long m = r; m <= n; ++m) convex(rect(m, n, r, 0));
    }
}

TEST_CASE("cycle criterion is equivalent to graph components (spot grid)") {
  auto check_equiv = [](const Params& base) {
    Int top = std::max(kappa(base, 0), kappa(base, s_max(base)));
    for (long k = 0; k <= to_i64(top); ++k) {
      Params p = base;
      p.k = k;
      auto comps = connected_components(build_graph(p));
      if (comps.empty()) continue;
      CHECK(cycle_disconnected(p) == (comps.size() >= 2));
    }
  };
  for (long n = 3; n <= 8; ++n)
    for (long r = 3; r <= n; ++r) {
      check_equiv(sym(n, r, 0));
      if (r % 2 == 0) check_equiv(alt(n, r, 0));
      check_equiv(rect(r, n, r, 0));
    }
}

TEST_CASE("component dimension identities") {
  for (long n = 3; n <= 10; ++n)
    for (long r = 3; r <= n; ++r) {
      Params p1 = sym(n, r, 1);
      for (long s = 0; s <= s_max(p1); ++s) {
        CHECK(dim_component(p1, s) == Int(n) * r + Int(s - 1) * (n - r) - 5);
        if (r == n) CHECK(dim_component(p1, s) == expected_dim_hypersurface(p1));
      }
      // dim_component + nonreduced_gap = tangent_formula_general
      for (long s = 0; s <= s_max(p1); ++s) {
        Int ks = kappa(p1, s);
        for (long k = 0; k <= to_i64(ks) && k <= 5; ++k) {
          Params p = sym(n, r, k);
          CHECK(dim_component(p, s) + nonreduced_gap(p, s) == tangent_formula_general(p, s));
        }
      }
    }
}

TEST_CASE("irreducible implies a unique surviving s") {
  for (long n = 3; n <= 9; ++n)
    for (long r = 3; r <= n; ++r) {
      Params base = sym(n, r, 0);
      Int top = std::max(kappa(base, 0), kappa(base, s_max(base)));
      for (long k = 0; k <= to_i64(top); ++k) {
        Params p = sym(n, r, k);
        if (!is_nonempty(p)) continue;
        long survivors = 0;
        for (long s = 0; s <= s_max(p); ++s)
          if (kappa(p, s) >= k) ++survivors;
        if (is_irreducible(p)) CHECK(survivors == 1);
        CHECK(is_nonempty(p) == !build_graph(p).empty());
      }
    }
}
