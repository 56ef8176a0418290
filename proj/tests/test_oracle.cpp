#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "fano/oracle.hpp"

using namespace fano;

namespace {

Params sym(long n, long r, long k) { return {Variant::symmetric(), n, r, k}; }
Params alt(long n, long r, long k) { return {Variant::alternating(), n, r, k}; }
const GfField G3(3);
const GfField G5(5);
const FqField F(32003);

// diag(z0, z1, 0) inside S_3: a 0- and 1-compression space but only a
// nested 0-compression space.
LinMatrixSpace<Gf> diag_example(const GfField& g) {
  LinMatrixSpace<Gf> sp;
  sp.rows = sp.cols = 3;
  sp.sym = Symmetry::symmetric;
  sp.vars = {"z0", "z1"};
  sp.entries = poly_mat<Gf>(3, 3, 2);
  sp.entries(0, 0) = Poly<Gf>::variable(2, 0, g.one());
  sp.entries(1, 1) = Poly<Gf>::variable(2, 1, g.one());
  return sp;
}

// [[z0, z1, 0],[z1, 0, 0],[0, 0, 0]]: lies on every C_s^1.
LinMatrixSpace<Gf> corner_example(const GfField& g) {
  LinMatrixSpace<Gf> sp;
  sp.rows = sp.cols = 3;
  sp.sym = Symmetry::symmetric;
  sp.vars = {"z0", "z1"};
  sp.entries = poly_mat<Gf>(3, 3, 2);
  auto z0 = Poly<Gf>::variable(2, 0, g.one());
  auto z1 = Poly<Gf>::variable(2, 1, g.one());
  sp.entries(0, 0) = z0;
  sp.entries(0, 1) = z1;
  sp.entries(1, 0) = z1;
  return sp;
}

}  // namespace

TEST_CASE("gaussian binomials and subspace enumeration counts") {
  CHECK(gaussian_binomial(6, 2, 3) == 11011);
  CHECK(gaussian_binomial(3, 1, 3) == 13);
  CHECK(gaussian_binomial(4, 2, 3) == 130);
  for (auto [n, d, q] : std::vector<std::tuple<long, long, int>>{
           {3, 1, 3}, {3, 2, 3}, {4, 2, 3}, {4, 2, 5}, {5, 2, 3}, {4, 3, 9}}) {
    GfField g(q);
    std::set<std::string> seen;
    long count = 0;
    for_each_subspace(g, n, d, [&](const Mat<Gf>& m) {
      ++count;
      std::ostringstream os;
      for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.cols(); ++j) os << m(i, j).rep() << ",";
      seen.insert(os.str());
    });
    CHECK(count == gaussian_binomial(n, d, q));
    CHECK(static_cast<long>(seen.size()) == count);  // each subspace exactly once
  }
}

TEST_CASE("verify_all_rank_lt") {
  CHECK(verify_all_rank_lt(standard_compression(F, sym(5, 4, 0), 1), 4));
  CHECK_FALSE(verify_all_rank_lt(generic_matrix(F, Variant::symmetric(), 3), 3));
  CHECK(verify_all_rank_lt(kronecker_pencil(F, 1, 3), 3));
}

TEST_CASE("flag search on the diagonal example") {
  auto sp = diag_example(G3);
  Params p = sym(3, 3, 1);
  auto f0 = find_flags(G3, sp, p, 0, true);
  REQUIRE(f0.size() == 1);
  // the common kernel is spanned by e3
  CHECK(f0[0].u.rows() == 1);
  CHECK(f0[0].u(0, 2) == G3.one());
  CHECK(f0[0].u(0, 0).is_zero());
  CHECK(f0[0].w.rows() == 3);
  CHECK(find_flags(G3, sp, p, 1, true).empty());
  CHECK(classify_point(G3, sp, p) == std::set<long>{0});

  LinMatrixSpace<Gf> sp5 = diag_example(G5);
  CHECK(classify_point(G5, sp5, p) == std::set<long>{0});
}

TEST_CASE("flag search soundness is symbolic") {
  auto sp = diag_example(G3);
  Params p = sym(3, 3, 1);
  for (const auto& flag : find_flags(G3, sp, p, 0, true)) {
    // u M(z) w^t must vanish as a polynomial for all basis rows
    for (long a = 0; a < flag.u.rows(); ++a)
      for (long b = 0; b < flag.w.rows(); ++b) {
        Poly<Gf> acc(2);
        for (long i = 0; i < 3; ++i)
          for (long j = 0; j < 3; ++j)
            acc += sp.entries(i, j).scaled(flag.u(a, i) * flag.w(b, j));
        CHECK(acc.is_zero_poly());
      }
  }
}

TEST_CASE("kronecker pencils have a unique nested flag") {
  for (auto [s, nprime] : std::vector<std::pair<long, long>>{{1, 3}, {1, 4}, {2, 5}}) {
    long rprime = 2 * s + 1;
    auto pencil = kronecker_pencil(G3, s, nprime);
    Params p = sym(nprime, rprime, 1);
    auto flags = find_flags(G3, pencil, p, s, true);
    CHECK(flags.size() == 1);
    // and it is a nested t-compression space for no other t
    std::set<long> expect{s};
    CHECK(classify_point(G3, pencil, p) == expect);
  }
}

TEST_CASE("the corner pencil lies on every C_s^1") {
  auto sp = corner_example(G3);
  Params p = sym(3, 3, 1);
  CHECK(verify_all_rank_lt(sp, 3));
  CHECK(classify_point(G3, sp, p) == std::set<long>{0, 1});
}

TEST_CASE("swapping U and W realizes s -> r-s-1") {
  auto sp = diag_example(G3);
  Params p = sym(3, 3, 1);
  auto slices = sp.slices();
  for (const auto& flag : find_flags(G3, sp, p, 0, true)) {
    FlagSpec swapped = flag_spec_for(p, p.r - 0 - 1, false);
    CHECK(flag.w.rows() == swapped.dim_u);
    CHECK(flag.u.rows() == swapped.dim_w);
    for (const auto& m : slices) {
      Mat<Gf> prod = flag.w * m * flag.u.transpose();
      for (long i = 0; i < prod.rows(); ++i)
        for (long j = 0; j < prod.cols(); ++j) CHECK(prod(i, j).is_zero());
    }
  }
}

TEST_CASE("a random pencil in S_4 over GF(5) admits no nested 1-flag") {
  // seeds fixed for determinism; a hit would be re-seeded and reported, but
  // these seeds are verified clean
  std::mt19937_64 rng(20240807);
  std::uniform_int_distribution<int> cd(0, 4);
  for (int trial = 0; trial < 5; ++trial) {
    LinMatrixSpace<Gf> sp;
    sp.rows = sp.cols = 4;
    sp.sym = Symmetry::symmetric;
    sp.vars = {"z0", "z1"};
    sp.entries = poly_mat<Gf>(4, 4, 2);
    for (long i = 0; i < 4; ++i)
      for (long j = i; j < 4; ++j) {
        Poly<Gf> e(2);
        for (int t = 0; t < 2; ++t) {
          Gf c = G5.from_rep(cd(rng));
          if (!c.is_zero()) {
            Expo ex(2, 0);
            ex[t] = 1;
            e.add_term(ex, c);
          }
        }
        sp.entries(i, j) = e;
        sp.entries(j, i) = e;
      }
    if (sp.span_dim() != 2) continue;
    Params p = sym(4, 4, 1);
    CHECK(find_flags(G5, sp, p, 1, true).empty());
  }
}

TEST_CASE("alternating 4x4, k=0: points are the rank-2 matrices up to scalar") {
  Params p = alt(4, 4, 0);
  auto pts = enumerate_fano_points(G3, p);
  // symbolic route: the determinant vanishes identically
  CHECK(pts.size() == 130);  // #Gr(2,4)(F_3): decomposable bivectors
  // independent route: count rank <= 2 alternating matrices by elimination
  long rank2 = 0, scanned = 0;
  for_each_subspace(G3, 6, 1, [&](const Mat<Gf>& basis) {
    ++scanned;
    Mat<Gf> m = Mat<Gf>::Constant(4, 4, G3.zero());
    long c = 0;
    for (long i = 0; i < 4; ++i)
      for (long j = i + 1; j < 4; ++j) {
        m(i, j) = basis(0, c);
        m(j, i) = -basis(0, c);
        ++c;
      }
    if (rank_of(m) <= 2) ++rank2;
  });
  CHECK(scanned == to_i64(gaussian_binomial(6, 1, 3)));
  CHECK(rank2 == 130);
}

TEST_CASE("scan agrees with the emptiness predicate") {
  Params p = alt(4, 4, 1);
  CHECK(kappa(p, 0) == 2);
  CHECK(is_nonempty(p) == !enumerate_fano_points(G3, p).empty());
  // k = 3 > kappa(0) = 2 at n = r = 3: the scan is exhaustive and empty
  Params p33{Variant::symmetric(), 3, 3, 3};
  CHECK_FALSE(is_nonempty(p33));
  CHECK(enumerate_fano_points(G3, p33).empty());
}

TEST_CASE("GF(3) line scan of the 3x3 symmetric determinant") {
  Params p = sym(3, 3, 1);
  std::vector<LinMatrixSpace<Gf>> pts;
  long scanned =
      scan_fano_points(G3, p, [&](const LinMatrixSpace<Gf>& sp) { pts.push_back(sp); });
  CHECK(scanned == 11011);
  CHECK(!pts.empty());
  // every line on the scheme is a (nested) compression space
  for (const auto& sp : pts) {
    auto cls = classify_point(G3, sp, p);
    CHECK(!cls.empty());
  }
}

TEST_CASE("scan caps are enforced") {
  CHECK_THROWS_AS(scan_fano_points(GfField(5), sym(3, 3, 1), [](const auto&) {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(scan_fano_points(G3, sym(4, 3, 1), [](const auto&) {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(find_flags(GfField(2), diag_example(GfField(2)), sym(3, 3, 1), 0, true),
                  std::invalid_argument);
}
