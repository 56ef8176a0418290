#pragma once

// Finite-field brute force: canonical enumeration of subspaces of GF(q)^n,
// orthogonal-flag search for compression structure, exhaustive scans of
// small Fano schemes, and point classification.
//
// Negative flag-search results are evidence over GF(q) only; callers must
// never promote them to statements over the algebraic closure.

#include <functional>
#include <set>

#include "fano/spaces.hpp"

namespace fano {

// Number of d-dimensional subspaces of GF(q)^n.
inline Int gaussian_binomial(long n, long d, long q) {
  if (d < 0 || d > n) return 0;
  Int num = 1, den = 1, Q(q);
  for (long i = 0; i < d; ++i) {
    Int qn, qd;
    mpz_pow_ui(qn.get_mpz_t(), Q.get_mpz_t(), static_cast<unsigned long>(n - i));
    mpz_pow_ui(qd.get_mpz_t(), Q.get_mpz_t(), static_cast<unsigned long>(d - i));
    num *= qn - 1;
    den *= qd - 1;
  }
  return num / den;
}

// Visit the canonical reduced-row-echelon basis of every d-dimensional
// subspace of GF(q)^n exactly once.  Order: pivot column sets ascending
// lexicographically, then free entries as an odometer (last position
// fastest, values ascending).
template <class Fn>
void for_each_subspace(const GfField& field, long n, long d, Fn&& fn) {
  if (d < 0 || d > n) return;
  if (d == 0) {
    Mat<Gf> m = Mat<Gf>::Constant(0, n, field.zero());
    fn(static_cast<const Mat<Gf>&>(m));
    return;
  }
  std::vector<long> piv(d);
  std::iota(piv.begin(), piv.end(), 0);
  int q = field.order();
  while (true) {
    std::vector<bool> is_piv(n, false);
    for (long c : piv) is_piv[c] = true;
    std::vector<std::pair<long, long>> free_pos;
    for (long i = 0; i < d; ++i)
      for (long c = piv[i] + 1; c < n; ++c)
        if (!is_piv[c]) free_pos.emplace_back(i, c);
    std::vector<int> vals(free_pos.size(), 0);
    while (true) {
      Mat<Gf> m = Mat<Gf>::Constant(d, n, field.zero());
      for (long i = 0; i < d; ++i) m(i, piv[i]) = field.one();
      for (size_t t = 0; t < free_pos.size(); ++t)
        m(free_pos[t].first, free_pos[t].second) = field.from_rep(vals[t]);
      fn(static_cast<const Mat<Gf>&>(m));
      long t = static_cast<long>(vals.size()) - 1;
      while (t >= 0 && vals[t] == q - 1) vals[t--] = 0;
      if (t < 0) break;
      ++vals[t];
    }
    long i = d - 1;
    while (i >= 0 && piv[i] == n - d + i) --i;
    if (i < 0) break;
    ++piv[i];
    for (long j = i + 1; j < d; ++j) piv[j] = piv[j - 1] + 1;
  }
}

// Canonical RREF of a set of row vectors over GF(q).
inline Mat<Gf> rref_rows(const GfField& field, const Mat<Gf>& rows) {
  RowReducer<Gf> red(static_cast<int>(rows.cols()));
  for (long i = 0; i < rows.rows(); ++i) red.add_row(rows.row(i).transpose());
  Mat<Gf> out = Mat<Gf>::Constant(red.rank(), rows.cols(), field.zero());
  long i = 0;
  for (const auto& [col, row] : red.pivot_rows()) out.row(i++) = row.transpose();
  return out;
}

struct FlagSpec {
  long dim_u = 0, dim_w = 0;
  bool nested = false;
};

inline FlagSpec flag_spec_for(const Params& p, long s, bool nested) {
  return {s + 1 + p.n - p.r, p.n - s, nested};
}

// One orthogonal (pair of) subspace(s): U of dim_u rows, W of dim_w rows,
// both in canonical row-echelon form.
template <class K>
struct FqFlag {
  Mat<K> u, w;
};

// Exhaustive search for subspaces U, W over GF(q) with U orthogonal to W
// with respect to every matrix of the space (U inside W when nested).
// Feasibility caps: square spaces with n <= 5, q <= 9, odd characteristic
// for symmetric spaces.
inline std::vector<FqFlag<Gf>> find_flags(const GfField& field,
                                          const LinMatrixSpace<Gf>& space,
                                          const FlagSpec& spec) {
  if (space.rows != space.cols)
    throw std::invalid_argument("find_flags: square matrix spaces only");
  long n = space.cols;
  if (n > 5) throw std::invalid_argument("find_flags: exhaustive search capped at n <= 5");
  if (space.sym == Symmetry::symmetric && field.characteristic() == 2)
    throw std::invalid_argument("find_flags: symmetric spaces need odd characteristic");
  if (spec.dim_u < 0 || spec.dim_u > n || spec.dim_w < 0 || spec.dim_w > n ||
      (spec.nested && spec.dim_u > spec.dim_w))
    throw std::invalid_argument("find_flags: bad flag dimensions");

  auto slices = space.slices();
  auto orthogonal = [&](const Mat<Gf>& u, const Mat<Gf>& w) {
    for (const auto& m : slices) {
      Mat<Gf> prod = u * m * w.transpose();
      for (long i = 0; i < prod.rows(); ++i)
        for (long j = 0; j < prod.cols(); ++j)
          if (!prod(i, j).is_zero()) return false;
    }
    return true;
  };

  std::vector<FqFlag<Gf>> out;
  for_each_subspace(field, n, spec.dim_w, [&](const Mat<Gf>& w) {
    if (spec.nested) {
      for_each_subspace(field, spec.dim_w, spec.dim_u, [&](const Mat<Gf>& uc) {
        Mat<Gf> u = rref_rows(field, Mat<Gf>(uc * w));
        if (orthogonal(u, w)) out.push_back({u, w});
      });
    } else {
      for_each_subspace(field, n, spec.dim_u, [&](const Mat<Gf>& u) {
        if (orthogonal(u, w)) out.push_back({u, w});
      });
    }
  });
  return out;
}

inline std::vector<FqFlag<Gf>> find_flags(const GfField& field,
                                          const LinMatrixSpace<Gf>& space, const Params& p,
                                          long s, bool nested) {
  if (s < 0 || s > s_max(p)) throw std::domain_error("find_flags: s out of range");
  return find_flags(field, space, flag_spec_for(p, s, nested));
}

// True iff every r x r minor of the representing matrix is the zero
// polynomial; being symbolic, this is a statement over the algebraic
// closure, not just over the coefficient field.
template <class K>
bool verify_all_rank_lt(const LinMatrixSpace<K>& space, long r) {
  return all_minors_vanish(space, r);
}

// Walk all (k+1)-dimensional subspaces of the variant's matrix space over
// GF(q); on_point receives those lying on the Fano scheme.  Returns the
// number of subspaces scanned.  Caps: linear ambient dimension <= 7, q <= 3,
// and at most 200000 subspaces to visit.
template <class Fn>
long scan_fano_points(const GfField& field, const Params& p, Fn&& on_point) {
  p.validate();
  if (p.symmetric() && field.characteristic() == 2)
    throw std::invalid_argument("scan_fano_points: symmetric needs odd characteristic");
  if (field.order() > 3) throw std::invalid_argument("scan_fano_points: capped at q <= 3");
  Int ambient = p.ambient_dim() + 1;
  if (ambient > 7)
    throw std::invalid_argument("scan_fano_points: ambient dimension cap exceeded");
  long big_n = to_i64(ambient);
  if (gaussian_binomial(big_n, p.k + 1, field.order()) > 200000)
    throw std::invalid_argument("scan_fano_points: too many subspaces to enumerate");

  long m = p.rows(), n = p.n;
  Symmetry sym = p.variant.tag == VariantTag::symmetric    ? Symmetry::symmetric
                 : p.variant.tag == VariantTag::alternating ? Symmetry::alternating
                                                            : Symmetry::none;
  std::vector<std::pair<long, long>> pos;
  for (long i = 0; i < m; ++i)
    for (long j = 0; j < n; ++j) {
      if (sym == Symmetry::symmetric && j < i) continue;
      if (sym == Symmetry::alternating && j <= i) continue;
      pos.emplace_back(i, j);
    }

  long scanned = 0;
  int arity = static_cast<int>(p.k + 1);
  for_each_subspace(field, big_n, p.k + 1, [&](const Mat<Gf>& basis) {
    ++scanned;
    LinMatrixSpace<Gf> sp;
    sp.rows = m;
    sp.cols = n;
    sp.sym = sym;
    for (int t = 0; t < arity; ++t) sp.vars.push_back("z" + std::to_string(t));
    sp.entries = poly_mat<Gf>(m, n, arity);
    for (size_t c = 0; c < pos.size(); ++c) {
      auto [i, j] = pos[c];
      Poly<Gf> e(arity);
      for (int t = 0; t < arity; ++t) {
        Gf v = basis(t, c);
        if (!v.is_zero()) {
          Expo ex(arity, 0);
          ex[t] = 1;
          e.add_term(ex, v);
        }
      }
      sp.entries(i, j) = e;
      if (sym == Symmetry::symmetric && i != j) sp.entries(j, i) = e;
      if (sym == Symmetry::alternating) sp.entries(j, i) = -e;
    }
    if (verify_all_rank_lt(sp, p.r)) on_point(sp);
  });
  return scanned;
}

template <class FnUnused = void>
std::vector<LinMatrixSpace<Gf>> enumerate_fano_points(const GfField& field, const Params& p) {
  std::vector<LinMatrixSpace<Gf>> out;
  scan_fano_points(field, p, [&](const LinMatrixSpace<Gf>& sp) { out.push_back(sp); });
  return out;
}

// The set of s with a nested flag over GF(q).  Absence over GF(q) is
// evidence, not proof, of absence over the closure.
inline std::set<long> classify_point(const GfField& field, const LinMatrixSpace<Gf>& space,
                                     const Params& p) {
  std::set<long> out;
  for (long s = 0; s <= s_max(p); ++s)
    if (!find_flags(field, space, p, s, true).empty()) out.insert(s);
  return out;
}

}  // namespace fano
