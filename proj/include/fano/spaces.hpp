#pragma once

// Constructors for the explicit matrix spaces: generic matrices, standard
// compression patterns, the banded D_s block and its closed-form maximal
// minors, bordered determinant expansion, Kronecker-style pencils, middle
// compression points, and Borel-fixed staircase patterns.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fano/invariants.hpp"
#include "fano/linalg.hpp"

namespace fano {

enum class Symmetry { symmetric, alternating, none };

inline const char* symmetry_name(Symmetry s) {
  switch (s) {
    case Symmetry::symmetric: return "symmetric";
    case Symmetry::alternating: return "alternating";
    case Symmetry::none: return "none";
  }
  return "?";
}

// A matrix of linear forms in z_0..z_k representing a point of the
// Grassmannian of subspaces of the chosen matrix space.
template <class K>
struct LinMatrixSpace {
  long rows = 0, cols = 0;
  Symmetry sym = Symmetry::none;
  Mat<Poly<K>> entries;
  std::vector<std::string> vars;  // print names, one per variable

  int arity() const { return static_cast<int>(vars.size()); }

  // Positions carrying independent data under the symmetry flag.
  bool free_position(long i, long j) const {
    switch (sym) {
      case Symmetry::symmetric: return i <= j;
      case Symmetry::alternating: return i < j;
      case Symmetry::none: return true;
    }
    return false;
  }

  // Coefficient matrix of the free positions: one row per position, one
  // column per variable.
  Mat<K> coefficient_matrix() const {
    std::vector<std::pair<long, long>> pos;
    for (long i = 0; i < rows; ++i)
      for (long j = 0; j < cols; ++j)
        if (free_position(i, j)) pos.emplace_back(i, j);
    Mat<K> m(pos.size(), arity());
    for (size_t t = 0; t < pos.size(); ++t) {
      const Poly<K>& p = entries(pos[t].first, pos[t].second);
      for (int v = 0; v < arity(); ++v) {
        Expo e(arity(), 0);
        e[v] = 1;
        m(t, v) = p.coeff(e);
      }
    }
    return m;
  }

  // Dimension of the scalar span of the entries; equals k+1 when the space
  // represents a Grassmannian point.
  long span_dim() const { return rank_of(coefficient_matrix()); }

  // Per-variable scalar slices M^(t) with entries(i,j) = sum_t M^(t)(i,j) z_t.
  std::vector<Mat<K>> slices() const {
    std::vector<Mat<K>> out;
    for (int v = 0; v < arity(); ++v) {
      Expo e(arity(), 0);
      e[v] = 1;
      Mat<K> m(rows, cols);
      for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j) m(i, j) = entries(i, j).coeff(e);
      out.push_back(std::move(m));
    }
    return out;
  }

  // Enforces the symmetry flag and entries being homogeneous linear forms.
  void check() const {
    if (entries.rows() != rows || entries.cols() != cols)
      throw std::invalid_argument("fano: space shape mismatch");
    for (long i = 0; i < rows; ++i)
      for (long j = 0; j < cols; ++j) {
        const Poly<K>& p = entries(i, j);
        if (p.arity() != arity())
          throw std::invalid_argument("fano: space entry arity mismatch");
        for (const auto& [e, c] : p.terms())
          if (total_degree(e) != 1)
            throw std::invalid_argument("fano: space entries must be linear forms");
      }
    if (sym == Symmetry::symmetric) {
      if (rows != cols) throw std::invalid_argument("fano: symmetric space not square");
      for (long i = 0; i < rows; ++i)
        for (long j = i + 1; j < cols; ++j)
          if (entries(i, j) != entries(j, i))
            throw std::invalid_argument("fano: symmetry flag violated");
    } else if (sym == Symmetry::alternating) {
      if (rows != cols) throw std::invalid_argument("fano: alternating space not square");
      for (long i = 0; i < rows; ++i) {
        if (!entries(i, i).is_zero_poly())
          throw std::invalid_argument("fano: alternating space needs zero diagonal");
        for (long j = i + 1; j < cols; ++j)
          if (entries(i, j) != -entries(j, i))
            throw std::invalid_argument("fano: alternation flag violated");
      }
    }
  }
};

namespace detail_spaces {

inline std::string pos_name(long i, long j) {
  return "x" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

// 1-based zero-block predicate of the standard s-compression pattern.
inline bool compression_zero_cell(const Params& p, long s, long i1, long j1) {
  if (p.variant.tag == VariantTag::rectangular)
    return i1 >= s + 1 && j1 >= p.r - s;
  return (i1 >= p.r - s && j1 >= s + 1) || (i1 >= s + 1 && j1 >= p.r - s);
}

}  // namespace detail_spaces

// The generic symmetric / alternating / rectangular matrix: one fresh
// variable per free position.
template <class F>
LinMatrixSpace<typename F::Elem> generic_matrix(const F& field, const Variant& variant,
                                                long n) {
  using K = typename F::Elem;
  LinMatrixSpace<K> sp;
  long m = variant.tag == VariantTag::rectangular ? variant.m : n;
  sp.rows = m;
  sp.cols = n;
  std::vector<std::pair<long, long>> pos;
  switch (variant.tag) {
    case VariantTag::symmetric:
      sp.sym = Symmetry::symmetric;
      for (long i = 0; i < n; ++i)
        for (long j = i; j < n; ++j) pos.emplace_back(i, j);
      break;
    case VariantTag::alternating:
      sp.sym = Symmetry::alternating;
      for (long i = 0; i < n; ++i)
        for (long j = i + 1; j < n; ++j) pos.emplace_back(i, j);
      break;
    case VariantTag::rectangular:
      sp.sym = Symmetry::none;
      for (long i = 0; i < m; ++i)
        for (long j = 0; j < n; ++j) pos.emplace_back(i, j);
      break;
  }
  for (auto [i, j] : pos) sp.vars.push_back(detail_spaces::pos_name(i, j));
  int arity = static_cast<int>(pos.size());
  sp.entries = poly_mat<K>(m, n, arity);
  for (size_t t = 0; t < pos.size(); ++t) {
    auto [i, j] = pos[t];
    Poly<K> v = Poly<K>::variable(arity, static_cast<int>(t), field.one());
    sp.entries(i, j) = v;
    if (sp.sym == Symmetry::symmetric && i != j) sp.entries(j, i) = v;
    if (sp.sym == Symmetry::alternating) sp.entries(j, i) = -v;
  }
  return sp;
}

// Standard s-compression space: the generic matrix with the zero blocks of
// the standard pattern; variables are the generic names restricted to the
// star blocks.  span_dim equals kappa(s)+1.
template <class F>
LinMatrixSpace<typename F::Elem> standard_compression(const F& field, const Params& p,
                                                      long s) {
  using K = typename F::Elem;
  if (s < 0 || s > s_max(p))
    throw std::domain_error("standard_compression: s out of range");
  LinMatrixSpace<K> sp;
  long m = p.rows();
  sp.rows = m;
  sp.cols = p.n;
  sp.sym = p.variant.tag == VariantTag::symmetric    ? Symmetry::symmetric
           : p.variant.tag == VariantTag::alternating ? Symmetry::alternating
                                                      : Symmetry::none;
  std::vector<std::pair<long, long>> pos;
  for (long i = 0; i < m; ++i) {
    long j0 = sp.sym == Symmetry::symmetric ? i : sp.sym == Symmetry::alternating ? i + 1 : 0;
    for (long j = j0; j < p.n; ++j)
      if (!detail_spaces::compression_zero_cell(p, s, i + 1, j + 1))
        pos.emplace_back(i, j);
  }
  for (auto [i, j] : pos) sp.vars.push_back(detail_spaces::pos_name(i, j));
  int arity = static_cast<int>(pos.size());
  sp.entries = poly_mat<K>(m, p.n, arity);
  for (size_t t = 0; t < pos.size(); ++t) {
    auto [i, j] = pos[t];
    Poly<K> v = Poly<K>::variable(arity, static_cast<int>(t), field.one());
    sp.entries(i, j) = v;
    if (sp.sym == Symmetry::symmetric && i != j) sp.entries(j, i) = v;
    if (sp.sym == Symmetry::alternating) sp.entries(j, i) = -v;
  }
  return sp;
}

// The banded s x (s+1) block D_s(a,b,c): a on the diagonal, b and c on the
// two superdiagonals (c truncated when it falls outside).  s = 1 gives the
// degenerate single row (a b).
template <class K>
LinMatrixSpace<K> block_D(long s, const Poly<K>& a, const Poly<K>& b, const Poly<K>& c) {
  if (s < 1) throw std::domain_error("block_D: s >= 1 required");
  if (a.arity() != b.arity() || b.arity() != c.arity())
    throw std::invalid_argument("block_D: mixed arity");
  LinMatrixSpace<K> sp;
  sp.rows = s;
  sp.cols = s + 1;
  sp.sym = Symmetry::none;
  for (int v = 0; v < a.arity(); ++v) sp.vars.push_back("z" + std::to_string(v));
  sp.entries = poly_mat<K>(s, s + 1, a.arity());
  for (long i = 0; i < s; ++i) {
    sp.entries(i, i) = a;
    sp.entries(i, i + 1) = b;
    if (i + 2 <= s) sp.entries(i, i + 2) = c;
  }
  return sp;
}

// Closed form of the maximal minor of D_s(z0,z1,z2) after deleting column i
// (1-based):  sum_l (-1)^l C(s-i-l+1, l) z0^(i+l-1) z1^(s-i+1-2l) z2^l.
template <class F>
Poly<typename F::Elem> p_closed(const F& field, long s, long i) {
  using K = typename F::Elem;
  if (i < 1 || i > s + 1) throw std::domain_error("p_closed: need 1 <= i <= s+1");
  Poly<K> out(3);
  for (long l = 0; 2 * l <= s - i + 1; ++l) {
    Int c = binom(Int(s - i - l + 1), static_cast<unsigned long>(l));
    if (l % 2) c = -c;
    K coeff = field.of(c);
    if (is_zero(coeff)) continue;
    Expo e = {static_cast<uint8_t>(i + l - 1), static_cast<uint8_t>(s - i + 1 - 2 * l),
              static_cast<uint8_t>(l)};
    out.add_term(e, coeff);
  }
  return out;
}

namespace detail_spaces {

// Maximal minors p_i of an s x (s+1) block, i = 1..s+1 (delete column i).
template <class K>
std::vector<Poly<K>> maximal_minors(const Mat<Poly<K>>& d) {
  long s = d.rows();
  DetCache<K> cache(d);
  uint32_t rowmask = (uint32_t{1} << s) - 1;
  uint32_t full_cols = (uint32_t{1} << (s + 1)) - 1;
  std::vector<Poly<K>> out;
  for (long i = 0; i < s + 1; ++i)
    out.push_back(cache.minor_det(rowmask, full_cols & ~(uint32_t{1} << i)));
  return out;
}

// det [[0, D1],[D2^t, A]] = (-1)^s sum_{i,j} (-1)^(i+j) A_ij p_i(D2) p_j(D1)
// with 1-based i,j; every term of the determinant meets A exactly once, so
// the expansion is linear in A.  The coefficient of A_ij is the cofactor
// det [[0, D1 minus col j],[(D2 minus col i)^t, 0]], which carries the
// block-swap factor (-1)^(s*s).
template <class K>
Poly<K> bordered_det_via_minors(const Mat<Poly<K>>& a, const std::vector<Poly<K>>& p_left,
                                const std::vector<Poly<K>>& p_right) {
  long n1 = a.rows();
  long s = n1 - 1;
  Poly<K> out(p_left.empty() ? 0 : p_left[0].arity());
  for (long i = 0; i < n1; ++i)
    for (long j = 0; j < n1; ++j) {
      if (a(i, j).is_zero_poly()) continue;
      Poly<K> t = a(i, j) * p_left[i] * p_right[j];
      out = ((s + i + j) % 2 == 0) ? out + t : out - t;
    }
  return out;
}

}  // namespace detail_spaces

// Bordered expansion (-1)^s sum (-1)^(i+j) a_ij p_i p_j for the symmetric
// bordered matrix [[0,D],[D^t,A]], where p_i is the maximal minor of D with
// column i deleted; asserts agreement with the direct determinant.  For odd
// s this is -sum (-1)^(i+j) a_ij p_i p_j.
template <class K>
Poly<K> bordered_expand(const Mat<Poly<K>>& a, const LinMatrixSpace<K>& d) {
  long s = d.rows;
  if (d.cols != s + 1) throw std::invalid_argument("bordered_expand: D must be s x (s+1)");
  if (a.rows() != s + 1 || a.cols() != s + 1)
    throw std::invalid_argument("bordered_expand: A must be (s+1) x (s+1)");
  for (long i = 0; i < s + 1; ++i)
    for (long j = i + 1; j < s + 1; ++j)
      if (a(i, j) != a(j, i))
        throw std::invalid_argument("bordered_expand: A must be symmetric");
  auto p = detail_spaces::maximal_minors(d.entries);
  Poly<K> out = detail_spaces::bordered_det_via_minors(a, p, p);

  long n = 2 * s + 1;
  int arity = d.arity();
  Mat<Poly<K>> bordered = poly_mat<K>(n, n, arity);
  for (long i = 0; i < s; ++i)
    for (long j = 0; j < s + 1; ++j) {
      bordered(i, s + j) = d.entries(i, j);
      bordered(s + j, i) = d.entries(i, j);
    }
  for (long i = 0; i < s + 1; ++i)
    for (long j = 0; j < s + 1; ++j) bordered(s + i, s + j) = a(i, j);
  if (out != det_polymat(bordered))
    throw std::logic_error("bordered_expand: expansion disagrees with determinant");
  return out;
}

// The rank-(2s) pencil [[0,B],[B^t,0]] with B the s x (n'-s) bidiagonal
// z0/z1 band; a nested s-compression point that is one for no other t.
template <class F>
LinMatrixSpace<typename F::Elem> kronecker_pencil(const F& field, long s, long nprime) {
  using K = typename F::Elem;
  if (s < 1 || nprime < 2 * s + 1)
    throw std::domain_error("kronecker_pencil: need s >= 1 and n' >= 2s+1");
  LinMatrixSpace<K> sp;
  sp.rows = sp.cols = nprime;
  sp.sym = Symmetry::symmetric;
  sp.vars = {"z0", "z1"};
  sp.entries = poly_mat<K>(nprime, nprime, 2);
  Poly<K> z0 = Poly<K>::variable(2, 0, field.one());
  Poly<K> z1 = Poly<K>::variable(2, 1, field.one());
  for (long i = 0; i < s; ++i) {
    sp.entries(i, s + i) = z0;
    sp.entries(s + i, i) = z0;
    sp.entries(i, s + i + 1) = z1;
    sp.entries(s + i + 1, i) = z1;
  }
  return sp;
}

// The middle compression point Q = [[B,D],[D^t,0]] for n = 2s+1 = r; the
// span of the entries must have dimension exactly k+1.
template <class K>
LinMatrixSpace<K> middle_point(long n, long k, const LinMatrixSpace<K>& d,
                               const Mat<Poly<K>>& b) {
  long s = d.rows;
  if (n != 2 * s + 1 || d.cols != s + 1)
    throw std::invalid_argument("middle_point: need D of shape s x (s+1), n = 2s+1");
  if (b.rows() != s || b.cols() != s)
    throw std::invalid_argument("middle_point: B must be s x s");
  for (long i = 0; i < s; ++i)
    for (long j = 0; j < s; ++j)
      if (b(i, j) != b(j, i)) throw std::invalid_argument("middle_point: B must be symmetric");
  LinMatrixSpace<K> sp;
  sp.rows = sp.cols = n;
  sp.sym = Symmetry::symmetric;
  int arity = d.arity();
  for (int v = 0; v < arity; ++v)
    sp.vars.push_back(v < static_cast<int>(d.vars.size()) ? d.vars[v]
                                                          : "z" + std::to_string(v));
  sp.entries = poly_mat<K>(n, n, arity);
  for (long i = 0; i < s; ++i)
    for (long j = 0; j < s; ++j) sp.entries(i, j) = b(i, j);
  for (long i = 0; i < s; ++i)
    for (long j = 0; j < s + 1; ++j) {
      sp.entries(i, s + j) = d.entries(i, j);
      sp.entries(s + j, i) = d.entries(i, j);
    }
  sp.check();
  if (sp.span_dim() != k + 1)
    throw std::invalid_argument("middle_point: span_dim != k+1");
  return sp;
}

// Borel-fixed recognition: free positions are pairwise-distinct single
// variables and the zero set is down-right closed (diagonal exempt for
// alternating matrices).
template <class K>
bool is_borel_pattern(const LinMatrixSpace<K>& sp) {
  std::set<int> seen;
  for (long i = 0; i < sp.rows; ++i)
    for (long j = 0; j < sp.cols; ++j) {
      if (!sp.free_position(i, j)) continue;
      const Poly<K>& p = sp.entries(i, j);
      if (p.is_zero_poly()) continue;
      if (p.n_terms() != 1 || p.degree() != 1) return false;
      const Expo& e = p.terms().begin()->first;
      int var = -1;
      for (int v = 0; v < sp.arity(); ++v)
        if (e[v]) var = v;
      if (!seen.insert(var).second) return false;
    }
  for (long i = 0; i < sp.rows; ++i)
    for (long j = 0; j < sp.cols; ++j) {
      if (sp.sym == Symmetry::alternating && i == j) continue;
      if (!sp.entries(i, j).is_zero_poly()) continue;
      for (long i2 = i; i2 < sp.rows; ++i2)
        for (long j2 = j; j2 < sp.cols; ++j2)
          if (!sp.entries(i2, j2).is_zero_poly()) return false;
    }
  return true;
}

// Up-left-closed support stored as weakly decreasing row lengths.
struct StaircasePattern {
  std::vector<long> row_lengths;

  long cells() const {
    long t = 0;
    for (long l : row_lengths) t += l;
    return t;
  }
  // Cells on or above the diagonal (independent entries, symmetric case).
  long upper_cells() const {
    long t = 0;
    for (size_t i = 0; i < row_lengths.size(); ++i)
      t += std::max<long>(row_lengths[i] - static_cast<long>(i), 0);
    return t;
  }
  // Cells strictly above the diagonal (independent entries, alternating).
  long strictly_upper_cells() const {
    long t = 0;
    for (size_t i = 0; i < row_lengths.size(); ++i)
      t += std::max<long>(row_lengths[i] - static_cast<long>(i) - 1, 0);
    return t;
  }
  bool contains(long i, long j) const {  // 0-based
    return i < static_cast<long>(row_lengths.size()) && j < row_lengths[i];
  }
  std::vector<long> conjugate() const {
    std::vector<long> out;
    if (row_lengths.empty()) return out;
    for (long j = 0; j < row_lengths[0]; ++j) {
      long c = 0;
      while (c < static_cast<long>(row_lengths.size()) && row_lengths[c] > j) ++c;
      out.push_back(c);
    }
    return out;
  }
  bool self_conjugate() const { return conjugate() == row_lengths; }

  friend bool operator==(const StaircasePattern& a, const StaircasePattern& b) {
    return a.row_lengths == b.row_lengths;
  }
  friend bool operator<(const StaircasePattern& a, const StaircasePattern& b) {
    return a.row_lengths < b.row_lengths;
  }
};

struct BorelPattern {
  StaircasePattern shape;
  std::vector<long> fits_s;  // ascending
};

// Materialize a staircase pattern as a Borel-fixed matrix space.
template <class F>
LinMatrixSpace<typename F::Elem> pattern_space(const F& field, const Params& p,
                                               const StaircasePattern& pat) {
  using K = typename F::Elem;
  LinMatrixSpace<K> sp;
  sp.rows = p.rows();
  sp.cols = p.n;
  sp.sym = p.variant.tag == VariantTag::symmetric    ? Symmetry::symmetric
           : p.variant.tag == VariantTag::alternating ? Symmetry::alternating
                                                      : Symmetry::none;
  std::vector<std::pair<long, long>> pos;
  for (long i = 0; i < sp.rows; ++i)
    for (long j = 0; j < sp.cols; ++j) {
      if (!pat.contains(i, j) || !sp.free_position(i, j)) continue;
      if (sp.sym == Symmetry::alternating && i == j) continue;
      pos.emplace_back(i, j);
    }
  int arity = static_cast<int>(pos.size());
  for (int t = 0; t < arity; ++t) sp.vars.push_back("z" + std::to_string(t));
  sp.entries = poly_mat<K>(sp.rows, sp.cols, arity);
  for (int t = 0; t < arity; ++t) {
    auto [i, j] = pos[t];
    Poly<K> v = Poly<K>::variable(arity, t, field.one());
    sp.entries(i, j) = v;
    if (sp.sym == Symmetry::symmetric && i != j) sp.entries(j, i) = v;
    if (sp.sym == Symmetry::alternating) sp.entries(j, i) = -v;
  }
  return sp;
}

// All Borel-fixed staircase patterns with k+1 free cells fitting inside the
// standard s-compression pattern for at least one s; each annotated with the
// full set of fitting s values.
std::vector<BorelPattern> enumerate_borel_fixed(const Params& p);

// True iff every r x r minor of the representing matrix is the zero
// polynomial.  When a nonzero minor exists its (row set, column set) pair is
// reported through `offending` (1-based indices).
template <class K>
bool all_minors_vanish(const LinMatrixSpace<K>& sp, long r,
                       std::vector<std::pair<std::vector<long>, std::vector<long>>>*
                           offending = nullptr) {
  if (r < 1 || r > sp.rows || r > sp.cols) {
    if (r > sp.rows || r > sp.cols) return true;  // no r x r minors at all
    throw std::domain_error("all_minors_vanish: bad r");
  }
  DetCache<K> cache(sp.entries);
  bool symmetric_matrix = sp.sym != Symmetry::none && sp.rows == sp.cols;
  std::vector<uint32_t> row_masks, col_masks;
  auto collect = [r](long size, std::vector<uint32_t>& out) {
    std::vector<long> idx(r);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      uint32_t m = 0;
      for (long v : idx) m |= uint32_t{1} << v;
      out.push_back(m);
      long i = r - 1;
      while (i >= 0 && idx[i] == size - r + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (long j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
  };
  collect(sp.rows, row_masks);
  collect(sp.cols, col_masks);
  bool ok = true;
  for (uint32_t rm : row_masks)
    for (uint32_t cm : col_masks) {
      if (symmetric_matrix && cm < rm) continue;  // det M_{R,C} = det M_{C,R}
      if (cache.minor_det(rm, cm).is_zero_poly()) continue;
      ok = false;
      if (!offending) return false;
      std::vector<long> rv, cv;
      for (long i = 0; i < sp.rows; ++i)
        if (rm & (uint32_t{1} << i)) rv.push_back(i + 1);
      for (long j = 0; j < sp.cols; ++j)
        if (cm & (uint32_t{1} << j)) cv.push_back(j + 1);
      offending->emplace_back(std::move(rv), std::move(cv));
    }
  return ok;
}

}  // namespace fano
