#pragma once

// Zariski tangent-space dimensions at points of the symmetric Fano schemes,
// by two independent methods: the general first-order deformation chart
// solver (tangent_dim_chart) and the block-structured formula with its
// anchored-minor subsystem (tangent_dim_blocks / a_det).

#include <optional>
#include <random>
#include <sstream>

#include "fano/linpoly.hpp"
#include "fano/spaces.hpp"

namespace fano {

class NotOnSchemeError : public std::runtime_error {
 public:
  NotOnSchemeError(std::string msg, std::vector<long> rows, std::vector<long> cols)
      : std::runtime_error(std::move(msg)),
        minor_rows(std::move(rows)),
        minor_cols(std::move(cols)) {}
  std::vector<long> minor_rows, minor_cols;  // 1-based offending minor
};

struct TangentReport {
  std::string method;  // "chart" or "blocks"
  long n = 0, r = 0, k = 0;
  long s = -1;  // compression index when known
  Int ambient_grassmannian_dim = 0;
  long lift_unknowns = 0;
  long constraint_rows = 0;
  long rank = 0;
  Int tangent_dim = 0;
  std::optional<uint64_t> seed;
  std::vector<std::string> notes;
};

namespace detail_tangent {

inline std::vector<uint32_t> subset_masks(long size, long take) {
  std::vector<uint32_t> out;
  if (take < 0 || take > size) return out;
  std::vector<long> idx(take);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    uint32_t m = 0;
    for (long v : idx) m |= uint32_t{1} << v;
    out.push_back(m);
    long i = take - 1;
    while (i >= 0 && idx[i] == size - take + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (long j = i + 1; j < take; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

template <class K>
long fold_rows(const LinUnknownPoly<K>& constraint, RowReducer<K>& red) {
  long n = 0;
  for (const auto& row : constraint.rows()) {
    if (!is_zero(row.constant))
      throw std::logic_error("fano: inhomogeneous deformation constraint");
    red.add_row_sparse(row.coeffs);
    ++n;
  }
  return n;
}

template <class F>
typename F::Elem random_scalar(const F& field, std::mt19937_64& rng);

inline Fq random_scalar(const FqField& field, std::mt19937_64& rng) {
  std::uniform_int_distribution<int64_t> d(0, field.modulus() - 1);
  return field.of(d(rng));
}
inline Gf random_scalar(const GfField& field, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(0, field.order() - 1);
  return field.from_rep(d(rng));
}
inline Rat random_scalar(const RatField& field, std::mt19937_64& rng) {
  std::uniform_int_distribution<int64_t> d(-99, 99);
  return field.of(d(rng));
}

}  // namespace detail_tangent

// Dimension of the space of first-order deformations at [Q], computed from
// the full chart system: an unknown symmetric matrix N of linear forms must
// satisfy sum_{i<=j} (df/dx_ij)(Q) N_ij == 0 in K[z] for every r x r minor f
// of the generic symmetric matrix; the derivative of a minor with respect to
// a symmetric variable sums both cofactor positions when i != j.  The
// (k+1)^2 reparametrizations of Q are solutions by construction and are
// quotiented out of the nullity.
template <class F>
TangentReport tangent_dim_chart(const F& field, const LinMatrixSpace<typename F::Elem>& q,
                                const Params& p) {
  using K = typename F::Elem;
  p.validate();
  if (!p.symmetric())
    throw std::domain_error("tangent_dim_chart: symmetric variant only");
  if (field.characteristic() == 2)
    throw std::domain_error("tangent_dim_chart: characteristic 2 excluded");
  q.check();
  if (q.sym != Symmetry::symmetric || q.rows != p.n || q.cols != p.n)
    throw std::invalid_argument("tangent_dim_chart: expected a symmetric n x n space");
  long n = p.n, r = p.r, k = p.k;
  if (q.arity() != k + 1 || q.span_dim() != k + 1)
    throw std::invalid_argument("tangent_dim_chart: span_dim of Q must be k+1");
  std::vector<std::pair<std::vector<long>, std::vector<long>>> offending;
  if (!all_minors_vanish(q, r, &offending))
    throw NotOnSchemeError("tangent_dim_chart: Q is not on the Fano scheme",
                           offending.front().first, offending.front().second);

  // column layout: position (i<=j) index * (k+1) + z-variable
  std::vector<std::vector<int>> pos(n, std::vector<int>(n, -1));
  int npos = 0;
  for (long i = 0; i < n; ++i)
    for (long j = i; j < n; ++j) {
      pos[i][j] = npos;
      pos[j][i] = npos;
      ++npos;
    }
  long nunk = static_cast<long>(k + 1) * npos;

  DetCache<K> cache(q.entries);
  RowReducer<K> red(static_cast<int>(nunk));
  long nrows = 0;
  auto masks = detail_tangent::subset_masks(n, r);
  std::vector<long> rset, cset;
  for (uint32_t rm : masks)
    for (uint32_t cm : masks) {
      rset.clear();
      cset.clear();
      for (long i = 0; i < n; ++i) {
        if (rm & (uint32_t{1} << i)) rset.push_back(i);
        if (cm & (uint32_t{1} << i)) cset.push_back(i);
      }
      // derivative of det X_{R,C} at Q with respect to each matrix position
      std::map<int, Poly<K>> deriv;
      for (long a = 0; a < r; ++a)
        for (long b = 0; b < r; ++b) {
          long i = rset[a], j = cset[b];
          const Poly<K>& cof =
              cache.minor_det(rm & ~(uint32_t{1} << i), cm & ~(uint32_t{1} << j));
          if (cof.is_zero_poly()) continue;
          auto [it, fresh] = deriv.emplace(pos[i][j], Poly<K>(k + 1));
          it->second = ((a + b) % 2 == 0) ? it->second + cof : it->second - cof;
        }
      LinUnknownPoly<K> constraint(static_cast<int>(k + 1), static_cast<int>(nunk));
      for (const auto& [pidx, dpoly] : deriv) {
        if (dpoly.is_zero_poly()) continue;
        LinUnknownPoly<K> nij(static_cast<int>(k + 1), static_cast<int>(nunk));
        for (long t = 0; t <= k; ++t)
          nij += LinUnknownPoly<K>::unknown_times_z(
              static_cast<int>(k + 1), static_cast<int>(nunk),
              pidx * static_cast<int>(k + 1) + static_cast<int>(t),
              static_cast<int>(t), K(1));
        constraint += dpoly * nij;
      }
      nrows += detail_tangent::fold_rows(constraint, red);
    }

  // trivial deformations N = (coefficient slice of Q) * z_t' must all solve
  // the system and span exactly (k+1)^2 dimensions
  auto slices = q.slices();
  RowReducer<K> triv(static_cast<int>(nunk));
  for (long t = 0; t <= k; ++t)
    for (long t2 = 0; t2 <= k; ++t2) {
      Vec<K> v = Vec<K>::Constant(nunk, K(0));
      for (long i = 0; i < n; ++i)
        for (long j = i; j < n; ++j)
          v[pos[i][j] * (k + 1) + t2] = slices[t](i, j);
      for (const auto& [col, row] : red.pivot_rows()) {
        K dot(0);
        for (long c = col; c < nunk; ++c) dot += row[c] * v[c];
        if (!is_zero(dot))
          throw std::logic_error("tangent_dim_chart: trivial deformation violates constraints");
      }
      triv.add_row(std::move(v));
    }
  if (triv.rank() != (k + 1) * (k + 1))
    throw std::logic_error("tangent_dim_chart: trivial deformations are dependent");

  TangentReport rep;
  rep.method = "chart";
  rep.n = n;
  rep.r = r;
  rep.k = k;
  rep.ambient_grassmannian_dim = Int(k + 1) * (binom2(Int(n) + 1) - (k + 1));
  rep.lift_unknowns = nunk;
  rep.constraint_rows = nrows;
  rep.rank = red.rank();
  rep.tangent_dim = Int(nunk) - red.rank() - Int(k + 1) * (k + 1);
  return rep;
}

struct ADetSystem {
  long dim = 0;        // nullity: the a_det value
  long unknowns = 0;   // (k+1) * C(s+2+n-r, 2)
  long rows = 0;
  long rank = 0;
};

// Dimension of the space of symmetric matrices A of linear forms such that
// all s-anchored (2s+1)-minors of [[0,D],[D^t,A]] vanish.  Each anchored
// minor meets A exactly once, so the system is linear in A's coefficients.
template <class F>
ADetSystem a_det_system(const F& field, const LinMatrixSpace<typename F::Elem>& d,
                        long s, long n, long r, long k,
                        std::vector<Mat<Poly<typename F::Elem>>>* basis_out = nullptr) {
  using K = typename F::Elem;
  (void)field;
  long m = s + 1 + n - r;  // size of A
  if (d.rows != s || d.cols != m)
    throw std::invalid_argument("a_det: D must be s x (s+1+n-r)");
  if (d.arity() != k + 1)
    throw std::invalid_argument("a_det: D arity must be k+1");

  std::vector<std::vector<int>> pos(m, std::vector<int>(m, -1));
  int npos = 0;
  for (long i = 0; i < m; ++i)
    for (long j = i; j < m; ++j) {
      pos[i][j] = npos;
      pos[j][i] = npos;
      ++npos;
    }
  long nunk = (k + 1) * npos;
  auto col_of = [&](long i, long j, long t) { return pos[i][j] * (k + 1) + t; };

  std::optional<DetCache<K>> cache;
  if (s > 0) cache.emplace(d.entries);
  uint32_t all_rows = s > 0 ? (uint32_t{1} << s) - 1 : 0;
  // p-vector of a column subset: maximal minors of D restricted to it
  auto pvec = [&](const std::vector<long>& cols) {
    std::vector<Poly<K>> out;
    if (s == 0) {
      out.push_back(Poly<K>::constant(static_cast<int>(k + 1), K(1)));
      return out;
    }
    uint32_t base = 0;
    for (long c : cols) base |= uint32_t{1} << c;
    for (long c : cols) out.push_back(cache->minor_det(all_rows, base & ~(uint32_t{1} << c)));
    return out;
  };

  RowReducer<K> red(static_cast<int>(nunk));
  long nrows = 0;
  auto masks = detail_tangent::subset_masks(m, s + 1);
  std::vector<std::vector<long>> subsets;
  for (uint32_t mm : masks) {
    std::vector<long> v;
    for (long c = 0; c < m; ++c)
      if (mm & (uint32_t{1} << c)) v.push_back(c);
    subsets.push_back(std::move(v));
  }
  for (const auto& rsub : subsets) {
    auto p_left = pvec(rsub);
    for (const auto& csub : subsets) {
      auto p_right = pvec(csub);
      LinUnknownPoly<K> constraint(static_cast<int>(k + 1), static_cast<int>(nunk));
      for (long i = 0; i <= s; ++i)
        for (long j = 0; j <= s; ++j) {
          Poly<K> c = p_left[i] * p_right[j];
          if ((s + i + j) % 2 != 0) c = -c;
          if (c.is_zero_poly()) continue;
          LinUnknownPoly<K> aij(static_cast<int>(k + 1), static_cast<int>(nunk));
          for (long t = 0; t <= k; ++t)
            aij += LinUnknownPoly<K>::unknown_times_z(
                static_cast<int>(k + 1), static_cast<int>(nunk),
                static_cast<int>(col_of(rsub[i], csub[j], t)), static_cast<int>(t), K(1));
          constraint += c * aij;
        }
      nrows += detail_tangent::fold_rows(constraint, red);
    }
  }

  ADetSystem sys;
  sys.unknowns = nunk;
  sys.rows = nrows;
  sys.rank = red.rank();
  sys.dim = nunk - red.rank();
  if (basis_out) {
    basis_out->clear();
    for (const auto& v : red.nullspace()) {
      Mat<Poly<K>> a = poly_mat<K>(m, m, static_cast<int>(k + 1));
      for (long i = 0; i < m; ++i)
        for (long j = i; j < m; ++j) {
          Poly<K> e(static_cast<int>(k + 1));
          for (long t = 0; t <= k; ++t) {
            K c = v[col_of(i, j, t)];
            if (!is_zero(c)) {
              Expo ex(k + 1, 0);
              ex[t] = 1;
              e.add_term(ex, c);
            }
          }
          a(i, j) = e;
          a(j, i) = e;
        }
      basis_out->push_back(std::move(a));
    }
  }
  return sys;
}

template <class F>
long a_det(const F& field, const LinMatrixSpace<typename F::Elem>& d, long s, long n,
           long r, long k) {
  return a_det_system(field, d, s, n, r, k).dim;
}

// Tangent dimension through the block formula: for a nested s-compression
// point in block form [[B,C,D],[C^t,E,0],[D^t,0,0]],
//   det E == 0 (and r-2s-1 > 0)  =>  (C(n+1,2)-1-k)(k+1)
//   otherwise                    =>  a_det + (s+1+n-r)(r-2s-1)(k+1)
//                                         + (kappa(s)-k)(k+1).
template <class F>
TangentReport tangent_dim_blocks(const F& field, const LinMatrixSpace<typename F::Elem>& q,
                                 const Params& p, long s) {
  using K = typename F::Elem;
  p.validate();
  if (!p.symmetric())
    throw std::domain_error("tangent_dim_blocks: symmetric variant only");
  if (field.characteristic() == 2)
    throw std::domain_error("tangent_dim_blocks: characteristic 2 excluded");
  if (s < 0 || s > s_max(p)) throw std::domain_error("tangent_dim_blocks: s out of range");
  q.check();
  long n = p.n, r = p.r, k = p.k;
  if (q.sym != Symmetry::symmetric || q.rows != n)
    throw std::invalid_argument("tangent_dim_blocks: expected a symmetric n x n space");
  if (q.arity() != k + 1 || q.span_dim() != k + 1)
    throw std::invalid_argument("tangent_dim_blocks: span_dim of Q must be k+1");
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      if (detail_spaces::compression_zero_cell(p, s, i + 1, j + 1) &&
          !q.entries(i, j).is_zero_poly())
        throw std::invalid_argument(
            "tangent_dim_blocks: Q is not in the standard s-compression block form");

  TangentReport rep;
  rep.method = "blocks";
  rep.n = n;
  rep.r = r;
  rep.k = k;
  rep.s = s;
  rep.ambient_grassmannian_dim = Int(k + 1) * (binom2(Int(n) + 1) - (k + 1));

  long esize = r - 2 * s - 1;
  bool e_degenerate = false;
  if (esize > 0) {
    Mat<Poly<K>> e = poly_mat<K>(esize, esize, static_cast<int>(k + 1));
    for (long i = 0; i < esize; ++i)
      for (long j = 0; j < esize; ++j) e(i, j) = q.entries(s + i, s + j);
    e_degenerate = det_polymat(e).is_zero_poly();
  }
  if (esize > 0 && e_degenerate) {
    rep.tangent_dim = (binom2(Int(n) + 1) - 1 - k) * (k + 1);
    rep.notes.push_back("det E == 0: every lift is unobstructed");
    return rep;
  }

  long m = s + 1 + n - r;
  LinMatrixSpace<K> d;
  d.rows = s;
  d.cols = m;
  d.sym = Symmetry::none;
  d.vars = q.vars;
  d.entries = poly_mat<K>(s, m, static_cast<int>(k + 1));
  for (long i = 0; i < s; ++i)
    for (long j = 0; j < m; ++j) d.entries(i, j) = q.entries(i, r - s - 1 + j);
  ADetSystem sys = a_det_system(field, d, s, n, r, k);
  rep.lift_unknowns = sys.unknowns;
  rep.constraint_rows = sys.rows;
  rep.rank = sys.rank;
  rep.tangent_dim = Int(sys.dim) + Int(m) * (r - 2 * s - 1) * (k + 1) +
                    (kappa(p, s) - k) * (k + 1);
  std::ostringstream note;
  note << "a_det = " << sys.dim;
  rep.notes.push_back(note.str());
  return rep;
}

template <class K>
struct SolutionSpaceA {
  std::vector<Mat<Poly<K>>> basis;
  bool membership_checked = false;
  bool all_in_row_span = false;
  std::string note;
};

// Basis of the a_det solution space for D of shape s x (s+1), together with
// the row-span certificate: for general D every solution is T*D + (T*D)^t
// with T over the scalars.
template <class F>
SolutionSpaceA<typename F::Elem> solution_space_A(const F& field,
                                                  const LinMatrixSpace<typename F::Elem>& d) {
  using K = typename F::Elem;
  long s = d.rows;
  if (d.cols != s + 1)
    throw std::invalid_argument("solution_space_A: D must be s x (s+1)");
  long k = d.arity() - 1;
  SolutionSpaceA<K> out;
  a_det_system(field, d, s, 2 * s + 1, 2 * s + 1, k, &out.basis);

  if (static_cast<long>(out.basis.size()) > s * (s + 1)) {
    out.membership_checked = false;
    out.note = "solution space exceeds s(s+1): D is special, membership check skipped";
    return out;
  }
  // row-span membership: image of T |-> T*D + (T*D)^t as vectors of upper
  // coefficients
  long m = s + 1;
  std::vector<std::vector<int>> pos(m, std::vector<int>(m, -1));
  int npos = 0;
  for (long i = 0; i < m; ++i)
    for (long j = i; j < m; ++j) {
      pos[i][j] = npos;
      pos[j][i] = npos;
      ++npos;
    }
  auto vec_of = [&](const Mat<Poly<K>>& a) {
    Vec<K> v = Vec<K>::Constant(static_cast<long>(npos) * (k + 1), K(0));
    for (long i = 0; i < m; ++i)
      for (long j = i; j < m; ++j)
        for (long t = 0; t <= k; ++t) {
          Expo e(k + 1, 0);
          e[t] = 1;
          v[pos[i][j] * (k + 1) + t] = a(i, j).coeff(e);
        }
    return v;
  };
  RowReducer<K> image(static_cast<int>(npos * (k + 1)));
  for (long a = 0; a < m; ++a)
    for (long b = 0; b < s; ++b) {
      // unit T with 1 at (a,b): A = unit*D + (unit*D)^t
      Mat<Poly<K>> am = poly_mat<K>(m, m, static_cast<int>(k + 1));
      for (long j = 0; j < m; ++j) {
        am(a, j) = am(a, j) + d.entries(b, j);
        am(j, a) = am(j, a) + d.entries(b, j);
      }
      image.add_row(vec_of(am));
    }
  out.membership_checked = true;
  out.all_in_row_span = true;
  for (const auto& a : out.basis)
    if (!image.in_row_span(vec_of(a))) out.all_in_row_span = false;
  return out;
}

// The special middle point for r = n = 2s+1: D is the banded block
// D_s(z0,z1,z2) plus deterministically placed extra variables (one per free
// slot, keeping the band variables pure), with B taking the overflow.  At
// this point the tangent dimension attains s(s+1) + (kappa(s)-k)(k+1).
template <class F>
LinMatrixSpace<typename F::Elem> middle_point_space(const F& field, long n, long k) {
  using K = typename F::Elem;
  if (n < 3 || n % 2 == 0)
    throw std::domain_error("middle_point_space: n must be odd and >= 3");
  long s = (n - 1) / 2;
  Params p{Variant::symmetric(), n, n, k};
  p.validate();
  if (k < 1 || Int(k) > kappa(p, s))
    throw std::domain_error("middle_point_space: need 1 <= k <= kappa(s)");
  int arity = static_cast<int>(k + 1);
  auto zv = [&](long t) { return Poly<K>::variable(arity, static_cast<int>(t), field.one()); };
  Poly<K> z2 = (k >= 2 && s >= 2) ? zv(2) : Poly<K>(arity);
  auto d = block_D(s, zv(0), zv(1), z2);
  Mat<Poly<K>> b = poly_mat<K>(s, s, arity);
  // Distribute the remaining variables additively over distinct slots of D
  // (keeping the first occurrence of each band variable pure so the entry
  // span stays full), then over B.
  long next = (k >= 2 && s >= 2) ? 3 : 2;
  std::vector<std::pair<long, long>> dslots, bslots;
  for (long i = 0; i < s; ++i)
    for (long j = 0; j < s + 1; ++j) {
      bool first_band = (i == 0 && j <= 2 && j - i <= (s >= 2 ? 2 : 1));
      if (!first_band) dslots.emplace_back(i, j);
    }
  for (long i = 0; i < s; ++i)
    for (long j = i; j < s; ++j) bslots.emplace_back(i, j);
  size_t di = 0, bi = 0;
  for (long t = next; t <= k; ++t) {
    if (di < dslots.size()) {
      auto [i, j] = dslots[di++];
      d.entries(i, j) = d.entries(i, j) + zv(t);
    } else {
      auto [i, j] = bslots[bi++];
      b(i, j) = b(i, j) + zv(t);
      b(j, i) = b(i, j);
    }
  }
  return middle_point(n, k, d, b);
}

template <class K>
struct SampledPoint {
  LinMatrixSpace<K> space;
  uint64_t seed = 0;
  int attempts = 0;
};

// A random point of C_s^k in standard block form over the working field,
// with rejection sampling: re-draw while det E vanishes identically or the
// entry span is smaller than k+1.
template <class F>
SampledPoint<typename F::Elem> random_general_point(const F& field, const Params& p, long s,
                                                    uint64_t seed) {
  using K = typename F::Elem;
  p.validate();
  if (!p.symmetric())
    throw std::domain_error("random_general_point: symmetric variant only");
  if (s < 0 || s > s_max(p)) throw std::domain_error("random_general_point: s out of range");
  if (Int(p.k) > kappa(p, s))
    throw std::domain_error("random_general_point: k exceeds kappa(s)");
  std::mt19937_64 rng(seed);
  long n = p.n, r = p.r, k = p.k;
  int arity = static_cast<int>(k + 1);
  for (int attempt = 1; attempt <= 1000; ++attempt) {
    LinMatrixSpace<K> q;
    q.rows = q.cols = n;
    q.sym = Symmetry::symmetric;
    for (int t = 0; t < arity; ++t) q.vars.push_back("z" + std::to_string(t));
    q.entries = poly_mat<K>(n, n, arity);
    for (long i = 0; i < n; ++i)
      for (long j = i; j < n; ++j) {
        if (detail_spaces::compression_zero_cell(p, s, i + 1, j + 1)) continue;
        Poly<K> e(arity);
        for (int t = 0; t < arity; ++t) {
          K c = detail_tangent::random_scalar(field, rng);
          if (!is_zero(c)) {
            Expo ex(arity, 0);
            ex[t] = 1;
            e.add_term(ex, c);
          }
        }
        q.entries(i, j) = e;
        q.entries(j, i) = e;
      }
    if (q.span_dim() != k + 1) continue;
    long esize = r - 2 * s - 1;
    if (esize > 0) {
      Mat<Poly<K>> e = poly_mat<K>(esize, esize, arity);
      for (long i = 0; i < esize; ++i)
        for (long j = 0; j < esize; ++j) e(i, j) = q.entries(s + i, s + j);
      if (det_polymat(e).is_zero_poly()) continue;
    }
    return {std::move(q), seed, attempt};
  }
  throw std::runtime_error("random_general_point: rejection sampling failed");
}

}  // namespace fano
