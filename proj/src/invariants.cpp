#include "fano/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fano {

const char* variant_name(VariantTag tag) {
  switch (tag) {
    case VariantTag::symmetric: return "symmetric";
    case VariantTag::alternating: return "alternating";
    case VariantTag::rectangular: return "rectangular";
  }
  return "?";
}

Int Params::ambient_dim() const {
  switch (variant.tag) {
    case VariantTag::symmetric: return binom2(Int(n) + 1) - 1;
    case VariantTag::alternating: return binom2(Int(n)) - 1;
    case VariantTag::rectangular: return Int(variant.m) * Int(n) - 1;
  }
  throw std::logic_error("unreachable");
}

void Params::validate() const {
  switch (variant.tag) {
    case VariantTag::symmetric:
      if (!(3 <= r && r <= n))
        throw std::invalid_argument("symmetric variant needs 3 <= r <= n");
      break;
    case VariantTag::alternating:
      if (!(2 < r && r <= n))
        throw std::invalid_argument("alternating variant needs 2 < r <= n");
      if (r % 2 != 0)
        throw std::invalid_argument("alternating variant needs r even");
      break;
    case VariantTag::rectangular:
      if (!(2 <= r && r <= variant.m && variant.m <= n))
        throw std::invalid_argument("rectangular variant needs 2 <= r <= m <= n");
      break;
  }
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  if (Int(k) > ambient_dim())
    throw std::invalid_argument("k exceeds the ambient projective dimension");
}

long s_max(const Params& p) {
  return p.variant.tag == VariantTag::rectangular ? p.r - 1 : (p.r - 1) / 2;
}

Int kappa(const Params& p, long s) {
  if (s < 0 || s > s_max(p)) throw std::domain_error("kappa: s out of range");
  Int S(s), N(p.n), R(p.r);
  Int a = S + 1 + N - R;  // s+1+n-r
  switch (p.variant.tag) {
    case VariantTag::symmetric: return S * a + binom2(R - S) - 1;
    case VariantTag::alternating: return S * a + binom2(R - S - 1) - 1;
    case VariantTag::rectangular: {
      Int M(p.variant.m);
      return M * N - a * (M - S) - 1;
    }
  }
  throw std::logic_error("unreachable");
}

Int variety_dim(const Params& p) {
  if (!p.symmetric()) throw std::domain_error("variety_dim: symmetric variant only");
  Int N(p.n), R(p.r);
  return N * (R - 1) - binom2(R - 1) - 1;
}

bool is_nonempty(const Params& p) {
  Int m = std::max(kappa(p, 0), kappa(p, s_max(p)));
  return Int(p.k) <= m;
}

Int edge_label(const Params& p, long s, long sp) {
  if (!(0 <= s && s < sp && sp <= s_max(p)))
    throw std::domain_error("edge_label: need 0 <= s < s' <= s_max");
  return kappa(p, sp) - (Int(s) + 1 + p.n - p.r) * (sp - s);
}

FanoGraph build_graph(const Params& p) {
  FanoGraph g;
  g.k = p.k;
  long sm = s_max(p);
  std::vector<bool> alive(sm + 1, false);
  for (long s = 0; s <= sm; ++s) {
    Int ks = kappa(p, s);
    if (ks >= p.k) {
      alive[s] = true;
      g.vertices.emplace_back(s, ks);
    }
  }
  for (long s = 0; s <= sm; ++s) {
    if (!alive[s]) continue;
    for (long sp = s + 1; sp <= sm; ++sp) {
      if (!alive[sp]) continue;
      Int lbl = edge_label(p, s, sp);
      if (lbl >= p.k) g.edges.emplace_back(s, sp, lbl);
    }
  }
  return g;
}

namespace {

struct UnionFind {
  std::vector<long> parent;
  explicit UnionFind(long n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  long find(long x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(long a, long b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);  // smallest s stays the representative
    parent[b] = a;
  }
};

}  // namespace

std::vector<std::vector<long>> connected_components(const FanoGraph& g) {
  if (g.vertices.empty()) return {};
  long max_s = g.vertices.back().first;
  UnionFind uf(max_s + 1);
  for (const auto& [s, sp, lbl] : g.edges) uf.unite(s, sp);
  std::vector<std::vector<long>> by_root(max_s + 1);
  for (const auto& [s, lbl] : g.vertices) by_root[uf.find(s)].push_back(s);
  std::vector<std::vector<long>> out;
  for (auto& comp : by_root)
    if (!comp.empty()) out.push_back(std::move(comp));
  return out;
}

bool cycle_disconnected(const Params& p) {
  long sm = s_max(p);
  std::vector<long> v;
  for (long s = 0; s <= sm; ++s)
    if (kappa(p, s) >= p.k) v.push_back(s);
  long ell = static_cast<long>(v.size());
  if (ell < 2) return false;
  int missing = 0;
  for (long i = 0; i + 1 < ell; ++i)
    if (edge_label(p, v[i], v[i + 1]) < p.k) ++missing;
  if (edge_label(p, v[0], v[ell - 1]) < p.k) ++missing;
  return missing >= 2;
}

bool is_irreducible(const Params& p) {
  if (!p.symmetric()) throw std::domain_error("is_irreducible: symmetric variant only");
  if (!is_nonempty(p)) throw std::domain_error("is_irreducible: scheme is empty");
  long sm = s_max(p);
  Int k(p.k);
  bool low = std::max(kappa(p, std::min<long>(1, sm)), kappa(p, sm)) < k && k <= kappa(p, 0);
  bool high = std::max(kappa(p, 0), kappa(p, sm - 1 >= 0 ? sm - 1 : 0)) < k && k <= kappa(p, sm);
  return low || high;
}

Int dim_component(const Params& p, long s) {
  if (!p.symmetric()) throw std::domain_error("dim_component: symmetric variant only");
  Int ks = kappa(p, s);
  if (Int(p.k) > ks) throw std::domain_error("dim_component: k exceeds kappa(s)");
  Int S(s), N(p.n), R(p.r), K(p.k);
  Int a = S + 1 + N - R;
  return a * (R - 2 * S - 1) + S * (N - S) + (ks - K) * (K + 1);
}

Int expected_dim_hypersurface(const Params& p) {
  if (!p.symmetric() || p.r != p.n)
    throw std::domain_error("expected_dim_hypersurface: needs symmetric, r = n");
  Int N = binom2(Int(p.n) + 1) - 1;
  Int K(p.k);
  unsigned long low = static_cast<unsigned long>(std::min<long>(p.k, p.n));
  return (K + 1) * (N - K) - binom(K + p.n, low);
}

Int nonreduced_gap(const Params& p, long s) {
  if (!p.symmetric()) throw std::domain_error("nonreduced_gap: symmetric variant only");
  if (Int(p.k) > kappa(p, s)) throw std::domain_error("nonreduced_gap: k exceeds kappa(s)");
  Int S(s), N(p.n), R(p.r), K(p.k);
  Int a = S + 1 + N - R;
  return (R - 2 * S - 1) * (a * K - S);
}

Int tangent_formula_general(const Params& p, long s) {
  if (!p.symmetric())
    throw std::domain_error("tangent_formula_general: symmetric variant only");
  Int ks = kappa(p, s);
  if (Int(p.k) > ks) throw std::domain_error("tangent_formula_general: k exceeds kappa(s)");
  Int S(s), N(p.n), R(p.r), K(p.k);
  Int a = S + 1 + N - R;
  return S * a + a * (R - 2 * S - 1) * (K + 1) + (ks - K) * (K + 1);
}

Int tangent_formula_middle(const Params& p) {
  if (!p.symmetric() || p.r != p.n || p.r % 2 == 0)
    throw std::domain_error("tangent_formula_middle: needs symmetric, r = n odd");
  long s = (p.r - 1) / 2;
  Int ks = kappa(p, s);
  if (p.k < 1 || Int(p.k) > ks)
    throw std::domain_error("tangent_formula_middle: needs 1 <= k <= kappa(s)");
  Int S(s), K(p.k);
  return S * (S + 1) + (ks - K) * (K + 1);
}

bool smoothness_conjecture(const Params& p) {
  if (!p.symmetric())
    throw std::domain_error("smoothness_conjecture: symmetric variant only");
  if (p.r % 2 == 0) return false;
  Int lo = std::max(kappa(p, 0), kappa(p, (p.r - 3) / 2));
  return lo < p.k && Int(p.k) <= kappa(p, (p.r - 1) / 2);
}

}  // namespace fano
