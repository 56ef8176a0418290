#pragma once

// Polynomials in the z-variables whose coefficients are affine-linear
// expressions in a set of named unknowns.  Degree in the unknowns is at most
// one by construction: multiplying two unknown-bearing values is rejected.
// This is the carrier for first-order deformation constraints; rows() turns
// one identity "== 0 in K[z]" into sparse linear equations on the unknowns.

#include <map>
#include <vector>

#include "fano/linalg.hpp"

namespace fano {

template <class K>
class LinUnknownPoly {
 public:
  struct Affine {
    K constant = K(0);
    std::vector<std::pair<int, K>> linear;  // (unknown index, coeff), sorted
  };

  LinUnknownPoly() : n_z_(0), n_unknowns_(0) {}
  LinUnknownPoly(int n_z, int n_unknowns) : n_z_(n_z), n_unknowns_(n_unknowns) {}

  static LinUnknownPoly from_z(const Poly<K>& p, int n_unknowns) {
    LinUnknownPoly out(p.arity(), n_unknowns);
    for (const auto& [e, c] : p.terms()) out.terms_[e].constant = c;
    return out;
  }
  static LinUnknownPoly unknown_times_z(int n_z, int n_unknowns, int u, int zvar,
                                        const K& coeff) {
    LinUnknownPoly out(n_z, n_unknowns);
    Expo e(n_z, 0);
    e[zvar] = 1;
    out.terms_[e].linear.emplace_back(u, coeff);
    return out;
  }

  int n_z() const { return n_z_; }
  int n_unknowns() const { return n_unknowns_; }
  bool has_unknowns() const {
    for (const auto& [e, a] : terms_)
      if (!a.linear.empty()) return true;
    return false;
  }

  LinUnknownPoly& operator+=(const LinUnknownPoly& o) {
    check_shape(o);
    for (const auto& [e, a] : o.terms_) {
      Affine& mine = terms_[e];
      mine.constant += a.constant;
      for (const auto& [u, c] : a.linear) add_linear(mine, u, c);
    }
    prune();
    return *this;
  }

  // Multiply by a pure z-polynomial (no unknowns involved on that side).
  friend LinUnknownPoly operator*(const Poly<K>& z, const LinUnknownPoly& a) {
    if (z.arity() != a.n_z_)
      throw std::invalid_argument("fano: LinUnknownPoly z-arity mismatch");
    LinUnknownPoly out(a.n_z_, a.n_unknowns_);
    Expo e(a.n_z_, 0);
    for (const auto& [ez, cz] : z.terms())
      for (const auto& [ea, aff] : a.terms_) {
        for (int i = 0; i < a.n_z_; ++i) e[i] = static_cast<uint8_t>(ez[i] + ea[i]);
        Affine& tgt = out.terms_[e];
        tgt.constant += cz * aff.constant;
        for (const auto& [u, c] : aff.linear) add_linear(tgt, u, cz * c);
      }
    out.prune();
    return out;
  }

  friend LinUnknownPoly operator*(const LinUnknownPoly& a, const LinUnknownPoly& b) {
    a.check_shape(b);
    if (a.has_unknowns() && b.has_unknowns())
      throw std::domain_error("fano: product of two unknown-bearing polynomials");
    const LinUnknownPoly& lin = a.has_unknowns() ? a : b;
    const LinUnknownPoly& pure = a.has_unknowns() ? b : a;
    Poly<K> zp(pure.n_z_);
    for (const auto& [e, aff] : pure.terms_) zp.add_term(e, aff.constant);
    return zp * lin;
  }

  // One sparse linear equation per z-monomial.  `constant` must be folded by
  // the caller (for homogeneous systems it is identically zero).
  struct Row {
    Expo zmono;
    std::vector<std::pair<int, K>> coeffs;
    K constant;
  };
  std::vector<Row> rows() const {
    std::vector<Row> out;
    for (const auto& [e, a] : terms_) {
      if (a.linear.empty() && is_zero(a.constant)) continue;
      out.push_back({e, a.linear, a.constant});
    }
    return out;
  }

 private:
  void check_shape(const LinUnknownPoly& o) const {
    if (n_z_ != o.n_z_ || n_unknowns_ != o.n_unknowns_)
      throw std::invalid_argument("fano: LinUnknownPoly shape mismatch");
  }
  static void add_linear(Affine& a, int u, const K& c) {
    auto it = std::lower_bound(a.linear.begin(), a.linear.end(), u,
                               [](const auto& pr, int v) { return pr.first < v; });
    if (it != a.linear.end() && it->first == u) {
      it->second += c;
      if (is_zero(it->second)) a.linear.erase(it);
    } else if (!is_zero(c)) {
      a.linear.insert(it, {u, c});
    }
  }
  void prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (it->second.linear.empty() && is_zero(it->second.constant))
        it = terms_.erase(it);
      else
        ++it;
    }
  }

  int n_z_;
  int n_unknowns_;
  std::map<Expo, Affine, MonoGrlexGreater> terms_;
};

}  // namespace fano
