#pragma once

// Sparse multivariate polynomials over an exact coefficient field.
// Terms are kept in graded lexicographic order (leading term first) so all
// iteration, printing and serialization are deterministic.

#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fano/eigen_support.hpp"

namespace fano {

using Expo = std::vector<uint8_t>;

inline unsigned total_degree(const Expo& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

// Graded lex, descending: higher total degree first, ties broken by the
// earliest variable with the larger exponent.
struct MonoGrlexGreater {
  bool operator()(const Expo& a, const Expo& b) const {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    for (size_t i = 0; i < a.size() && i < b.size(); ++i)
      if (a[i] != b[i]) return a[i] > b[i];
    return a.size() > b.size();
  }
};

template <class K>
K kpow(K base, unsigned e) {
  K out(1);
  while (e--) out = out * base;
  return out;
}

template <class K>
class Poly {
 public:
  using TermMap = std::map<Expo, K, MonoGrlexGreater>;

  Poly() : arity_(0) {}
  explicit Poly(int arity) : arity_(arity) {}

  static Poly constant(int arity, K c) {
    Poly p(arity);
    if (!is_zero(c)) p.terms_.emplace(Expo(arity, 0), std::move(c));
    return p;
  }
  static Poly variable(int arity, int i, K coeff) {
    if (i < 0 || i >= arity) throw std::out_of_range("fano: variable index");
    Poly p(arity);
    if (!is_zero(coeff)) {
      Expo e(arity, 0);
      e[i] = 1;
      p.terms_.emplace(std::move(e), std::move(coeff));
    }
    return p;
  }

  int arity() const { return arity_; }
  bool is_zero_poly() const { return terms_.empty(); }
  size_t n_terms() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  unsigned degree() const {
    return terms_.empty() ? 0 : total_degree(terms_.begin()->first);
  }

  K coeff(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? K(0) : it->second;
  }

  void add_term(const Expo& e, const K& c) {
    if (static_cast<int>(e.size()) != arity_)
      throw std::invalid_argument("fano: exponent arity mismatch");
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (is_zero(it->second)) terms_.erase(it);
    } else if (is_zero(it->second)) {
      terms_.erase(it);
    }
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    check_arity(a, b);
    Poly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    check_arity(a, b);
    Poly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
    return out;
  }
  Poly operator-() const {
    Poly out(arity_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    check_arity(a, b);
    Poly out(a.arity_);
    Expo e(a.arity_, 0);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (int i = 0; i < a.arity_; ++i) e[i] = static_cast<uint8_t>(ea[i] + eb[i]);
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(const K& c) const {
    Poly out(arity_);
    if (is_zero(c)) return out;
    for (const auto& [e, k] : terms_) {
      K v = k * c;
      if (!is_zero(v)) out.terms_.emplace(e, std::move(v));
    }
    return out;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.arity_ != b.arity_ || a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib)
      if (ia->first != ib->first || !(ia->second == ib->second)) return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  K eval(std::span<const K> vals) const {
    if (static_cast<int>(vals.size()) != arity_)
      throw std::invalid_argument("fano: eval arity mismatch");
    K out(0);
    for (const auto& [e, c] : terms_) {
      K t = c;
      for (int i = 0; i < arity_; ++i)
        if (e[i]) t = t * kpow(vals[i], e[i]);
      out += t;
    }
    return out;
  }

  // Substitute a scalar for one variable; the variable slot stays (exponent 0).
  Poly substitute(int i, const K& val) const {
    if (i < 0 || i >= arity_) throw std::out_of_range("fano: substitute index");
    Poly out(arity_);
    for (const auto& [e, c] : terms_) {
      Expo e2 = e;
      e2[i] = 0;
      out.add_term(e2, e[i] ? c * kpow(val, e[i]) : c);
    }
    return out;
  }

  // Extend to a larger variable set, keeping existing indices.
  Poly widened(int new_arity) const {
    if (new_arity < arity_) throw std::invalid_argument("fano: widened shrinks arity");
    Poly out(new_arity);
    for (const auto& [e, c] : terms_) {
      Expo e2 = e;
      e2.resize(new_arity, 0);
      out.terms_.emplace(std::move(e2), c);
    }
    return out;
  }

  std::string str(std::span<const std::string> names = {}) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      std::string cs = to_string(c);
      bool neg = cs.size() > 1 && cs[0] == '-';
      if (first) {
        if (neg) { out += "-"; cs = cs.substr(1); }
        first = false;
      } else {
        out += neg ? " - " : " + ";
        if (neg) cs = cs.substr(1);
      }
      std::string mono;
      for (int i = 0; i < arity_; ++i) {
        if (!e[i]) continue;
        if (!mono.empty()) mono += "*";
        mono += i < static_cast<int>(names.size()) ? names[i] : "z" + std::to_string(i);
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      if (mono.empty()) {
        out += cs;
      } else {
        if (cs != "1") out += cs + "*";
        out += mono;
      }
    }
    return out;
  }

 private:
  static void check_arity(const Poly& a, const Poly& b) {
    if (a.arity_ != b.arity_) throw std::invalid_argument("fano: poly arity mismatch");
  }

  int arity_;
  TermMap terms_;
};

template <class K>
bool is_zero(const Poly<K>& p) {
  return p.is_zero_poly();
}

template <class K>
Poly<K> poly_pow(const Poly<K>& p, unsigned e) {
  Poly<K> out = Poly<K>::constant(p.arity(), K(1));
  while (e--) out = out * p;
  return out;
}

template <class K>
std::string to_string(const Poly<K>& p) {
  return p.str();
}

}  // namespace fano

namespace Eigen {
template <class K>
struct NumTraits<fano::Poly<K>> : GenericNumTraits<fano::Poly<K>> {
  typedef fano::Poly<K> Real;
  typedef fano::Poly<K> NonInteger;
  typedef fano::Poly<K> Nested;
  typedef fano::Poly<K> Literal;
  static inline Real epsilon() { return fano::Poly<K>(); }
  static inline Real dummy_precision() { return fano::Poly<K>(); }
  static inline int digits10() { return 0; }
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 40,
    MulCost = 200
  };
};
}  // namespace Eigen
