#pragma once

// Exact coefficient arithmetic: prime fields GF(p), small table-based
// fields GF(q) for prime powers q <= 9, and arbitrary-precision rationals.
//
// Field elements carry their modulus so values from different fields can
// never be mixed silently.  A default-constructed or integer-constructed
// element is an unbound literal; it binds to a field on first contact with
// a bound element.  Library code always goes through a *Field handle
// (FqField, GfField, RatField) so literals only ever hold small integers.

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace fano {

namespace detail {

inline int64_t mod_reduce(int64_t v, int64_t p) {
  int64_t r = v % p;
  return r < 0 ? r + p : r;
}

inline int64_t mod_inverse(int64_t a, int64_t p) {
  int64_t t = 0, new_t = 1, r = p, new_r = mod_reduce(a, p);
  while (new_r != 0) {
    int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw std::domain_error("fano: division by non-unit");
  return mod_reduce(t, p);
}

inline bool is_prime_i64(int64_t p) {
  if (p < 2) return false;
  for (int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// GF(p), p an odd prime (runtime modulus)
// ---------------------------------------------------------------------------

class Fq {
 public:
  Fq() : v_(0), p_(0) {}
  explicit Fq(long long literal) : v_(literal), p_(0) {}
  Fq(int64_t v, int64_t p) : v_(detail::mod_reduce(v, p)), p_(p) {}

  bool bound() const { return p_ != 0; }
  int64_t modulus() const { return p_; }
  // Canonical representative in [0,p); raw literal when unbound.
  int64_t rep() const { return v_; }

  bool is_zero() const { return v_ == 0; }

  friend Fq operator+(const Fq& a, const Fq& b) {
    int64_t p = resolve(a, b);
    if (p == 0) return Fq(a.v_ + b.v_);
    return Fq(bind(a, p) + bind(b, p), p);
  }
  friend Fq operator-(const Fq& a, const Fq& b) {
    int64_t p = resolve(a, b);
    if (p == 0) return Fq(a.v_ - b.v_);
    return Fq(bind(a, p) - bind(b, p), p);
  }
  friend Fq operator*(const Fq& a, const Fq& b) {
    int64_t p = resolve(a, b);
    if (p == 0) return Fq(a.v_ * b.v_);
    return Fq(bind(a, p) * bind(b, p), p);
  }
  friend Fq operator/(const Fq& a, const Fq& b) {
    int64_t p = resolve(a, b);
    if (p == 0) {
      if (b.v_ == 1) return a;
      if (b.v_ == -1) return Fq(-a.v_);
      throw std::domain_error("fano: unbound Fq division");
    }
    return Fq(bind(a, p) * detail::mod_inverse(bind(b, p), p), p);
  }
  Fq operator-() const { return p_ ? Fq(p_ - v_, p_) : Fq(-v_); }
  Fq& operator+=(const Fq& o) { return *this = *this + o; }
  Fq& operator-=(const Fq& o) { return *this = *this - o; }
  Fq& operator*=(const Fq& o) { return *this = *this * o; }
  Fq& operator/=(const Fq& o) { return *this = *this / o; }

  Fq inverse() const {
    if (!p_) {
      if (v_ == 1 || v_ == -1) return *this;
      throw std::domain_error("fano: unbound Fq inverse");
    }
    return Fq(detail::mod_inverse(v_, p_), p_);
  }

  friend bool operator==(const Fq& a, const Fq& b) {
    int64_t p = resolve(a, b);
    if (p == 0) return a.v_ == b.v_;
    return bind(a, p) == bind(b, p);
  }
  friend bool operator!=(const Fq& a, const Fq& b) { return !(a == b); }

 private:
  static int64_t resolve(const Fq& a, const Fq& b) {
    if (a.p_ && b.p_ && a.p_ != b.p_)
      throw std::invalid_argument("fano: mixed Fq moduli");
    return a.p_ ? a.p_ : b.p_;
  }
  static int64_t bind(const Fq& a, int64_t p) {
    return a.p_ ? a.v_ : detail::mod_reduce(a.v_, p);
  }

  int64_t v_;
  int64_t p_;  // 0 = unbound literal
};

inline bool is_zero(const Fq& a) { return a.is_zero(); }

// Balanced printing: residues above p/2 print as negative integers.
inline std::string to_string(const Fq& a) {
  int64_t v = a.rep();
  if (a.bound() && v > a.modulus() / 2) v -= a.modulus();
  return std::to_string(v);
}

class FqField {
 public:
  using Elem = Fq;

  explicit FqField(int64_t p) : p_(p) {
    if (p < 3 || p % 2 == 0 || !detail::is_prime_i64(p))
      throw std::invalid_argument("fano: GF(p) needs an odd prime modulus");
  }

  int64_t modulus() const { return p_; }
  int64_t characteristic() const { return p_; }
  Fq of(int64_t v) const { return Fq(v, p_); }
  Fq of(const mpz_class& v) const {
    mpz_class r = v % p_;
    return Fq(r.get_si(), p_);
  }
  Fq zero() const { return Fq(0, p_); }
  Fq one() const { return Fq(1, p_); }

 private:
  int64_t p_;
};

// ---------------------------------------------------------------------------
// Rationals (GMP-backed), always reduced with positive denominator
// ---------------------------------------------------------------------------

class Rat {
 public:
  Rat() : v_(0) {}
  explicit Rat(long long n) : v_(static_cast<long>(n)) {}
  Rat(const mpz_class& n, const mpz_class& d) : v_(n, d) {
    if (d == 0) throw std::domain_error("fano: zero denominator");
    v_.canonicalize();
  }
  explicit Rat(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

  const mpq_class& value() const { return v_; }
  bool is_zero() const { return sgn(v_) == 0; }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_)); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw std::domain_error("fano: division by zero");
    return Rat(mpq_class(a.v_ / b.v_));
  }
  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  Rat inverse() const {
    if (is_zero()) throw std::domain_error("fano: inverse of zero");
    return Rat(mpq_class(1 / v_));
  }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }

 private:
  mpq_class v_;
};

inline bool is_zero(const Rat& a) { return a.is_zero(); }
inline std::string to_string(const Rat& a) { return a.value().get_str(); }

class RatField {
 public:
  using Elem = Rat;
  int64_t characteristic() const { return 0; }
  Rat of(int64_t v) const { return Rat(static_cast<long long>(v)); }
  Rat of(const mpz_class& v) const { return Rat(v, 1); }
  Rat of(const mpz_class& n, const mpz_class& d) const { return Rat(n, d); }
  Rat zero() const { return Rat(0); }
  Rat one() const { return Rat(1); }
};

// ---------------------------------------------------------------------------
// Small fields GF(q), q in {2,3,4,5,7,8,9}, table arithmetic.
// Prime powers use a polynomial basis: GF(4)=F2[x]/(x^2+x+1),
// GF(8)=F2[x]/(x^3+x+1), GF(9)=F3[x]/(x^2+1); elements are encoded base-p.
// ---------------------------------------------------------------------------

struct GfTables {
  int q = 0, p = 0, e = 0;
  std::array<uint8_t, 81> add{}, mul{};
  std::array<uint8_t, 9> neg{}, inv{};
};

const GfTables& gf_tables(int q);

class Gf {
 public:
  Gf() : v_(0), q_(0) {}
  explicit Gf(long long literal) : v_(static_cast<int16_t>(literal)), q_(0) {}
  Gf(int v, const GfTables& t) : v_(static_cast<int16_t>(v)), q_(static_cast<uint8_t>(t.q)) {}

  bool bound() const { return q_ != 0; }
  int order() const { return q_; }
  int rep() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  friend Gf operator+(const Gf& a, const Gf& b) { return apply(a, b, false); }
  friend Gf operator-(const Gf& a, const Gf& b) {
    int q = resolve(a, b);
    if (q == 0) return Gf(a.v_ - b.v_);
    const GfTables& t = gf_tables(q);
    int bv = bind(b, t);
    return Gf(t.add[bind(a, t) * q + t.neg[bv]], t);
  }
  friend Gf operator*(const Gf& a, const Gf& b) { return apply(a, b, true); }
  friend Gf operator/(const Gf& a, const Gf& b) {
    int q = resolve(a, b);
    if (q == 0) throw std::domain_error("fano: unbound Gf division");
    const GfTables& t = gf_tables(q);
    int bv = bind(b, t);
    if (bv == 0) throw std::domain_error("fano: division by zero in GF(q)");
    return Gf(t.mul[bind(a, t) * q + t.inv[bv]], t);
  }
  Gf operator-() const {
    if (!q_) return Gf(-v_);
    const GfTables& t = gf_tables(q_);
    return Gf(t.neg[v_], t);
  }
  Gf& operator+=(const Gf& o) { return *this = *this + o; }
  Gf& operator-=(const Gf& o) { return *this = *this - o; }
  Gf& operator*=(const Gf& o) { return *this = *this * o; }
  Gf& operator/=(const Gf& o) { return *this = *this / o; }

  Gf inverse() const {
    if (!q_) throw std::domain_error("fano: unbound Gf inverse");
    const GfTables& t = gf_tables(q_);
    if (v_ == 0) throw std::domain_error("fano: inverse of zero in GF(q)");
    return Gf(t.inv[v_], t);
  }

  friend bool operator==(const Gf& a, const Gf& b) {
    int q = resolve(a, b);
    if (q == 0) return a.v_ == b.v_;
    const GfTables& t = gf_tables(q);
    return bind(a, t) == bind(b, t);
  }
  friend bool operator!=(const Gf& a, const Gf& b) { return !(a == b); }

 private:
  static int resolve(const Gf& a, const Gf& b) {
    if (a.q_ && b.q_ && a.q_ != b.q_)
      throw std::invalid_argument("fano: mixed GF(q) orders");
    return a.q_ ? a.q_ : b.q_;
  }
  static int bind(const Gf& a, const GfTables& t) {
    if (a.q_) return a.v_;
    // Literals embed through the prime subfield.
    return detail::mod_reduce(a.v_, t.p);
  }
  static Gf apply(const Gf& a, const Gf& b, bool mul) {
    int q = resolve(a, b);
    if (q == 0) return Gf(mul ? a.v_ * b.v_ : a.v_ + b.v_);
    const GfTables& t = gf_tables(q);
    const auto& tab = mul ? t.mul : t.add;
    return Gf(tab[bind(a, t) * q + bind(b, t)], t);
  }

  int16_t v_;
  uint8_t q_;  // 0 = unbound literal
};

inline bool is_zero(const Gf& a) { return a.is_zero(); }

inline std::string to_string(const Gf& a) {
  if (!a.bound()) return std::to_string(a.rep());
  const GfTables& t = gf_tables(a.order());
  if (t.e == 1) {
    int v = a.rep();
    if (v > t.q / 2) v -= t.q;
    return std::to_string(v);
  }
  return "e" + std::to_string(a.rep());
}

class GfField {
 public:
  using Elem = Gf;

  explicit GfField(int q) : tab_(&gf_tables(q)) {}

  int order() const { return tab_->q; }
  int64_t characteristic() const { return tab_->p; }
  Gf of(int64_t v) const { return Gf(static_cast<int>(detail::mod_reduce(v, tab_->p)), *tab_); }
  Gf of(const mpz_class& v) const {
    mpz_class r = v % tab_->p;
    return of(r.get_si());
  }
  Gf from_rep(int v) const {
    if (v < 0 || v >= tab_->q) throw std::out_of_range("fano: Gf representative");
    return Gf(v, *tab_);
  }
  Gf zero() const { return Gf(0, *tab_); }
  Gf one() const { return Gf(1, *tab_); }

 private:
  const GfTables* tab_;
};

}  // namespace fano
