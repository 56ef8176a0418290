#pragma once

// Generalized binomial coefficients with rational upper argument, and the
// exact two-sided evaluation of the Jensen convolution identity.

#include "fano/bigint.hpp"
#include "fano/field.hpp"

namespace fano {

// C(x, l) = x(x-1)...(x-l+1) / l!  for rational x and integer l >= 0.
inline Rat gen_binomial(const Rat& x, long l) {
  if (l < 0) throw std::invalid_argument("fano: gen_binomial needs l >= 0");
  mpq_class num = 1;
  for (long i = 0; i < l; ++i) num *= x.value() - i;
  Int fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(l));
  return Rat(mpq_class(num / fact));
}

struct JensenSides {
  Rat lhs, rhs;
};

// LHS = sum_l C(a+b*l, l) C(g-b*l, L-l);  RHS = sum_l C(a+g-l, L-l) b^l.
inline JensenSides jensen_sides(const Rat& a, const Rat& b, const Rat& g, long L) {
  if (L < 0) throw std::invalid_argument("fano: jensen needs L >= 0");
  Rat lhs(0), rhs(0), bpow(1);
  for (long l = 0; l <= L; ++l) {
    Rat bl = b * Rat(l);
    lhs += gen_binomial(a + bl, l) * gen_binomial(g - bl, L - l);
    rhs += gen_binomial(a + g - Rat(l), L - l) * bpow;
    bpow *= b;
  }
  return {lhs, rhs};
}

inline bool jensen_check(const Rat& a, const Rat& b, const Rat& g, long L) {
  JensenSides s = jensen_sides(a, b, g, L);
  return s.lhs == s.rhs;
}

}  // namespace fano
