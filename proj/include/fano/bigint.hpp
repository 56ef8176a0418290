#pragma once

// Arbitrary-precision integers for the closed-form invariants.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace fano {

using Int = mpz_class;

// Binomial coefficient with integer top; C(n,k) = 0 for n < k when n >= 0,
// and the usual falling-factorial extension for n < 0.
inline Int binom(const Int& n, unsigned long k) {
  if (n >= 0) {
    Int out;
    mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k);
    return out;
  }
  Int num = 1;
  for (unsigned long i = 0; i < k; ++i) num *= n - static_cast<long>(i);
  Int fact;
  mpz_fac_ui(fact.get_mpz_t(), k);
  return num / fact;
}

inline Int binom2(const Int& n) { return n * (n - 1) / 2; }

inline int64_t to_i64(const Int& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("fano: value exceeds int64");
  return v.get_si();
}

}  // namespace fano
