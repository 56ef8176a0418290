#include "fano/field.hpp"

namespace fano {

namespace {

int ipow(int b, int e) {
  int r = 1;
  while (e--) r *= b;
  return r;
}

// Multiply two polynomial-basis encodings mod the irreducible polynomial.
// redc[i] = encoding of x^(e+i) reduced, for i = 0..e-2.
int gf_mul_poly(int a, int b, int p, int e, const int* redc) {
  int prod[8] = {0};  // degree < 2e-1 <= 5
  for (int i = 0; i < e; ++i) {
    int ai = (a / ipow(p, i)) % p;
    for (int j = 0; j < e; ++j) {
      int bj = (b / ipow(p, j)) % p;
      prod[i + j] = (prod[i + j] + ai * bj) % p;
    }
  }
  for (int d = 2 * e - 2; d >= e; --d) {
    int c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    int r = redc[d - e];
    for (int j = 0; j < e; ++j) {
      int rj = (r / ipow(p, j)) % p;
      prod[j] = (prod[j] + c * rj) % p;
    }
  }
  int out = 0;
  for (int j = e - 1; j >= 0; --j) out = out * p + prod[j];
  return out;
}

GfTables build_tables(int q) {
  GfTables t;
  t.q = q;
  switch (q) {
    case 2: case 3: case 5: case 7: t.p = q; t.e = 1; break;
    case 4: t.p = 2; t.e = 2; break;
    case 8: t.p = 2; t.e = 3; break;
    case 9: t.p = 3; t.e = 2; break;
    default:
      throw std::invalid_argument("fano: GF(q) supported only for q in {2,3,4,5,7,8,9}");
  }
  // Reduction of x^e (and x^(e+1) when e=3): GF(4): x^2=x+1; GF(8): x^3=x+1;
  // GF(9): x^2=-1=2.
  int redc[2] = {0, 0};
  if (q == 4) redc[0] = 2 + 1;  // x + 1
  if (q == 8) {
    redc[0] = 2 + 1;
    redc[1] = gf_mul_poly(2, 2 + 1, 2, 3, redc);  // x^4 = x*(x+1)
  }
  if (q == 9) redc[0] = 2;  // -1 mod 3

  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      if (t.e == 1) {
        t.add[a * q + b] = static_cast<uint8_t>((a + b) % q);
        t.mul[a * q + b] = static_cast<uint8_t>((a * b) % q);
      } else {
        int s = 0;
        for (int j = t.e - 1; j >= 0; --j) {
          int aj = (a / ipow(t.p, j)) % t.p, bj = (b / ipow(t.p, j)) % t.p;
          s = s * t.p + (aj + bj) % t.p;
        }
        t.add[a * q + b] = static_cast<uint8_t>(s);
        t.mul[a * q + b] = static_cast<uint8_t>(gf_mul_poly(a, b, t.p, t.e, redc));
      }
    }
  }
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      if (t.add[a * q + b] == 0) t.neg[a] = static_cast<uint8_t>(b);
      if (a != 0 && t.mul[a * q + b] == 1) t.inv[a] = static_cast<uint8_t>(b);
    }
  }
  return t;
}

}  // namespace

const GfTables& gf_tables(int q) {
  static const std::map<int, GfTables> all = [] {
    std::map<int, GfTables> m;
    for (int q : {2, 3, 4, 5, 7, 8, 9}) m.emplace(q, build_tables(q));
    return m;
  }();
  auto it = all.find(q);
  if (it == all.end())
    throw std::invalid_argument("fano: GF(q) supported only for q in {2,3,4,5,7,8,9}");
  return it->second;
}

}  // namespace fano
