#pragma once

// Eigen dense containers over the exact scalar types.  Eigen supplies the
// matrix plumbing (storage, blocks, transposes, products); all elimination
// and determinant work is done by the free functions in linalg.hpp, which
// must stay pivot-deterministic over exact fields.

#include <Eigen/Core>

#include "fano/field.hpp"

namespace fano {

template <class T>
using Mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;

template <class T>
using Vec = Eigen::Matrix<T, Eigen::Dynamic, 1>;

}  // namespace fano

#define FANO_EXACT_NUM_TRAITS(T)                                     \
  template <>                                                        \
  struct NumTraits<T> : GenericNumTraits<T> {                        \
    typedef T Real;                                                  \
    typedef T NonInteger;                                            \
    typedef T Nested;                                                \
    typedef T Literal;                                               \
    static inline Real epsilon() { return T(0); }                    \
    static inline Real dummy_precision() { return T(0); }            \
    static inline int digits10() { return 0; }                       \
    enum {                                                           \
      IsComplex = 0,                                                 \
      IsInteger = 0,                                                 \
      IsSigned = 1,                                                  \
      RequireInitialization = 1,                                     \
      ReadCost = 2,                                                  \
      AddCost = 10,                                                  \
      MulCost = 10                                                   \
    };                                                               \
  };

namespace Eigen {
FANO_EXACT_NUM_TRAITS(fano::Fq)
FANO_EXACT_NUM_TRAITS(fano::Gf)
FANO_EXACT_NUM_TRAITS(fano::Rat)
}  // namespace Eigen
