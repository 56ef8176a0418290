#pragma once

// Closed-form invariants of the Fano schemes of bounded-rank matrix loci
// (symmetric / alternating / rectangular), and the labeled graph whose
// connected components biject with the components of the scheme.
//
// Everything here is a pure integer function of the parameters; values are
// arbitrary-precision so no input size can overflow.

#include <tuple>
#include <utility>
#include <vector>

#include "fano/bigint.hpp"

namespace fano {

enum class VariantTag { symmetric, alternating, rectangular };

struct Variant {
  VariantTag tag = VariantTag::symmetric;
  long m = 0;  // row count, rectangular only

  static Variant symmetric() { return {VariantTag::symmetric, 0}; }
  static Variant alternating() { return {VariantTag::alternating, 0}; }
  static Variant rectangular(long m) { return {VariantTag::rectangular, m}; }
};

const char* variant_name(VariantTag tag);

// One problem instance: k-planes on the locus of n-column matrices of rank
// less than r.  For the rectangular variant the row count m lives in the
// Variant; otherwise matrices are square of size n.
struct Params {
  Variant variant;
  long n = 0;
  long r = 0;
  long k = 0;

  long rows() const {
    return variant.tag == VariantTag::rectangular ? variant.m : n;
  }
  bool symmetric() const { return variant.tag == VariantTag::symmetric; }

  // Dimension of the projective space of all matrices of the variant.
  Int ambient_dim() const;

  // Throws std::invalid_argument when the variant bounds or the k range
  // are violated.
  void validate() const;
};

// Largest s for which a standard s-compression pattern exists.
long s_max(const Params& p);

// Projective dimension of the standard s-compression space.
Int kappa(const Params& p, long s);

// Dimension of the symmetric bounded-rank variety itself.
Int variety_dim(const Params& p);

bool is_nonempty(const Params& p);

// Edge label g({s,s'}) for s < s'.
Int edge_label(const Params& p, long s, long sp);

struct FanoGraph {
  long k = 0;
  std::vector<std::pair<long, Int>> vertices;       // (s, kappa(s)), ascending s
  std::vector<std::tuple<long, long, Int>> edges;   // (s, s', g), lexicographic
  bool empty() const { return vertices.empty(); }
};

FanoGraph build_graph(const Params& p);

// Partition of the surviving vertices into graph components; deterministic:
// components ordered by smallest member, members ascending.  Empty graph
// (empty scheme) gives the empty partition.
std::vector<std::vector<long>> connected_components(const FanoGraph& g);

// The cycle criterion for disconnectedness, implemented literally (including
// the wrap edge) and kept independent of connected_components so the two can
// be tested against each other.
bool cycle_disconnected(const Params& p);

// Symmetric variant only; requires a non-empty scheme.
bool is_irreducible(const Params& p);

// Dimension of the nested s-compression subscheme C_s^k (symmetric).
Int dim_component(const Params& p, long s);

// Expected dimension of the Fano scheme of a degree-n hypersurface in
// P^(C(n+1,2)-1); symmetric variant with r = n.
Int expected_dim_hypersurface(const Params& p);

// Generic tangent dimension minus dim_component on C_s^k (symmetric).
Int nonreduced_gap(const Params& p, long s);

// Tangent-space dimension at a general point of C_s^k (symmetric).
Int tangent_formula_general(const Params& p, long s);

// Tangent-space dimension at the special middle point; symmetric, r = n odd,
// s = (r-1)/2, 1 <= k <= kappa(s).
Int tangent_formula_middle(const Params& p);

// CONJECTURE (not a theorem): smooth iff r odd and
// max{kappa(0), kappa((r-3)/2)} < k <= kappa((r-1)/2).  Every output surface
// must label this value as conjectural.
bool smoothness_conjecture(const Params& p);

}  // namespace fano
