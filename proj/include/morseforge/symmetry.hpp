// Automorphism groups of complexes and the product-order report for Morse
// complexes of disjoint unions.
#pragma once

#include <vector>

#include "morseforge/complex.hpp"

namespace morseforge {

struct PermutationGroup {
  std::vector<std::vector<int>> generators;  // each preserves the facet set
  long long order = 1;
};

inline constexpr int default_aut_vertex_bound = 24;
inline constexpr long long group_closure_cap = 10'000'000;

/// Exhaustive backtracking over facet-preserving vertex bijections. The order
/// is exact; the generators are a reduced set whose closure is re-checked
/// against the full enumeration.
PermutationGroup automorphism_group(const SimplicialComplex& k,
                                    int vertex_bound = default_aut_vertex_bound);

/// Whether k is isomorphic to join(induced(u), induced(complement)) via an
/// isomorphism mapping u onto the join's copy of u. u must be a proper
/// nonempty vertex subset.
bool is_fully_connected(const SimplicialComplex& k, const std::vector<int>& u);

struct ProductOrderReport {
  long long aut_morse_union = 0;  // |Aut(M(K1 + K2))|
  long long aut_k1 = 0;
  long long aut_k2 = 0;
  long long product = 0;          // aut_k1 * aut_k2
  bool exception_found = false;   // isomorphic fully-connected subcomplexes
  int exception_bound = 6;        // subset size searched (whole complexes always tried)
  bool predicted_equal = false;   // equality expected iff no exception found
  bool observed_equal = false;

  bool consistent() const { return predicted_equal == observed_equal; }
};

/// Compare |Aut(M(K1 + K2))| with |Aut(K1)| * |Aut(K2)| and search the two
/// Morse complexes for isomorphic fully-connected subcomplexes. The search is
/// bounded by `exception_bound` vertices per subcomplex and therefore can
/// miss exceptions; the report records the bound.
ProductOrderReport product_order_check(const SimplicialComplex& k1,
                                       const SimplicialComplex& k2,
                                       int exception_bound = 6,
                                       int vertex_bound = default_aut_vertex_bound);

}  // namespace morseforge
