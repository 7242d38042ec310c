// Primitive pairs, acyclic matchings, and Morse complexes of posets and
// simplicial complexes, built by exhaustive canonical-order enumeration.
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "morseforge/complex.hpp"
#include "morseforge/poset.hpp"

namespace morseforge {

/// A single matched cover (lower, upper) of a source poset.
struct PrimitivePair {
  std::uint64_t source = 0;  // identity token of the source poset
  int lower = -1;
  int upper = -1;

  bool operator==(const PrimitivePair&) const = default;
};

inline constexpr long long default_simplex_budget = 5'000'000;

/// One pair per cover, in canonical (lower id, upper id) order.
std::vector<PrimitivePair> primitive_pairs(const Poset& p);

/// Element-disjointness of two pairs over the same source. Disjoint pairs can
/// still be jointly cyclic inside a larger matching; that is is_acyclic's job.
bool compatible(const PrimitivePair& a, const PrimitivePair& b);

/// Orient matched covers upward and all others downward; true iff the
/// resulting directed graph is acyclic. `matching` must be element-disjoint.
bool is_acyclic(const Poset& p, const std::vector<std::pair<int, int>>& matching);

/// An element-disjoint, acyclic set of matched covers; both invariants are
/// checked at construction.
class GradientVectorField {
 public:
  GradientVectorField(const Poset& source, std::vector<std::pair<int, int>> pairs);

  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  std::uint64_t source() const { return source_; }
  std::size_t size() const { return pairs_.size(); }

 private:
  std::uint64_t source_;
  std::vector<std::pair<int, int>> pairs_;  // sorted
};

/// The complex of acyclic matchings of a poset. Vertex i of `complex` is the
/// matched cover vertex_pairs[i]; `display` holds the "(s)x" shorthand when
/// the poset came from a complex.
struct MorseComplex {
  SimplicialComplex complex;
  std::vector<std::pair<int, int>> vertex_pairs;
  Poset source;
  std::vector<std::string> display;

  std::string pair_label(int vertex) const { return complex.label(vertex); }
};

/// Vertices are the covers of p; a set of covers spans a simplex iff it is an
/// element-disjoint acyclic matching. Facets are the inclusion-maximal
/// acyclic matchings. Enumeration is depth-first in canonical pair order and
/// aborts with SizeLimit past `budget` simplices.
MorseComplex morse_of_poset(const Poset& p, long long budget = default_simplex_budget);

/// All inclusion-maximal acyclic matchings, canonically ordered.
std::vector<GradientVectorField> maximal_gvfs(const Poset& p,
                                              long long budget = default_simplex_budget);

/// morse_of_poset(hasse_diagram(k)), with display shorthands attached.
MorseComplex morse_complex(const SimplicialComplex& k,
                           long long budget = default_simplex_budget);

/// Subcomplex generated by the maximum-cardinality facets; the vertex set
/// shrinks to the pairs that appear in some maximum facet.
MorseComplex pure_morse_complex(const SimplicialComplex& k,
                                long long budget = default_simplex_budget);

}  // namespace morseforge
