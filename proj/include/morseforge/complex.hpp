// Finite abstract simplicial complexes, stored by their facets, plus the
// graph/complex families and combinatorial operations used everywhere else.
#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "morseforge/error.hpp"

namespace morseforge {

/// A simplex: sorted, duplicate-free, nonempty list of vertex ids.
struct Simplex {
  std::vector<int> verts;

  Simplex() = default;
  explicit Simplex(std::vector<int> v);

  int dim() const { return static_cast<int>(verts.size()) - 1; }
  std::size_t size() const { return verts.size(); }
  bool contains(int v) const;
  bool subset_of(const Simplex& other) const;

  auto operator<=>(const Simplex&) const = default;
};

/// Canonical order used for simplex enumerations: by dimension, then
/// lexicographically on vertex ids.
bool canonical_simplex_less(const Simplex& a, const Simplex& b);

/// A labeled finite abstract simplicial complex.
///
/// Only facets are stored; faces are implied. Invariants: the facet set is an
/// antichain, ids are contiguous 0..n-1, labels are unique, and every vertex
/// lies in at least one facet. Empty complexes and empty simplices are
/// rejected at every boundary. Values are immutable after construction.
class SimplicialComplex {
 public:
  static SimplicialComplex from_facets(const std::vector<std::vector<std::string>>& facet_labels);

  /// Construct from an explicit label list and id facets (JSON input path).
  static SimplicialComplex from_vertex_facets(std::vector<std::string> labels,
                                              std::vector<std::vector<int>> facets);

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int v) const;
  int vertex(const std::string& label) const;  // throws unknown_vertex
  std::optional<int> find_vertex(const std::string& label) const;

  const std::vector<Simplex>& facets() const { return facets_; }
  int facet_count() const { return static_cast<int>(facets_.size()); }
  int dimension() const;

  /// Downward closure: every nonempty face of every facet, each once, in
  /// canonical order.
  std::vector<Simplex> all_simplices() const;

  /// The inclusion-maximal simplices containing v.
  std::vector<Simplex> facets_containing(int v) const;

  bool has_simplex(const Simplex& s) const;
  long long euler_characteristic() const;
  bool connected() const;

  /// Vertices adjacent to v in the 1-skeleton.
  std::vector<int> neighbors(int v) const;

  bool operator==(const SimplicialComplex& other) const {
    return labels_ == other.labels_ && facets_ == other.facets_;
  }

 private:
  SimplicialComplex() = default;

  std::vector<std::string> labels_;
  std::vector<Simplex> facets_;          // canonical (lexicographic) order
  std::vector<std::uint64_t> facet_masks_;  // bitset fast path, vertex_count <= 64

  void canonicalize();
  friend SimplicialComplex join(const SimplicialComplex&, const SimplicialComplex&);
  friend SimplicialComplex disjoint_union(const SimplicialComplex&, const SimplicialComplex&);
};

SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l);
SimplicialComplex disjoint_union(const SimplicialComplex& k, const SimplicialComplex& l);

/// Attach a fresh leaf at vertex v; the new vertex gets the last id.
SimplicialComplex attach_leaf(const SimplicialComplex& k, int v);

/// Subcomplex of all simplices contained in the vertex set `verts`.
SimplicialComplex induced(const SimplicialComplex& k, const std::vector<int>& verts);

/// Vertex bijection carrying facets of k onto facets of l, if one exists.
/// Deterministic: the lexicographically least bijection in vertex-id order.
std::optional<std::vector<int>> are_isomorphic(const SimplicialComplex& k,
                                               const SimplicialComplex& l);

/// Every facet-preserving vertex bijection k -> l.
std::vector<std::vector<int>> all_isomorphisms(const SimplicialComplex& k,
                                               const SimplicialComplex& l);

/// Equality as labeled complexes: same vertex label set and the same facets
/// when facets are read as sets of labels. Vertex ids may differ.
bool equal_as_labeled(const SimplicialComplex& a, const SimplicialComplex& b);

// Families. Small paths are labeled u, v, w, ... and cycles a, b, c, ... so
// that worked examples read naturally; larger instances fall back to indexed
// labels.
SimplicialComplex path_complex(int t);             // t >= 1 edges, t+1 vertices
SimplicialComplex cycle_complex(int n);            // n >= 3
SimplicialComplex boundary_simplex(int n);         // proper faces of an (n+1)-vertex simplex, n >= 1
SimplicialComplex full_simplex(int n);             // n >= 0
SimplicialComplex star_complex(int k);             // one center, k >= 1 leaves
SimplicialComplex leafify(const SimplicialComplex& g);  // one fresh leaf per vertex
SimplicialComplex centipede(int v);                // leafify of a path on v >= 1 vertices

}  // namespace morseforge
