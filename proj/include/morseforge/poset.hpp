// Finite ranked posets given by cover relations. Hasse diagrams of complexes
// live here, but so do the degenerate diagrams produced by element removal,
// which no complex realizes.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "morseforge/complex.hpp"
#include "morseforge/error.hpp"

namespace morseforge {

struct PosetElement {
  std::string label;
  int rank = 0;
};

/// Immutable ranked poset. Every cover raises rank by exactly one; covers are
/// kept sorted by (lower, upper). Each constructed poset (and its copies)
/// carries an identity token so primitive pairs can be tied to their source.
class Poset {
 public:
  static Poset make(std::vector<PosetElement> elements,
                    std::vector<std::pair<int, int>> covers);

  int element_count() const { return static_cast<int>(elements_.size()); }
  const PosetElement& element(int i) const;
  const std::vector<PosetElement>& elements() const { return elements_; }
  int find_element(const std::string& label) const;  // throws unknown_element
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  int cover_count() const { return static_cast<int>(covers_.size()); }

  /// Elements covering i / covered by i.
  const std::vector<int>& up(int i) const { return up_[i]; }
  const std::vector<int>& down(int i) const { return down_[i]; }

  /// 1 + length of the longest cover chain; 0 for the empty poset.
  int height() const;

  std::uint64_t identity() const { return identity_; }

 private:
  Poset() = default;

  std::vector<PosetElement> elements_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> up_, down_;
  std::uint64_t identity_ = 0;
};

/// One element per simplex of all_simplices(k), rank = dimension, labels the
/// concatenated vertex labels; covers are the codimension-1 face inclusions.
/// Element i corresponds to all_simplices(k)[i].
Poset hasse_diagram(const SimplicialComplex& k);

/// Delete element x together with every incident cover. The result may be a
/// diagram realized by no complex.
Poset remove_element(const Poset& p, int x);

Poset poset_disjoint_union(const Poset& p, const Poset& q);

/// The complement involution on the proper faces of the full simplex,
/// expressed on the elements of hasse_diagram(boundary_simplex(n)). It sends
/// rank p to rank n-1-p and reverses covers.
struct ReflectionMap {
  Poset poset;                // hasse_diagram(boundary_simplex(n))
  std::vector<int> mapping;   // element -> element, an involution
};
ReflectionMap reflection(int n);  // n >= 2

/// Diagram isomorphism: a cover-preserving bijection matching rank levels,
/// where turning one diagram upside down is allowed. The flip is harmless for
/// every use here because a matching is acyclic on a diagram exactly when it
/// is acyclic on the reversed diagram.
bool diagram_isomorphic(const Poset& p, const Poset& q);

struct Height2Scan {
  std::vector<Poset> subposets;
  bool truncated = false;  // element bound was hit somewhere
};

/// Subdiagrams of height exactly 2 inside each consecutive-rank band,
/// deduplicated up to diagram isomorphism: every union of connected
/// components of the band, plus every subdiagram obtained by deleting an
/// independent set of elements from the band. Bands (or candidates) larger
/// than `element_bound` are skipped and reported via `truncated`.
Height2Scan height2_subposets(const Poset& p, int element_bound = 12);

}  // namespace morseforge
