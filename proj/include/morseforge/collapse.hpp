// Dominated vertices, elementary strong collapses, cores, and the height-2
// pattern machinery for deciding strong collapsibility of Morse complexes.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "morseforge/complex.hpp"
#include "morseforge/morse.hpp"
#include "morseforge/poset.hpp"

namespace morseforge {

/// The least vertex v != u lying in every facet that contains u, if any.
std::optional<int> dominating_vertex(const SimplicialComplex& k, int u);

/// Every vertex dominating u (for property checks).
std::vector<int> dominators(const SimplicialComplex& k, int u);

/// Remove every simplex containing u. Requires u to be dominated.
SimplicialComplex strong_collapse_step(const SimplicialComplex& k, int u);

struct CollapseStep {
  std::string removed;
  std::string witness;
};

struct CollapseTrace {
  std::vector<CollapseStep> steps;
};

struct CoreResult {
  SimplicialComplex core;
  CollapseTrace trace;
};

/// Repeatedly remove the least dominated vertex until none remains. The
/// result is independent of the removal order up to isomorphism; the tests
/// assert that rather than the algorithm assuming it.
CoreResult core(const SimplicialComplex& k);

/// Same loop with a caller-chosen tie-break among the currently dominated
/// vertices; `choose` gets the candidate (vertex, witness) list.
CoreResult core_with_choice(
    const SimplicialComplex& k,
    const std::function<std::size_t(const std::vector<std::pair<int, int>>&)>& choose);

bool is_strongly_collapsible(const SimplicialComplex& k);
bool is_minimal(const SimplicialComplex& k);

/// Attach a leaf at v, build the Morse complex, perform the dominations that
/// detach v's old covers (each removed pair (v,va) must be dominated by the
/// new leaf pair), and compare the result with the Morse complex of the
/// detached diagram, as labeled complexes.
bool verify_leaf_collapse(const SimplicialComplex& k, int v,
                          long long budget = default_simplex_budget);

struct CatalogEntry {
  std::string name;
  std::vector<Poset> instances;
  bool strongly_collapsible = false;
};

struct PatternCatalog {
  std::vector<CatalogEntry> entries;
};

/// The five built-in height-2 patterns (one edge; the two-bottom pattern with
/// one extra leaf per side; its two non-collapsible generalizations for
/// k = 2..4; and a three-bottom pattern). Every instance is re-verified at
/// load by collapsing its Morse complex; a mismatch is a ConsistencyError.
PatternCatalog builtin_catalog();

/// Recompute every instance's verdict; throws ConsistencyError on mismatch.
void verify_catalog(const PatternCatalog& catalog);

struct Alg1Report {
  bool matched = false;
  std::string pattern;   // entry name when matched
  bool truncated = false;
};

/// Scan the height-2 subdiagrams of the Hasse diagram of a graph against the
/// catalog's strongly-collapsible patterns. A match is a heuristic "yes";
/// soundness would additionally need the matched subdiagram to sit as a
/// detached component, so callers should pair this with the exact check.
Alg1Report algorithm1(const SimplicialComplex& k, const PatternCatalog& catalog,
                      int element_bound = 12);

}  // namespace morseforge
