// Text and JSON interchange for complexes, posets, and derived objects.
//
// ".cplx": one facet per line, whitespace-separated vertex tokens, '#'
// comments and blank lines ignored.
// ".poset": "elem <label> <rank>" lines then "cover <lowerLabel> <upperLabel>"
// lines, same comment rules.
// JSON complex: {"vertices":[labels...],"facets":[[ids...]...]} with ids
// sorted and facets sorted lexicographically.
#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "morseforge/collapse.hpp"
#include "morseforge/complex.hpp"
#include "morseforge/homology.hpp"
#include "morseforge/morse.hpp"
#include "morseforge/poset.hpp"
#include "morseforge/symmetry.hpp"

namespace morseforge {

nlohmann::json to_json(const SimplicialComplex& k);
nlohmann::json to_json(const Poset& p);
nlohmann::json to_json(const MorseComplex& m);
nlohmann::json to_json(const CollapseTrace& t);
nlohmann::json to_json(const BettiVector& b, long long euler);
nlohmann::json to_json(const PermutationGroup& g);
nlohmann::json to_json(const ProductOrderReport& r);

SimplicialComplex complex_from_json(const nlohmann::json& j);
Poset poset_from_json(const nlohmann::json& j);

/// Reads either the ".cplx" text form or the JSON form (sniffed on '{').
SimplicialComplex read_complex(std::istream& in);
Poset read_poset(std::istream& in);

std::string write_cplx(const SimplicialComplex& k);
std::string write_poset_text(const Poset& p);

/// Pattern catalog files: blocks of ".poset" lines, each closed by a line
/// "verdict sc|not <entry-name>". Blocks sharing a name become instances of
/// one entry. Loaded catalogs are re-verified (ConsistencyError on mismatch).
PatternCatalog read_catalog(std::istream& in);
std::string write_catalog_text(const PatternCatalog& catalog);

}  // namespace morseforge
