#include "morseforge/io.hpp"

#include <cctype>
#include <istream>
#include <map>
#include <sstream>

namespace morseforge {

using nlohmann::json;

json to_json(const SimplicialComplex& k) {
  json facets = json::array();
  for (const Simplex& f : k.facets()) facets.push_back(f.verts);
  return json{{"vertices", k.labels()}, {"facets", facets}};
}

json to_json(const Poset& p) {
  json elements = json::array();
  for (const PosetElement& e : p.elements())
    elements.push_back(json{{"label", e.label}, {"rank", e.rank}});
  json covers = json::array();
  for (auto [lo, hi] : p.covers()) covers.push_back(json::array({lo, hi}));
  return json{{"elements", elements}, {"covers", covers}};
}

json to_json(const MorseComplex& m) {
  json j = to_json(m.complex);
  json pairs = json::array();
  for (auto [lo, hi] : m.vertex_pairs)
    pairs.push_back(json::array({m.source.element(lo).label, m.source.element(hi).label}));
  j["vertex_pairs"] = pairs;
  if (!m.display.empty()) j["display"] = m.display;
  return j;
}

json to_json(const CollapseTrace& t) {
  json steps = json::array();
  for (const CollapseStep& s : t.steps)
    steps.push_back(json{{"removed", s.removed}, {"witness", s.witness}});
  return steps;
}

json to_json(const BettiVector& b, long long euler) {
  std::vector<long long> betti = b.reduced;
  while (betti.size() > 1 && betti.back() == 0) betti.pop_back();
  json j{{"betti", betti},
         {"coeff", b.coeff == Coefficients::z2 ? "Z2" : "Z"},
         {"euler", euler}};
  if (b.coeff == Coefficients::integers) j["torsion"] = b.torsion;
  return j;
}

json to_json(const PermutationGroup& g) {
  return json{{"order", g.order}, {"generators", g.generators}};
}

json to_json(const ProductOrderReport& r) {
  return json{{"aut_morse_union", r.aut_morse_union},
              {"aut_k1", r.aut_k1},
              {"aut_k2", r.aut_k2},
              {"product", r.product},
              {"exception_found", r.exception_found},
              {"exception_bound", r.exception_bound},
              {"predicted_equal", r.predicted_equal},
              {"observed_equal", r.observed_equal},
              {"consistent", r.consistent()}};
}

SimplicialComplex complex_from_json(const json& j) {
  if (!j.contains("vertices") || !j.contains("facets"))
    fail(errc::bad_parameter, "complex JSON needs 'vertices' and 'facets'");
  std::vector<std::string> labels = j.at("vertices").get<std::vector<std::string>>();
  std::vector<std::vector<int>> facets = j.at("facets").get<std::vector<std::vector<int>>>();
  return SimplicialComplex::from_vertex_facets(std::move(labels), std::move(facets));
}

Poset poset_from_json(const json& j) {
  if (!j.contains("elements") || !j.contains("covers"))
    fail(errc::bad_parameter, "poset JSON needs 'elements' and 'covers'");
  std::vector<PosetElement> elements;
  for (const json& e : j.at("elements"))
    elements.push_back({e.at("label").get<std::string>(), e.at("rank").get<int>()});
  std::vector<std::pair<int, int>> covers;
  for (const json& c : j.at("covers")) covers.emplace_back(c.at(0).get<int>(), c.at(1).get<int>());
  return Poset::make(std::move(elements), std::move(covers));
}

namespace {

std::string slurp(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool looks_like_json(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{';
  }
  return false;
}

}  // namespace

SimplicialComplex read_complex(std::istream& in) {
  std::string text = slurp(in);
  if (looks_like_json(text)) return complex_from_json(json::parse(text));
  std::vector<std::vector<std::string>> facets;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::vector<std::string> facet;
    std::string tok;
    while (tokens >> tok) facet.push_back(tok);
    if (!facet.empty()) facets.push_back(std::move(facet));
  }
  if (facets.empty()) fail(errc::empty_input, "no facets in input");
  return SimplicialComplex::from_facets(facets);
}

Poset read_poset(std::istream& in) {
  std::string text = slurp(in);
  if (looks_like_json(text)) return poset_from_json(json::parse(text));
  std::vector<PosetElement> elements;
  std::vector<std::pair<std::string, std::string>> cover_labels;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::string kind;
    if (!(tokens >> kind)) continue;
    if (kind == "elem") {
      std::string label;
      int rank;
      if (!(tokens >> label >> rank)) fail(errc::bad_parameter, "bad elem line: " + line);
      elements.push_back({label, rank});
    } else if (kind == "cover") {
      std::string lo, hi;
      if (!(tokens >> lo >> hi)) fail(errc::bad_parameter, "bad cover line: " + line);
      cover_labels.emplace_back(lo, hi);
    } else {
      fail(errc::bad_parameter, "unknown poset line: " + line);
    }
  }
  std::map<std::string, int> id;
  for (std::size_t i = 0; i < elements.size(); ++i) id[elements[i].label] = static_cast<int>(i);
  std::vector<std::pair<int, int>> covers;
  for (const auto& [lo, hi] : cover_labels) {
    if (!id.count(lo)) fail(errc::unknown_element, "no element labeled '" + lo + "'");
    if (!id.count(hi)) fail(errc::unknown_element, "no element labeled '" + hi + "'");
    covers.emplace_back(id.at(lo), id.at(hi));
  }
  return Poset::make(std::move(elements), std::move(covers));
}

PatternCatalog read_catalog(std::istream& in) {
  PatternCatalog cat;
  std::vector<PosetElement> elements;
  std::vector<std::pair<std::string, std::string>> cover_labels;
  auto flush_block = [&](bool sc, const std::string& name) {
    std::map<std::string, int> id;
    for (std::size_t i = 0; i < elements.size(); ++i) id[elements[i].label] = static_cast<int>(i);
    std::vector<std::pair<int, int>> covers;
    for (const auto& [lo, hi] : cover_labels) {
      if (!id.count(lo)) fail(errc::unknown_element, "no element labeled '" + lo + "'");
      if (!id.count(hi)) fail(errc::unknown_element, "no element labeled '" + hi + "'");
      covers.emplace_back(id.at(lo), id.at(hi));
    }
    Poset p = Poset::make(std::move(elements), std::move(covers));
    elements.clear();
    cover_labels.clear();
    for (CatalogEntry& e : cat.entries)
      if (e.name == name) {
        if (e.strongly_collapsible != sc)
          fail(errc::bad_parameter, "entry '" + name + "' has conflicting verdicts");
        e.instances.push_back(std::move(p));
        return;
      }
    cat.entries.push_back({name, {std::move(p)}, sc});
  };
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::string kind;
    if (!(tokens >> kind)) continue;
    if (kind == "elem") {
      std::string label;
      int rank;
      if (!(tokens >> label >> rank)) fail(errc::bad_parameter, "bad elem line: " + line);
      elements.push_back({label, rank});
    } else if (kind == "cover") {
      std::string lo, hi;
      if (!(tokens >> lo >> hi)) fail(errc::bad_parameter, "bad cover line: " + line);
      cover_labels.emplace_back(lo, hi);
    } else if (kind == "verdict") {
      std::string verdict, name;
      if (!(tokens >> verdict >> name) || (verdict != "sc" && verdict != "not"))
        fail(errc::bad_parameter, "bad verdict line: " + line);
      flush_block(verdict == "sc", name);
    } else {
      fail(errc::bad_parameter, "unknown catalog line: " + line);
    }
  }
  if (!elements.empty()) fail(errc::bad_parameter, "catalog block missing its verdict line");
  verify_catalog(cat);
  return cat;
}

std::string write_catalog_text(const PatternCatalog& catalog) {
  std::ostringstream out;
  for (const CatalogEntry& e : catalog.entries)
    for (const Poset& p : e.instances) {
      out << write_poset_text(p);
      out << "verdict " << (e.strongly_collapsible ? "sc" : "not") << " " << e.name << "\n";
    }
  return out.str();
}

std::string write_cplx(const SimplicialComplex& k) {
  std::ostringstream out;
  for (const Simplex& f : k.facets()) {
    for (std::size_t i = 0; i < f.verts.size(); ++i)
      out << (i ? " " : "") << k.label(f.verts[i]);
    out << "\n";
  }
  return out.str();
}

std::string write_poset_text(const Poset& p) {
  std::ostringstream out;
  for (const PosetElement& e : p.elements()) out << "elem " << e.label << " " << e.rank << "\n";
  for (auto [lo, hi] : p.covers())
    out << "cover " << p.element(lo).label << " " << p.element(hi).label << "\n";
  return out.str();
}

}  // namespace morseforge
