#include "morseforge/collapse.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace morseforge {

std::vector<int> dominators(const SimplicialComplex& k, int u) {
  std::vector<Simplex> fs = k.facets_containing(u);
  std::set<int> common(fs.front().verts.begin(), fs.front().verts.end());
  for (std::size_t i = 1; i < fs.size() && !common.empty(); ++i) {
    std::set<int> next;
    for (int v : fs[i].verts)
      if (common.count(v)) next.insert(v);
    common = std::move(next);
  }
  common.erase(u);
  return {common.begin(), common.end()};
}

std::optional<int> dominating_vertex(const SimplicialComplex& k, int u) {
  std::vector<int> ds = dominators(k, u);
  if (ds.empty()) return std::nullopt;
  return ds.front();
}

SimplicialComplex strong_collapse_step(const SimplicialComplex& k, int u) {
  if (!dominating_vertex(k, u))
    fail(errc::not_dominated, "vertex '" + k.label(u) + "' is not dominated");
  std::vector<std::vector<std::string>> facets;
  for (const Simplex& f : k.facets()) {
    std::vector<std::string> fl;
    for (int v : f.verts)
      if (v != u) fl.push_back(k.label(v));
    if (!fl.empty()) facets.push_back(std::move(fl));
  }
  return SimplicialComplex::from_facets(facets);
}

CoreResult core_with_choice(
    const SimplicialComplex& k,
    const std::function<std::size_t(const std::vector<std::pair<int, int>>&)>& choose) {
  CoreResult r{k, {}};
  for (;;) {
    std::vector<std::pair<int, int>> candidates;
    for (int v = 0; v < r.core.vertex_count(); ++v)
      if (auto w = dominating_vertex(r.core, v)) candidates.emplace_back(v, *w);
    if (candidates.empty()) break;
    auto [v, w] = candidates[choose(candidates)];
    r.trace.steps.push_back({r.core.label(v), r.core.label(w)});
    r.core = strong_collapse_step(r.core, v);
  }
  return r;
}

CoreResult core(const SimplicialComplex& k) {
  return core_with_choice(k, [](const std::vector<std::pair<int, int>>&) { return 0; });
}

bool is_strongly_collapsible(const SimplicialComplex& k) {
  return core(k).core.vertex_count() == 1;
}

bool is_minimal(const SimplicialComplex& k) {
  for (int v = 0; v < k.vertex_count(); ++v)
    if (dominating_vertex(k, v)) return false;
  return true;
}

bool verify_leaf_collapse(const SimplicialComplex& k, int v, long long budget) {
  if (v < 0 || v >= k.vertex_count()) fail(errc::unknown_vertex, "vertex id out of range");
  if (!k.connected() || k.dimension() < 1)
    fail(errc::bad_parameter, "need a connected complex with at least one edge");

  SimplicialComplex kl = attach_leaf(k, v);
  const std::string v_label = k.label(v);
  const std::string w_label = kl.labels().back();
  MorseComplex m = morse_complex(kl, budget);

  // Pairs (v, va) for the old neighbors a of v, and the witness (w, vw).
  // The fresh vertex has the last id, so the leaf edge is labeled v then w.
  Poset h = hasse_diagram(kl);
  const std::string leaf_edge = v_label + w_label;
  const std::string witness_label = "(" + w_label + "," + leaf_edge + ")";
  std::vector<std::string> removals;
  {
    int ve = h.find_element(v_label);
    for (int e : h.up(ve)) {
      const std::string& upper = h.element(e).label;
      if (upper != leaf_edge) removals.push_back("(" + v_label + "," + upper + ")");
    }
    std::sort(removals.begin(), removals.end());
  }

  SimplicialComplex cur = m.complex;
  for (const std::string& lab : removals) {
    int u = cur.vertex(lab);
    std::vector<int> ds = dominators(cur, u);
    int witness = cur.vertex(witness_label);
    if (std::find(ds.begin(), ds.end(), witness) == ds.end()) return false;
    cur = strong_collapse_step(cur, u);
  }

  Poset hk = hasse_diagram(k);
  Poset detached = poset_disjoint_union(
      remove_element(hk, hk.find_element(v_label)),
      hasse_diagram(SimplicialComplex::from_facets({{v_label, w_label}})));
  MorseComplex target = morse_of_poset(detached, budget);
  return equal_as_labeled(cur, target.complex);
}

namespace {

Poset two_level(const std::vector<std::string>& bottoms, const std::vector<std::string>& tops,
                const std::vector<std::pair<std::string, std::string>>& covers) {
  std::vector<PosetElement> elements;
  std::map<std::string, int> id;
  for (const std::string& b : bottoms) {
    id[b] = static_cast<int>(elements.size());
    elements.push_back({b, 0});
  }
  for (const std::string& t : tops) {
    id[t] = static_cast<int>(elements.size());
    elements.push_back({t, 1});
  }
  std::vector<std::pair<int, int>> cs;
  for (const auto& [lo, hi] : covers) cs.emplace_back(id.at(lo), id.at(hi));
  return Poset::make(std::move(elements), std::move(cs));
}

Poset pattern_one_edge() { return two_level({"a"}, {"ab"}, {{"a", "ab"}}); }

// Two bottoms sharing one top, one private top each.
Poset pattern_shared_top() {
  return two_level({"a", "b"}, {"ab", "ac", "bd"},
                   {{"a", "ac"}, {"a", "ab"}, {"b", "ab"}, {"b", "bd"}});
}

// Two bottoms sharing one top, k >= 2 private tops on one side.
Poset pattern_lopsided(int k) {
  std::vector<std::string> tops{"ab", "bb1"};
  std::vector<std::pair<std::string, std::string>> covers{{"a", "ab"}, {"b", "ab"}, {"b", "bb1"}};
  for (int i = 1; i <= k; ++i) {
    std::string t = "aa" + std::to_string(i);
    tops.push_back(t);
    covers.emplace_back("a", t);
  }
  return two_level({"a", "b"}, tops, covers);
}

// Two bottoms sharing one top, k >= 2 private tops on both sides.
Poset pattern_balanced(int k) {
  std::vector<std::string> tops{"ab"};
  std::vector<std::pair<std::string, std::string>> covers{{"a", "ab"}, {"b", "ab"}};
  for (int i = 1; i <= k; ++i) {
    std::string ta = "aa" + std::to_string(i), tb = "bb" + std::to_string(i);
    tops.push_back(ta);
    tops.push_back(tb);
    covers.emplace_back("a", ta);
    covers.emplace_back("b", tb);
  }
  return two_level({"a", "b"}, tops, covers);
}

// Three bottoms: a hub sharing a top with each of b and c, one private top
// per bottom vertex.
Poset pattern_three_bottom() {
  return two_level({"a", "b", "c"}, {"aa", "ab", "ac", "bb", "cc"},
                   {{"a", "aa"},
                    {"a", "ab"},
                    {"a", "ac"},
                    {"b", "ab"},
                    {"b", "bb"},
                    {"c", "ac"},
                    {"c", "cc"}});
}

}  // namespace

PatternCatalog builtin_catalog() {
  PatternCatalog cat;
  cat.entries.push_back({"one-edge", {pattern_one_edge()}, true});
  cat.entries.push_back({"shared-top", {pattern_shared_top()}, true});
  {
    CatalogEntry e{"lopsided", {}, false};
    for (int k = 2; k <= 4; ++k) e.instances.push_back(pattern_lopsided(k));
    cat.entries.push_back(std::move(e));
  }
  {
    CatalogEntry e{"balanced", {}, false};
    for (int k = 2; k <= 4; ++k) e.instances.push_back(pattern_balanced(k));
    cat.entries.push_back(std::move(e));
  }
  cat.entries.push_back({"three-bottom", {pattern_three_bottom()}, true});
  verify_catalog(cat);
  return cat;
}

void verify_catalog(const PatternCatalog& catalog) {
  for (const CatalogEntry& e : catalog.entries)
    for (const Poset& inst : e.instances) {
      bool sc = is_strongly_collapsible(morse_of_poset(inst).complex);
      if (sc != e.strongly_collapsible)
        fail(errc::consistency_error,
             "catalog entry '" + e.name + "' fails its recorded verdict");
    }
}

Alg1Report algorithm1(const SimplicialComplex& k, const PatternCatalog& catalog,
                      int element_bound) {
  if (k.dimension() > 1) fail(errc::not_a_graph, "input must have dimension at most 1");
  Alg1Report report;
  Height2Scan scan = height2_subposets(hasse_diagram(k), element_bound);
  report.truncated = scan.truncated;
  for (const Poset& sub : scan.subposets)
    for (const CatalogEntry& e : catalog.entries) {
      if (!e.strongly_collapsible) continue;
      for (const Poset& inst : e.instances)
        if (diagram_isomorphic(sub, inst)) {
          report.matched = true;
          report.pattern = e.name;
          return report;
        }
    }
  return report;
}

}  // namespace morseforge
