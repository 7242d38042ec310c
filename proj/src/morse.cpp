#include "morseforge/morse.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace morseforge {

std::vector<PrimitivePair> primitive_pairs(const Poset& p) {
  std::vector<PrimitivePair> out;
  out.reserve(p.cover_count());
  for (auto [lo, hi] : p.covers()) out.push_back({p.identity(), lo, hi});
  return out;
}

bool compatible(const PrimitivePair& a, const PrimitivePair& b) {
  if (a.source != b.source)
    fail(errc::mixed_sources, "pairs come from different posets");
  return a.lower != b.lower && a.lower != b.upper && a.upper != b.lower && a.upper != b.upper;
}

namespace {

// Cycle detection on the oriented cover graph. Matched covers point up,
// unmatched covers point down; any directed cycle alternates the two, so it
// stays inside one (p, p+1) rank band. matched_partner[x] is the element
// matched with x, or -1.
bool oriented_graph_acyclic(const Poset& p, const std::vector<int>& matched_partner) {
  int n = p.element_count();
  std::vector<char> state(n, 0);  // 0 fresh, 1 on stack, 2 done
  auto visit = [&](auto&& self, int x) -> bool {
    state[x] = 1;
    int mp = matched_partner[x];
    if (mp >= 0 && p.element(mp).rank > p.element(x).rank) {
      if (state[mp] == 1) return false;
      if (state[mp] == 0 && !self(self, mp)) return false;
    }
    for (int l : p.down(x)) {
      if (matched_partner[l] == x) continue;  // matched covers point up
      if (state[l] == 1) return false;
      if (state[l] == 0 && !self(self, l)) return false;
    }
    state[x] = 2;
    return true;
  };
  for (int s = 0; s < n; ++s)
    if (state[s] == 0 && !visit(visit, s)) return false;
  return true;
}

}  // namespace

bool is_acyclic(const Poset& p, const std::vector<std::pair<int, int>>& matching) {
  std::vector<int> matched_partner(p.element_count(), -1);
  for (auto [lo, hi] : matching) {
    bool found = false;
    for (int u : p.up(lo))
      if (u == hi) { found = true; break; }
    if (!found) fail(errc::bad_parameter, "matched pair is not a cover of the poset");
    if (matched_partner[lo] != -1)
      fail(errc::not_a_matching, "element '" + p.element(lo).label + "' is in two pairs");
    if (matched_partner[hi] != -1)
      fail(errc::not_a_matching, "element '" + p.element(hi).label + "' is in two pairs");
    matched_partner[lo] = hi;
    matched_partner[hi] = lo;
  }
  return oriented_graph_acyclic(p, matched_partner);
}

GradientVectorField::GradientVectorField(const Poset& source,
                                         std::vector<std::pair<int, int>> pairs)
    : source_(source.identity()), pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  if (!is_acyclic(source, pairs_)) fail(errc::bad_parameter, "matching has a closed V-path");
}

namespace {

struct Enumerator {
  const Poset& p;
  long long budget;
  std::vector<int> matched_partner;
  std::vector<int> chosen;
  long long count = 0;
  std::vector<std::vector<int>> facets;

  // Scratch for the path search, reused across calls.
  std::vector<int> seen;
  int seen_gen = 0;
  std::vector<int> dfs_stack;

  explicit Enumerator(const Poset& poset, long long b)
      : p(poset), budget(b), matched_partner(poset.element_count(), -1),
        seen(poset.element_count(), 0) {}

  // Adding cover (lo, hi) creates a cycle iff a directed path hi ~> lo
  // already exists that avoids the (lo, hi) cover itself.
  bool stays_acyclic(int lo, int hi) {
    ++seen_gen;
    dfs_stack.clear();
    dfs_stack.push_back(hi);
    seen[hi] = seen_gen;
    while (!dfs_stack.empty()) {
      int x = dfs_stack.back();
      dfs_stack.pop_back();
      if (x == lo) return false;
      int mp = matched_partner[x];
      if (mp >= 0 && p.element(mp).rank > p.element(x).rank && seen[mp] != seen_gen) {
        seen[mp] = seen_gen;
        dfs_stack.push_back(mp);
      }
      for (int l : p.down(x)) {
        if (matched_partner[l] == x) continue;       // matched covers point up
        if (x == hi && l == lo) continue;            // the candidate cover
        if (seen[l] != seen_gen) {
          seen[l] = seen_gen;
          dfs_stack.push_back(l);
        }
      }
    }
    return true;
  }

  void run() {
    extend(-1);
    std::sort(facets.begin(), facets.end());
  }

  void extend(int last) {
    if (!chosen.empty()) {
      if (++count > budget)
        fail(errc::size_limit, "simplex budget of " + std::to_string(budget) + " exceeded");
    }
    bool maximal = true;
    const auto& covers = p.covers();
    for (int j = 0; j < static_cast<int>(covers.size()); ++j) {
      auto [lo, hi] = covers[j];
      if (matched_partner[lo] != -1 || matched_partner[hi] != -1) continue;
      if (!stays_acyclic(lo, hi)) continue;
      maximal = false;
      if (j > last) {
        chosen.push_back(j);
        matched_partner[lo] = hi;
        matched_partner[hi] = lo;
        extend(j);
        matched_partner[lo] = -1;
        matched_partner[hi] = -1;
        chosen.pop_back();
      }
    }
    if (maximal && !chosen.empty()) facets.push_back(chosen);
  }
};

Enumerator enumerate_matchings(const Poset& p, long long budget) {
  if (p.cover_count() == 0) fail(errc::no_covers, "poset has no covers");
  Enumerator e(p, budget);
  e.run();
  return e;
}

std::string pair_text(const Poset& p, int lo, int hi) {
  return "(" + p.element(lo).label + "," + p.element(hi).label + ")";
}

MorseComplex build_morse(const Poset& p, const Enumerator& e) {
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> vertex_pairs;
  for (auto [lo, hi] : p.covers()) {
    labels.push_back(pair_text(p, lo, hi));
    vertex_pairs.emplace_back(lo, hi);
  }
  return MorseComplex{SimplicialComplex::from_vertex_facets(std::move(labels), e.facets),
                      std::move(vertex_pairs), p, {}};
}

}  // namespace

MorseComplex morse_of_poset(const Poset& p, long long budget) {
  Enumerator e = enumerate_matchings(p, budget);
  return build_morse(p, e);
}

std::vector<GradientVectorField> maximal_gvfs(const Poset& p, long long budget) {
  Enumerator e = enumerate_matchings(p, budget);
  std::vector<GradientVectorField> out;
  for (const auto& f : e.facets) {
    std::vector<std::pair<int, int>> pairs;
    for (int j : f) pairs.push_back(p.covers()[j]);
    out.emplace_back(p, std::move(pairs));
  }
  return out;
}

namespace {

// "(s)x" shorthand for the pair (s, s+{x}), available when the poset elements
// are the simplices of a complex.
std::vector<std::string> display_shorthands(const SimplicialComplex& k,
                                            const std::vector<Simplex>& sims,
                                            const std::vector<std::pair<int, int>>& vertex_pairs) {
  std::vector<std::string> out;
  for (auto [lo, hi] : vertex_pairs) {
    const Simplex& s = sims[lo];
    const Simplex& t = sims[hi];
    int extra = -1;
    for (int v : t.verts)
      if (!s.contains(v)) extra = v;
    std::string lab;
    for (int v : s.verts) lab += k.label(v);
    out.push_back("(" + lab + ")" + k.label(extra));
  }
  return out;
}

}  // namespace

MorseComplex morse_complex(const SimplicialComplex& k, long long budget) {
  Poset h = hasse_diagram(k);
  MorseComplex m = morse_of_poset(h, budget);
  m.display = display_shorthands(k, k.all_simplices(), m.vertex_pairs);
  return m;
}

MorseComplex pure_morse_complex(const SimplicialComplex& k, long long budget) {
  MorseComplex full = morse_complex(k, budget);
  std::size_t maxsize = 0;
  for (const Simplex& f : full.complex.facets()) maxsize = std::max(maxsize, f.size());
  std::vector<int> keep;  // old vertex ids, ascending
  {
    std::set<int> used;
    for (const Simplex& f : full.complex.facets())
      if (f.size() == maxsize) used.insert(f.verts.begin(), f.verts.end());
    keep.assign(used.begin(), used.end());
  }
  std::vector<int> remap(full.complex.vertex_count(), -1);
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> vertex_pairs;
  std::vector<std::string> display;
  for (int old : keep) {
    remap[old] = static_cast<int>(labels.size());
    labels.push_back(full.complex.label(old));
    vertex_pairs.push_back(full.vertex_pairs[old]);
    if (!full.display.empty()) display.push_back(full.display[old]);
  }
  std::vector<std::vector<int>> facets;
  for (const Simplex& f : full.complex.facets()) {
    if (f.size() != maxsize) continue;
    std::vector<int> g;
    for (int v : f.verts) g.push_back(remap[v]);
    facets.push_back(std::move(g));
  }
  return MorseComplex{SimplicialComplex::from_vertex_facets(std::move(labels), std::move(facets)),
                      std::move(vertex_pairs), full.source, std::move(display)};
}

}  // namespace morseforge
