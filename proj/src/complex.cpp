#include "morseforge/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace morseforge {

const char* errc_name(errc c) {
  switch (c) {
    case errc::empty_input: return "EmptyInput";
    case errc::duplicate_vertex_in_facet: return "DuplicateVertexInFacet";
    case errc::unknown_vertex: return "UnknownVertex";
    case errc::bad_parameter: return "BadParameter";
    case errc::unknown_element: return "UnknownElement";
    case errc::mixed_sources: return "MixedSources";
    case errc::not_a_matching: return "NotAMatching";
    case errc::no_covers: return "NoCovers";
    case errc::size_limit: return "SizeLimit";
    case errc::not_dominated: return "NotDominated";
    case errc::not_a_graph: return "NotAGraph";
    case errc::consistency_error: return "ConsistencyError";
    case errc::bad_subset: return "BadSubset";
    case errc::hypothesis_violation: return "HypothesisViolation";
  }
  return "Error";
}

Simplex::Simplex(std::vector<int> v) : verts(std::move(v)) {
  if (verts.empty()) fail(errc::empty_input, "empty simplex");
  std::sort(verts.begin(), verts.end());
  if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
    fail(errc::duplicate_vertex_in_facet, "simplex repeats a vertex");
}

bool Simplex::contains(int v) const {
  return std::binary_search(verts.begin(), verts.end(), v);
}

bool Simplex::subset_of(const Simplex& other) const {
  return std::includes(other.verts.begin(), other.verts.end(), verts.begin(), verts.end());
}

bool canonical_simplex_less(const Simplex& a, const Simplex& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.verts < b.verts;
}

namespace {

std::uint64_t mask_of(const Simplex& s) {
  std::uint64_t m = 0;
  for (int v : s.verts) m |= std::uint64_t{1} << v;
  return m;
}

}  // namespace

void SimplicialComplex::canonicalize() {
  // Drop duplicate facets and facets contained in another (antichain).
  std::sort(facets_.begin(), facets_.end(),
            [](const Simplex& a, const Simplex& b) { return a.size() > b.size(); });
  std::vector<Simplex> kept;
  const bool small = vertex_count() <= 64;
  std::vector<std::uint64_t> kept_masks;
  for (const Simplex& f : facets_) {
    bool redundant = false;
    if (small) {
      std::uint64_t m = mask_of(f);
      for (std::uint64_t km : kept_masks)
        if ((m & km) == m) { redundant = true; break; }
      if (!redundant) kept_masks.push_back(m);
    } else {
      for (const Simplex& k : kept)
        if (f.subset_of(k)) { redundant = true; break; }
    }
    if (!redundant) kept.push_back(f);
  }
  facets_ = std::move(kept);
  std::sort(facets_.begin(), facets_.end(),
            [](const Simplex& a, const Simplex& b) { return a.verts < b.verts; });
  facet_masks_.clear();
  if (small)
    for (const Simplex& f : facets_) facet_masks_.push_back(mask_of(f));
}

SimplicialComplex SimplicialComplex::from_facets(
    const std::vector<std::vector<std::string>>& facet_labels) {
  if (facet_labels.empty()) fail(errc::empty_input, "no facets given");
  SimplicialComplex k;
  std::unordered_map<std::string, int> ids;
  for (const auto& fl : facet_labels) {
    if (fl.empty()) fail(errc::empty_input, "facet with no vertices");
    std::vector<int> f;
    std::set<std::string> seen;
    for (const std::string& lab : fl) {
      if (!seen.insert(lab).second)
        fail(errc::duplicate_vertex_in_facet, "label '" + lab + "' repeated in one facet");
      auto it = ids.find(lab);
      if (it == ids.end()) {
        it = ids.emplace(lab, static_cast<int>(k.labels_.size())).first;
        k.labels_.push_back(lab);
      }
      f.push_back(it->second);
    }
    k.facets_.emplace_back(std::move(f));
  }
  k.canonicalize();
  return k;
}

SimplicialComplex SimplicialComplex::from_vertex_facets(std::vector<std::string> labels,
                                                        std::vector<std::vector<int>> facets) {
  if (labels.empty() || facets.empty()) fail(errc::empty_input, "empty complex");
  {
    std::set<std::string> uniq(labels.begin(), labels.end());
    if (uniq.size() != labels.size()) fail(errc::bad_parameter, "labels are not unique");
  }
  SimplicialComplex k;
  k.labels_ = std::move(labels);
  std::vector<char> used(k.labels_.size(), 0);
  for (auto& f : facets) {
    for (int v : f) {
      if (v < 0 || v >= k.vertex_count()) fail(errc::bad_parameter, "facet vertex id out of range");
      used[v] = 1;
    }
    k.facets_.emplace_back(std::move(f));
  }
  for (std::size_t v = 0; v < used.size(); ++v)
    if (!used[v]) fail(errc::bad_parameter, "vertex '" + k.labels_[v] + "' lies in no facet");
  k.canonicalize();
  return k;
}

const std::string& SimplicialComplex::label(int v) const {
  if (v < 0 || v >= vertex_count()) fail(errc::unknown_vertex, "vertex id out of range");
  return labels_[v];
}

int SimplicialComplex::vertex(const std::string& label) const {
  auto v = find_vertex(label);
  if (!v) fail(errc::unknown_vertex, "no vertex labeled '" + label + "'");
  return *v;
}

std::optional<int> SimplicialComplex::find_vertex(const std::string& label) const {
  for (int v = 0; v < vertex_count(); ++v)
    if (labels_[v] == label) return v;
  return std::nullopt;
}

int SimplicialComplex::dimension() const {
  int d = 0;
  for (const Simplex& f : facets_) d = std::max(d, f.dim());
  return d;
}

std::vector<Simplex> SimplicialComplex::all_simplices() const {
  std::vector<Simplex> out;
  if (vertex_count() <= 64) {
    std::unordered_set<std::uint64_t> seen;
    std::vector<int> cur;
    for (const Simplex& f : facets_) {
      const auto& vs = f.verts;
      // Walk all nonempty subsets of the facet.
      auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == vs.size()) {
          if (cur.empty()) return;
          std::uint64_t m = 0;
          for (int v : cur) m |= std::uint64_t{1} << v;
          if (seen.insert(m).second) out.emplace_back(cur);
          return;
        }
        self(self, i + 1);
        cur.push_back(vs[i]);
        self(self, i + 1);
        cur.pop_back();
      };
      rec(rec, 0);
    }
  } else {
    std::set<std::vector<int>> seen;
    std::vector<int> cur;
    for (const Simplex& f : facets_) {
      const auto& vs = f.verts;
      auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == vs.size()) {
          if (!cur.empty() && seen.insert(cur).second) out.emplace_back(cur);
          return;
        }
        self(self, i + 1);
        cur.push_back(vs[i]);
        self(self, i + 1);
        cur.pop_back();
      };
      rec(rec, 0);
    }
  }
  std::sort(out.begin(), out.end(), canonical_simplex_less);
  return out;
}

std::vector<Simplex> SimplicialComplex::facets_containing(int v) const {
  if (v < 0 || v >= vertex_count()) fail(errc::unknown_vertex, "vertex id out of range");
  std::vector<Simplex> out;
  if (!facet_masks_.empty()) {
    std::uint64_t bit = std::uint64_t{1} << v;
    for (std::size_t i = 0; i < facets_.size(); ++i)
      if (facet_masks_[i] & bit) out.push_back(facets_[i]);
  } else {
    for (const Simplex& f : facets_)
      if (f.contains(v)) out.push_back(f);
  }
  return out;
}

bool SimplicialComplex::has_simplex(const Simplex& s) const {
  if (!facet_masks_.empty()) {
    std::uint64_t m = mask_of(s);
    for (std::uint64_t fm : facet_masks_)
      if ((m & fm) == m) return true;
    return false;
  }
  for (const Simplex& f : facets_)
    if (s.subset_of(f)) return true;
  return false;
}

long long SimplicialComplex::euler_characteristic() const {
  long long chi = 0;
  for (const Simplex& s : all_simplices()) chi += (s.dim() % 2 == 0) ? 1 : -1;
  return chi;
}

bool SimplicialComplex::connected() const {
  std::vector<int> parent(vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Simplex& f : facets_)
    for (std::size_t i = 1; i < f.verts.size(); ++i) parent[find(f.verts[i])] = find(f.verts[0]);
  int root = find(0);
  for (int v = 1; v < vertex_count(); ++v)
    if (find(v) != root) return false;
  return true;
}

std::vector<int> SimplicialComplex::neighbors(int v) const {
  if (v < 0 || v >= vertex_count()) fail(errc::unknown_vertex, "vertex id out of range");
  std::set<int> nb;
  for (const Simplex& f : facets_)
    if (f.contains(v))
      for (int u : f.verts)
        if (u != v) nb.insert(u);
  return {nb.begin(), nb.end()};
}

namespace {

// Right-hand labels are suffixed until they avoid the left-hand label set.
std::vector<std::string> disambiguated(const std::vector<std::string>& left,
                                       const std::vector<std::string>& right) {
  std::set<std::string> taken(left.begin(), left.end());
  std::vector<std::string> out;
  for (const std::string& lab : right) {
    std::string cand = lab;
    while (taken.count(cand)) cand += "#L";
    taken.insert(cand);
    out.push_back(cand);
  }
  return out;
}

}  // namespace

SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l) {
  SimplicialComplex out;
  out.labels_ = k.labels_;
  for (const std::string& lab : disambiguated(k.labels_, l.labels_)) out.labels_.push_back(lab);
  int shift = k.vertex_count();
  for (const Simplex& f : k.facets_)
    for (const Simplex& g : l.facets_) {
      std::vector<int> u = f.verts;
      for (int v : g.verts) u.push_back(v + shift);
      out.facets_.emplace_back(std::move(u));
    }
  out.canonicalize();
  return out;
}

SimplicialComplex disjoint_union(const SimplicialComplex& k, const SimplicialComplex& l) {
  SimplicialComplex out;
  out.labels_ = k.labels_;
  for (const std::string& lab : disambiguated(k.labels_, l.labels_)) out.labels_.push_back(lab);
  int shift = k.vertex_count();
  out.facets_ = k.facets_;
  for (const Simplex& g : l.facets_) {
    std::vector<int> u;
    for (int v : g.verts) u.push_back(v + shift);
    out.facets_.emplace_back(std::move(u));
  }
  out.canonicalize();
  return out;
}

SimplicialComplex attach_leaf(const SimplicialComplex& k, int v) {
  if (v < 0 || v >= k.vertex_count()) fail(errc::unknown_vertex, "vertex id out of range");
  std::string fresh = k.label(v) + "'";
  while (k.find_vertex(fresh)) fresh += "'";
  // Keep existing vertex ids stable; the fresh vertex takes the last id.
  std::vector<std::string> labels = k.labels();
  labels.push_back(fresh);
  std::vector<std::vector<int>> facets;
  for (const Simplex& f : k.facets()) facets.push_back(f.verts);
  facets.push_back({v, k.vertex_count()});
  return SimplicialComplex::from_vertex_facets(std::move(labels), std::move(facets));
}

SimplicialComplex induced(const SimplicialComplex& k, const std::vector<int>& verts) {
  if (verts.empty()) fail(errc::bad_subset, "empty vertex subset");
  std::set<int> u(verts.begin(), verts.end());
  if (u.size() != verts.size()) fail(errc::bad_subset, "vertex subset repeats an id");
  for (int v : u)
    if (v < 0 || v >= k.vertex_count()) fail(errc::bad_subset, "vertex id out of range");
  std::vector<std::vector<std::string>> facets;
  for (const Simplex& f : k.facets()) {
    std::vector<std::string> fl;
    for (int x : f.verts)
      if (u.count(x)) fl.push_back(k.label(x));
    if (!fl.empty()) facets.push_back(std::move(fl));
  }
  // Every vertex of U is itself a simplex of K, so it shows up above.
  return SimplicialComplex::from_facets(facets);
}

namespace {

struct IsoSearch {
  const SimplicialComplex& k;
  const SimplicialComplex& l;
  int n;
  std::vector<std::vector<char>> adj_k, adj_l;
  std::vector<std::pair<int, std::vector<int>>> inv_k, inv_l;  // (degree, facet sizes)
  std::set<std::vector<int>> l_facets;
  std::vector<int> map;       // k -> l
  std::vector<char> used;     // l side
  bool collect_all = false;
  std::vector<std::vector<int>> all;
  std::optional<std::vector<int>> first;

  IsoSearch(const SimplicialComplex& a, const SimplicialComplex& b) : k(a), l(b), n(a.vertex_count()) {
    auto adj = [](const SimplicialComplex& c) {
      std::vector<std::vector<char>> m(c.vertex_count(), std::vector<char>(c.vertex_count(), 0));
      for (const Simplex& f : c.facets())
        for (std::size_t i = 0; i < f.verts.size(); ++i)
          for (std::size_t j = i + 1; j < f.verts.size(); ++j)
            m[f.verts[i]][f.verts[j]] = m[f.verts[j]][f.verts[i]] = 1;
      return m;
    };
    auto inv = [](const SimplicialComplex& c) {
      std::vector<std::pair<int, std::vector<int>>> out(c.vertex_count());
      for (int v = 0; v < c.vertex_count(); ++v) {
        std::vector<int> sizes;
        for (const Simplex& f : c.facets())
          if (f.contains(v)) sizes.push_back(static_cast<int>(f.size()));
        std::sort(sizes.begin(), sizes.end());
        out[v] = {static_cast<int>(sizes.size()), std::move(sizes)};
      }
      return out;
    };
    adj_k = adj(a);
    adj_l = adj(b);
    inv_k = inv(a);
    inv_l = inv(b);
    for (const Simplex& f : b.facets()) l_facets.insert(f.verts);
    map.assign(n, -1);
    used.assign(b.vertex_count(), 0);
  }

  bool feasible() const {
    if (k.vertex_count() != l.vertex_count()) return false;
    if (k.facet_count() != l.facet_count()) return false;
    std::vector<int> sk, sl;
    for (const Simplex& f : k.facets()) sk.push_back(static_cast<int>(f.size()));
    for (const Simplex& f : l.facets()) sl.push_back(static_cast<int>(f.size()));
    std::sort(sk.begin(), sk.end());
    std::sort(sl.begin(), sl.end());
    return sk == sl;
  }

  bool full_check() const {
    for (const Simplex& f : k.facets()) {
      std::vector<int> img;
      for (int v : f.verts) img.push_back(map[v]);
      std::sort(img.begin(), img.end());
      if (!l_facets.count(img)) return false;
    }
    return true;  // same facet count and injective map, hence a bijection
  }

  bool extend(int pos) {
    if (pos == n) {
      if (!full_check()) return false;
      if (collect_all) {
        all.push_back(map);
        return false;  // keep searching
      }
      first = map;
      return true;
    }
    for (int c = 0; c < n; ++c) {
      if (used[c] || inv_k[pos] != inv_l[c]) continue;
      bool ok = true;
      for (int p = 0; p < pos && ok; ++p)
        if (adj_k[p][pos] != adj_l[map[p]][c]) ok = false;
      if (!ok) continue;
      map[pos] = c;
      used[c] = 1;
      if (extend(pos + 1)) return true;
      used[c] = 0;
      map[pos] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> are_isomorphic(const SimplicialComplex& k,
                                               const SimplicialComplex& l) {
  IsoSearch s(k, l);
  if (!s.feasible()) return std::nullopt;
  s.extend(0);
  return s.first;
}

std::vector<std::vector<int>> all_isomorphisms(const SimplicialComplex& k,
                                               const SimplicialComplex& l) {
  IsoSearch s(k, l);
  if (!s.feasible()) return {};
  s.collect_all = true;
  s.extend(0);
  return s.all;
}

bool equal_as_labeled(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::set<std::string> la(a.labels().begin(), a.labels().end());
  std::set<std::string> lb(b.labels().begin(), b.labels().end());
  if (la != lb) return false;
  auto facet_labels = [](const SimplicialComplex& c) {
    std::set<std::set<std::string>> out;
    for (const Simplex& f : c.facets()) {
      std::set<std::string> fl;
      for (int v : f.verts) fl.insert(c.label(v));
      out.insert(std::move(fl));
    }
    return out;
  };
  return facet_labels(a) == facet_labels(b);
}

namespace {

const char* path_letters[6] = {"u", "v", "w", "x", "y", "z"};

std::string path_label(int i, int count) {
  if (count <= 6) return path_letters[i];
  return "v" + std::to_string(i);
}

std::string cycle_label(int i, int count) {
  if (count <= 26) return std::string(1, static_cast<char>('a' + i));
  return "c" + std::to_string(i);
}

}  // namespace

SimplicialComplex path_complex(int t) {
  if (t < 1) fail(errc::bad_parameter, "path needs t >= 1 edges");
  std::vector<std::vector<std::string>> facets;
  for (int i = 0; i < t; ++i) facets.push_back({path_label(i, t + 1), path_label(i + 1, t + 1)});
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex cycle_complex(int n) {
  if (n < 3) fail(errc::bad_parameter, "cycle needs n >= 3 vertices");
  std::vector<std::vector<std::string>> facets;
  for (int i = 0; i < n; ++i) facets.push_back({cycle_label(i, n), cycle_label((i + 1) % n, n)});
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex boundary_simplex(int n) {
  if (n < 1) fail(errc::bad_parameter, "simplex boundary needs n >= 1");
  std::vector<std::string> labels;
  for (int i = 0; i <= n; ++i) labels.push_back("v" + std::to_string(i));
  std::vector<std::vector<int>> facets;
  for (int skip = 0; skip <= n; ++skip) {
    std::vector<int> f;
    for (int i = 0; i <= n; ++i)
      if (i != skip) f.push_back(i);
    facets.push_back(std::move(f));
  }
  return SimplicialComplex::from_vertex_facets(std::move(labels), std::move(facets));
}

SimplicialComplex full_simplex(int n) {
  if (n < 0) fail(errc::bad_parameter, "simplex needs n >= 0");
  std::vector<std::string> f;
  for (int i = 0; i <= n; ++i) f.push_back("v" + std::to_string(i));
  return SimplicialComplex::from_facets({f});
}

SimplicialComplex star_complex(int k) {
  if (k < 1) fail(errc::bad_parameter, "star needs k >= 1 leaves");
  std::vector<std::vector<std::string>> facets;
  for (int i = 1; i <= k; ++i) facets.push_back({"c", "l" + std::to_string(i)});
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex leafify(const SimplicialComplex& g) {
  SimplicialComplex out = g;
  int n = g.vertex_count();
  for (int v = 0; v < n; ++v) out = attach_leaf(out, v);  // ids stay stable
  return out;
}

SimplicialComplex centipede(int v) {
  if (v < 1) fail(errc::bad_parameter, "centipede needs v >= 1 spine vertices");
  SimplicialComplex spine =
      v == 1 ? SimplicialComplex::from_facets({{"u"}}) : path_complex(v - 1);
  return leafify(spine);
}

}  // namespace morseforge
