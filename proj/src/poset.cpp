#include "morseforge/poset.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <unordered_map>

namespace morseforge {

namespace {
std::atomic<std::uint64_t> next_identity{1};
}

Poset Poset::make(std::vector<PosetElement> elements, std::vector<std::pair<int, int>> covers) {
  Poset p;
  p.elements_ = std::move(elements);
  int n = p.element_count();
  {
    std::set<std::string> labels;
    for (const PosetElement& e : p.elements_) {
      if (e.rank < 0) fail(errc::bad_parameter, "element rank must be nonnegative");
      if (!labels.insert(e.label).second)
        fail(errc::bad_parameter, "element label '" + e.label + "' is not unique");
    }
  }
  std::sort(covers.begin(), covers.end());
  for (std::size_t i = 0; i < covers.size(); ++i) {
    auto [lo, hi] = covers[i];
    if (lo < 0 || lo >= n || hi < 0 || hi >= n)
      fail(errc::bad_parameter, "cover endpoint out of range");
    if (lo == hi) fail(errc::bad_parameter, "self-cover");
    if (i > 0 && covers[i] == covers[i - 1]) fail(errc::bad_parameter, "duplicate cover");
    if (p.elements_[hi].rank != p.elements_[lo].rank + 1)
      fail(errc::bad_parameter, "cover '" + p.elements_[lo].label + "' < '" +
                                    p.elements_[hi].label + "' must raise rank by one");
  }
  p.covers_ = std::move(covers);
  p.up_.assign(n, {});
  p.down_.assign(n, {});
  for (auto [lo, hi] : p.covers_) {
    p.up_[lo].push_back(hi);
    p.down_[hi].push_back(lo);
  }
  p.identity_ = next_identity.fetch_add(1);
  return p;
}

const PosetElement& Poset::element(int i) const {
  if (i < 0 || i >= element_count()) fail(errc::unknown_element, "element id out of range");
  return elements_[i];
}

int Poset::find_element(const std::string& label) const {
  for (int i = 0; i < element_count(); ++i)
    if (elements_[i].label == label) return i;
  fail(errc::unknown_element, "no element labeled '" + label + "'");
}

int Poset::height() const {
  if (elements_.empty()) return 0;
  // Longest chain by rank sweep; covers always go one rank up.
  int maxrank = 0;
  for (const PosetElement& e : elements_) maxrank = std::max(maxrank, e.rank);
  std::vector<int> best(element_count(), 1);
  std::vector<int> order(element_count());
  for (int i = 0; i < element_count(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return elements_[a].rank < elements_[b].rank; });
  int h = 1;
  for (int i : order) {
    for (int u : up_[i]) best[u] = std::max(best[u], best[i] + 1);
    h = std::max(h, best[i]);
  }
  return h;
}

Poset hasse_diagram(const SimplicialComplex& k) {
  std::vector<Simplex> sims = k.all_simplices();
  std::map<std::vector<int>, int> index;
  std::vector<PosetElement> elements;
  for (std::size_t i = 0; i < sims.size(); ++i) {
    index[sims[i].verts] = static_cast<int>(i);
    std::string lab;
    for (int v : sims[i].verts) lab += k.label(v);
    elements.push_back({lab, sims[i].dim()});
  }
  std::vector<std::pair<int, int>> covers;
  for (std::size_t i = 0; i < sims.size(); ++i) {
    if (sims[i].dim() < 1) continue;
    std::vector<int> face = sims[i].verts;
    for (std::size_t skip = 0; skip < sims[i].verts.size(); ++skip) {
      face.erase(face.begin() + skip);
      covers.emplace_back(index.at(face), static_cast<int>(i));
      face.insert(face.begin() + skip, sims[i].verts[skip]);
    }
  }
  return Poset::make(std::move(elements), std::move(covers));
}

Poset remove_element(const Poset& p, int x) {
  if (x < 0 || x >= p.element_count()) fail(errc::unknown_element, "element id out of range");
  std::vector<PosetElement> elements;
  std::vector<int> remap(p.element_count(), -1);
  for (int i = 0; i < p.element_count(); ++i) {
    if (i == x) continue;
    remap[i] = static_cast<int>(elements.size());
    elements.push_back(p.element(i));
  }
  std::vector<std::pair<int, int>> covers;
  for (auto [lo, hi] : p.covers())
    if (lo != x && hi != x) covers.emplace_back(remap[lo], remap[hi]);
  return Poset::make(std::move(elements), std::move(covers));
}

Poset poset_disjoint_union(const Poset& p, const Poset& q) {
  std::vector<PosetElement> elements = p.elements();
  std::set<std::string> taken;
  for (const PosetElement& e : elements) taken.insert(e.label);
  for (const PosetElement& e : q.elements()) {
    std::string lab = e.label;
    while (taken.count(lab)) lab += "#L";
    taken.insert(lab);
    elements.push_back({lab, e.rank});
  }
  int shift = p.element_count();
  std::vector<std::pair<int, int>> covers = p.covers();
  for (auto [lo, hi] : q.covers()) covers.emplace_back(lo + shift, hi + shift);
  return Poset::make(std::move(elements), std::move(covers));
}

ReflectionMap reflection(int n) {
  if (n < 2) fail(errc::bad_parameter, "reflection needs n >= 2");
  SimplicialComplex bd = boundary_simplex(n);
  std::vector<Simplex> sims = bd.all_simplices();
  Poset h = hasse_diagram(bd);
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < sims.size(); ++i) index[sims[i].verts] = static_cast<int>(i);
  std::vector<int> mapping(sims.size());
  for (std::size_t i = 0; i < sims.size(); ++i) {
    std::vector<int> complement;
    for (int v = 0; v <= n; ++v)
      if (!sims[i].contains(v)) complement.push_back(v);
    mapping[i] = index.at(complement);
  }
  return {std::move(h), std::move(mapping)};
}

namespace {

// Colored-graph isomorphism on the undirected cover graph; colors are dense
// rank indices. Covers connect consecutive colors, so color preservation
// recovers cover direction.
struct DiagramIso {
  int n;
  std::vector<int> color_p, color_q;
  std::vector<std::vector<char>> adj_p, adj_q;
  std::vector<int> deg_p, deg_q;
  std::vector<int> map;
  std::vector<char> used;

  bool extend(int pos) {
    if (pos == n) return true;
    for (int c = 0; c < n; ++c) {
      if (used[c] || color_p[pos] != color_q[c] || deg_p[pos] != deg_q[c]) continue;
      bool ok = true;
      for (int i = 0; i < pos && ok; ++i)
        if (adj_p[i][pos] != adj_q[map[i]][c]) ok = false;
      if (!ok) continue;
      map[pos] = c;
      used[c] = 1;
      if (extend(pos + 1)) return true;
      used[c] = 0;
    }
    return false;
  }
};

std::vector<int> dense_ranks(const Poset& p) {
  std::set<int> vals;
  for (const PosetElement& e : p.elements()) vals.insert(e.rank);
  std::map<int, int> dense;
  int i = 0;
  for (int r : vals) dense[r] = i++;
  std::vector<int> out(p.element_count());
  for (int e = 0; e < p.element_count(); ++e) out[e] = dense.at(p.element(e).rank);
  return out;
}

bool diagram_iso_oriented(const Poset& p, const Poset& q, bool flip_q) {
  int n = p.element_count();
  DiagramIso s;
  s.n = n;
  s.color_p = dense_ranks(p);
  s.color_q = dense_ranks(q);
  int levels_p = 0, levels_q = 0;
  for (int c : s.color_p) levels_p = std::max(levels_p, c + 1);
  for (int c : s.color_q) levels_q = std::max(levels_q, c + 1);
  if (levels_p != levels_q) return false;
  if (flip_q)
    for (int& c : s.color_q) c = levels_q - 1 - c;
  auto adj = [](const Poset& x) {
    std::vector<std::vector<char>> m(x.element_count(),
                                     std::vector<char>(x.element_count(), 0));
    for (auto [lo, hi] : x.covers()) m[lo][hi] = m[hi][lo] = 1;
    return m;
  };
  s.adj_p = adj(p);
  s.adj_q = adj(q);
  s.deg_p.assign(n, 0);
  s.deg_q.assign(n, 0);
  for (auto [lo, hi] : p.covers()) ++s.deg_p[lo], ++s.deg_p[hi];
  for (auto [lo, hi] : q.covers()) ++s.deg_q[lo], ++s.deg_q[hi];
  {
    std::vector<std::pair<int, int>> ip, iq;
    for (int i = 0; i < n; ++i) ip.emplace_back(s.color_p[i], s.deg_p[i]);
    for (int i = 0; i < n; ++i) iq.emplace_back(s.color_q[i], s.deg_q[i]);
    std::sort(ip.begin(), ip.end());
    std::sort(iq.begin(), iq.end());
    if (ip != iq) return false;
  }
  s.map.assign(n, -1);
  s.used.assign(n, 0);
  return s.extend(0);
}

}  // namespace

bool diagram_isomorphic(const Poset& p, const Poset& q) {
  if (p.element_count() != q.element_count() || p.cover_count() != q.cover_count()) return false;
  if (p.element_count() == 0) return true;
  return diagram_iso_oriented(p, q, false) || diagram_iso_oriented(p, q, true);
}

namespace {

Poset induced_subposet(const Poset& p, const std::vector<int>& keep) {
  std::vector<int> remap(p.element_count(), -1);
  std::vector<PosetElement> elements;
  for (int i : keep) {
    remap[i] = static_cast<int>(elements.size());
    elements.push_back(p.element(i));
  }
  std::vector<std::pair<int, int>> covers;
  for (auto [lo, hi] : p.covers())
    if (remap[lo] >= 0 && remap[hi] >= 0) covers.emplace_back(remap[lo], remap[hi]);
  return Poset::make(std::move(elements), std::move(covers));
}

}  // namespace

Height2Scan height2_subposets(const Poset& p, int element_bound) {
  Height2Scan scan;
  if (element_bound < 2) fail(errc::bad_parameter, "element bound must be at least 2");
  int maxrank = -1;
  for (const PosetElement& e : p.elements()) maxrank = std::max(maxrank, e.rank);

  // Dedup store: single components first (smallest first), then the rest.
  std::vector<Poset> components, others;
  auto push_unique = [&](std::vector<Poset>& dst, Poset cand) {
    for (const Poset& seen : components)
      if (diagram_isomorphic(seen, cand)) return;
    for (const Poset& seen : others)
      if (diagram_isomorphic(seen, cand)) return;
    dst.push_back(std::move(cand));
  };

  for (int r = 0; r < maxrank; ++r) {
    std::vector<int> band;
    for (int i = 0; i < p.element_count(); ++i)
      if (p.element(i).rank == r || p.element(i).rank == r + 1) band.push_back(i);
    std::vector<std::pair<int, int>> band_covers;
    for (auto [lo, hi] : p.covers())
      if (p.element(lo).rank == r) band_covers.emplace_back(lo, hi);
    if (band_covers.empty()) continue;

    // Connected components of the band's cover graph.
    std::unordered_map<int, int> comp;
    int ncomp = 0;
    {
      std::unordered_map<int, std::vector<int>> adj;
      for (auto [lo, hi] : band_covers) {
        adj[lo].push_back(hi);
        adj[hi].push_back(lo);
      }
      for (int v : band) {
        if (comp.count(v)) continue;
        std::vector<int> stack{v};
        comp[v] = ncomp;
        while (!stack.empty()) {
          int x = stack.back();
          stack.pop_back();
          for (int y : adj[x])
            if (!comp.count(y)) {
              comp[y] = ncomp;
              stack.push_back(y);
            }
        }
        ++ncomp;
      }
    }
    std::vector<std::vector<int>> comp_elems(ncomp);
    for (int v : band) comp_elems[comp.at(v)].push_back(v);
    std::sort(comp_elems.begin(), comp_elems.end(),
              [](const auto& a, const auto& b) { return a.size() < b.size(); });

    auto has_cover = [&](const std::vector<int>& keep) {
      std::set<int> s(keep.begin(), keep.end());
      for (auto [lo, hi] : band_covers)
        if (s.count(lo) && s.count(hi)) return true;
      return false;
    };

    // Single components.
    for (const auto& ce : comp_elems) {
      if (static_cast<int>(ce.size()) > element_bound) {
        scan.truncated = true;
        continue;
      }
      if (has_cover(ce)) push_unique(components, induced_subposet(p, ce));
    }

    // Unions of two or more components.
    if (ncomp > 1) {
      if (ncomp > 16) {
        scan.truncated = true;
      } else {
        for (unsigned mask = 1; mask < (1u << ncomp); ++mask) {
          if ((mask & (mask - 1)) == 0) continue;  // singles handled above
          std::vector<int> keep;
          for (int c = 0; c < ncomp; ++c)
            if (mask & (1u << c)) keep.insert(keep.end(), comp_elems[c].begin(), comp_elems[c].end());
          if (static_cast<int>(keep.size()) > element_bound) {
            scan.truncated = true;
            continue;
          }
          std::sort(keep.begin(), keep.end());
          if (has_cover(keep)) push_unique(others, induced_subposet(p, keep));
        }
      }
    }

    // Band minus an independent set of elements.
    if (static_cast<int>(band.size()) > element_bound) {
      scan.truncated = true;
      continue;
    }
    int m = static_cast<int>(band.size());
    std::vector<std::vector<char>> adjm(m, std::vector<char>(m, 0));
    {
      std::unordered_map<int, int> pos;
      for (int i = 0; i < m; ++i) pos[band[i]] = i;
      for (auto [lo, hi] : band_covers) adjm[pos.at(lo)][pos.at(hi)] = adjm[pos.at(hi)][pos.at(lo)] = 1;
    }
    std::vector<int> independent;
    auto rec = [&](auto&& self, int i) -> void {
      if (i == m) {
        if (independent.empty()) return;  // full band is the whole-component union
        std::vector<char> drop(m, 0);
        for (int d : independent) drop[d] = 1;
        std::vector<int> keep;
        for (int j = 0; j < m; ++j)
          if (!drop[j]) keep.push_back(band[j]);
        if (keep.empty() || !has_cover(keep)) return;
        push_unique(others, induced_subposet(p, keep));
        return;
      }
      self(self, i + 1);
      bool ok = true;
      for (int d : independent)
        if (adjm[d][i]) { ok = false; break; }
      if (ok) {
        independent.push_back(i);
        self(self, i + 1);
        independent.pop_back();
      }
    };
    rec(rec, 0);
  }

  std::sort(others.begin(), others.end(),
            [](const Poset& a, const Poset& b) { return a.element_count() < b.element_count(); });
  scan.subposets = std::move(components);
  for (Poset& q : others) scan.subposets.push_back(std::move(q));
  return scan;
}

}  // namespace morseforge
