#include "morseforge/symmetry.hpp"

#include <algorithm>
#include <set>

#include "morseforge/morse.hpp"

namespace morseforge {

namespace {

std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

std::set<std::vector<int>> closure(const std::vector<std::vector<int>>& gens, int n) {
  std::vector<int> id(n);
  for (int i = 0; i < n; ++i) id[i] = i;
  std::set<std::vector<int>> group{id};
  std::vector<std::vector<int>> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& g : frontier)
      for (const auto& gen : gens) {
        std::vector<int> h = compose(gen, g);
        if (group.insert(h).second) {
          next.push_back(std::move(h));
          if (static_cast<long long>(group.size()) > group_closure_cap)
            fail(errc::size_limit, "group closure exceeded its cap");
        }
      }
    frontier = std::move(next);
  }
  return group;
}

}  // namespace

PermutationGroup automorphism_group(const SimplicialComplex& k, int vertex_bound) {
  if (k.vertex_count() > vertex_bound)
    fail(errc::size_limit, "complex exceeds the automorphism vertex bound of " +
                               std::to_string(vertex_bound));
  std::vector<std::vector<int>> perms = all_isomorphisms(k, k);
  PermutationGroup g;
  g.order = static_cast<long long>(perms.size());

  std::set<std::vector<int>> have;
  {
    std::vector<int> id(k.vertex_count());
    for (int i = 0; i < k.vertex_count(); ++i) id[i] = i;
    have.insert(id);
  }
  for (const auto& p : perms) {
    if (have.count(p)) continue;
    g.generators.push_back(p);
    have = closure(g.generators, k.vertex_count());
  }
  if (static_cast<long long>(have.size()) != g.order)
    fail(errc::consistency_error, "generator closure disagrees with the enumeration");
  return g;
}

namespace {

// Isomorphism k -> l constrained to map the vertex set `src` onto `dst`.
bool constrained_isomorphic(const SimplicialComplex& k, const SimplicialComplex& l,
                            const std::vector<int>& src, const std::vector<int>& dst) {
  if (k.vertex_count() != l.vertex_count() || k.facet_count() != l.facet_count()) return false;
  int n = k.vertex_count();
  std::vector<char> in_src(n, 0), in_dst(n, 0);
  for (int v : src) in_src[v] = 1;
  for (int v : dst) in_dst[v] = 1;

  std::vector<std::vector<char>> adj_k(n, std::vector<char>(n, 0)), adj_l(n, std::vector<char>(n, 0));
  for (const Simplex& f : k.facets())
    for (std::size_t i = 0; i < f.verts.size(); ++i)
      for (std::size_t j = i + 1; j < f.verts.size(); ++j)
        adj_k[f.verts[i]][f.verts[j]] = adj_k[f.verts[j]][f.verts[i]] = 1;
  for (const Simplex& f : l.facets())
    for (std::size_t i = 0; i < f.verts.size(); ++i)
      for (std::size_t j = i + 1; j < f.verts.size(); ++j)
        adj_l[f.verts[i]][f.verts[j]] = adj_l[f.verts[j]][f.verts[i]] = 1;

  std::set<std::vector<int>> l_facets;
  for (const Simplex& f : l.facets()) l_facets.insert(f.verts);

  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  auto extend = [&](auto&& self, int pos) -> bool {
    if (pos == n) {
      for (const Simplex& f : k.facets()) {
        std::vector<int> img;
        for (int v : f.verts) img.push_back(map[v]);
        std::sort(img.begin(), img.end());
        if (!l_facets.count(img)) return false;
      }
      return true;
    }
    for (int c = 0; c < n; ++c) {
      if (used[c] || in_src[pos] != in_dst[c]) continue;
      bool ok = true;
      for (int p = 0; p < pos && ok; ++p)
        if (adj_k[p][pos] != adj_l[map[p]][c]) ok = false;
      if (!ok) continue;
      map[pos] = c;
      used[c] = 1;
      if (self(self, pos + 1)) return true;
      used[c] = 0;
      map[pos] = -1;
    }
    return false;
  };
  return extend(extend, 0);
}

}  // namespace

bool is_fully_connected(const SimplicialComplex& k, const std::vector<int>& u) {
  if (u.empty()) fail(errc::bad_subset, "empty vertex subset");
  std::set<int> us(u.begin(), u.end());
  if (us.size() != u.size()) fail(errc::bad_subset, "vertex subset repeats an id");
  for (int v : us)
    if (v < 0 || v >= k.vertex_count()) fail(errc::bad_subset, "vertex id out of range");
  if (static_cast<int>(us.size()) == k.vertex_count())
    fail(errc::bad_subset, "subset must be proper");

  std::vector<int> complement;
  for (int v = 0; v < k.vertex_count(); ++v)
    if (!us.count(v)) complement.push_back(v);

  SimplicialComplex j = join(induced(k, u), induced(k, complement));
  // The join keeps the u-side labels first, so u's image is ids 0..|u|-1.
  std::vector<int> dst(us.size());
  for (std::size_t i = 0; i < us.size(); ++i) dst[i] = static_cast<int>(i);
  std::vector<int> src(us.begin(), us.end());
  return constrained_isomorphic(k, j, src, dst);
}

namespace {

bool is_cycle_graph(const SimplicialComplex& k) {
  if (k.dimension() != 1 || !k.connected()) return false;
  if (k.facet_count() != k.vertex_count() || k.vertex_count() < 3) return false;
  for (int v = 0; v < k.vertex_count(); ++v)
    if (k.neighbors(v).size() != 2) return false;
  return true;
}

bool is_boundary_of_simplex(const SimplicialComplex& k) {
  int n = k.vertex_count() - 1;
  if (n < 1) return false;
  long long expect = n + 1;
  if (k.facet_count() != expect) return false;
  for (const Simplex& f : k.facets())
    if (f.dim() != n - 1) return false;
  return true;  // n+1 distinct (n-1)-faces on n+1 vertices must be all of them
}

// Fully-connected subcomplexes up to `bound` vertices; the whole complex is
// included as the trivial case K = K * (empty).
std::vector<std::vector<int>> fully_connected_subsets(const SimplicialComplex& k, int bound) {
  std::vector<std::vector<int>> out;
  int n = k.vertex_count();
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (!cur.empty() && static_cast<int>(cur.size()) < n && is_fully_connected(k, cur))
      out.push_back(cur);
    if (static_cast<int>(cur.size()) == bound) return;
    for (int v = next; v < n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  std::vector<int> whole(n);
  for (int v = 0; v < n; ++v) whole[v] = v;
  out.push_back(whole);
  return out;
}

}  // namespace

ProductOrderReport product_order_check(const SimplicialComplex& k1, const SimplicialComplex& k2,
                                       int exception_bound, int vertex_bound) {
  auto check_factor = [](const SimplicialComplex& k, const char* which) {
    if (!k.connected())
      fail(errc::hypothesis_violation, std::string(which) + " must be connected");
    if (k.dimension() < 1)
      fail(errc::hypothesis_violation, std::string(which) + " needs at least one edge");
    if (is_cycle_graph(k))
      fail(errc::hypothesis_violation, std::string(which) + " must not be a cycle");
    if (is_boundary_of_simplex(k))
      fail(errc::hypothesis_violation, std::string(which) + " must not be a simplex boundary");
  };
  check_factor(k1, "first factor");
  check_factor(k2, "second factor");

  MorseComplex m1 = morse_complex(k1);
  MorseComplex m2 = morse_complex(k2);
  MorseComplex mu = morse_complex(disjoint_union(k1, k2));
  if (mu.complex.vertex_count() > vertex_bound)
    fail(errc::hypothesis_violation, "Morse complex of the union exceeds the vertex budget");

  ProductOrderReport r;
  r.exception_bound = exception_bound;
  r.aut_morse_union = automorphism_group(mu.complex, vertex_bound).order;
  r.aut_k1 = automorphism_group(k1, vertex_bound).order;
  r.aut_k2 = automorphism_group(k2, vertex_bound).order;
  r.product = r.aut_k1 * r.aut_k2;

  std::vector<std::vector<int>> fc1 = fully_connected_subsets(m1.complex, exception_bound);
  std::vector<std::vector<int>> fc2 = fully_connected_subsets(m2.complex, exception_bound);
  for (const auto& u1 : fc1) {
    SimplicialComplex s1 = induced(m1.complex, u1);
    for (const auto& u2 : fc2) {
      if (u1.size() != u2.size()) continue;
      if (are_isomorphic(s1, induced(m2.complex, u2))) {
        r.exception_found = true;
        break;
      }
    }
    if (r.exception_found) break;
  }

  r.predicted_equal = !r.exception_found;
  r.observed_equal = r.aut_morse_union == r.product;
  return r;
}

}  // namespace morseforge
