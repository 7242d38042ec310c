#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "morseforge/morse.hpp"
#include "morseforge/symmetry.hpp"
#include "support.hpp"

using namespace morseforge;
using testsupport::expect_error;

namespace {

// Full n! filter, independent of the backtracking search.
long long brute_force_aut_order(const SimplicialComplex& k) {
  int n = k.vertex_count();
  REQUIRE(n <= 8);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::set<std::vector<int>> facets;
  for (const Simplex& f : k.facets()) facets.insert(f.verts);
  long long count = 0;
  do {
    bool ok = true;
    for (const Simplex& f : k.facets()) {
      std::vector<int> img;
      for (int v : f.verts) img.push_back(perm[v]);
      std::sort(img.begin(), img.end());
      if (!facets.count(img)) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace

TEST_CASE("automorphism group orders") {
  CHECK(automorphism_group(cycle_complex(4)).order == 8);
  CHECK(automorphism_group(cycle_complex(5)).order == 10);
  CHECK(automorphism_group(path_complex(2)).order == 2);
  CHECK(automorphism_group(full_simplex(2)).order == 6);
  CHECK(automorphism_group(star_complex(3)).order == 6);
}

TEST_CASE("orders agree with the permutation filter") {
  for (const SimplicialComplex& k :
       {cycle_complex(4), path_complex(3), star_complex(3), full_simplex(2),
        morse_complex(path_complex(2)).complex}) {
    CHECK(automorphism_group(k).order == brute_force_aut_order(k));
  }
  SimplicialComplex m2 = morse_complex(disjoint_union(star_complex(2), star_complex(2))).complex;
  CHECK(automorphism_group(m2).order == brute_force_aut_order(m2));
}

TEST_CASE("generators preserve the facet set") {
  for (const SimplicialComplex& k : {cycle_complex(5), morse_complex(cycle_complex(3)).complex}) {
    PermutationGroup g = automorphism_group(k);
    std::set<std::vector<int>> facets;
    for (const Simplex& f : k.facets()) facets.insert(f.verts);
    for (const auto& perm : g.generators)
      for (const Simplex& f : k.facets()) {
        std::vector<int> img;
        for (int v : f.verts) img.push_back(perm[v]);
        std::sort(img.begin(), img.end());
        CHECK(facets.count(img) == 1);
      }
  }
}

TEST_CASE("vertex bound") {
  expect_error(errc::size_limit, [] { automorphism_group(star_complex(25)); });
}

TEST_CASE("disjoint union of non-isomorphic complexes multiplies the order") {
  SimplicialComplex u = disjoint_union(path_complex(2), star_complex(3));
  CHECK(automorphism_group(u).order ==
        automorphism_group(path_complex(2)).order * automorphism_group(star_complex(3)).order);
}

TEST_CASE("paired automorphisms act on the join") {
  SimplicialComplex k = path_complex(2);
  SimplicialComplex l = cycle_complex(3);
  SimplicialComplex j = join(k, l);
  PermutationGroup gk = automorphism_group(k);
  PermutationGroup gl = automorphism_group(l);
  std::set<std::vector<int>> facets;
  for (const Simplex& f : j.facets()) facets.insert(f.verts);
  std::vector<std::vector<int>> aut_k = all_isomorphisms(k, k);
  std::vector<std::vector<int>> aut_l = all_isomorphisms(l, l);
  for (const auto& a : aut_k)
    for (const auto& b : aut_l) {
      std::vector<int> combined(j.vertex_count());
      for (int v = 0; v < k.vertex_count(); ++v) combined[v] = a[v];
      for (int v = 0; v < l.vertex_count(); ++v)
        combined[k.vertex_count() + v] = k.vertex_count() + b[v];
      for (const Simplex& f : j.facets()) {
        std::vector<int> img;
        for (int v : f.verts) img.push_back(combined[v]);
        std::sort(img.begin(), img.end());
        CHECK(facets.count(img) == 1);
      }
    }
  CHECK(automorphism_group(j).order >= gk.order * gl.order);
}

TEST_CASE("fully connected subcomplexes") {
  // A suspension is fully connected at its two poles.
  SimplicialComplex poles = SimplicialComplex::from_facets({{"s0"}, {"s1"}});
  SimplicialComplex sus = join(poles, path_complex(2));
  CHECK(is_fully_connected(sus, {sus.vertex("s0"), sus.vertex("s1")}));

  CHECK_FALSE(is_fully_connected(cycle_complex(4), {0}));
  CHECK(is_fully_connected(full_simplex(2), {0}));

  expect_error(errc::bad_subset, [] { is_fully_connected(cycle_complex(4), {}); });
  expect_error(errc::bad_subset, [] { is_fully_connected(cycle_complex(4), {0, 1, 2, 3}); });
  expect_error(errc::bad_subset, [] { is_fully_connected(cycle_complex(4), {0, 0}); });
}

TEST_CASE("product order report hypotheses") {
  expect_error(errc::hypothesis_violation,
               [] { product_order_check(cycle_complex(3), star_complex(2)); });
  expect_error(errc::hypothesis_violation,
               [] { product_order_check(boundary_simplex(3), star_complex(2)); });
  expect_error(errc::hypothesis_violation, [] {
    product_order_check(disjoint_union(path_complex(1), path_complex(1)), star_complex(2));
  });
  expect_error(errc::hypothesis_violation,
               [] { product_order_check(SimplicialComplex::from_facets({{"a"}}), star_complex(2)); });
}

TEST_CASE("product order report on a clean pair") {
  ProductOrderReport r = product_order_check(star_complex(2), star_complex(3));
  CHECK(r.aut_k1 == 2);
  CHECK(r.aut_k2 == 6);
  CHECK(r.consistent());
}
