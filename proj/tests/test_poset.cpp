#include <doctest.h>

#include <random>
#include <set>

#include "morseforge/poset.hpp"
#include "support.hpp"

using namespace morseforge;
using testsupport::expect_error;

namespace {

// Independent cover count: ordered pairs of simplices differing by one vertex.
long long cover_count_oracle(const SimplicialComplex& k) {
  std::vector<Simplex> sims = k.all_simplices();
  long long count = 0;
  for (const Simplex& s : sims)
    for (const Simplex& t : sims)
      if (s.size() + 1 == t.size() && s.subset_of(t)) ++count;
  return count;
}

}  // namespace

TEST_CASE("hasse diagram of small complexes") {
  Poset h = hasse_diagram(path_complex(2));
  CHECK(h.element_count() == 5);
  CHECK(h.cover_count() == 4);
  CHECK(h.element(h.find_element("u")).rank == 0);
  CHECK(h.element(h.find_element("uv")).rank == 1);
  std::set<std::pair<std::string, std::string>> covers;
  for (auto [lo, hi] : h.covers()) covers.insert({h.element(lo).label, h.element(hi).label});
  std::set<std::pair<std::string, std::string>> want{
      {"u", "uv"}, {"v", "uv"}, {"v", "vw"}, {"w", "vw"}};
  CHECK(covers == want);

  for (int n = 3; n <= 5; ++n) {
    Poset hc = hasse_diagram(cycle_complex(n));
    CHECK(hc.element_count() == 2 * n);
    CHECK(hc.cover_count() == 2 * n);
  }

  SimplicialComplex bd3 = boundary_simplex(3);
  CHECK(cover_count_oracle(bd3) == 24);
  Poset h3 = hasse_diagram(bd3);
  CHECK(h3.element_count() == 14);
  CHECK(h3.cover_count() == 24);
}

TEST_CASE("hasse cover count matches the dimension formula") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    SimplicialComplex k = testsupport::random_complex(rng, 6, 4, "v");
    Poset h = hasse_diagram(k);
    long long expect = 0;
    for (const Simplex& s : k.all_simplices())
      if (s.dim() >= 1) expect += s.dim() + 1;
    CHECK(h.cover_count() == expect);
    CHECK(h.cover_count() == cover_count_oracle(k));
    for (auto [lo, hi] : h.covers())
      CHECK(h.element(hi).rank == h.element(lo).rank + 1);
  }
}

TEST_CASE("poset construction validates covers") {
  expect_error(errc::bad_parameter, [] {
    Poset::make({{"a", 0}, {"b", 0}}, {{0, 1}});  // cover must raise rank
  });
  expect_error(errc::bad_parameter, [] {
    Poset::make({{"a", 0}, {"b", 1}}, {{0, 1}, {0, 1}});  // duplicate
  });
  expect_error(errc::bad_parameter, [] {
    Poset::make({{"a", 0}, {"a", 1}}, {{0, 1}});  // label clash
  });
}

TEST_CASE("remove_element") {
  Poset hc3 = hasse_diagram(cycle_complex(3));
  Poset without_a = remove_element(hc3, hc3.find_element("a"));
  CHECK(without_a.element_count() == 5);
  CHECK(without_a.cover_count() == 4);

  Poset hp1 = hasse_diagram(path_complex(1));
  Poset isolated = remove_element(hp1, hp1.find_element("uv"));
  CHECK(isolated.element_count() == 2);
  CHECK(isolated.cover_count() == 0);

  Poset hb2 = hasse_diagram(boundary_simplex(2));
  Poset cut = remove_element(hb2, hb2.find_element("v0"));
  CHECK(diagram_isomorphic(cut, hasse_diagram(path_complex(2))));

  expect_error(errc::unknown_element, [&] { remove_element(hc3, 99); });
}

TEST_CASE("poset disjoint union") {
  Poset hl = hasse_diagram(path_complex(1));
  Poset two = poset_disjoint_union(hl, hl);
  CHECK(two.element_count() == 6);
  CHECK(two.cover_count() == 4);

  Poset empty = Poset::make({}, {});
  Poset same = poset_disjoint_union(hl, empty);
  CHECK(same.element_count() == hl.element_count());
  CHECK(same.covers() == hl.covers());

  Poset mix = poset_disjoint_union(hasse_diagram(path_complex(2)), hl);
  CHECK(mix.element_count() == 8);
  CHECK(mix.cover_count() == 6);
}

TEST_CASE("remove_element commutes with disjoint union up to diagram isomorphism") {
  Poset p = hasse_diagram(cycle_complex(3));
  Poset q = hasse_diagram(path_complex(1));
  int x = p.find_element("ab");
  Poset left = remove_element(poset_disjoint_union(p, q), x);
  Poset right = poset_disjoint_union(remove_element(p, x), q);
  CHECK(diagram_isomorphic(left, right));
}

TEST_CASE("reflection") {
  ReflectionMap r2 = reflection(2);
  int v0 = r2.poset.find_element("v0");
  CHECK(r2.poset.element(r2.mapping[v0]).label == "v1v2");
  int e01 = r2.poset.find_element("v0v1");
  CHECK(r2.poset.element(r2.mapping[e01]).label == "v2");

  ReflectionMap r3 = reflection(3);
  int e = r3.poset.find_element("v0v1");
  CHECK(r3.poset.element(r3.mapping[e]).label == "v2v3");

  // Involution sending rank p to n-1-p, carrying covers onto reversed covers.
  for (int n = 2; n <= 3; ++n) {
    ReflectionMap r = reflection(n);
    std::set<std::pair<int, int>> covers(r.poset.covers().begin(), r.poset.covers().end());
    for (int i = 0; i < r.poset.element_count(); ++i) {
      CHECK(r.mapping[r.mapping[i]] == i);
      CHECK(r.poset.element(r.mapping[i]).rank == n - 1 - r.poset.element(i).rank);
    }
    for (auto [lo, hi] : covers)
      CHECK(covers.count({r.mapping[hi], r.mapping[lo]}) == 1);
  }
  expect_error(errc::bad_parameter, [] { reflection(1); });
}

TEST_CASE("height") {
  CHECK(hasse_diagram(cycle_complex(4)).height() == 2);
  CHECK(hasse_diagram(full_simplex(2)).height() == 3);
  CHECK(Poset::make({{"a", 0}, {"b", 0}, {"c", 0}}, {}).height() == 1);
  CHECK(Poset::make({}, {}).height() == 0);
}

TEST_CASE("height-2 subdiagram scan") {
  // The single-edge diagram shows up inside the hasse diagram of one edge.
  Height2Scan scan = height2_subposets(hasse_diagram(path_complex(1)));
  bool has_single_edge = false;
  for (const Poset& p : scan.subposets)
    if (p.element_count() == 2 && p.cover_count() == 1) has_single_edge = true;
  CHECK(has_single_edge);
  CHECK_FALSE(scan.truncated);

  // Both rank bands of a filled triangle contribute.
  Height2Scan tri = height2_subposets(hasse_diagram(full_simplex(2)));
  bool low_band = false, high_band = false;
  for (const Poset& p : tri.subposets) {
    int minrank = 99;
    for (const PosetElement& e : p.elements()) minrank = std::min(minrank, e.rank);
    if (minrank == 0) low_band = true;
    if (minrank == 1) high_band = true;
  }
  CHECK(low_band);
  CHECK(high_band);

  CHECK(height2_subposets(Poset::make({{"a", 0}, {"b", 0}, {"c", 0}}, {})).subposets.empty());

  // Dedup works: every reported subdiagram is pairwise non-isomorphic.
  Height2Scan c4 = height2_subposets(hasse_diagram(cycle_complex(4)));
  for (std::size_t i = 0; i < c4.subposets.size(); ++i)
    for (std::size_t j = i + 1; j < c4.subposets.size(); ++j)
      CHECK_FALSE(diagram_isomorphic(c4.subposets[i], c4.subposets[j]));
}

TEST_CASE("diagram isomorphism allows the flip") {
  Poset v = Poset::make({{"a", 0}, {"b", 0}, {"ab", 1}}, {{0, 2}, {1, 2}});
  Poset lambda = Poset::make({{"x", 0}, {"p", 1}, {"q", 1}}, {{0, 1}, {0, 2}});
  CHECK(diagram_isomorphic(v, lambda));
  Poset edge = Poset::make({{"a", 0}, {"b", 1}}, {{0, 1}});
  CHECK_FALSE(diagram_isomorphic(v, edge));
}
