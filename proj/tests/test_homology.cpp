#include <doctest.h>

#include <map>
#include <random>

#include "morseforge/collapse.hpp"
#include "morseforge/homology.hpp"
#include "support.hpp"

using namespace morseforge;
using testsupport::expect_error;

namespace {

// Six-vertex triangulation of the real projective plane: every edge lies in
// exactly two of the ten triangles.
SimplicialComplex projective_plane() {
  return SimplicialComplex::from_facets({{"1", "2", "3"},
                                         {"1", "2", "4"},
                                         {"1", "3", "5"},
                                         {"1", "4", "6"},
                                         {"1", "5", "6"},
                                         {"2", "3", "6"},
                                         {"2", "4", "5"},
                                         {"2", "5", "6"},
                                         {"3", "4", "5"},
                                         {"3", "4", "6"}});
}

long long alternating_sum(const BettiVector& b) {
  long long s = 0;
  for (std::size_t i = 0; i < b.reduced.size(); ++i)
    s += (i % 2 == 0) ? b.reduced[i] : -b.reduced[i];
  return s;
}

}  // namespace

TEST_CASE("reduced homology of tiny complexes") {
  BettiVector pt = reduced_betti(SimplicialComplex::from_facets({{"a"}}));
  CHECK(pt.reduced == std::vector<long long>{0});

  BettiVector two = reduced_betti(SimplicialComplex::from_facets({{"a"}, {"b"}}));
  CHECK(two.reduced == std::vector<long long>{1});

  BettiVector circle = reduced_betti(cycle_complex(5));
  CHECK(circle.reduced == std::vector<long long>{0, 1});

  BettiVector sphere = reduced_betti(boundary_simplex(3));
  CHECK(sphere.reduced == std::vector<long long>{0, 0, 1});
}

TEST_CASE("boundary of a boundary vanishes mod 2") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 6; ++trial) {
    SimplicialComplex k = testsupport::random_complex(rng, 6, 4, "v");
    for (const Simplex& s : k.all_simplices()) {
      if (s.dim() < 2) continue;
      std::map<std::vector<int>, int> counts;
      std::vector<int> face = s.verts;
      for (std::size_t skip = 0; skip < s.verts.size(); ++skip) {
        face.erase(face.begin() + skip);
        std::vector<int> subface = face;
        for (std::size_t skip2 = 0; skip2 < face.size(); ++skip2) {
          subface.erase(subface.begin() + skip2);
          ++counts[subface];
          subface.insert(subface.begin() + skip2, face[skip2]);
        }
        face.insert(face.begin() + skip, s.verts[skip]);
      }
      for (const auto& [f, c] : counts) CHECK(c % 2 == 0);
    }
  }
}

TEST_CASE("Euler consistency") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    SimplicialComplex k = testsupport::random_complex(rng, 7, 4, "v");
    CHECK(alternating_sum(reduced_betti(k)) == k.euler_characteristic() - 1);
    CHECK(alternating_sum(reduced_betti(k, Coefficients::integers)) ==
          k.euler_characteristic() - 1);
  }
}

TEST_CASE("suspension shifts reduced homology") {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 6; ++trial) {
    SimplicialComplex k = testsupport::random_complex(rng, 5, 3, "v");
    SimplicialComplex sus = join(SimplicialComplex::from_facets({{"s0"}, {"s1"}}), k);
    BettiVector base = reduced_betti(k);
    BettiVector lifted = reduced_betti(sus);
    for (std::size_t i = 0; i < base.reduced.size(); ++i) {
      long long up = i + 1 < lifted.reduced.size() ? lifted.reduced[i + 1] : 0;
      CHECK(base.reduced[i] == up);
    }
    if (!lifted.reduced.empty()) CHECK(lifted.reduced[0] == 0);
  }
}

TEST_CASE("cores keep reduced homology") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 8; ++trial) {
    SimplicialComplex k = testsupport::random_complex(rng, 7, 4, "v");
    BettiVector before = reduced_betti(k);
    BettiVector after = reduced_betti(core(k).core);
    std::size_t n = std::max(before.reduced.size(), after.reduced.size());
    for (std::size_t i = 0; i < n; ++i) {
      long long x = i < before.reduced.size() ? before.reduced[i] : 0;
      long long y = i < after.reduced.size() ? after.reduced[i] : 0;
      CHECK(x == y);
    }
  }
}

TEST_CASE("matches_sphere") {
  CHECK(matches_sphere(cycle_complex(4), 1));
  CHECK_FALSE(matches_sphere(SimplicialComplex::from_facets({{"a"}}), 0));
  CHECK(matches_sphere(SimplicialComplex::from_facets({{"a"}, {"b"}}), 0));
  CHECK_FALSE(matches_sphere(cycle_complex(4), 2));
  expect_error(errc::bad_parameter, [] { matches_sphere(cycle_complex(3), -1); });
}

TEST_CASE("integer coefficients see torsion that mod 2 hides") {
  SimplicialComplex rp2 = projective_plane();
  CHECK(rp2.euler_characteristic() == 1);

  BettiVector z2 = reduced_betti(rp2, Coefficients::z2);
  CHECK(z2.reduced == std::vector<long long>{0, 1, 1});

  BettiVector z = reduced_betti(rp2, Coefficients::integers);
  CHECK(z.reduced == std::vector<long long>{0, 0, 0});
  REQUIRE(z.torsion.size() == 3);
  CHECK(z.torsion[1] == std::vector<long long>{2});
  CHECK(z.torsion[0].empty());
  CHECK(z.torsion[2].empty());

  BettiVector sphere = reduced_betti(boundary_simplex(3), Coefficients::integers);
  CHECK(sphere.reduced == std::vector<long long>{0, 0, 1});
  for (const auto& t : sphere.torsion) CHECK(t.empty());
}
