// Shared helpers for the unit tests: error matching, small random inputs,
// and an independent closure-counting oracle.
#pragma once

#include <random>
#include <set>
#include <string>
#include <vector>

#include <doctest.h>

#include "morseforge/complex.hpp"
#include "morseforge/error.hpp"

namespace testsupport {

using morseforge::SimplicialComplex;

template <typename Fn>
void expect_error(morseforge::errc code, Fn&& fn) {
  try {
    fn();
    FAIL_CHECK("expected error ", morseforge::errc_name(code));
  } catch (const morseforge::error& e) {
    CHECK(e.code() == code);
  }
}

// Counts the nonempty vertex subsets spanned by some facet, walking all
// 2^n subsets. Independent of all_simplices' facet-subset recursion.
inline long long closure_count_oracle(const SimplicialComplex& k) {
  int n = k.vertex_count();
  REQUIRE(n <= 20);
  long long count = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> verts;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) verts.push_back(v);
    morseforge::Simplex s(verts);
    for (const morseforge::Simplex& f : k.facets())
      if (s.subset_of(f)) {
        ++count;
        break;
      }
  }
  return count;
}

inline SimplicialComplex random_complex(std::mt19937_64& rng, int max_n, int max_facet_size,
                                        const std::string& prefix) {
  auto pick = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  int n = pick(2, max_n);
  int m = pick(1, 5);
  std::vector<std::vector<std::string>> facets;
  for (int i = 0; i < m; ++i) {
    int size = pick(1, std::min(max_facet_size, n));
    std::set<int> f;
    while (static_cast<int>(f.size()) < size) f.insert(pick(0, n - 1));
    std::vector<std::string> fl;
    for (int v : f) fl.push_back(prefix + std::to_string(v));
    facets.push_back(std::move(fl));
  }
  return SimplicialComplex::from_facets(facets);
}

}  // namespace testsupport
