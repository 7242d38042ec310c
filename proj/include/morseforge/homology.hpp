// Exact reduced simplicial homology, used to certify homotopy types of
// points and spheres at desk scale.
#pragma once

#include <vector>

#include "morseforge/complex.hpp"

namespace morseforge {

enum class Coefficients { z2, integers };

struct BettiVector {
  std::vector<long long> reduced;  // reduced Betti numbers, degrees 0..dim
  Coefficients coeff = Coefficients::z2;
  // Invariant factors > 1 of the degree-(p+1) boundary map, i.e. the torsion
  // of H_p. Only populated for integer coefficients.
  std::vector<std::vector<long long>> torsion;
};

/// Ranks of the reduced chain complex. Mod-2 ranks come from Gaussian
/// elimination; integer ranks from Smith normal form, with torsion reported
/// separately.
BettiVector reduced_betti(const SimplicialComplex& k,
                          Coefficients coeff = Coefficients::z2);

/// Necessary condition for the homotopy type of an n-sphere: the mod-2
/// reduced Betti vector is 1 in degree n and 0 elsewhere. Not a sufficient
/// condition; reports built on this say so.
bool matches_sphere(const SimplicialComplex& k, int n);

}  // namespace morseforge
