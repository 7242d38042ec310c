#include "morseforge/homology.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>

namespace morseforge {

namespace {

// Columns of a boundary matrix over GF(2), packed into words.
struct Gf2Matrix {
  int rows = 0;
  std::vector<std::vector<std::uint64_t>> cols;

  void add_column(const std::vector<int>& ones) {
    std::vector<std::uint64_t> c((rows + 63) / 64, 0);
    for (int r : ones) c[r / 64] ^= std::uint64_t{1} << (r % 64);
    cols.push_back(std::move(c));
  }

  int rank() const {
    std::vector<std::vector<std::uint64_t>> pivots;
    std::vector<int> pivot_row;
    int r = 0;
    for (auto col : cols) {
      for (;;) {
        int lead = -1;
        for (int w = static_cast<int>(col.size()) - 1; w >= 0 && lead < 0; --w)
          if (col[w]) lead = w * 64 + 63 - std::countl_zero(col[w]);
        if (lead < 0) break;
        bool reduced = false;
        for (std::size_t i = 0; i < pivots.size(); ++i)
          if (pivot_row[i] == lead) {
            for (std::size_t w = 0; w < col.size(); ++w) col[w] ^= pivots[i][w];
            reduced = true;
            break;
          }
        if (!reduced) {
          pivots.push_back(col);
          pivot_row.push_back(lead);
          ++r;
          break;
        }
      }
    }
    return r;
  }
};

// Smith normal form over long long; returns the nonzero diagonal entries.
// Matrices here are small, but guard against overflow anyway.
struct SnfResult {
  int rank = 0;
  std::vector<long long> factors;  // invariant factors, all positive
};

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r))
    fail(errc::size_limit, "integer overflow in Smith normal form");
  return r;
}

SnfResult smith_normal_form(std::vector<std::vector<long long>> m) {
  SnfResult out;
  if (m.empty() || m[0].empty()) return out;
  std::size_t rows = m.size(), cols = m[0].size();
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Find the smallest nonzero entry in the remaining block.
    std::size_t pr = t, pc = t;
    long long best = 0;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (m[i][j] != 0 && (best == 0 || std::abs(m[i][j]) < best)) {
          best = std::abs(m[i][j]);
          pr = i;
          pc = j;
        }
    if (best == 0) break;
    std::swap(m[t], m[pr]);
    for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pc]);

    bool again = false;
    for (std::size_t i = t + 1; i < rows; ++i) {
      long long q = m[i][t] / m[t][t];
      if (q != 0)
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= checked_mul(q, m[t][j]);
      if (m[i][t] != 0) again = true;
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      long long q = m[t][j] / m[t][t];
      if (q != 0)
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= checked_mul(q, m[i][t]);
      if (m[t][j] != 0) again = true;
    }
    if (again) continue;  // remainders left, repeat with a smaller pivot

    // Entry not dividing some remaining entry: fold that row in and redo.
    bool divides_all = true;
    for (std::size_t i = t + 1; i < rows && divides_all; ++i)
      for (std::size_t j = t + 1; j < cols && divides_all; ++j)
        if (m[i][j] % m[t][t] != 0) {
          for (std::size_t jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
          divides_all = false;
        }
    if (!divides_all) continue;
    ++t;
  }
  for (std::size_t i = 0; i < t; ++i) {
    out.factors.push_back(std::abs(m[i][i]));
    ++out.rank;
  }
  std::sort(out.factors.begin(), out.factors.end());
  return out;
}

}  // namespace

BettiVector reduced_betti(const SimplicialComplex& k, Coefficients coeff) {
  std::vector<Simplex> sims = k.all_simplices();
  int dim = k.dimension();
  std::vector<std::map<std::vector<int>, int>> index(dim + 1);
  std::vector<int> counts(dim + 1, 0);
  for (const Simplex& s : sims) index[s.dim()][s.verts] = counts[s.dim()]++;

  // ranks[p] = rank of the boundary map leaving degree p; degree 0 maps onto
  // the coefficients via augmentation, so its rank is 1.
  std::vector<int> ranks(dim + 2, 0);
  ranks[0] = 1;
  BettiVector out;
  out.coeff = coeff;
  if (coeff == Coefficients::integers) out.torsion.assign(dim + 1, {});

  for (int p = 1; p <= dim; ++p) {
    if (coeff == Coefficients::z2) {
      Gf2Matrix m;
      m.rows = counts[p - 1];
      for (const Simplex& s : sims) {
        if (s.dim() != p) continue;
        std::vector<int> ones;
        std::vector<int> face = s.verts;
        for (std::size_t skip = 0; skip < s.verts.size(); ++skip) {
          face.erase(face.begin() + skip);
          ones.push_back(index[p - 1].at(face));
          face.insert(face.begin() + skip, s.verts[skip]);
        }
        m.add_column(ones);
      }
      ranks[p] = m.rank();
    } else {
      std::vector<std::vector<long long>> m(counts[p - 1],
                                            std::vector<long long>(counts[p], 0));
      int col = 0;
      for (const Simplex& s : sims) {
        if (s.dim() != p) continue;
        std::vector<int> face = s.verts;
        long long sign = 1;
        for (std::size_t skip = 0; skip < s.verts.size(); ++skip) {
          face.erase(face.begin() + skip);
          m[index[p - 1].at(face)][col] = sign;
          face.insert(face.begin() + skip, s.verts[skip]);
          sign = -sign;
        }
        ++col;
      }
      SnfResult snf = smith_normal_form(std::move(m));
      ranks[p] = snf.rank;
      for (long long f : snf.factors)
        if (f > 1) out.torsion[p - 1].push_back(f);
    }
  }

  out.reduced.assign(dim + 1, 0);
  for (int p = 0; p <= dim; ++p) out.reduced[p] = counts[p] - ranks[p] - ranks[p + 1];
  return out;
}

bool matches_sphere(const SimplicialComplex& k, int n) {
  if (n < 0) fail(errc::bad_parameter, "sphere dimension must be nonnegative");
  BettiVector b = reduced_betti(k, Coefficients::z2);
  for (int p = 0; p < static_cast<int>(b.reduced.size()); ++p) {
    long long want = (p == n) ? 1 : 0;
    if (b.reduced[p] != want) return false;
  }
  return n < static_cast<int>(b.reduced.size());
}

}  // namespace morseforge
