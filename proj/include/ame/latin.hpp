#pragma once

#include <vector>

#include "ame/code.hpp"
#include "ame/error.hpp"

namespace ame {

/// k-dimensional d x ... x d array over {0..d-1}, stored flat in row-major
/// order with the first index slowest. d >= 1: order 1 is degenerate but
/// legal so the reduced-square enumeration can start its count there.
struct LatinHypercube {
  int k = 0;
  int d = 0;
  std::vector<Symbol> values;

  static LatinHypercube make(int k, int d, std::vector<Symbol> values);

  std::size_t cells() const { return values.size(); }
  // Row-major strides: axis 0 is slowest.
  long long stride(int axis) const;
  Symbol at(const std::vector<int>& idx) const;

  friend bool operator==(const LatinHypercube& a, const LatinHypercube& b) {
    return a.k == b.k && a.d == b.d && a.values == b.values;
  }
};

/// Cubes of the same shape. k and d are stored on the set itself so the
/// degenerate empty set still knows what code it converts to.
struct HypercubeSet {
  int k = 0;
  int d = 0;
  std::vector<LatinHypercube> cubes;

  static HypercubeSet make(int k, int d, std::vector<LatinHypercube> cubes);
};

/// True iff every axis-aligned line is a permutation of {0..d-1}.
bool is_latin(const LatinHypercube& cube);

/// k = 1: the d value pairs are distinct (automatic for latin inputs, so
/// identical permutations count as orthogonal; this keeps the GHZ code's
/// two identity 1-cubes convertible). k >= 2: for every way of fixing all
/// but two indices, the induced order-d square of pairs has d^2 distinct
/// entries. Throws on shape mismatch or non-latin input.
bool are_orthogonal(const LatinHypercube& a, const LatinHypercube& b);

/// All cubes latin and pairwise orthogonal. Vacuously true for empty or
/// singleton sets.
bool mols_check(const HypercubeSet& set);

/// MDS code with |C| = d^k -> delta-1 cubes of dimension k: the first k
/// coordinates index the cube, coordinate k+i supplies cube i's values.
/// MDS-ness is decided by the orthogonal-array characterization (oa_check),
/// which the conversion needs anyway to know the indexing is a bijection.
HypercubeSet code_to_hypercubes(const Code& code);

/// Inverse direction: words (j_1..j_k, L1[j], ..., Lr[j]) over all index
/// tuples. The result is checked to be MDS with delta = r+1 before return.
Code hypercubes_to_code(const HypercubeSet& set);

}  // namespace ame
