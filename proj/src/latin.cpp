#include "ame/latin.hpp"

#include <algorithm>
#include <string>

namespace ame {

namespace {

constexpr long long kMaxCells = 1LL << 26;

void require_same_shape(const LatinHypercube& a, const LatinHypercube& b) {
  if (a.k != b.k || a.d != b.d)
    throw Error("shape-mismatch", "hypercubes differ in k or d");
}

void require_latin(const LatinHypercube& cube) {
  if (!is_latin(cube))
    throw Error("not-latin", "hypercube violates the latin property");
}

/// Distinctness over the d^2 pairs of one induced square. `base` is the
/// cell with both varying indices at 0.
bool induced_square_orthogonal(const LatinHypercube& a,
                               const LatinHypercube& b, long long base,
                               long long stride1, long long stride2,
                               std::vector<std::uint32_t>& seen,
                               std::uint32_t& epoch) {
  ++epoch;
  int d = a.d;
  for (int t1 = 0; t1 < d; ++t1) {
    for (int t2 = 0; t2 < d; ++t2) {
      long long c = base + t1 * stride1 + t2 * stride2;
      int key = a.values[c] * d + b.values[c];
      if (seen[key] == epoch) return false;
      seen[key] = epoch;
    }
  }
  return true;
}

}  // namespace

LatinHypercube LatinHypercube::make(int k, int d,
                                    std::vector<Symbol> values) {
  if (k < 1 || d < 1)
    throw Error("invalid-params", "hypercube needs k >= 1 and d >= 1");
  auto cells = checked_pow(d, k);
  if (!cells || *cells > kMaxCells)
    throw Error("out-of-range", "d^k exceeds the cell cap");
  if (static_cast<long long>(values.size()) != *cells)
    throw Error("shape-mismatch", "value array is not d^k long");
  for (Symbol s : values)
    if (s >= d) throw Error("out-of-range", "entry not in 0..d-1");
  LatinHypercube cube;
  cube.k = k;
  cube.d = d;
  cube.values = std::move(values);
  return cube;
}

long long LatinHypercube::stride(int axis) const {
  long long s = 1;
  for (int i = axis + 1; i < k; ++i) s *= d;
  return s;
}

Symbol LatinHypercube::at(const std::vector<int>& idx) const {
  if (static_cast<int>(idx.size()) != k)
    throw Error("shape-mismatch", "index tuple length is not k");
  long long flat = 0;
  for (int i = 0; i < k; ++i) {
    if (idx[i] < 0 || idx[i] >= d)
      throw Error("out-of-range", "index not in 0..d-1");
    flat = flat * d + idx[i];
  }
  return values[flat];
}

HypercubeSet HypercubeSet::make(int k, int d,
                                std::vector<LatinHypercube> cubes) {
  if (k < 1 || d < 1)
    throw Error("invalid-params", "cube set needs k >= 1 and d >= 1");
  for (const auto& cube : cubes)
    if (cube.k != k || cube.d != d)
      throw Error("shape-mismatch", "cube shape differs from the set's");
  HypercubeSet set;
  set.k = k;
  set.d = d;
  set.cubes = std::move(cubes);
  return set;
}

bool is_latin(const LatinHypercube& cube) {
  int d = cube.d;
  std::vector<std::uint32_t> seen(d, 0);
  std::uint32_t epoch = 0;
  for (int axis = 0; axis < cube.k; ++axis) {
    long long stride = cube.stride(axis);
    // Visit each line once via its cell with index 0 along `axis`.
    for (long long base = 0; base < static_cast<long long>(cube.cells());
         ++base) {
      if ((base / stride) % d != 0) continue;
      ++epoch;
      for (int t = 0; t < d; ++t) {
        Symbol s = cube.values[base + t * stride];
        if (seen[s] == epoch) return false;
        seen[s] = epoch;
      }
    }
  }
  return true;
}

bool are_orthogonal(const LatinHypercube& a, const LatinHypercube& b) {
  require_same_shape(a, b);
  require_latin(a);
  require_latin(b);
  int d = a.d;
  if (a.k == 1) {
    // d value pairs, distinct. Latin 1-cubes are permutations, so this
    // never fails; it is kept as a real check rather than `return true`
    // to keep the definition visible.
    std::vector<std::uint32_t> seen(static_cast<std::size_t>(d) * d, 0);
    std::uint32_t epoch = 1;
    for (int t = 0; t < d; ++t) {
      int key = a.values[t] * d + b.values[t];
      if (seen[key] == epoch) return false;
      seen[key] = epoch;
    }
    return true;
  }
  std::vector<std::uint32_t> seen(static_cast<std::size_t>(d) * d, 0);
  std::uint32_t epoch = 0;
  for (int ax1 = 0; ax1 < a.k; ++ax1) {
    for (int ax2 = ax1 + 1; ax2 < a.k; ++ax2) {
      long long s1 = a.stride(ax1);
      long long s2 = a.stride(ax2);
      for (long long base = 0; base < static_cast<long long>(a.cells());
           ++base) {
        if ((base / s1) % d != 0 || (base / s2) % d != 0) continue;
        if (!induced_square_orthogonal(a, b, base, s1, s2, seen, epoch))
          return false;
      }
    }
  }
  return true;
}

bool mols_check(const HypercubeSet& set) {
  for (const auto& cube : set.cubes)
    if (!is_latin(cube)) return false;
  for (std::size_t i = 0; i < set.cubes.size(); ++i)
    for (std::size_t j = i + 1; j < set.cubes.size(); ++j)
      if (!are_orthogonal(set.cubes[i], set.cubes[j])) return false;
  return true;
}

HypercubeSet code_to_hypercubes(const Code& code) {
  // |C| must be d^k for some 1 <= k <= n-1; find k by repeated division.
  long long size = static_cast<long long>(code.size());
  int k = 0;
  long long acc = 1;
  while (acc < size && k < code.n) {
    acc *= code.d;
    ++k;
  }
  if (acc == size && k == code.n)
    throw Error("invalid-params",
                "delta = 1 code (full space) has no cubes to extract");
  if (acc != size || k < 1)
    throw Error("not-mds", "word count is not d^k with 1 <= k <= n-1");
  if (!oa_check(code, k))
    throw Error("not-mds",
                "code fails the orthogonal-array characterization of MDS");

  int r = code.n - k;  // delta - 1 cubes
  std::vector<LatinHypercube> cubes;
  std::vector<std::vector<Symbol>> grids(
      r, std::vector<Symbol>(static_cast<std::size_t>(size)));
  for (const auto& w : code.words) {
    long long idx = 0;
    for (int i = 0; i < k; ++i) idx = idx * code.d + w[i];
    for (int j = 0; j < r; ++j) grids[j][idx] = w[k + j];
  }
  cubes.reserve(r);
  for (int j = 0; j < r; ++j)
    cubes.push_back(LatinHypercube::make(k, code.d, std::move(grids[j])));
  HypercubeSet set = HypercubeSet::make(k, code.d, std::move(cubes));
  if (!mols_check(set))
    throw Error("internal",
                "conversion from an MDS code produced a non-MOLS set");
  return set;
}

Code hypercubes_to_code(const HypercubeSet& set) {
  if (!mols_check(set))
    throw Error("not-mols", "cubes are not mutually orthogonal latin");
  int k = set.k;
  int d = set.d;
  int r = static_cast<int>(set.cubes.size());
  auto count = checked_pow(d, k);
  if (!count || *count > kMaxCells)
    throw Error("out-of-range", "d^k exceeds the cell cap");

  std::vector<Word> words;
  words.reserve(static_cast<std::size_t>(*count));
  for (long long idx = 0; idx < *count; ++idx) {
    Word w(k + r);
    long long t = idx;
    for (int i = k - 1; i >= 0; --i) {
      w[i] = static_cast<Symbol>(t % d);
      t /= d;
    }
    for (int j = 0; j < r; ++j) w[k + j] = set.cubes[j].values[idx];
    words.push_back(std::move(w));
  }
  Code code = Code::make(d, k + r, std::move(words));
  if (!oa_check(code, k))
    throw Error("internal",
                "conversion from a MOLS set produced a non-MDS code");
  return code;
}

}  // namespace ame
