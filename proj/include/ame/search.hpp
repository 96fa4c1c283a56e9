#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ame/bounds.hpp"
#include "ame/latin.hpp"
#include "ame/state.hpp"

namespace ame {

/// Latin square with first row and first column in natural order: the
/// canonical representative under row, column, and symbol moves.
struct ReducedSquare {
  int d = 0;
  LatinHypercube square;
};

struct Transversal {
  std::vector<std::pair<int, int>> cells;  // one per row, sorted by row
};

/// Aggregate transversal statistics over the examined squares. The
/// histogram maps transversal count to how many squares have it.
struct TransversalStats {
  long long squares = 0;
  long long total = 0;
  int min_per_square = 0;
  int max_per_square = 0;
  long long squares_with_zero = 0;
  std::map<int, long long> histogram;

  void add_square(int count);
  void merge(const TransversalStats& other);
};

/// Verdicts and counts are deterministic across runs and worker counts:
/// squares_examined is the length of the lexicographic prefix of reduced
/// squares ending at the first mate-holding square (or the full count for
/// not-exists), whatever blocks other workers may have touched.
struct SearchCertificate {
  int order = 0;
  std::string verdict;  // "exists" | "not-exists"
  long long squares_examined = 0;
  long long squares_with_mate = 0;
  double elapsed_seconds = 0.0;
  TransversalStats stats;
  std::optional<std::pair<LatinHypercube, LatinHypercube>> witness;
  std::string note;
};

/// Visits every reduced latin square of order d exactly once, in
/// lexicographic (row-major) order, by row-by-row backtracking. The visitor
/// returns false to stop early. Returns the number of squares visited.
/// 1 <= d <= 7 (order 7, ~1.7e7 squares, is the practical cap).
long long enumerate_reduced(int d,
                            const std::function<bool(const ReducedSquare&)>&
                                visit);

/// Count without materializing squares.
long long count_reduced(int d);

/// All transversals, by column-choice backtracking over rows.
std::vector<Transversal> find_transversals(const LatinHypercube& square);

/// Orthogonal mate via exact cover: a mate exists iff the d^2 cells split
/// into d disjoint transversals; the found mate gives symbol s to the
/// cells of the transversal covering row-0 column s. are_orthogonal is
/// asserted on the result before returning.
std::optional<LatinHypercube> has_orthogonal_mate(const LatinHypercube& square);

/// Independent oracle for the criterion above: backtracking directly over
/// candidate mates with orthogonality pruning. Meant for orders <= 5.
std::optional<LatinHypercube> find_mate_direct(const LatinHypercube& square);

/// Runs has_orthogonal_mate over all reduced squares of order d,
/// partitioned across workers by second row. workers = 0 picks the
/// hardware count.
SearchCertificate orthogonal_pair_exists(int d, int workers = 0);

/// Builds and fully verifies a minimal-support AME(n,d) state, or throws
/// "not-constructible" when this toolkit has no construction at (n,d).
AmeState construct_ame_state(int n, int d);

struct AmeExistsResult {
  int n = 0;
  int d = 0;
  std::string verdict;  // "yes" | "no" | "unknown"
  std::string method;   // "construction" | "search" | "bounds"
  std::string detail;
  std::optional<AmeState> state;
  std::optional<SearchCertificate> search_certificate;
  std::optional<BoundReport> bounds_report;
};

/// Decision procedure for "does a minimal-support AME(n,d) state exist":
/// construction where one is known, the order-6 exhaustive search at
/// (4,6), the bounds engine otherwise. unknown is a legal verdict.
AmeExistsResult ame_minimal_exists(int n, int d, int workers = 0);

}  // namespace ame
