#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ame/code.hpp"

namespace ame {

/// Uniform-amplitude pure state on n sites of local dimension d, given by
/// its computational-basis support. Amplitudes are implicitly 1/sqrt(|kets|)
/// with all phases zero; for minimal support the phases never matter, so
/// none are stored.
struct AmeState {
  int n = 0;
  int d = 0;
  std::vector<Word> kets;  // sorted, unique

  static AmeState make(int n, int d, std::vector<Word> kets);

  friend bool operator==(const AmeState& a, const AmeState& b) {
    return a.n == b.n && a.d == b.d && a.kets == b.kets;
  }
};

/// Sites in failing partitions are 1-based (site 1 .. site n), matching the
/// usual physics labeling.
struct FailingPartition {
  std::vector<int> sites_b;
  std::string reason;
};

struct AmeVerdict {
  bool is_ame = false;
  std::string method;  // "combinatorial" | "partial-trace"
  std::optional<FailingPartition> failing;
};

AmeState state_from_code(const Code& code);
Code code_from_state(const AmeState& state);

long long support(const AmeState& state);
bool is_minimal_support(const AmeState& state);

/// Fast checker, valid only for minimal-support states. For every site
/// subset B of size m = floor(n/2):
///   (a) the kets project onto B bijectively (uniform diagonal of rho_B);
///   (b) the kets project onto the complement of B injectively
///       (vanishing off-diagonals).
/// Subsets smaller than m need no separate check: their reduced states are
/// partial traces of Id/d^m. (b) follows from (a) over all B but is checked
/// anyway; the redundancy localizes failures.
AmeVerdict verify_ame_combinatorial(const AmeState& state);

/// Exact oracle: for every site subset B with 1 <= |B| <= floor(n/2),
/// assembles rho_B over the rationals (integer pair counts over |kets|) and
/// compares it entry-wise to Id/d^|B| with exact equality. No floating
/// point. Refuses states with d^floor(n/2) beyond the cap.
AmeVerdict verify_ame_partial_trace(const AmeState& state,
                                    long long cap = 4096);

}  // namespace ame
