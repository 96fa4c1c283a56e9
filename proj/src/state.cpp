#include "ame/state.hpp"

#include <algorithm>
#include <numeric>

namespace ame {

namespace {

constexpr long long kMaxKets = 1LL << 26;
constexpr long long kMaxTableEntries = 1LL << 24;

std::vector<int> one_based(const std::vector<int>& sites) {
  std::vector<int> out(sites.size());
  for (std::size_t i = 0; i < sites.size(); ++i) out[i] = sites[i] + 1;
  return out;
}

bool next_k_subset(std::vector<int>& cols, int n) {
  int k = static_cast<int>(cols.size());
  int i = k - 1;
  while (i >= 0 && cols[i] == n - k + i) --i;
  if (i < 0) return false;
  ++cols[i];
  for (int j = i + 1; j < k; ++j) cols[j] = cols[j - 1] + 1;
  return true;
}

long long project_key(const Word& w, const std::vector<int>& sites, int d) {
  long long key = 0;
  for (int s : sites) key = key * d + w[s];
  return key;
}

/// True iff the projections of all kets onto `sites` are pairwise distinct.
/// Epoch table when the key space fits, sort otherwise.
bool projection_injective(const AmeState& state, const std::vector<int>& sites,
                          long long key_space,
                          std::vector<std::uint32_t>& seen,
                          std::uint32_t& epoch, std::vector<long long>& keys) {
  if (key_space <= kMaxTableEntries) {
    if (static_cast<long long>(seen.size()) < key_space)
      seen.assign(static_cast<std::size_t>(key_space), 0);
    ++epoch;
    for (const auto& ket : state.kets) {
      auto& slot = seen[project_key(ket, sites, state.d)];
      if (slot == epoch) return false;
      slot = epoch;
    }
    return true;
  }
  keys.clear();
  keys.reserve(state.kets.size());
  for (const auto& ket : state.kets)
    keys.push_back(project_key(ket, sites, state.d));
  std::sort(keys.begin(), keys.end());
  return std::adjacent_find(keys.begin(), keys.end()) == keys.end();
}

}  // namespace

AmeState AmeState::make(int n, int d, std::vector<Word> kets) {
  if (n < 2 || d < 2)
    throw Error("invalid-params", "state needs n >= 2 and d >= 2");
  if (kets.empty()) throw Error("invalid-params", "state has empty support");
  if (static_cast<long long>(kets.size()) > kMaxKets)
    throw Error("out-of-range", "support exceeds the ket cap");
  for (const auto& ket : kets) {
    if (static_cast<int>(ket.size()) != n)
      throw Error("length-mismatch", "ket length differs from n");
    for (Symbol s : ket)
      if (s >= d) throw Error("out-of-range", "ket symbol not in 0..d-1");
  }
  std::sort(kets.begin(), kets.end());
  if (std::adjacent_find(kets.begin(), kets.end()) != kets.end())
    throw Error("duplicate-kets", "support lists a ket twice");
  AmeState state;
  state.n = n;
  state.d = d;
  state.kets = std::move(kets);
  return state;
}

AmeState state_from_code(const Code& code) {
  return AmeState::make(code.n, code.d, code.words);
}

Code code_from_state(const AmeState& state) {
  return Code::make(state.d, state.n, state.kets);
}

long long support(const AmeState& state) {
  return static_cast<long long>(state.kets.size());
}

bool is_minimal_support(const AmeState& state) {
  auto minimal = checked_pow(state.d, state.n / 2);
  return minimal && support(state) == *minimal;
}

AmeVerdict verify_ame_combinatorial(const AmeState& state) {
  if (!is_minimal_support(state))
    throw Error("not-minimal-support",
                "combinatorial checker handles minimal-support states only; "
                "use the partial-trace oracle");
  int n = state.n;
  int d = state.d;
  int m = n / 2;
  long long dm = *checked_pow(d, m);

  AmeVerdict verdict;
  verdict.method = "combinatorial";

  std::vector<std::uint32_t> seen;
  std::uint32_t epoch = 0;
  std::vector<long long> scratch;

  std::vector<int> b(m);
  std::iota(b.begin(), b.end(), 0);
  do {
    // (a) |kets| = d^m, so distinct projections onto B = a bijection.
    if (!projection_injective(state, b, dm, seen, epoch, scratch)) {
      verdict.is_ame = false;
      verdict.failing = {one_based(b),
                         "projection onto B is not a bijection (diagonal of "
                         "the reduced state is not uniform)"};
      return verdict;
    }
    std::vector<int> a;
    a.reserve(n - m);
    for (int s = 0, i = 0; s < n; ++s) {
      while (i < m && b[i] < s) ++i;
      if (i >= m || b[i] != s) a.push_back(s);
    }
    auto key_space = checked_pow(d, n - m);
    if (!projection_injective(state, a,
                              key_space ? *key_space : kMaxTableEntries + 1,
                              seen, epoch, scratch)) {
      verdict.is_ame = false;
      verdict.failing = {one_based(b),
                         "two kets agree on the complement of B "
                         "(off-diagonal of the reduced state is nonzero)"};
      return verdict;
    }
  } while (next_k_subset(b, n));

  verdict.is_ame = true;
  return verdict;
}

AmeVerdict verify_ame_partial_trace(const AmeState& state, long long cap) {
  int n = state.n;
  int d = state.d;
  int m = n / 2;
  auto dm = checked_pow(d, m);
  if (!dm || *dm > cap)
    throw Error("cap-exceeded",
                "d^floor(n/2) exceeds the partial-trace oracle cap");
  long long total = support(state);

  AmeVerdict verdict;
  verdict.method = "partial-trace";

  std::vector<long long> counts;
  std::vector<long long> complement_keys;

  for (int t = 1; t <= m; ++t) {
    long long dt = *checked_pow(d, t);
    std::vector<int> b(t);
    std::iota(b.begin(), b.end(), 0);
    do {
      std::vector<int> a;
      a.reserve(n - t);
      for (int s = 0, i = 0; s < n; ++s) {
        while (i < t && b[i] < s) ++i;
        if (i >= t || b[i] != s) a.push_back(s);
      }
      // rho_B entry (x, y) counts ket pairs that agree on the complement A
      // and project to x and y on B, divided by |kets|. Any two distinct
      // kets sharing an A-projection therefore put a nonzero entry off the
      // diagonal, and the diagonal entry at x is (#kets projecting to x)/S.
      complement_keys.clear();
      complement_keys.reserve(state.kets.size());
      counts.assign(static_cast<std::size_t>(dt), 0);
      for (const auto& ket : state.kets) {
        complement_keys.push_back(project_key(ket, a, d));
        ++counts[project_key(ket, b, d)];
      }
      std::sort(complement_keys.begin(), complement_keys.end());
      if (std::adjacent_find(complement_keys.begin(), complement_keys.end()) !=
          complement_keys.end()) {
        verdict.is_ame = false;
        verdict.failing = {one_based(b),
                           "off-diagonal entry of the reduced state is "
                           "nonzero (two kets share the complement "
                           "projection)"};
        return verdict;
      }
      // Exact equality rho_B = Id/d^t: every count must equal S/d^t, i.e.
      // count * d^t == S as integers.
      for (long long x = 0; x < dt; ++x) {
        if (counts[static_cast<std::size_t>(x)] * dt != total) {
          verdict.is_ame = false;
          verdict.failing = {one_based(b),
                             "diagonal of the reduced state is not uniform"};
          return verdict;
        }
      }
    } while (next_k_subset(b, n));
  }

  verdict.is_ame = true;
  return verdict;
}

}  // namespace ame
