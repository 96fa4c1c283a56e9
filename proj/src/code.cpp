#include "ame/code.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>
#include <thread>

namespace ame {

namespace {

constexpr long long kMaxCodeWords = 1LL << 26;

int hardware_workers(int workers) {
  if (workers < 0) throw Error("invalid-params", "workers must be >= 0");
  if (workers > 0) return workers;
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

/// Words packed four bits per symbol, usable when d <= 16 and n <= 16.
/// Distance of packed words is then a handful of bit tricks instead of a
/// symbol loop, which matters for the d = 9 codes (~1.7e9 pairs).
std::vector<std::uint64_t> pack_words(const Code& code) {
  std::vector<std::uint64_t> packed(code.words.size());
  for (std::size_t i = 0; i < code.words.size(); ++i) {
    std::uint64_t v = 0;
    for (int j = 0; j < code.n; ++j)
      v |= static_cast<std::uint64_t>(code.words[i][j]) << (4 * j);
    packed[i] = v;
  }
  return packed;
}

int packed_distance(std::uint64_t a, std::uint64_t b) {
  std::uint64_t x = a ^ b;
  // Fold each nonzero nibble down to its low bit.
  x |= x >> 2;
  x |= x >> 1;
  x &= 0x1111111111111111ULL;
  return std::popcount(x);
}

struct PairBest {
  int delta = std::numeric_limits<int>::max();
  std::size_t i = 0;
  std::size_t j = 0;
};

bool better(const PairBest& a, const PairBest& b) {
  if (a.delta != b.delta) return a.delta < b.delta;
  if (a.i != b.i) return a.i < b.i;
  return a.j < b.j;
}

template <typename DistFn>
PairBest scan_rows(std::size_t lo, std::size_t hi, std::size_t count,
                   DistFn dist) {
  PairBest best;
  for (std::size_t i = lo; i < hi; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      int delta = dist(i, j);
      if (delta < best.delta) best = {delta, i, j};
      // Ties keep the earlier (i, j): the scan order already visits pairs
      // lexicographically within one shard.
    }
  }
  return best;
}

template <typename DistFn>
PairBest parallel_scan(std::size_t count, int workers, DistFn dist) {
  if (workers <= 1 || count < 512) return scan_rows(0, count, count, dist);
  std::vector<PairBest> results(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  // Contiguous row blocks are uneven (row i owns count-i-1 pairs) but fine
  // here; the packed kernel is cheap enough that imbalance is lost in noise.
  std::size_t chunk = (count + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    std::size_t lo = std::min(count, static_cast<std::size_t>(w) * chunk);
    std::size_t hi = std::min(count, lo + chunk);
    threads.emplace_back(
        [&, lo, hi, w] { results[w] = scan_rows(lo, hi, count, dist); });
  }
  for (auto& t : threads) t.join();
  PairBest best;
  for (const auto& r : results)
    if (better(r, best)) best = r;
  return best;
}

}  // namespace

std::optional<long long> checked_pow(long long base, int exp) {
  if (base < 0 || exp < 0) return std::nullopt;
  long long out = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && out > std::numeric_limits<long long>::max() / base)
      return std::nullopt;
    out *= base;
  }
  return out;
}

Code Code::make(int d, int n, std::vector<Word> words,
                std::optional<FieldSpec> field) {
  if (d < 1 || n < 1)
    throw Error("invalid-params", "code needs d >= 1 and n >= 1");
  if (words.empty()) throw Error("invalid-params", "code has no words");
  if (static_cast<long long>(words.size()) > kMaxCodeWords)
    throw Error("out-of-range", "code exceeds the word-count cap");
  if (field && field->d != d)
    throw Error("invalid-params", "field order does not match d");
  for (const auto& w : words) {
    if (static_cast<int>(w.size()) != n)
      throw Error("length-mismatch", "word length differs from n");
    for (Symbol s : w)
      if (s >= d) throw Error("out-of-range", "symbol not in 0..d-1");
  }
  std::sort(words.begin(), words.end());
  if (std::adjacent_find(words.begin(), words.end()) != words.end())
    throw Error("duplicate-words", "code contains a repeated word");
  Code code;
  code.d = d;
  code.n = n;
  code.words = std::move(words);
  code.field = std::move(field);
  return code;
}

int hamming_distance(const Word& a, const Word& b) {
  if (a.size() != b.size())
    throw Error("length-mismatch", "words have different lengths");
  int delta = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) ++delta;
  return delta;
}

DistanceResult min_distance(const Code& code, int workers) {
  if (code.size() < 2)
    throw Error("too-few-words", "minimum distance needs at least two words");
  int nworkers = hardware_workers(workers);
  PairBest best;
  if (code.d <= 16 && code.n <= 16) {
    auto packed = pack_words(code);
    best = parallel_scan(packed.size(), nworkers, [&](std::size_t i, std::size_t j) {
      return packed_distance(packed[i], packed[j]);
    });
  } else {
    best = parallel_scan(code.size(), nworkers, [&](std::size_t i, std::size_t j) {
      return hamming_distance(code.words[i], code.words[j]);
    });
  }
  return {best.delta, {code.words[best.i], code.words[best.j]}};
}

MdsReport is_mds(const Code& code, int workers) {
  DistanceResult dist = min_distance(code, workers);
  MdsReport report;
  report.delta = dist.delta;
  report.k = code.n - dist.delta + 1;
  report.witness = dist.witness;
  auto singleton = checked_pow(code.d, report.k);
  if (!singleton)
    throw Error("out-of-range", "d^k overflows in the Singleton test");
  report.is_mds = static_cast<long long>(code.size()) == *singleton;
  return report;
}

bool oa_check(const Code& code, int k) {
  if (k < 1 || k > code.n)
    throw Error("invalid-params", "strength k must be in 1..n");
  auto expected = checked_pow(code.d, k);
  if (!expected || static_cast<long long>(code.size()) != *expected)
    throw Error("size-mismatch", "orthogonal array needs exactly d^k words");

  // With |C| = d^k fixed, "each k-tuple exactly once" is the same as "no
  // k-tuple twice", so a duplicate test per coordinate subset suffices.
  // seen[] holds the epoch a tuple was last hit, avoiding a clear per subset.
  std::vector<std::uint32_t> seen(static_cast<std::size_t>(*expected), 0);
  std::uint32_t epoch = 0;

  std::vector<int> cols(k);
  for (int i = 0; i < k; ++i) cols[i] = i;
  while (true) {
    ++epoch;
    for (const auto& w : code.words) {
      long long key = 0;
      for (int c : cols) key = key * code.d + w[c];
      auto& slot = seen[static_cast<std::size_t>(key)];
      if (slot == epoch) return false;
      slot = epoch;
    }
    // Next k-subset of {0..n-1} in lexicographic order.
    int i = k - 1;
    while (i >= 0 && cols[i] == code.n - k + i) --i;
    if (i < 0) break;
    ++cols[i];
    for (int j = i + 1; j < k; ++j) cols[j] = cols[j - 1] + 1;
  }
  return true;
}

Code puncture(const Code& code, int position) {
  if (position < 0 || position >= code.n)
    throw Error("invalid-position", "puncture position must be in 0..n-1");
  if (code.n < 2)
    throw Error("invalid-params", "cannot puncture a length-1 code");
  std::vector<Word> out;
  out.reserve(code.size());
  for (const auto& w : code.words) {
    Word shorter;
    shorter.reserve(w.size() - 1);
    for (int i = 0; i < code.n; ++i)
      if (i != position) shorter.push_back(w[i]);
    out.push_back(std::move(shorter));
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw Error("duplicate-words", "puncturing collapsed two words");
  Code punctured;
  punctured.d = code.d;
  punctured.n = code.n - 1;
  punctured.words = std::move(out);
  punctured.field = code.field;
  return punctured;
}

}  // namespace ame
