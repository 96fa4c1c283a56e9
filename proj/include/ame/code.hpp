#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ame/error.hpp"
#include "ame/gf.hpp"

namespace ame {

using Symbol = std::uint16_t;
using Word = std::vector<Symbol>;

/// d^e as a 64-bit integer; nullopt on overflow.
std::optional<long long> checked_pow(long long base, int exp);

/// A block code over {0..d-1}: a set of length-n words, not necessarily
/// linear. Words are kept sorted lexicographically so equal codes compare
/// equal and file output is canonical. The optional field records the
/// arithmetic a construction used; it is provenance only and takes no part
/// in equality.
struct Code {
  int d = 0;
  int n = 0;
  std::vector<Word> words;
  std::optional<FieldSpec> field;

  /// Validates symbols/lengths, sorts, and rejects duplicate words.
  static Code make(int d, int n, std::vector<Word> words,
                   std::optional<FieldSpec> field = std::nullopt);

  std::size_t size() const { return words.size(); }

  friend bool operator==(const Code& a, const Code& b) {
    return a.d == b.d && a.n == b.n && a.words == b.words;
  }
};

struct DistanceResult {
  int delta = 0;
  std::pair<Word, Word> witness;
};

struct MdsReport {
  bool is_mds = false;
  int delta = 0;
  int k = 0;  // combinatorial dimension n - delta + 1
  std::optional<std::pair<Word, Word>> witness;
};

int hamming_distance(const Word& a, const Word& b);

/// Minimum pairwise Hamming distance with a witness pair (the
/// lexicographically first pair achieving it). Splits the pair scan across
/// threads for large codes; workers = 0 picks the hardware count.
DistanceResult min_distance(const Code& code, int workers = 0);

/// MDS decision via the Singleton bound: |C| = d^(n-delta+1).
MdsReport is_mds(const Code& code, int workers = 0);

/// Orthogonal-array test, strength k index 1: every projection onto k
/// coordinates hits each k-tuple exactly once. Requires |C| = d^k.
bool oa_check(const Code& code, int k);

/// Deletes one coordinate from every word. Duplicate words after deletion
/// are an error, not a silent dedup; they cannot occur when the input is
/// MDS with delta >= 2.
Code puncture(const Code& code, int position);

}  // namespace ame
