#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ame/code.hpp"
#include "ame/error.hpp"

namespace test_helpers {

/// Runs fn and returns the ame::Error code it throws, or "" if it returns.
template <typename Fn>
std::string thrown_code(Fn&& fn) {
  try {
    fn();
  } catch (const ame::Error& e) {
    return e.code();
  }
  return "";
}

inline ame::Word word_from_index(long long idx, int d, int n) {
  ame::Word w(n);
  for (int i = n - 1; i >= 0; --i) {
    w[i] = static_cast<ame::Symbol>(idx % d);
    idx /= d;
  }
  return w;
}

/// `count` distinct uniform words of length n over {0..d-1}.
inline std::vector<ame::Word> random_distinct_words(std::mt19937& rng, int d,
                                                    int n, int count) {
  std::set<ame::Word> out;
  std::uniform_int_distribution<int> pick(0, d - 1);
  while (static_cast<int>(out.size()) < count) {
    ame::Word w(n);
    for (auto& s : w) s = static_cast<ame::Symbol>(pick(rng));
    out.insert(std::move(w));
  }
  return {out.begin(), out.end()};
}

struct BruteDistance {
  int delta;
  ame::Word first, second;
};

/// Naive pairwise scan over the sorted word list, keeping the
/// lexicographically first (delta, i, j) improvement, mirroring the library
/// contract without sharing any of its code.
inline BruteDistance brute_min_distance(std::vector<ame::Word> words) {
  std::sort(words.begin(), words.end());
  BruteDistance best{-1, {}, {}};
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      int dist = 0;
      for (std::size_t t = 0; t < words[i].size(); ++t)
        dist += words[i][t] != words[j][t];
      if (best.delta < 0 || dist < best.delta) {
        best = {dist, words[i], words[j]};
      }
    }
  }
  return best;
}

}  // namespace test_helpers
