#include <doctest.h>

#include <random>
#include <vector>

#include "ame/code.hpp"
#include "ame/error.hpp"
#include "ame/rs.hpp"
#include "helpers.hpp"

using namespace ame;
using test_helpers::brute_min_distance;
using test_helpers::random_distinct_words;
using test_helpers::thrown_code;
using test_helpers::word_from_index;

TEST_CASE("hamming distance") {
  CHECK(hamming_distance({0, 1, 2}, {0, 1, 2}) == 0);
  CHECK(hamming_distance({0, 1, 2}, {2, 1, 0}) == 2);
  CHECK(hamming_distance({5}, {9}) == 1);
  CHECK(thrown_code([] { hamming_distance({0, 1}, {0, 1, 2}); }) ==
        "length-mismatch");
}

TEST_CASE("Code::make validates and sorts") {
  Code c = Code::make(3, 2, {{2, 1}, {0, 0}, {1, 2}});
  CHECK(c.words == std::vector<Word>{{0, 0}, {1, 2}, {2, 1}});
  CHECK(c.size() == 3);

  CHECK(thrown_code([] { Code::make(2, 2, {{0, 0}, {0, 0}}); }) ==
        "duplicate-words");
  CHECK(thrown_code([] { Code::make(2, 2, {{0, 2}}); }) == "out-of-range");
  CHECK(thrown_code([] { Code::make(2, 2, {{0, 0, 1}}); }) ==
        "length-mismatch");
  CHECK(thrown_code([] { Code::make(2, 2, {}); }) == "invalid-params");
  CHECK(thrown_code([] { Code::make(0, 2, {{0, 0}}); }) == "invalid-params");
}

TEST_CASE("min_distance agrees with a brute-force oracle") {
  std::mt19937 rng(20250819);
  // (d, n, count): packed path (d <= 16, n <= 16) and the scalar fallback.
  struct Shape {
    int d, n, count;
  };
  for (Shape s : std::vector<Shape>{{2, 6, 12},
                                    {3, 5, 25},
                                    {5, 7, 40},
                                    {16, 16, 30},
                                    {17, 4, 30},
                                    {3, 17, 25}}) {
    CAPTURE(s.d);
    CAPTURE(s.n);
    for (int rep = 0; rep < 6; ++rep) {
      auto words = random_distinct_words(rng, s.d, s.n, s.count);
      Code code = Code::make(s.d, s.n, words);
      auto oracle = brute_min_distance(words);
      DistanceResult got = min_distance(code);
      CHECK(got.delta == oracle.delta);
      CHECK(got.witness.first == oracle.first);
      CHECK(got.witness.second == oracle.second);
    }
  }
}

TEST_CASE("min_distance is deterministic across worker counts") {
  std::mt19937 rng(7);
  // 600 words crosses the parallel-scan threshold.
  auto words = random_distinct_words(rng, 4, 8, 600);
  Code code = Code::make(4, 8, words);
  DistanceResult one = min_distance(code, 1);
  DistanceResult many = min_distance(code, 4);
  auto oracle = brute_min_distance(words);
  CHECK(one.delta == oracle.delta);
  CHECK(one.delta == many.delta);
  CHECK(one.witness == many.witness);
  CHECK(one.witness.first == oracle.first);
  CHECK(one.witness.second == oracle.second);
}

TEST_CASE("min_distance needs two words") {
  Code c = Code::make(2, 3, {{0, 1, 0}});
  CHECK(thrown_code([&] { min_distance(c); }) == "too-few-words");
}

TEST_CASE("is_mds on Reed-Solomon codes and perturbations") {
  Code rs = rs_code(5, 2, RsExtension::none);
  MdsReport report = is_mds(rs);
  CHECK(report.is_mds);
  CHECK(report.delta == 4);
  CHECK(report.k == 2);
  // The witness pair documents the achieved minimum even on a pass.
  REQUIRE(report.witness);
  CHECK(hamming_distance(report.witness->first, report.witness->second) == 4);

  // Tampering with one symbol breaks the distance.
  auto words = rs.words;
  words[3][0] = static_cast<Symbol>((words[3][0] + 1) % 5);
  Code broken = Code::make(5, 5, words);
  MdsReport bad = is_mds(broken);
  CHECK_FALSE(bad.is_mds);
  CHECK(bad.delta < 4);
  REQUIRE(bad.witness);
  CHECK(hamming_distance(bad.witness->first, bad.witness->second) ==
        bad.delta);
}

TEST_CASE("is_mds rejects sizes that are not a power of d") {
  Code c = Code::make(3, 3, {{0, 0, 0}, {1, 1, 1}, {2, 2, 2}, {0, 1, 2}});
  MdsReport report = is_mds(c);  // 4 words, not a power of 3
  CHECK_FALSE(report.is_mds);
}

TEST_CASE("oa_check is equivalent to is_mds at size d^k") {
  std::mt19937 rng(424242);
  int positives = 0, negatives = 0;
  for (int rep = 0; rep < 100; ++rep) {
    int d = 2 + static_cast<int>(rng() % 2);   // 2 or 3
    int k = 1 + static_cast<int>(rng() % 2);   // 1 or 2
    int n = k + 1 + static_cast<int>(rng() % 2);
    long long size = 1;
    for (int i = 0; i < k; ++i) size *= d;
    auto words =
        random_distinct_words(rng, d, n, static_cast<int>(size));
    Code code = Code::make(d, n, words);
    bool oa = oa_check(code, k);
    bool mds = is_mds(code).is_mds;
    CAPTURE(d);
    CAPTURE(k);
    CAPTURE(n);
    REQUIRE(oa == mds);
    (oa ? positives : negatives)++;
  }
  // Random subsets are rarely MDS; make sure both outcomes were exercised.
  CHECK(negatives > 0);

  CHECK(oa_check(rs_code(5, 2, RsExtension::none), 2));
  CHECK(oa_check(rs_code(4, 3, RsExtension::double_), 3));
  CHECK(oa_check(rs_code(7, 4, RsExtension::single), 4));
}

TEST_CASE("oa_check flags strength and size violations") {
  Code rs = rs_code(5, 2, RsExtension::none);
  CHECK(thrown_code([&] { oa_check(rs, 0); }) == "invalid-params");
  CHECK(thrown_code([&] { oa_check(rs, 6); }) == "invalid-params");
  CHECK(thrown_code([&] { oa_check(rs, 3); }) == "size-mismatch");

  // Right size, wrong content: columns {0,2} see (0,0) twice.
  Code c = Code::make(2, 3, {{0, 0, 0}, {0, 1, 0}, {1, 0, 0}, {1, 1, 1}});
  CHECK_FALSE(oa_check(c, 2));
  CHECK_FALSE(is_mds(c).is_mds);
}

TEST_CASE("puncture removes one coordinate") {
  Code rs = rs_code(5, 3, RsExtension::single);  // length 6, 125 words
  Code p = puncture(rs, 5);
  CHECK(p.n == 5);
  CHECK(p.size() == 125);
  CHECK(oa_check(p, 3));  // still MDS

  CHECK(thrown_code([&] { puncture(rs, 6); }) == "invalid-position");
  CHECK(thrown_code([&] { puncture(rs, -1); }) == "invalid-position");

  Code tiny = Code::make(2, 2, {{0, 0}, {0, 1}});
  CHECK(thrown_code([&] { puncture(tiny, 1); }) == "duplicate-words");

  Code single = Code::make(2, 1, {{0}, {1}});
  CHECK(thrown_code([&] { puncture(single, 0); }) == "invalid-params");
}

TEST_CASE("checked_pow guards overflow") {
  auto v = checked_pow(10, 3);
  REQUIRE(v);
  CHECK(*v == 1000);
  CHECK_FALSE(checked_pow(10, 30));
  auto one = checked_pow(7, 0);
  REQUIRE(one);
  CHECK(*one == 1);
}
