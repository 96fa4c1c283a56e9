#include <doctest.h>

#include <algorithm>
#include <vector>

#include "ame/code.hpp"
#include "ame/error.hpp"
#include "ame/gf.hpp"
#include "ame/rs.hpp"
#include "helpers.hpp"

using namespace ame;
using test_helpers::thrown_code;

TEST_CASE("plain Reed-Solomon over GF(5)") {
  Code c = rs_code(5, 2, RsExtension::none);
  CHECK(c.n == 5);
  CHECK(c.size() == 25);
  REQUIRE(c.field);
  CHECK(c.field->d == 5);

  // delta = n - k + 1 = 4, via the real distance scan rather than oa_check.
  DistanceResult dist = min_distance(c);
  CHECK(dist.delta == 4);
  CHECK(is_mds(c).is_mds);
}

TEST_CASE("evaluation and coefficient conventions over GF(3)") {
  // k = 2, single extension: word(a0, a1) = (a0, a0+a1, a0+2a1, a1).
  Code c = rs_code(3, 2, RsExtension::single);
  CHECK(c.n == 4);
  CHECK(c.size() == 9);
  auto has = [&](const Word& w) {
    return std::find(c.words.begin(), c.words.end(), w) != c.words.end();
  };
  CHECK(has({0, 0, 0, 0}));
  CHECK(has({1, 1, 1, 0}));  // a0=1, a1=0
  CHECK(has({0, 1, 2, 1}));  // a0=0, a1=1
  CHECK(has({1, 0, 2, 2}));  // a0=1, a1=2
}

TEST_CASE("single extension is MDS at every valid dimension over GF(4)") {
  for (int k = 1; k <= 5; ++k) {
    CAPTURE(k);
    Code c = rs_code(4, k, RsExtension::single);
    CHECK(c.n == 5);
    CHECK(min_distance(c).delta == 5 - k + 1);
    CHECK(is_mds(c).is_mds);
  }
}

TEST_CASE("double extension needs characteristic 2 and k = 3") {
  Code c = rs_code(4, 3, RsExtension::double_);
  CHECK(c.n == 6);
  CHECK(c.size() == 64);
  CHECK(min_distance(c).delta == 4);
  CHECK(is_mds(c).is_mds);

  Code c8 = rs_code(8, 3, RsExtension::double_);
  CHECK(c8.n == 10);
  CHECK(c8.size() == 512);
  CHECK(is_mds(c8).is_mds);

  // q = 2: the degenerate but valid case, delta = 2.
  Code c2 = rs_code(2, 3, RsExtension::double_);
  CHECK(c2.n == 4);
  CHECK(c2.size() == 8);
  CHECK(min_distance(c2).delta == 2);
  CHECK(is_mds(c2).is_mds);

  CHECK(thrown_code([] { rs_code(5, 3, RsExtension::double_); }) ==
        "invalid-params");
  CHECK(thrown_code([] { rs_code(4, 2, RsExtension::double_); }) ==
        "invalid-params");
}

TEST_CASE("dimension bounds per extension") {
  CHECK(thrown_code([] { rs_code(5, 0, RsExtension::none); }) ==
        "invalid-params");
  CHECK(thrown_code([] { rs_code(5, 6, RsExtension::none); }) ==
        "invalid-params");  // none caps k at q
  CHECK(rs_code(5, 5, RsExtension::none).n == 5);
  CHECK(rs_code(5, 6, RsExtension::single).n == 6);  // full space, delta 1
  CHECK(thrown_code([] { rs_code(5, 7, RsExtension::single); }) ==
        "invalid-params");
  CHECK(thrown_code([] { rs_code(6, 2, RsExtension::none); }) ==
        "not-a-prime-power");
}

TEST_CASE("ame_code_for_prime_power") {
  Code c5 = ame_code_for_prime_power(5);
  CHECK(c5.n == 6);
  CHECK(c5.size() == 125);
  CHECK(oa_check(c5, 3));
  CHECK(min_distance(c5).delta == 4);  // floor(6/2) + 1

  Code c4 = ame_code_for_prime_power(4);
  CHECK(c4.n == 5);
  CHECK(c4.size() == 16);
  CHECK(min_distance(c4).delta == 4);

  CHECK(thrown_code([] { ame_code_for_prime_power(2); }) == "invalid-params");
  CHECK(thrown_code([] { ame_code_for_prime_power(6); }) ==
        "not-a-prime-power");
}

TEST_CASE("ghz_code repetition words") {
  Code bell = ghz_code(2, 2);
  CHECK(bell.words == std::vector<Word>{{0, 0}, {1, 1}});

  Code ghz6 = ghz_code(3, 6);
  CHECK(ghz6.size() == 6);
  CHECK(ghz6.n == 3);
  CHECK(min_distance(ghz6).delta == 3);
  for (const auto& w : ghz6.words) {
    CHECK(w[0] == w[1]);
    CHECK(w[1] == w[2]);
  }

  CHECK(thrown_code([] { ghz_code(4, 2); }) == "invalid-params");
  CHECK(thrown_code([] { ghz_code(1, 2); }) == "invalid-params");
  CHECK(thrown_code([] { ghz_code(3, 1); }) == "invalid-params");
}

TEST_CASE("rs_code via explicit params with a validated field") {
  RsParams params;
  params.field = make_field(9);
  params.k = 2;
  params.extension = RsExtension::single;
  Code c = rs_code(params);
  CHECK(c.n == 10);
  CHECK(c.size() == 81);
  CHECK(oa_check(c, 2));
}
