#include "ame/rs.hpp"

#include <string>

namespace ame {

namespace {

constexpr long long kMaxRsWords = 1LL << 26;

/// Horner evaluation of f = coeffs[0] + coeffs[1] x + ... at point x.
int poly_eval(const FieldSpec& F, const std::vector<int>& coeffs, int x) {
  int acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    acc = ff_add(F, ff_mul(F, acc, x), *it);
  return acc;
}

}  // namespace

Code rs_code(const RsParams& params) {
  const FieldSpec& F = params.field;
  validate_field(F);
  int q = F.d;
  int k = params.k;
  if (k < 1 || k > q + 1)
    throw Error("invalid-params", "rs dimension k must be in 1..q+1");
  int n = q;
  switch (params.extension) {
    case RsExtension::none:
      if (k > q)
        throw Error("invalid-params",
                    "plain rs code of length q needs k <= q");
      break;
    case RsExtension::single:
      n = q + 1;
      break;
    case RsExtension::double_:
      if (F.p != 2 || k != 3)
        throw Error("invalid-params",
                    "double extension exists only for even q with k = 3");
      n = q + 2;
      break;
  }
  auto count = checked_pow(q, k);
  if (!count || *count > kMaxRsWords)
    throw Error("out-of-range", "q^k exceeds the word-count cap");

  std::vector<Word> words;
  words.reserve(static_cast<std::size_t>(*count));
  std::vector<int> coeffs(k, 0);  // coeffs[i] multiplies x^i
  for (long long idx = 0; idx < *count; ++idx) {
    long long t = idx;
    for (int i = 0; i < k; ++i) {
      coeffs[i] = static_cast<int>(t % q);
      t /= q;
    }
    Word w;
    w.reserve(n);
    for (int x = 0; x < q; ++x)
      w.push_back(static_cast<Symbol>(poly_eval(F, coeffs, x)));
    if (params.extension == RsExtension::single)
      w.push_back(static_cast<Symbol>(coeffs[k - 1]));
    if (params.extension == RsExtension::double_) {
      w.push_back(static_cast<Symbol>(coeffs[2]));
      w.push_back(static_cast<Symbol>(coeffs[1]));
    }
    words.push_back(std::move(w));
  }

  Code code = Code::make(q, n, std::move(words), F);
  if (!oa_check(code, k))
    throw Error("internal",
                "rs construction failed its own orthogonal-array check");
  return code;
}

Code rs_code(int d, int k, RsExtension extension) {
  RsParams params;
  params.field = make_field(d);
  params.k = k;
  params.extension = extension;
  return rs_code(params);
}

Code ame_code_for_prime_power(int d) {
  if (d < 3)
    throw Error("invalid-params",
                "need d >= 3; for d = 2 use ghz_code(3, 2)");
  return rs_code(d, (d + 1) / 2, RsExtension::single);
}

Code ghz_code(int n, int d) {
  if (n < 2 || n > 3)
    throw Error("invalid-params", "ghz/repetition code supports n in {2, 3}");
  if (d < 2) throw Error("invalid-params", "ghz code needs d >= 2");
  std::vector<Word> words;
  words.reserve(d);
  for (int s = 0; s < d; ++s)
    words.push_back(Word(n, static_cast<Symbol>(s)));
  return Code::make(d, n, std::move(words));
}

}  // namespace ame
