#pragma once

#include "ame/code.hpp"
#include "ame/gf.hpp"

namespace ame {

enum class RsExtension { none, single, double_ };

struct RsParams {
  FieldSpec field;
  int k = 1;
  RsExtension extension = RsExtension::none;
};

/// Evaluation code of all q^k polynomials of degree < k over GF(q), at the
/// q field points in integer-encoding order 0..q-1.
///   none:    length q
///   single:  length q+1, appends the coefficient of x^(k-1)
///   double_: length q+2, appends the coefficients of x^2 and x^1;
///            requires p = 2 and k = 3 (the only regime where this stays MDS)
/// The result is checked with oa_check before it is returned; a failure
/// there is a construction bug, reported as error "internal".
Code rs_code(const RsParams& params);

/// Convenience wrapper: rs_code over GF(d).
Code rs_code(int d, int k, RsExtension extension);

/// The length-(d+1) MDS code of dimension floor((d+1)/2) whose words are
/// the kets of a minimal-support AME(d+1, d) state. Needs d >= 3: at d = 2
/// the dimension collapses to 1 (use ghz_code).
Code ame_code_for_prime_power(int d);

/// Repetition code {(s,...,s)}: the GHZ/Bell support. n in {2, 3}.
Code ghz_code(int n, int d);

}  // namespace ame
