#pragma once

#include <optional>
#include <vector>

#include "ame/error.hpp"

namespace ame {

/// Exact arithmetic in GF(p^m).
///
/// Elements are integers in {0..d-1} read as base-p digit vectors: digit i of
/// the value is the coefficient of x^i in the canonical polynomial basis.
/// The modulus is stored with ascending degree (modulus[i] multiplies x^i),
/// is monic of degree m, and is the canonical choice for the field: the
/// lexicographically least monic irreducible, coefficients compared from the
/// highest degree down.
struct FieldSpec {
  int p = 0;                 // characteristic, prime
  int m = 0;                 // extension degree
  int d = 0;                 // field size p^m
  std::vector<int> modulus;  // m+1 coefficients, ascending degree, monic
};

bool is_prime(int n);

/// Decomposes d as p^m with p prime; nullopt when d is not a prime power.
std::optional<std::pair<int, int>> prime_power_decompose(int d);

/// Builds GF(d) with the canonical modulus. Fields are capped at d <= 1024.
/// Throws Error("not-a-prime-power") for composite non-prime-power d.
FieldSpec make_field(int d);

/// Re-checks every FieldSpec invariant (primality, d = p^m, monic irreducible
/// modulus). Used when a spec arrives from a file rather than make_field.
void validate_field(const FieldSpec& field);

int ff_add(const FieldSpec& field, int a, int b);
int ff_mul(const FieldSpec& field, int a, int b);

/// Multiplicative inverse; throws Error("zero-inverse") for a = 0.
int ff_inv(const FieldSpec& field, int a);

}  // namespace ame
