#include "ame/gf.hpp"

#include <string>

namespace ame {

namespace {

constexpr int kFieldSizeCap = 1024;

// Polynomials over GF(p) as coefficient vectors, ascending degree.
// Degree is tracked implicitly: trailing zeros are allowed, deg() ignores them.

int poly_deg(const std::vector<int>& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
    if (f[i] != 0) return i;
  }
  return -1;
}

std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b, int p) {
  std::vector<int> out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
  }
  return out;
}

// Remainder of f modulo monic g.
std::vector<int> poly_mod(std::vector<int> f, const std::vector<int>& g, int p) {
  const int dg = poly_deg(g);
  int df = poly_deg(f);
  while (df >= dg && dg >= 0) {
    const int lead = f[df];  // g monic, so the quotient coefficient is lead
    for (int i = 0; i <= dg; ++i) {
      int& c = f[df - dg + i];
      c = ((c - lead * g[i]) % p + p) % p;
    }
    df = poly_deg(f);
  }
  return f;
}

bool poly_is_zero(const std::vector<int>& f) { return poly_deg(f) < 0; }

// Irreducibility over GF(p) by trial division against every monic polynomial
// of degree 1..deg(f)/2. Fields here are small, so the exhaustive scan is fine.
bool is_irreducible(const std::vector<int>& f, int p) {
  const int df = poly_deg(f);
  if (df < 1) return false;
  for (int dg = 1; dg <= df / 2; ++dg) {
    // All monic g of degree dg: enumerate the dg low coefficients.
    long long count = 1;
    for (int i = 0; i < dg; ++i) count *= p;
    std::vector<int> g(dg + 1, 0);
    g[dg] = 1;
    for (long long t = 0; t < count; ++t) {
      long long v = t;
      for (int i = 0; i < dg; ++i) {
        g[i] = static_cast<int>(v % p);
        v /= p;
      }
      if (poly_is_zero(poly_mod(f, g, p))) return false;
    }
  }
  return true;
}

std::vector<int> value_to_poly(int value, int p, int m) {
  std::vector<int> out(m, 0);
  for (int i = 0; i < m; ++i) {
    out[i] = value % p;
    value /= p;
  }
  return out;
}

int poly_to_value(const std::vector<int>& f, int p, int m) {
  int out = 0;
  for (int i = m - 1; i >= 0; --i) {
    out = out * p + (i < static_cast<int>(f.size()) ? f[i] : 0);
  }
  return out;
}

void check_element(const FieldSpec& field, int a) {
  if (a < 0 || a >= field.d) {
    throw Error("out-of-range",
                "field element " + std::to_string(a) + " outside {0.." +
                    std::to_string(field.d - 1) + "}");
  }
}

}  // namespace

bool is_prime(int n) {
  if (n < 2) return false;
  for (int q = 2; static_cast<long long>(q) * q <= n; ++q) {
    if (n % q == 0) return false;
  }
  return true;
}

std::optional<std::pair<int, int>> prime_power_decompose(int d) {
  if (d < 2) return std::nullopt;
  int p = d;
  for (int q = 2; static_cast<long long>(q) * q <= d; ++q) {
    if (d % q == 0) {
      p = q;
      break;
    }
  }
  int m = 0;
  int rest = d;
  while (rest % p == 0) {
    rest /= p;
    ++m;
  }
  if (rest != 1) return std::nullopt;
  return std::make_pair(p, m);
}

FieldSpec make_field(int d) {
  if (d < 2 || d > kFieldSizeCap) {
    throw Error("invalid-params", "field size must be in [2, " +
                                      std::to_string(kFieldSizeCap) + "], got " +
                                      std::to_string(d));
  }
  const auto pm = prime_power_decompose(d);
  if (!pm) {
    throw Error("not-a-prime-power",
                std::to_string(d) + " is not a prime power, no field structure exists");
  }
  const auto [p, m] = *pm;

  // Scan monic degree-m polynomials in lex order, comparing coefficients from
  // the highest degree down, and take the first irreducible one.
  long long count = 1;
  for (int i = 0; i < m; ++i) count *= p;
  std::vector<int> f(m + 1, 0);
  f[m] = 1;
  for (long long t = 0; t < count; ++t) {
    long long v = t;
    for (int i = m - 1; i >= 0; --i) {
      long long scale = 1;
      for (int j = 0; j < i; ++j) scale *= p;
      f[i] = static_cast<int>((v / scale) % p);
    }
    (void)v;
    if (is_irreducible(f, p)) {
      return FieldSpec{p, m, d, f};
    }
  }
  throw Error("internal", "no irreducible polynomial found for GF(" + std::to_string(d) + ")");
}

void validate_field(const FieldSpec& field) {
  if (!is_prime(field.p)) {
    throw Error("malformed-input", "field characteristic " + std::to_string(field.p) + " is not prime");
  }
  if (field.m < 1) throw Error("malformed-input", "field extension degree must be >= 1");
  long long size = 1;
  for (int i = 0; i < field.m; ++i) size *= field.p;
  if (size != field.d) {
    throw Error("malformed-input", "field size does not equal p^m");
  }
  if (static_cast<int>(field.modulus.size()) != field.m + 1 || field.modulus[field.m] != 1) {
    throw Error("malformed-input", "modulus must be monic of degree m");
  }
  for (int c : field.modulus) {
    if (c < 0 || c >= field.p) throw Error("malformed-input", "modulus coefficient out of range");
  }
  if (!is_irreducible(field.modulus, field.p)) {
    throw Error("malformed-input", "modulus is reducible over GF(p)");
  }
}

int ff_add(const FieldSpec& field, int a, int b) {
  check_element(field, a);
  check_element(field, b);
  if (field.m == 1) return (a + b) % field.p;
  const auto fa = value_to_poly(a, field.p, field.m);
  const auto fb = value_to_poly(b, field.p, field.m);
  std::vector<int> out(field.m);
  for (int i = 0; i < field.m; ++i) out[i] = (fa[i] + fb[i]) % field.p;
  return poly_to_value(out, field.p, field.m);
}

int ff_mul(const FieldSpec& field, int a, int b) {
  check_element(field, a);
  check_element(field, b);
  if (field.m == 1) return (a * b) % field.p;
  const auto fa = value_to_poly(a, field.p, field.m);
  const auto fb = value_to_poly(b, field.p, field.m);
  const auto prod = poly_mod(poly_mul(fa, fb, field.p), field.modulus, field.p);
  return poly_to_value(prod, field.p, field.m);
}

int ff_inv(const FieldSpec& field, int a) {
  check_element(field, a);
  if (a == 0) throw Error("zero-inverse", "0 has no multiplicative inverse");
  // Exhaustive scan; the inverse is unique and d is small.
  for (int b = 1; b < field.d; ++b) {
    if (ff_mul(field, a, b) == 1) return b;
  }
  throw Error("internal", "no inverse found, field arithmetic is broken");
}

}  // namespace ame
