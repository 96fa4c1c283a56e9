#include "ame/bounds.hpp"

#include <algorithm>
#include <string>

#include "ame/gf.hpp"
#include "ame/rs.hpp"
#include "ame/search.hpp"
#include "ame/state.hpp"

namespace ame {

namespace {

/// Largest word count we are willing to materialize when turning the
/// rs-construction theorem into a constructed-and-verified fact; beyond it
/// the bound is still emitted, but as a derived (unmaterialized) fact.
constexpr long long kConstructCap = 1LL << 20;

int provenance_rank(const Provenance& p) {
  switch (p.kind) {
    case Provenance::Kind::constructed:
    case Provenance::Kind::searched:
      return 3;
    case Provenance::Kind::derived:
      return 2;
    case Provenance::Kind::external:
      return 1;
  }
  return 0;
}

BoundFact make_external(int d, std::optional<int> k, Relation rel, int value,
                        std::string tag,
                        std::optional<std::string> proviso = std::nullopt) {
  BoundFact fact;
  fact.d = d;
  fact.k = k;
  fact.relation = rel;
  fact.value = value;
  fact.provenance.kind = Provenance::Kind::external;
  fact.provenance.tag = std::move(tag);
  fact.proviso = std::move(proviso);
  return fact;
}

BoundFact constructed_fact(int d, int value, std::string certificate) {
  BoundFact fact;
  fact.d = d;
  fact.relation = Relation::ge;
  fact.value = value;
  fact.provenance.kind = Provenance::Kind::constructed;
  fact.provenance.certificate = std::move(certificate);
  return fact;
}

/// Verifies that a code's state is minimal-support AME, with the exact
/// oracle added when it fits the cap, and describes what ran.
std::string verify_for_certificate(const Code& code) {
  AmeState state = state_from_code(code);
  if (!is_minimal_support(state))
    throw Error("internal", "constructive bound produced non-minimal support");
  AmeVerdict comb = verify_ame_combinatorial(state);
  if (!comb.is_ame)
    throw Error("internal", "constructive bound fails the combinatorial "
                            "checker");
  std::string text = std::to_string(state.kets.size()) +
                     " kets verified by the combinatorial checker";
  auto dm = checked_pow(state.d, state.n / 2);
  if (dm && *dm <= 4096) {
    AmeVerdict oracle = verify_ame_partial_trace(state);
    if (!oracle.is_ame)
      throw Error("internal",
                  "constructive bound fails the partial-trace oracle");
    text += " and the exact partial-trace oracle";
  }
  return text;
}

/// True when (relation, value) caps the subject from above at `value`.
bool is_upper(const BoundFact& f) {
  return f.relation == Relation::le || f.relation == Relation::eq;
}

bool is_lower(const BoundFact& f) {
  return f.relation == Relation::ge || f.relation == Relation::eq;
}

void keep_best_lower(std::optional<BoundFact>& best, const BoundFact& fact) {
  if (!best || fact.value > best->value ||
      (fact.value == best->value &&
       provenance_rank(fact.provenance) > provenance_rank(best->provenance)))
    best = fact;
}

void keep_best_upper(std::optional<BoundFact>& best, const BoundFact& fact) {
  if (!best || fact.value < best->value ||
      (fact.value == best->value &&
       provenance_rank(fact.provenance) > provenance_rank(best->provenance)))
    best = fact;
}

}  // namespace

std::string relation_symbol(Relation r) {
  switch (r) {
    case Relation::le:
      return "<=";
    case Relation::ge:
      return ">=";
    case Relation::eq:
      return "=";
  }
  return "?";
}

std::string BoundFact::subject() const {
  if (k) return "M(" + std::to_string(*k) + "," + std::to_string(d) + ")";
  return "N(" + std::to_string(d) + ")";
}

std::vector<BoundFact> builtin_external_facts() {
  return {
      make_external(2, std::nullopt, Relation::le, 3, "higuchisudbery"),
      make_external(5, 3, Relation::le, 6, "kokkalaetal", "delta>=3"),
      make_external(7, 4, Relation::le, 8, "kokkalaetal", "delta>=3"),
      make_external(10, 8, Relation::le, 11, "huntemann-table-5.1"),
      make_external(6, 2, Relation::eq, 3, "huntemann-table-5.1"),
      make_external(10, std::nullopt, Relation::ge, 4,
                    "bose-parker-shirkhande"),
  };
}

std::vector<BoundFact> n_lower_constructive(int d) {
  if (d < 2) throw Error("invalid-params", "need d >= 2");
  std::vector<BoundFact> facts;

  Code ghz = ghz_code(3, d);
  facts.push_back(constructed_fact(
      d, 3, "ghz(3," + std::to_string(d) + "): " + verify_for_certificate(ghz)));

  auto pp = prime_power_decompose(d);
  if (pp && d >= 3) {
    int k = (d + 1) / 2;
    auto words = checked_pow(d, k);
    if (words && *words <= kConstructCap) {
      Code code = ame_code_for_prime_power(d);
      facts.push_back(constructed_fact(
          d, d + 1,
          "rs single-extension, q=" + std::to_string(d) +
              ", k=" + std::to_string(k) + ": " + verify_for_certificate(code)));
    } else {
      BoundFact fact;
      fact.d = d;
      fact.relation = Relation::ge;
      fact.value = d + 1;
      fact.provenance.kind = Provenance::Kind::derived;
      fact.provenance.rule =
          "rs-single-extension-theorem (not materialized: d^k above the "
          "construction cap)";
      facts.push_back(fact);
    }
  }

  if (d == 4) {
    Code code = rs_code(4, 3, RsExtension::double_);
    facts.push_back(constructed_fact(
        4, 6, "rs double-extension, q=4, k=3: " + verify_for_certificate(code)));
  }

  return facts;
}

std::optional<BoundFact> derive_n_upper_from_M(const BoundFact& m_fact) {
  if (!m_fact.k || !is_upper(m_fact))
    throw Error("invalid-params",
                "derivation needs an upper bound on some M(k,d)");
  int k = *m_fact.k;
  int d = m_fact.d;
  int v = m_fact.value;
  if (v < k + 1)
    throw Error("invalid-params",
                "M(k,d) <= v with v <= k contradicts the parity-check "
                "construction");
  std::string proviso_note;
  if (m_fact.proviso) {
    if (*m_fact.proviso != "delta>=3")
      throw Error("invalid-params", "unrecognized proviso " + *m_fact.proviso);
    // The derivation excludes an MDS code of length v+1 and dimension k,
    // whose minimum distance is v+2-k; the fact only covers delta >= 3.
    if (v + 2 - k < 3) return std::nullopt;
    proviso_note = "; proviso delta>=3 holds at the excluded length " +
                   std::to_string(v + 1) + " (delta = " +
                   std::to_string(v + 2 - k) + ")";
  }
  // AME(n,d) minimal support needs MDS(n, floor(n/2)); floor(n/2) = k means
  // n is 2k or 2k+1. Any such n > v is impossible, and by the interval
  // property everything above the smallest impossible n is too.
  int blocked;
  if (2 * k > v)
    blocked = 2 * k;
  else if (2 * k + 1 > v)
    blocked = 2 * k + 1;
  else
    return std::nullopt;

  BoundFact fact;
  fact.d = d;
  fact.relation = Relation::le;
  fact.value = blocked - 1;
  fact.conditional = m_fact.conditional;
  fact.provenance.kind = Provenance::Kind::derived;
  fact.provenance.rule =
      "puncture-contrapositive: no MDS(n > " + std::to_string(v) +
      ", k=" + std::to_string(k) + ") code over d=" + std::to_string(d) +
      ", so no minimal-support AME(" + std::to_string(blocked) + "," +
      std::to_string(d) + "); the interval property caps N(d)" + proviso_note;
  fact.provenance.premises = {m_fact};
  return fact;
}

BoundFact conditional_n_upper_prime_power(int d,
                                          bool assume_general_mds_conjecture) {
  if (!assume_general_mds_conjecture)
    throw Error("conjecture-flag-required",
                "pass --assume-mds-conjecture to use the conditional bound");
  if (d < 8 || !prime_power_decompose(d))
    throw Error("invalid-params",
                "conditional bound needs a prime power d >= 8");
  int k = (d + 2) / 2;
  // 3 < k < d-1, so the conjecture's k-exceptions cannot apply.
  BoundFact premise;
  premise.d = d;
  premise.k = k;
  premise.relation = Relation::eq;
  premise.value = d + 1;
  premise.conditional = true;
  premise.provenance.kind = Provenance::Kind::external;
  premise.provenance.tag = "general-mds-conjecture (assumed, open)";

  auto derived = derive_n_upper_from_M(premise);
  if (!derived || derived->value != d + 1)
    throw Error("internal", "conditional derivation did not yield d+1");
  derived->conditional = true;
  return *derived;
}

BoundReport n_report(int d, const std::vector<BoundFact>& external_facts,
                     int workers, bool assume_general_mds_conjecture) {
  if (d < 2) throw Error("invalid-params", "need d >= 2");
  BoundReport report;
  report.d = d;

  std::vector<BoundFact> pool = n_lower_constructive(d);

  // In-process searches: orders 2 and 6 are the ones where exhausting
  // reduced squares yields an upper bound (no orthogonal pair, so no
  // AME(4,d) and N(d) <= 3).
  if (d == 2 || d == 6) {
    SearchCertificate cert = orthogonal_pair_exists(d, workers);
    if (cert.verdict == "not-exists") {
      BoundFact fact;
      fact.d = d;
      fact.relation = Relation::le;
      fact.value = 3;
      fact.provenance.kind = Provenance::Kind::searched;
      fact.provenance.certificate =
          "order-" + std::to_string(d) + " exhaustive mate search: " +
          std::to_string(cert.squares_examined) +
          " reduced squares examined, " +
          std::to_string(cert.squares_with_mate) +
          " with an orthogonal mate; no orthogonal pair exists, so no "
          "minimal-support AME(4," + std::to_string(d) + ") state";
      pool.push_back(fact);
    }
  }

  if (d >= 3)
    pool.push_back(make_external(d, std::nullopt, Relation::le, 2 * d - 2,
                                 "bernal"));

  for (const auto& fact : external_facts) {
    if (fact.d != d) continue;
    if (fact.conditional)
      throw Error("invalid-params",
                  "conditional facts cannot enter the unconditional pool");
    if (fact.k) {
      if (is_upper(fact)) {
        if (auto derived = derive_n_upper_from_M(fact))
          pool.push_back(*derived);
      }
    } else {
      pool.push_back(fact);
    }
  }

  for (const auto& fact : pool) {
    if (fact.k) continue;
    if (is_lower(fact)) keep_best_lower(report.lower, fact);
    if (is_upper(fact)) keep_best_upper(report.upper, fact);
  }
  if (report.lower && report.upper &&
      report.lower->value > report.upper->value)
    throw Error("internal", "fact base is inconsistent at d=" +
                                std::to_string(d));
  if (report.lower && report.upper &&
      report.lower->value == report.upper->value)
    report.exact = report.lower->value;

  if (assume_general_mds_conjecture && d >= 8 && prime_power_decompose(d)) {
    BoundFact cond = conditional_n_upper_prime_power(d, true);
    report.conditional_upper = cond;
    if (report.lower && report.lower->value == cond.value)
      report.conditional_exact = cond.value;
  }

  report.trace = std::move(pool);
  return report;
}

}  // namespace ame
