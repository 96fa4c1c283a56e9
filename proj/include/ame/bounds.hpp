#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ame/error.hpp"

namespace ame {

enum class Relation { le, ge, eq };

std::string relation_symbol(Relation r);

struct BoundFact;

/// Where a fact comes from. constructed/searched facts were verified by
/// this process and carry a certificate summary; external facts carry a
/// citation tag and are never promoted to "verified"; derived facts name
/// the rule and keep their premises for the trace.
struct Provenance {
  enum class Kind { constructed, searched, external, derived };
  Kind kind = Kind::external;
  std::string tag;
  std::string certificate;
  std::string rule;
  std::vector<BoundFact> premises;
};

/// Bound on N(d) (k absent) or on M(k,d) (k present). Facts marked
/// conditional descend from an assumed conjecture and never merge into the
/// unconditional half of a report.
struct BoundFact {
  int d = 0;
  std::optional<int> k;
  Relation relation = Relation::le;
  int value = 0;
  Provenance provenance;
  std::optional<std::string> proviso;
  bool conditional = false;

  std::string subject() const;
};

struct BoundReport {
  int d = 0;
  std::optional<BoundFact> lower;
  std::optional<BoundFact> upper;
  std::optional<int> exact;
  std::optional<BoundFact> conditional_upper;
  std::optional<int> conditional_exact;
  std::vector<BoundFact> trace;
};

/// The citation-tagged facts this build ships with; the same rows live in
/// data/external_facts.json for editing without a rebuild.
std::vector<BoundFact> builtin_external_facts();

/// Constructive lower bounds on N(d), each verified in-process when the
/// construction fits the size cap: N(d) >= 3 by the GHZ code for every d,
/// N(d) >= d+1 for prime powers d >= 3, and N(4) >= 6 via the doubly
/// extended code.
std::vector<BoundFact> n_lower_constructive(int d);

/// Puncturing contrapositive: from M(k,d) <= v, no MDS code of dimension k
/// and length > v exists, so no AME(n,d) minimal-support state with
/// floor(n/2) = k and n > v; the interval property then caps N(d) at the
/// smallest such n minus one. Returns nullopt when v >= 2k+1 (no n is
/// excluded). Facts carrying the "delta>=3" proviso are applied only after
/// checking the excluded length-(v+1) code would have delta >= 3.
std::optional<BoundFact> derive_n_upper_from_M(const BoundFact& m_fact);

/// The conditional proposition: for prime-power d >= 8, assuming the
/// general MDS conjecture at dimension k = floor((d+2)/2) gives
/// M(k,d) = d+1 and hence N(d) <= d+1. The flag must be passed explicitly;
/// the result is tagged conditional.
BoundFact conditional_n_upper_prime_power(int d,
                                          bool assume_general_mds_conjecture);

/// Combines constructive lower bounds, the order-2/order-6 mate searches,
/// external facts, and the derivation rules into one report with a full
/// trace. Conditional results appear only when the flag is set, in the
/// separate conditional fields.
BoundReport n_report(int d,
                     const std::vector<BoundFact>& external_facts =
                         builtin_external_facts(),
                     int workers = 0,
                     bool assume_general_mds_conjecture = false);

}  // namespace ame
