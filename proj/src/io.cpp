#include "ame/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ame/gf.hpp"

namespace ame::io {

namespace {

using nlohmann::json;

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error("malformed-input", e.what());
  }
}

/// Wraps the json accessors so type errors surface as malformed-input.
template <typename Fn>
auto reading(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw Error("malformed-input", e.what());
  }
}

Symbol checked_symbol(long long v) {
  if (v < 0 || v > 0xffff)
    throw Error("malformed-input", "symbol out of representable range");
  return static_cast<Symbol>(v);
}

std::vector<Word> words_from_json(const json& arr) {
  std::vector<Word> words;
  words.reserve(arr.size());
  for (const auto& row : arr) {
    Word w;
    w.reserve(row.size());
    for (const auto& v : row) w.push_back(checked_symbol(v.get<long long>()));
    words.push_back(std::move(w));
  }
  return words;
}

json words_to_json(const std::vector<Word>& words) {
  json arr = json::array();
  for (const auto& w : words) {
    json row = json::array();
    for (Symbol s : w) row.push_back(static_cast<int>(s));
    arr.push_back(std::move(row));
  }
  return arr;
}

constexpr const char* kCubeOrder = "row-major, first index slowest";

json cube_json(const LatinHypercube& cube) {
  json j;
  j["k"] = cube.k;
  j["d"] = cube.d;
  j["order"] = kCubeOrder;
  json values = json::array();
  for (Symbol s : cube.values) values.push_back(static_cast<int>(s));
  j["values"] = std::move(values);
  return j;
}

LatinHypercube cube_from(const json& j) {
  int k = j.at("k").get<int>();
  int d = j.at("d").get<int>();
  if (j.contains("order") && j.at("order").get<std::string>() != kCubeOrder)
    throw Error("malformed-input",
                std::string("unsupported storage order; expected \"") +
                    kCubeOrder + "\"");
  std::vector<Symbol> values;
  for (const auto& v : j.at("values"))
    values.push_back(checked_symbol(v.get<long long>()));
  return LatinHypercube::make(k, d, std::move(values));
}

std::string provenance_kind(const Provenance& p) {
  switch (p.kind) {
    case Provenance::Kind::constructed:
      return "constructed-and-verified";
    case Provenance::Kind::searched:
      return "searched-and-verified";
    case Provenance::Kind::external:
      return "external-citation";
    case Provenance::Kind::derived:
      return "derived";
  }
  return "?";
}

json fact_json(const BoundFact& fact) {
  json j;
  j["subject"] = fact.subject();
  j["relation"] = relation_symbol(fact.relation);
  j["value"] = fact.value;
  json p;
  p["kind"] = provenance_kind(fact.provenance);
  if (!fact.provenance.tag.empty()) p["tag"] = fact.provenance.tag;
  if (!fact.provenance.certificate.empty())
    p["certificate"] = fact.provenance.certificate;
  if (!fact.provenance.rule.empty()) p["rule"] = fact.provenance.rule;
  if (!fact.provenance.premises.empty()) {
    json premises = json::array();
    for (const auto& premise : fact.provenance.premises)
      premises.push_back(fact_json(premise));
    p["premises"] = std::move(premises);
  }
  j["provenance"] = std::move(p);
  if (fact.proviso) j["proviso"] = *fact.proviso;
  if (fact.conditional) j["conditional"] = true;
  return j;
}

/// "N(6)" -> (6, nullopt); "M(2,6)" -> (6, 2).
std::pair<int, std::optional<int>> parse_subject(const std::string& s) {
  std::optional<int> k;
  int d = 0;
  char head = 0;
  if (s.size() >= 4 && s[0] == 'N' && s[1] == '(' && s.back() == ')')
    head = 'N';
  else if (s.size() >= 6 && s[0] == 'M' && s[1] == '(' && s.back() == ')')
    head = 'M';
  else
    throw Error("malformed-input", "subject must look like N(d) or M(k,d)");
  std::string inner = s.substr(2, s.size() - 3);
  std::istringstream iss(inner);
  try {
    if (head == 'N') {
      d = std::stoi(inner);
    } else {
      auto comma = inner.find(',');
      if (comma == std::string::npos)
        throw Error("malformed-input", "M subject needs M(k,d)");
      k = std::stoi(inner.substr(0, comma));
      d = std::stoi(inner.substr(comma + 1));
    }
  } catch (const std::logic_error&) {
    throw Error("malformed-input", "subject has non-numeric parameters");
  }
  if (d < 2 || (k && *k < 1))
    throw Error("malformed-input", "subject parameters out of range");
  return {d, k};
}

Relation parse_relation(const std::string& s) {
  if (s == "<=") return Relation::le;
  if (s == ">=") return Relation::ge;
  if (s == "=") return Relation::eq;
  throw Error("malformed-input", "relation must be <=, >= or =");
}

}  // namespace

std::string code_to_json(const Code& code) {
  json j;
  j["d"] = code.d;
  j["n"] = code.n;
  if (code.field) {
    json f;
    f["p"] = code.field->p;
    f["m"] = code.field->m;
    f["modulus"] = code.field->modulus;
    j["field"] = std::move(f);
  }
  j["words"] = words_to_json(code.words);
  return dump(j);
}

Code code_from_json(const std::string& text) {
  json j = parse(text);
  return reading([&] {
    int d = j.at("d").get<int>();
    int n = j.at("n").get<int>();
    std::optional<FieldSpec> field;
    if (j.contains("field")) {
      const json& f = j.at("field");
      FieldSpec spec;
      spec.p = f.at("p").get<int>();
      spec.m = f.at("m").get<int>();
      spec.modulus = f.at("modulus").get<std::vector<int>>();
      auto dd = checked_pow(spec.p, spec.m);
      if (!dd || *dd != d)
        throw Error("malformed-input", "field does not match the alphabet");
      spec.d = d;
      validate_field(spec);
      field = std::move(spec);
    }
    return Code::make(d, n, words_from_json(j.at("words")), std::move(field));
  });
}

std::string code_to_text(const Code& code) {
  std::ostringstream oss;
  oss << code.n << ' ' << code.d << '\n';
  for (const auto& w : code.words) {
    for (int i = 0; i < code.n; ++i) {
      if (i) oss << ' ';
      oss << w[i];
    }
    oss << '\n';
  }
  return oss.str();
}

Code code_from_text(const std::string& text) {
  std::istringstream iss(text);
  int n = 0, d = 0;
  if (!(iss >> n >> d))
    throw Error("malformed-input", "text code needs an \"n d\" first line");
  std::vector<Word> words;
  long long v = 0;
  Word w;
  while (iss >> v) {
    w.push_back(checked_symbol(v));
    if (static_cast<int>(w.size()) == n) {
      words.push_back(std::move(w));
      w.clear();
    }
  }
  if (!iss.eof())
    throw Error("malformed-input", "text code has a non-numeric symbol");
  if (!w.empty())
    throw Error("malformed-input", "trailing symbols do not fill a word");
  return Code::make(d, n, std::move(words));
}

Code code_from_any(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? code_from_json(text) : code_from_text(text);
  }
  throw Error("malformed-input", "empty code document");
}

std::string state_to_json(const AmeState& state) {
  json j;
  j["n"] = state.n;
  j["d"] = state.d;
  j["kets"] = words_to_json(state.kets);
  return dump(j);
}

AmeState state_from_json(const std::string& text) {
  json j = parse(text);
  return reading([&] {
    return AmeState::make(j.at("n").get<int>(), j.at("d").get<int>(),
                          words_from_json(j.at("kets")));
  });
}

std::string cube_to_json(const LatinHypercube& cube) {
  return dump(cube_json(cube));
}

LatinHypercube cube_from_json(const std::string& text) {
  json j = parse(text);
  return reading([&] { return cube_from(j); });
}

std::string cubeset_to_json(const HypercubeSet& set) {
  json j;
  j["k"] = set.k;
  j["d"] = set.d;
  json cubes = json::array();
  for (const auto& cube : set.cubes) cubes.push_back(cube_json(cube));
  j["cubes"] = std::move(cubes);
  return dump(j);
}

HypercubeSet cubeset_from_json(const std::string& text) {
  json j = parse(text);
  return reading([&] {
    int k = j.at("k").get<int>();
    int d = j.at("d").get<int>();
    std::vector<LatinHypercube> cubes;
    for (const auto& c : j.at("cubes")) cubes.push_back(cube_from(c));
    return HypercubeSet::make(k, d, std::move(cubes));
  });
}

std::string mds_report_to_json(const MdsReport& report) {
  json j;
  j["is_mds"] = report.is_mds;
  j["delta"] = report.delta;
  j["k"] = report.k;
  if (report.witness) {
    json w = json::array();
    w.push_back(words_to_json({report.witness->first})[0]);
    w.push_back(words_to_json({report.witness->second})[0]);
    j["witness"] = std::move(w);
  }
  return dump(j);
}

std::string verdict_to_json(const AmeVerdict& verdict) {
  json j;
  j["is_ame"] = verdict.is_ame;
  j["method"] = verdict.method;
  if (verdict.failing) {
    json f;
    f["sites"] = verdict.failing->sites_b;
    f["reason"] = verdict.failing->reason;
    j["failing_partition"] = std::move(f);
  }
  return dump(j);
}

std::string certificate_to_json(const SearchCertificate& cert) {
  json j;
  j["order"] = cert.order;
  j["verdict"] = cert.verdict;
  j["squares_examined"] = cert.squares_examined;
  j["squares_with_mate"] = cert.squares_with_mate;
  j["elapsed_seconds"] = cert.elapsed_seconds;
  j["note"] = cert.note;
  json stats;
  stats["squares"] = cert.stats.squares;
  stats["total_transversals"] = cert.stats.total;
  stats["min_per_square"] = cert.stats.min_per_square;
  stats["max_per_square"] = cert.stats.max_per_square;
  stats["squares_with_zero"] = cert.stats.squares_with_zero;
  json hist;
  for (const auto& [count, num] : cert.stats.histogram)
    hist[std::to_string(count)] = num;
  stats["histogram"] = std::move(hist);
  j["transversal_stats"] = std::move(stats);
  if (cert.witness) {
    json w;
    w["square"] = cube_json(cert.witness->first);
    w["mate"] = cube_json(cert.witness->second);
    j["witness"] = std::move(w);
  }
  return dump(j);
}

std::string ame_exists_to_json(const AmeExistsResult& result) {
  json j;
  j["n"] = result.n;
  j["d"] = result.d;
  j["verdict"] = result.verdict;
  j["method"] = result.method;
  j["detail"] = result.detail;
  if (result.state) j["state"] = parse(state_to_json(*result.state));
  if (result.search_certificate)
    j["certificate"] = parse(certificate_to_json(*result.search_certificate));
  if (result.bounds_report)
    j["bounds"] = parse(bound_report_to_json(*result.bounds_report, true));
  return dump(j);
}

std::string bound_report_to_json(const BoundReport& report,
                                 bool include_trace) {
  json j;
  j["d"] = report.d;
  if (report.lower) j["lower"] = fact_json(*report.lower);
  if (report.upper) j["upper"] = fact_json(*report.upper);
  if (report.exact) j["exact"] = *report.exact;
  if (report.conditional_upper)
    j["conditional_upper"] = fact_json(*report.conditional_upper);
  if (report.conditional_exact)
    j["conditional_exact"] = *report.conditional_exact;
  if (include_trace) {
    json trace = json::array();
    for (const auto& fact : report.trace) trace.push_back(fact_json(fact));
    j["trace"] = std::move(trace);
  }
  return dump(j);
}

std::vector<BoundFact> facts_from_json(const std::string& text) {
  json j = parse(text);
  return reading([&] {
    if (!j.is_array())
      throw Error("malformed-input", "fact file must be a JSON array");
    std::vector<BoundFact> facts;
    for (const auto& row : j) {
      BoundFact fact;
      auto [d, k] = parse_subject(row.at("subject").get<std::string>());
      fact.d = d;
      fact.k = k;
      fact.relation = parse_relation(row.at("relation").get<std::string>());
      fact.value = row.at("value").get<int>();
      fact.provenance.kind = Provenance::Kind::external;
      fact.provenance.tag = row.at("provenance").get<std::string>();
      if (row.contains("proviso"))
        fact.proviso = row.at("proviso").get<std::string>();
      facts.push_back(std::move(fact));
    }
    return facts;
  });
}

std::string facts_to_json(const std::vector<BoundFact>& facts) {
  json arr = json::array();
  for (const auto& fact : facts) {
    json row;
    row["subject"] = fact.subject();
    row["relation"] = relation_symbol(fact.relation);
    row["value"] = fact.value;
    row["provenance"] = fact.provenance.tag;
    if (fact.proviso) row["proviso"] = *fact.proviso;
    arr.push_back(std::move(row));
  }
  return dump(arr);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("io-error", "cannot open " + path);
  std::ostringstream oss;
  oss << in.rdbuf();
  return oss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("io-error", "cannot open " + path + " for writing");
  out << content;
  if (!out) throw Error("io-error", "failed writing " + path);
}

}  // namespace ame::io
