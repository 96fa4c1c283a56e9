#pragma once

#include <string>
#include <vector>

#include "ame/bounds.hpp"
#include "ame/code.hpp"
#include "ame/latin.hpp"
#include "ame/search.hpp"
#include "ame/state.hpp"

namespace ame::io {

/// All writers emit two-space-indented JSON with keys in alphabetical
/// order and a trailing newline, so equal values serialize byte-for-byte
/// identically. All readers throw Error("malformed-input", ...) on bad
/// documents.

std::string code_to_json(const Code& code);
Code code_from_json(const std::string& text);

/// Plain-text alternative: first line "n d", then one word per line as
/// space-separated decimal symbols.
std::string code_to_text(const Code& code);
Code code_from_text(const std::string& text);

/// Sniffs the format: a document whose first non-space byte is '{' is
/// JSON, anything else is the plain-text form.
Code code_from_any(const std::string& text);

std::string state_to_json(const AmeState& state);
AmeState state_from_json(const std::string& text);

std::string cube_to_json(const LatinHypercube& cube);
LatinHypercube cube_from_json(const std::string& text);

std::string cubeset_to_json(const HypercubeSet& set);
HypercubeSet cubeset_from_json(const std::string& text);

std::string mds_report_to_json(const MdsReport& report);
std::string verdict_to_json(const AmeVerdict& verdict);
std::string certificate_to_json(const SearchCertificate& cert);
std::string ame_exists_to_json(const AmeExistsResult& result);
std::string bound_report_to_json(const BoundReport& report,
                                 bool include_trace);

/// Fact-file rows: subject "N(6)" or "M(2,6)", relation, integer value,
/// provenance citation tag, optional proviso. The file carries external
/// citations only.
std::vector<BoundFact> facts_from_json(const std::string& text);
std::string facts_to_json(const std::vector<BoundFact>& facts);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace ame::io
