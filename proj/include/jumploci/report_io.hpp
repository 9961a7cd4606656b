#pragma once

// JSON and CSV exchange formats. Component labels are 1-based on the wire.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "jumploci/braid.hpp"
#include "jumploci/character_variety.hpp"
#include "jumploci/deletion.hpp"
#include "jumploci/puiseux.hpp"

namespace jumploci {

using Json = nlohmann::ordered_json;

/// Everything an input file may carry.
struct InputBundle {
  std::optional<BraidWord> braid;
  std::optional<std::vector<Branch>> branches;
  std::optional<LinkingMatrix> linking;
  std::optional<Presentation> presentation;
};

// All parsers throw Error(parse) with the offending field path.
BraidWord braid_from_json(const Json& j);
Json braid_to_json(const BraidWord& b);
Branch branch_from_json(const Json& j, const std::string& path = "branch");
Json branch_to_json(const Branch& b);
Presentation presentation_from_json(const Json& j);
Json presentation_to_json(const Presentation& p);
LinkingMatrix linking_from_json(const Json& j);
Json linking_to_json(const LinkingMatrix& l);
InputBundle input_from_json(const Json& j);

/// Comma-separated exponents, e.g. "0,1/3".
TorsionCharacter parse_character(const std::string& text);
Json character_to_json(const TorsionCharacter& t);
TorsionCharacter character_from_json(const Json& j);

Json dims_to_json(const CohomologyDims& d);
CohomologyDims dims_from_json(const Json& j);

Json scan_report_to_json(const ScanReport& r);
ScanReport scan_report_from_json(const Json& j);
/// Columns q_1..q_r, h0, h1, h2.
void write_scan_csv(std::ostream& os, const ScanReport& r);

Json verification_report_to_json(const VerificationReport& r);
VerificationReport verification_report_from_json(const Json& j);
void write_verification_table(std::ostream& os, const VerificationReport& r);

}  // namespace jumploci
