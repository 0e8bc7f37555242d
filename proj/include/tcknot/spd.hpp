#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "json.hpp"

#include "tcknot/diagram.hpp"

namespace tcknot {

/// Result of parsing: a bare projection when no height words are present.
using ParsedSpd = std::variant<TripleProjection, TripleDiagram>;

/// Parses `sPD[X[a,b,c,d,e,f|TMB],...]`; whitespace is ignored. Slots are
/// counterclockwise, each edge label appears exactly twice, height words are
/// all-or-none. Throws ParseError or ValidationError.
ParsedSpd parse_spd(std::string_view text);
/// parse_spd that requires height words.
TripleDiagram parse_spd_diagram(std::string_view text);

/// Edge labels are 1..E in order of first appearance.
std::string serialize_spd(const TripleProjection& p);
std::string serialize_spd(const TripleDiagram& d);

/// Classical PD code `[[a,b,c,d],...]` (an optional `PD` or `X` prefix is
/// accepted): a, c are the under strand, ends listed counterclockwise. Each
/// label appears exactly twice. Throws ParseError or ValidationError.
DoubleDiagram parse_pd(std::string_view text);

/// {"crossings":[{"id","slots","heights"}],"pairing":[...]} with stable keys.
nlohmann::ordered_json to_json(const TripleProjection& p);
nlohmann::ordered_json to_json(const TripleDiagram& d);

}  // namespace tcknot
