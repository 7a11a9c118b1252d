#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "clutterlab/harness.hpp"
#include "clutterlab/params.hpp"

namespace clutterlab {

/// Text format:
///   clutter <n>
///   <space-separated ascending 1-based indices, one member per line>
/// The empty member is the literal `-`; `#` starts a comment line.
/// Parsing is strict; violations throw ParseError or the validate errors.
Clutter parse_clutter(std::istream& in);
Clutter parse_clutter_text(const std::string& text);
std::string format_clutter(const Clutter& c);

/// Text format: `setsystem <d>`, then one 0/1 string of length d per point.
SetSystem parse_setsystem(std::istream& in);
SetSystem parse_setsystem_text(const std::string& text);
std::string format_setsystem(const SetSystem& s);

/// Reads either format, keyed on the header word.
struct ParsedInput {
  std::optional<Clutter> clutter;
  std::optional<SetSystem> setsystem;
};
ParsedInput parse_any(std::istream& in);

nlohmann::json to_json(const ExtNat& v);
nlohmann::json to_json(const ElemSet& s);
nlohmann::json to_json(const Clutter& c);
nlohmann::json to_json(const SetSystem& s);
nlohmann::json to_json(const MinCoverGraph& g);
nlohmann::json to_json(const GscInequality& q);
nlohmann::json to_json(const SidePattern& p);
nlohmann::json to_json(const ParamReport& r);
nlohmann::json to_json(const VerificationReport& r);

}  // namespace clutterlab
