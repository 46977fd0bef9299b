#pragma once

#include <string>

#include <json.hpp>

#include "delpezzo/dp4.hpp"
#include "delpezzo/finite_field.hpp"
#include "delpezzo/rat.hpp"
#include "delpezzo/sqrt_combo.hpp"

namespace delpezzo {

using Json = nlohmann::json;

/// "p/q".
Json to_json(const Rat& x);
/// [[m, "p/q"], ...] sorted by m.
Json to_json(const SqrtCombo& x);
/// One coefficient list (polynomial basis, low degree first) per coordinate.
Json to_json(const FFVector& v);
/// {"points": 32 points in line order (p then q), "gram": 16×16 integers}.
Json to_json(const LineSystem& s);

Rat rat_from_json(const Json& j);
SqrtCombo sqrt_combo_from_json(const Json& j);

/// Result of one CLI command. The machine form carries no timing, so equal
/// inputs give byte-identical output.
struct Report {
  std::string command;
  Json verdicts = Json::object();
  Json witnesses = Json::object();
  double elapsed_ms = 0.0;

  std::string machine() const;
  std::string human() const;

  /// Inverse of machine(); throws InputError on malformed text.
  static Report parse(const std::string& text);
};

}  // namespace delpezzo
