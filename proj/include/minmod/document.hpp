#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "minmod/modular_datum.hpp"

namespace minmod {

/// Serializable package of one category's modular data plus its verdicts.
/// Rationals travel as "p/q" strings and cyclotomics carry their exact
/// coefficients next to an advisory float approximation, so a parsed
/// document reproduces the original exactly.
struct ModularDataDocument {
  std::string kind;  // "virasoro" | "ca" | "affine"
  int a = 0;
  int b = 0;
  ModularDatum datum;
  bool axioms = false;
  bool verlinde = false;
  bool modular = false;

  bool operator==(const ModularDataDocument&) const = default;
};

/// Assembles a document, computing the three verdicts from the datum.
ModularDataDocument make_document(const std::string& kind, int a, int b,
                                  const ModularDatum& datum);

nlohmann::json to_json(const ModularDataDocument& doc);
std::string to_json_string(const ModularDataDocument& doc);

/// Throws std::invalid_argument on malformed documents.
ModularDataDocument parse_document(const nlohmann::json& j);
ModularDataDocument parse_document_string(const std::string& text);

nlohmann::json cyclotomic_to_json(const Cyclotomic& value);
Cyclotomic cyclotomic_from_json(const nlohmann::json& j);

}  // namespace minmod
