#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "headorder/amalgam.hpp"
#include "headorder/brauer_tree.hpp"
#include "headorder/circulant.hpp"
#include "headorder/oracle.hpp"

namespace headorder {

// Insertion-ordered so that reports are byte-stable.
using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// The family Λ(0̲_a, a^{n-1}); dims default to all 1.
struct FamilySpec {
  std::size_t n = 1;
  Int a = 1;
  DimVector dims;
  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

using Document = std::variant<ExponentOrder, CirculantState, PlanarBrauerTree, AmalgamBlock, FamilySpec>;

// Throws SchemaError naming the offending field as a JSON path, or the
// validation error of the typed value.
Document parse_document(const Json& j);
Document parse_document_text(const std::string& text);

Json to_json(const ExponentOrder& order);
Json to_json(const CirculantState& state);
Json to_json(const PlanarBrauerTree& tree);
Json to_json(const AmalgamBlock& block);
Json to_json(const FamilySpec& family);
Json to_json(const Document& doc);

// Report fragments.
Json matrix_json(const IntMatrix& m);
Json to_json(const HereditaryType& type);
Json to_json(const Main2Type& type);
Json to_json(const SimpleModuleMatch& match);
Json to_json(const Certificate& cert);
Json to_json(const HeadOrderReport& report);

}  // namespace headorder
