#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "ialg/identities.hpp"
#include "ialg/special_elements.hpp"
#include "ialg/structure.hpp"
#include "ialg/substructures.hpp"

namespace ialg {

enum class TableFormat { csv, json };

/// Tables are only rendered up to this order.
inline constexpr Index kExportLimit = Magma::kTableLimit;

/// Header row "*" then the element labels; each row starts with its label.
/// Fields holding a comma are quoted.
std::string table_csv(const Magma& m);
/// {"elements": [labels], "table": [[indices]]}.
nlohmann::json table_json(const Magma& m);

/// Writes the table to a temporary sibling and renames it into place.
/// Throws IoError, InfiniteCarrier or OrderTooLarge.
void export_table(const Structure& s, TableFormat format, const std::filesystem::path& path);

nlohmann::json to_json(const StructureClass& c);
nlohmann::json to_json(const Structure& s, const IdentityVerdict& v);
nlohmann::json to_json(const Structure& s, const SpecialElementReport& r);
nlohmann::json to_json(const Structure& s, const Substructure& sub);
nlohmann::json to_json(const Structure& s, const LagrangeReport& r);
nlohmann::json to_json(const Structure& s, const WitnessResult& w);

}  // namespace ialg
