#pragma once

#include "fimod/fi_module.hpp"

#include <json.hpp>

#include <string>

namespace fimod {

inline constexpr const char* kEngineVersion = "0.1.0";

using Json = nlohmann::json; // std::map keys give canonical (sorted) output

Json coeff_to_json(const CoeffCategory& c);
CoeffCategory coeff_from_json(const Json& j);

/// "f<p>", "q", "z", or "discrete:<f<p>|q>:<r1,r2,...>".
CoeffCategory parse_coeff_spec(const std::string& spec);

Json modobj_to_json(const ModObj& a);
ModObj modobj_from_json(const Json& j, const CoeffCategory& c);

Json modmap_to_json(const ModMap& f);
ModMap modmap_from_json(const Json& j, const ModObj& dom, const ModObj& cod);

Json module_to_json(const TruncatedFIModule& v);
TruncatedFIModule module_from_json(const Json& j);

/// Morphism files reference the two module files plus the level blocks.
Json morphism_to_json(const FIMorphism& f, const std::string& dom_path,
                      const std::string& cod_path);
FIMorphism morphism_from_json(const Json& j, const TruncatedFIModule& dom,
                              const TruncatedFIModule& cod);

std::string canonical_dump(const Json& j);

TruncatedFIModule load_module_file(const std::string& path);
void save_module_file(const TruncatedFIModule& v, const std::string& path);

} // namespace fimod
