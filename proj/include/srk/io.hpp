// JSON interchange for algebra specs, modules, pi-points and varieties.
// Field elements are plain integers over GF(p) and coefficient vectors (low
// degree first) over extensions.
#ifndef SRK_IO_HPP
#define SRK_IO_HPP

#include <filesystem>
#include <string>

#include "json.hpp"
#include "srk/rvar.hpp"

namespace srk::io {

using Json = nlohmann::ordered_json;

Json load(const std::filesystem::path& path);
/// Two-space indentation with short arrays (rows, points) kept on one line.
std::string dump(const Json& j);
void save(const std::filesystem::path& path, const Json& j);

Json to_json(const halg::AlgebraSpec& spec);
halg::AlgebraSpec spec_from_json(const Json& j);

Json to_json(const gf::Field& f);
gf::Field field_from_json(const Json& j);

Json element_to_json(const gf::Field& f, gf::Code c);
gf::Code element_from_json(const gf::Field& f, const Json& j);

Json to_json(const smod::SuperModule& m);
smod::SuperModule module_from_json(const Json& j);

/// {"lambda": [...], "symbolic": false}; symbolic points are rejected here.
std::vector<gf::FieldElement> pipoint_from_json(const Json& j, const gf::Field& f);
Json pipoint_to_json(const gf::Field& f, std::span<const gf::Code> lambda);

Json to_json(const rvar::VarietyPoints& v);
Json points_to_json(const gf::Field& f, const std::vector<rvar::Point>& pts);

}  // namespace srk::io

#endif
