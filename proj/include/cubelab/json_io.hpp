#pragma once

#include <memory>
#include <string>

#include <json.hpp>

#include "cubelab/algebra.hpp"
#include "cubelab/axioms.hpp"
#include "cubelab/distribution.hpp"
#include "cubelab/function.hpp"
#include "cubelab/gowers.hpp"
#include "cubelab/structure.hpp"

namespace cubelab {

using nlohmann::json;

// Byte strings are hashed with FNV-1a 64 so reports can pin their inputs.
uint64_t fnv1a64(const std::string& bytes);
std::string file_hash_hex(const std::string& path);

json json_from_file(const std::string& path);
void json_to_file(const std::string& path, const json& j);

// Group files: {"order":6,"table":[[...],...],"names":[...]}; table[i][j] is
// the product of element i by element j (row acts on the left). Tables of
// order > 64 skip the associativity sweep on load.
json group_to_json(const GroupTable& g);
GroupTable group_from_json(const json& j);
GroupTable load_group_file(const std::string& path);

// Quotient maps: {"classes":[[0,3],[1,4],[2,5]]}.
json partition_to_json(const Partition& p);

// Cube morphisms: {"n":2,"m":5,"rules":[{"c":0},{"x":1},{"nx":2},...]} with
// 1-based coordinates; vertices serialize as bit strings, coordinate 1 first.
json morphism_to_json(const CubeMorphism& phi);
CubeMorphism morphism_from_json(const json& j);

// Cube maps and corners: {"n":2,"values":[...]} indexed by vertex bitmask.
json cube_to_json(const CubeMap& c);
CubeMap cube_from_json(const json& j);
json corner_to_json(const Corner& c);
Corner corner_from_json(const json& j);

// Structure specs:
//   {"kind":"D1","group":"g.json"}
//   {"kind":"Dk","group":"g.json","k":2}
//   {"kind":"HZk","group":"g.json","center":[0,4],"k":2}
//   {"kind":"stored","size":4,"max_dim":3,"cubes":{"2":[[...],...]}}
// Group paths are resolved relative to base_dir.
struct LoadedStructure {
  std::unique_ptr<CubeStructure> structure;
  json spec_echo;
};
LoadedStructure structure_from_json(const json& spec, const std::string& base_dir);
LoadedStructure load_structure_file(const std::string& path);

// Function files: {"group":"g.json","values":[[re,im],...]}.
struct LoadedFunction {
  std::shared_ptr<GroupTable> group;
  GroupFunction fn;
  json spec_echo;
};
LoadedFunction load_function_file(const std::string& path);

json axiom_report_to_json(const AxiomReport& r);
json tower_to_json(const StructureTower& t);
json distribution_to_json(const CubeDistribution& d);

}  // namespace cubelab
