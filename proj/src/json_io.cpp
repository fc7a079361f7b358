#include "cubelab/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace cubelab {

namespace fs = std::filesystem;

uint64_t fnv1a64(const std::string& bytes) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string file_hash_hex(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(fnv1a64(ss.str())));
  return buf;
}

json json_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  json j;
  in >> j;
  return j;
}

void json_to_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << j.dump(2) << "\n";
}

json group_to_json(const GroupTable& g) {
  json table = json::array();
  for (int a = 0; a < g.order; ++a) {
    json row = json::array();
    for (int b = 0; b < g.order; ++b) row.push_back(g.op(a, b));
    table.push_back(std::move(row));
  }
  return json{{"order", g.order}, {"table", std::move(table)}, {"names", g.names}};
}

GroupTable group_from_json(const json& j) {
  const int order = j.at("order").get<int>();
  std::vector<int> mult;
  mult.reserve(static_cast<size_t>(order) * order);
  const json& table = j.at("table");
  if (static_cast<int>(table.size()) != order)
    throw std::invalid_argument("group file: table must have `order` rows");
  for (const json& row : table) {
    if (static_cast<int>(row.size()) != order)
      throw std::invalid_argument("group file: table rows must have `order` entries");
    for (const json& v : row) mult.push_back(v.get<int>());
  }
  std::vector<std::string> names;
  if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
  return order <= 64 ? GroupTable::checked(std::move(mult), std::move(names))
                     : GroupTable::unchecked(std::move(mult), std::move(names));
}

GroupTable load_group_file(const std::string& path) { return group_from_json(json_from_file(path)); }

json partition_to_json(const Partition& p) { return json{{"classes", p.classes}}; }

json morphism_to_json(const CubeMorphism& phi) {
  json rules = json::array();
  for (const CoordinateRule& r : phi.rules) {
    switch (r.kind) {
      case CoordinateRule::Kind::Const0: rules.push_back(json{{"c", 0}}); break;
      case CoordinateRule::Kind::Const1: rules.push_back(json{{"c", 1}}); break;
      case CoordinateRule::Kind::Coord: rules.push_back(json{{"x", r.source}}); break;
      case CoordinateRule::Kind::NegCoord: rules.push_back(json{{"nx", r.source}}); break;
    }
  }
  return json{{"n", phi.n}, {"m", phi.m}, {"rules", std::move(rules)}};
}

CubeMorphism morphism_from_json(const json& j) {
  std::vector<CoordinateRule> rules;
  for (const json& r : j.at("rules")) {
    if (r.contains("c"))
      rules.push_back(r.at("c").get<int>() == 0 ? CoordinateRule::const0() : CoordinateRule::const1());
    else if (r.contains("x"))
      rules.push_back(CoordinateRule::coord(r.at("x").get<int>()));
    else if (r.contains("nx"))
      rules.push_back(CoordinateRule::neg_coord(r.at("nx").get<int>()));
    else
      throw std::invalid_argument("morphism rule must be one of c/x/nx");
  }
  return CubeMorphism(j.at("n").get<int>(), j.at("m").get<int>(), std::move(rules));
}

json cube_to_json(const CubeMap& c) { return json{{"n", c.n}, {"values", c.values}}; }

CubeMap cube_from_json(const json& j) {
  return CubeMap(j.at("n").get<int>(), j.at("values").get<std::vector<int>>());
}

json corner_to_json(const Corner& c) { return json{{"n", c.n}, {"values", c.values}}; }

Corner corner_from_json(const json& j) {
  return Corner(j.at("n").get<int>(), j.at("values").get<std::vector<int>>());
}

LoadedStructure structure_from_json(const json& spec, const std::string& base_dir) {
  LoadedStructure out;
  out.spec_echo = spec;
  const std::string kind = spec.at("kind").get<std::string>();
  auto resolve = [&](const std::string& p) {
    fs::path path(p);
    if (path.is_relative() && !base_dir.empty()) path = fs::path(base_dir) / path;
    return path.string();
  };
  if (kind == "D1") {
    out.structure = std::make_unique<D1Structure>(load_group_file(resolve(spec.at("group"))));
  } else if (kind == "Dk") {
    out.structure = std::make_unique<DkStructure>(load_group_file(resolve(spec.at("group"))),
                                                  spec.at("k").get<int>());
  } else if (kind == "HZk") {
    out.structure = std::make_unique<HZkStructure>(load_group_file(resolve(spec.at("group"))),
                                                   spec.at("center").get<std::vector<int>>(),
                                                   spec.at("k").get<int>());
  } else if (kind == "stored") {
    const int max_dim = spec.at("max_dim").get<int>();
    std::vector<std::vector<CubeMap>> cubes(static_cast<size_t>(max_dim) + 1);
    int inferred_size = 0;
    if (spec.contains("cubes"))
      for (const auto& [dim_str, list] : spec.at("cubes").items()) {
        const int n = std::stoi(dim_str);
        if (n < 0 || n > max_dim)
          throw std::invalid_argument("stored spec: dimension key outside 0..max_dim");
        for (const json& vals : list) {
          CubeMap c(n, vals.get<std::vector<int>>());
          for (int v : c.values) inferred_size = std::max(inferred_size, v + 1);
          cubes[static_cast<size_t>(n)].push_back(std::move(c));
        }
      }
    const int size = spec.contains("size") ? spec.at("size").get<int>() : inferred_size;
    out.structure = std::make_unique<StoredStructure>(size, max_dim, std::move(cubes));
  } else {
    throw std::invalid_argument("unknown structure kind: " + kind);
  }
  return out;
}

LoadedStructure load_structure_file(const std::string& path) {
  return structure_from_json(json_from_file(path), fs::path(path).parent_path().string());
}

LoadedFunction load_function_file(const std::string& path) {
  const json j = json_from_file(path);
  LoadedFunction out;
  out.spec_echo = j;
  fs::path gpath(j.at("group").get<std::string>());
  if (gpath.is_relative()) gpath = fs::path(path).parent_path() / gpath;
  out.group = std::make_shared<GroupTable>(load_group_file(gpath.string()));
  std::vector<Complex> vals;
  for (const json& pair : j.at("values")) {
    if (!pair.is_array() || pair.size() != 2)
      throw std::invalid_argument("function values must be [re,im] pairs");
    vals.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  out.fn = GroupFunction(*out.group, std::move(vals));
  return out;
}

namespace {

json corner_witness_to_json(const CornerWitness& w) {
  return json{{"corner", corner_to_json(w.corner)}, {"completions", w.completions}};
}

}  // namespace

json axiom_report_to_json(const AxiomReport& r) {
  json completion = json::array();
  for (const DimCheck& d : r.completion) {
    json entry{{"n", d.n}, {"status", to_string(d.status)}, {"corners_checked", d.corners_checked}};
    if (d.witness) {
      entry["witness"] = corner_witness_to_json(*d.witness);
      entry["witness"]["axiom"] = "completion";
    }
    completion.push_back(std::move(entry));
  }
  json j{{"dim_cap", r.dim_cap},
         {"presheaf", to_string(r.presheaf)},
         {"ergodicity", to_string(r.ergodicity)},
         {"completion", std::move(completion)},
         {"k_ergodic", r.k_ergodic},
         {"consistency", r.consistency_pass},
         {"all_pass", r.all_pass()}};
  if (r.presheaf_witness)
    j["presheaf_witness"] = json{{"axiom", "presheaf"},
                                 {"morphism", morphism_to_json(r.presheaf_witness->phi)},
                                 {"cube", cube_to_json(r.presheaf_witness->cube)}};
  if (r.step)
    j["step"] = *r.step;
  else
    j["step"] = "above-cap";
  if (r.step_witness) j["step_witness"] = corner_witness_to_json(*r.step_witness);
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

json tower_to_json(const StructureTower& t) {
  json levels = json::array();
  for (const TowerLevel& lvl : t.levels) {
    json entry{{"level", lvl.level},
               {"factor_size", lvl.factor->size()},
               {"classes", lvl.classes.classes},
               {"group", group_to_json(lvl.group)},
               {"abelian", lvl.abelian},
               {"num_fibers", lvl.num_fibers},
               {"fibers_isomorphic", lvl.fibers_isomorphic},
               {"transport_bijection", lvl.transport_bijection_ok}};
    levels.push_back(std::move(entry));
  }
  return json{{"levels", std::move(levels)}, {"projections_compatible", t.projections_compatible}};
}

json distribution_to_json(const CubeDistribution& d) {
  json support = json::array();
  for (const auto& [vals, count] : d.counts)
    support.push_back(json{{"cube", vals}, {"count", count}});
  return json{{"k", d.k}, {"total", d.total}, {"support", std::move(support)}};
}

}  // namespace cubelab
