// cubelab: build finite groups and cube structures, check the structure
// axioms, complete corners, compute characteristic factors and structure
// groups, and evaluate uniformity norms exactly or by Monte-Carlo.
//
// Exit codes: 0 success, 1 verification failure (a checked property fails,
// with a witness in the report), 2 budget or usage error.

#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "cubelab/algebra.hpp"
#include "cubelab/json_io.hpp"
#include "cubelab/version.hpp"

using namespace cubelab;

namespace {

struct GlobalOptions {
  uint64_t budget_ops = 0;  // 0: keep env/default
  int threads = 1;
  std::string output = "json";
  std::string out_path;
  double tolerance = 1e-9;
  uint64_t seed = 0;
};

Budget make_budget(const GlobalOptions& g) {
  Budget b = Budget::from_env();
  if (g.budget_ops > 0) b.ops = g.budget_ops;
  return b;
}

json input_entry(const std::string& path) {
  return json{{"path", path}, {"fnv1a64", file_hash_hex(path)}};
}

json envelope(const std::string& command, const GlobalOptions& g, const Budget& b, json inputs,
              json config, json result) {
  config["budget"] = b.ops;
  config["threads"] = g.threads;
  config["tolerance"] = g.tolerance;
  return json{{"tool", "cubelab"}, {"version", kVersion}, {"command", command},
              {"inputs", inputs},  {"config", config},    {"result", result}};
}

void emit(const json& report, const GlobalOptions& g) {
  if (g.output == "json") {
    if (!g.out_path.empty())
      json_to_file(g.out_path, report);
    else
      std::cout << report.dump(2) << "\n";
  } else {
    std::cout << report.at("command").get<std::string>() << " (cubelab " << kVersion << ")\n";
    std::cout << report.at("result").dump(2) << "\n";
    if (!g.out_path.empty()) json_to_file(g.out_path, report);
  }
}

std::unique_ptr<CubeStructure> load_spec(const std::string& path, json& inputs) {
  inputs["spec"] = input_entry(path);
  return load_structure_file(path).structure;
}

int cmd_group(const std::string& action, const std::string& kind, int n, const std::string& file,
              const std::string& subgroup_csv, const GlobalOptions& g, const Budget& budget) {
  json inputs = json::object();
  json config{{"action", action}};
  if (action == "make") {
    GroupTable table = make_named_group(kind, n);
    config["kind"] = kind;
    config["n"] = n;
    json result{{"order", table.order}, {"abelian", is_abelian(table)}};
    if (!g.out_path.empty()) {
      json_to_file(g.out_path, group_to_json(table));
      result["written"] = g.out_path;
      GlobalOptions g2 = g;
      g2.out_path.clear();
      emit(envelope("group make", g2, budget, inputs, config, result), g2);
    } else {
      result["group"] = group_to_json(table);
      emit(envelope("group make", g, budget, inputs, config, result), g);
    }
    return 0;
  }
  GroupTable table = load_group_file(file);
  inputs["group"] = input_entry(file);
  if (action == "show") {
    std::vector<int> orders;
    for (int x = 0; x < table.order; ++x) orders.push_back(table.element_order(x));
    json result{{"order", table.order},
                {"abelian", is_abelian(table)},
                {"identity", table.id},
                {"center", center(table)},
                {"element_orders", orders},
                {"names", table.names}};
    emit(envelope("group show", g, budget, inputs, config, result), g);
    return 0;
  }
  if (action == "center") {
    std::vector<int> z = center(table);
    json result{{"center", z}, {"center_order", z.size()}};
    emit(envelope("group center", g, budget, inputs, config, result), g);
    return 0;
  }
  if (action == "quotient") {
    std::vector<int> subgroup;
    std::stringstream ss(subgroup_csv);
    for (std::string tok; std::getline(ss, tok, ',');) subgroup.push_back(std::stoi(tok));
    QuotientResult q = quotient(table, subgroup);
    config["subgroup"] = subgroup;
    json result{{"classes", q.classes}, {"quotient", group_to_json(q.quotient)}};
    emit(envelope("group quotient", g, budget, inputs, config, result), g);
    return 0;
  }
  throw CLI::ValidationError("unknown group action: " + action);
}

int cmd_structure(const std::string& action, const std::string& spec_path, int dim_cap, int n,
                  const std::string& corner_path, const GlobalOptions& g, const Budget& budget) {
  json inputs = json::object();
  auto x = load_spec(spec_path, inputs);
  json config{{"action", action}, {"dim_cap", dim_cap}};
  if (action == "build") {
    json result{{"size", x->size()}, {"description", x->describe()}};
    emit(envelope("structure build", g, budget, inputs, config, result), g);
    return 0;
  }
  if (action == "axioms") {
    AxiomReport report = check_axioms(*x, dim_cap, budget);
    json result = axiom_report_to_json(report);
    emit(envelope("structure axioms", g, budget, inputs, config, result), g);
    bool skipped = report.presheaf == CheckStatus::SkippedBudget;
    for (const DimCheck& d : report.completion)
      skipped = skipped || d.status == CheckStatus::SkippedBudget;
    if (skipped) return 2;
    return report.all_pass() ? 0 : 1;
  }
  if (action == "complete") {
    inputs["corner"] = input_entry(corner_path);
    Corner corner = corner_from_json(json_from_file(corner_path));
    try {
      std::vector<CubeMap> completions = x->complete_corner(corner);
      json list = json::array();
      for (const CubeMap& c : completions) list.push_back(cube_to_json(c));
      json result{{"count", completions.size()}, {"completions", list}};
      emit(envelope("structure complete", g, budget, inputs, config, result), g);
      return completions.empty() ? 1 : 0;
    } catch (const std::invalid_argument& e) {
      json result{{"error", e.what()}};
      emit(envelope("structure complete", g, budget, inputs, config, result), g);
      return 1;
    }
  }
  if (action == "enumerate") {
    config["n"] = n;
    json counts = json::object();
    for (int d = 0; d <= n; ++d) counts[std::to_string(d)] = x->enumerate(d, budget).size();
    json result{{"counts", counts}};
    emit(envelope("structure enumerate", g, budget, inputs, config, result), g);
    return 0;
  }
  throw CLI::ValidationError("unknown structure action: " + action);
}

int cmd_factor(const std::string& action, const std::string& spec_path, int k_cap, int dim_cap,
               int k_arg, int a_arg, int x_arg, const GlobalOptions& g, const Budget& budget) {
  json inputs = json::object();
  auto x = load_spec(spec_path, inputs);
  json config{{"action", action}, {"dim_cap", dim_cap}};
  if (action == "tower") {
    config["k_cap"] = k_cap;
    try {
      StructureTower tower = structure_tower(*x, k_cap, dim_cap, budget);
      json result = tower_to_json(tower);
      bool ok = tower.projections_compatible;
      for (const TowerLevel& lvl : tower.levels)
        ok = ok && lvl.fibers_isomorphic && lvl.transport_bijection_ok &&
             (lvl.level < 2 || lvl.abelian);
      result["verified"] = ok;
      emit(envelope("factor tower", g, budget, inputs, config, result), g);
      return ok ? 0 : 1;
    } catch (const std::runtime_error& e) {
      json result{{"error", e.what()}};
      emit(envelope("factor tower", g, budget, inputs, config, result), g);
      return 1;
    }
  }
  int k = k_arg;
  if (k <= 0) {
    for (int cand = 1; cand < dim_cap && k <= 0; ++cand)
      if (is_k_step(*x, cand, budget)) k = cand;
    if (k <= 0) {
      std::cerr << "no step <= dim_cap-1 detected; pass --k explicitly\n";
      return 1;
    }
  }
  config["k"] = k;
  if (action == "fibers") {
    try {
      std::vector<Fiber> fs = fibers(*x, k, dim_cap, budget);
      json list = json::array();
      for (const Fiber& f : fs) {
        json entry{{"members", f.members}};
        if (k >= 2) {
          AbelianRecovery rec = recover_abelian(*f.structure, k, 0, budget);
          entry["group"] = group_to_json(rec.group);
        }
        list.push_back(std::move(entry));
      }
      json result{{"count", fs.size()}, {"fibers", list}};
      emit(envelope("factor fibers", g, budget, inputs, config, result), g);
      return 0;
    } catch (const std::runtime_error& e) {
      json result{{"error", e.what()}};
      emit(envelope("factor fibers", g, budget, inputs, config, result), g);
      return 1;
    }
  }
  if (action == "action") {
    if (k < 2) {
      std::cerr << "factor action needs a step-k structure with k >= 2\n";
      return 1;
    }
    try {
      std::vector<Fiber> fs = fibers(*x, k, dim_cap, budget);
      const Fiber* home = nullptr;
      for (const Fiber& f : fs)
        for (size_t i = 0; i < f.members.size(); ++i)
          if (f.members[i] == x_arg) home = &f;
      if (!home) throw std::runtime_error("point --x outside the structure");
      auto member_index = [&](int point) {
        for (size_t i = 0; i < home->members.size(); ++i)
          if (home->members[i] == point) return static_cast<int>(i);
        throw std::runtime_error("--a and --x must lie in the same fiber");
      };
      AbelianRecovery rec = recover_abelian(*home->structure, k, 0, budget);
      int local = fiber_action(*home->structure, rec, member_index(a_arg), member_index(x_arg));
      int point = home->members[static_cast<size_t>(local)];
      json result{{"fiber", home->members}, {"a", a_arg}, {"x", x_arg}, {"value", point}};
      emit(envelope("factor action", g, budget, inputs, config, result), g);
      return 0;
    } catch (const std::runtime_error& e) {
      json result{{"error", e.what()}};
      emit(envelope("factor action", g, budget, inputs, config, result), g);
      return 1;
    }
  }
  throw CLI::ValidationError("unknown factor action: " + action);
}

int cmd_gowers(const std::string& action, const std::string& group_path, const std::string& fn_path,
               int n, int k, uint64_t samples, const GlobalOptions& g, const Budget& budget) {
  json inputs = json::object();
  json config{{"action", action}};
  if (action == "dist-compare") {
    GroupTable table = load_group_file(group_path);
    inputs["group"] = input_entry(group_path);
    config["k"] = k;
    CubeDistribution simple = cube_distribution(table, k, false, budget);
    CubeDistribution general = cube_distribution(table, k, true, budget);
    bool equal = distributions_equal(simple, general);
    Rational tv = total_variation(simple, general);
    json result{{"equal", equal},
                {"tv_num", tv.num},
                {"tv_den", tv.den},
                {"simple_total", simple.total},
                {"general_total", general.total},
                {"support", simple.counts.size()}};
    emit(envelope("gowers dist-compare", g, budget, inputs, config, result), g);
    return equal ? 0 : 1;
  }
  LoadedFunction lf = load_function_file(fn_path);
  inputs["fn"] = input_entry(fn_path);
  if (!group_path.empty()) inputs["group"] = input_entry(group_path);
  config["n"] = n;
  if (action == "exact") {
    NormResult r = gowers_norm(lf.fn, n, budget);
    json result{{"norm", r.norm}, {"inner", {r.inner.real(), r.inner.imag()}}, {"ops", r.ops}};
    emit(envelope("gowers exact", g, budget, inputs, config, result), g);
    return 0;
  }
  if (action == "mc") {
    config["samples"] = samples;
    config["seed"] = g.seed;
    McResult r = gowers_norm_mc(lf.fn, n, samples, g.seed);
    json result{{"norm", r.norm},
                {"mean", r.mean},
                {"mean_imag", r.mean_complex.imag()},
                {"stderr", r.stderr_mean},
                {"samples", r.samples},
                {"seed", r.seed}};
    emit(envelope("gowers mc", g, budget, inputs, config, result), g);
    return 0;
  }
  throw CLI::ValidationError("unknown gowers action: " + action);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cube structures on finite groups: axioms, factors, uniformity norms"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.set_version_flag("--version", std::string("cubelab ") + kVersion);
  app.add_option("--budget", g.budget_ops,
                 "operation budget for exact sums (overrides CUBELAB_BUDGET)");
  app.add_option("--threads", g.threads, "worker threads for data-parallel kernels")->default_val(1);
  app.add_option("--output", g.output, "report format")
      ->check(CLI::IsMember({"json", "text"}))
      ->default_val("json");
  app.add_option("-o,--out", g.out_path, "write the report (or generated file) here");
  app.add_option("--tolerance", g.tolerance, "numeric tolerance echoed into reports")
      ->default_val(1e-9);
  auto* seed_opt = app.add_option("--seed", g.seed, "PRNG seed; drawn and printed when omitted");

  std::string kind = "cyclic", file, subgroup_csv, spec_path, corner_path, group_path, fn_path;
  int n = 1, dim_cap = 3, k = 0, k_cap = 2, a_arg = 0, x_arg = 0;
  uint64_t samples = 10000;

  CLI::App* grp = app.add_subcommand("group", "make and inspect finite groups");
  grp->require_subcommand(1);
  CLI::App* gmake = grp->add_subcommand("make", "construct a named group");
  gmake->add_option("--kind", kind, "cyclic | dihedral | symmetric | quaternion8")->required();
  gmake->add_option("--n", n, "size parameter");
  grp->add_subcommand("show", "order, center, element orders")->add_option("file", file)->required();
  grp->add_subcommand("center", "the maximal central subgroup")->add_option("file", file)->required();
  CLI::App* gquot = grp->add_subcommand("quotient", "quotient by a normal subgroup");
  gquot->add_option("file", file)->required();
  gquot->add_option("--subgroup", subgroup_csv, "comma-separated element indices")->required();

  CLI::App* st = app.add_subcommand("structure", "cube-structure membership, axioms, completion");
  st->require_subcommand(1);
  for (const char* sub : {"build", "axioms", "complete", "enumerate"}) {
    CLI::App* s = st->add_subcommand(sub);
    s->add_option("--spec", spec_path, "structure spec JSON")->required();
    s->add_option("--dim-cap", dim_cap, "largest checked dimension");
    if (std::string(sub) == "complete") s->add_option("--corner", corner_path)->required();
    if (std::string(sub) == "enumerate") s->add_option("--n", n)->required();
  }

  CLI::App* fc = app.add_subcommand("factor", "characteristic factors, fibers, structure groups");
  fc->require_subcommand(1);
  for (const char* sub : {"tower", "fibers", "action"}) {
    CLI::App* s = fc->add_subcommand(sub);
    s->add_option("--spec", spec_path)->required();
    s->add_option("--dim-cap", dim_cap);
    if (std::string(sub) == "tower") s->add_option("--k-cap", k_cap);
    if (std::string(sub) != "tower") s->add_option("--k", k);
    if (std::string(sub) == "action") {
      s->add_option("--a", a_arg, "acting element (point index)")->required();
      s->add_option("--x", x_arg, "point acted on")->required();
    }
  }

  CLI::App* gw = app.add_subcommand("gowers", "uniformity norms and cube distributions");
  gw->require_subcommand(1);
  for (const char* sub : {"exact", "mc", "dist-compare"}) {
    CLI::App* s = gw->add_subcommand(sub);
    s->add_option("--group", group_path);
    if (std::string(sub) != "dist-compare") {
      s->add_option("--fn", fn_path)->required();
      s->add_option("--n", n)->required();
    } else {
      s->get_option("--group")->required();
      s->add_option("--k", k)->required();
    }
    if (std::string(sub) == "mc") s->add_option("--samples", samples);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

#ifdef _OPENMP
  omp_set_num_threads(std::max(1, g.threads));
#endif
  if (!*seed_opt) {
    g.seed = std::random_device{}();
    std::cerr << "seed: " << g.seed << "\n";
  }

  Budget budget = make_budget(g);
  try {
    if (grp->parsed()) {
      std::string action = grp->get_subcommands().front()->get_name();
      return cmd_group(action, kind, n, file, subgroup_csv, g, budget);
    }
    if (st->parsed()) {
      std::string action = st->get_subcommands().front()->get_name();
      return cmd_structure(action, spec_path, dim_cap, n, corner_path, g, budget);
    }
    if (fc->parsed()) {
      std::string action = fc->get_subcommands().front()->get_name();
      return cmd_factor(action, spec_path, k_cap, dim_cap, k, a_arg, x_arg, g, budget);
    }
    if (gw->parsed()) {
      std::string action = gw->get_subcommands().front()->get_name();
      return cmd_gowers(action, group_path, fn_path, n, k, samples, g, budget);
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n"
              << "hint: raise --budget / CUBELAB_BUDGET, or use `gowers mc` for large groups\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
