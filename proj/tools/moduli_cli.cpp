#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "moduli/campaigns.hpp"
#include "moduli/catalog.hpp"
#include "moduli/certify.hpp"
#include "moduli/maps.hpp"
#include "moduli/singularity.hpp"

namespace {

using namespace moduli;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

SpaceContext make_context(const std::string& space, int g, int n,
                          const std::vector<int>& partition,
                          const std::string& level_name) {
  Level level = level_name == "coarse" ? Level::Coarse : Level::Stack;
  if (level_name != "stack" && level_name != "coarse")
    throw UsageError("unknown level '" + level_name + "'");
  if (space == "pointed") return {SpaceKind::Pointed, g, n, {}, level};
  if (space == "nodal") return {SpaceKind::NodalQuotient, g, n, {}, level};
  if (space == "hyperelliptic") return {SpaceKind::Hyperelliptic, g, n, {}, level};
  if (space == "partition") {
    if (partition.empty()) throw UsageError("--partition required for this space");
    int total = 0;
    for (int p : partition) total += p;
    return {SpaceKind::PartitionQuotient, g, total, partition, level};
  }
  throw UsageError("unknown space '" + space + "'");
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw UsageError("cannot write '" + out_path + "'");
  out << text << "\n";
}

DivisorClass named_class(const std::string& name, const SpaceContext& ctx,
                         const std::vector<int>& weights) {
  if (name == "K") return catalog::canonical_class(ctx);
  if (name == "psi") return catalog::psi_class(ctx);
  if (ctx.kind == SpaceKind::Pointed) {
    if (name == "bn") return catalog::brill_noether(ctx.g);
    if (name == "petri") return catalog::gieseker_petri(ctx.g).cls;
    if (name == "slope") return catalog::slope_class(ctx.g).cls;
    if (name == "pencil") {
      std::vector<int> w = weights;
      if (w.empty()) w.assign(ctx.n, 1);
      return catalog::logan(ctx.g, w).cls;
    }
  }
  if (ctx.kind == SpaceKind::NodalQuotient)
    return campaigns::cell_generator(ctx.g, ctx.n, name).cls;
  throw UsageError("unknown class '" + name + "' for this space");
}

int run_table(const std::string& which, int g, const std::string& format,
              const std::string& out_path) {
  if (which == "hyperelliptic") {
    auto report = campaigns::hyperelliptic_threshold(g);
    emit(report.to_json().dump(2), out_path);
    bool ok = report.effective_at == 4 * g + 6 && report.big_from == 4 * g + 7;
    return ok ? 0 : 1;
  }
  campaigns::TableReport report;
  if (which == "nodal")
    report = campaigns::nodal_campaign();
  else if (which == "prop1")
    report = campaigns::nodal_family_table(campaigns::Family::Weierstrass);
  else if (which == "prop2")
    report = campaigns::nodal_union_table();
  else if (which == "difvar")
    report = campaigns::difvar_campaign();
  else if (which == "reference")
    report = campaigns::pointed_reference_table();
  else
    throw UsageError("unknown table '" + which + "'");
  if (format == "csv")
    emit(report.to_csv(), out_path);
  else if (format == "text") {
    std::ostringstream os;
    os << report.id << "\n";
    for (const auto& [gg, lo] : report.n_min) {
      os << "  g=" << gg << "  n_min=" << lo;
      if (auto it = report.n_max.find(gg); it != report.n_max.end())
        os << "  n_max=" << it->second;
      os << "\n";
    }
    for (const auto& m : report.mismatches) os << "  MISMATCH " << m << "\n";
    emit(os.str(), out_path);
  } else
    emit(report.to_json().dump(2), out_path);
  return report.ok() ? 0 : 1;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"Exact divisor-class calculus on moduli of pointed curves and "
               "their quotients"};
  app.require_subcommand(1);

  std::string space = "pointed", level = "stack", format = "json";
  std::string name, out_path, input_path;
  int g = 2, n = 0, which_label = 0, glue_g = 0, order = 2;
  std::vector<int> partition, weights;

  auto add_context = [&](CLI::App* cmd) {
    cmd->add_option("--space", space, "pointed|nodal|partition|hyperelliptic");
    cmd->add_option("--g", g, "genus")->required();
    cmd->add_option("--n", n, "points (pairs for the nodal quotient)");
    cmd->add_option("--partition", partition, "block sizes");
    cmd->add_option("--level", level, "stack|coarse");
    cmd->add_option("--format", format, "json|csv|text");
    cmd->add_option("--output", out_path, "output path (default stdout)");
  };

  auto* cls = app.add_subcommand("class", "construct a cataloged class");
  cls->add_option("name", name, "K, psi, or a catalog generator")->required();
  cls->add_option("--weights", weights, "pencil weights");
  add_context(cls);

  auto* pull = app.add_subcommand("pullback", "apply a pullback to a class");
  std::string map_name;
  pull->add_option("--map", map_name, "forgetful|glue|restrict|rational")->required();
  pull->add_option("--which", which_label, "inserted label (forgetful)");
  pull->add_option("--g", glue_g, "target genus (glue, rational)");
  pull->add_option("--pairs", n, "glued pair count");
  pull->add_option("--input", input_path, "class JSON path (default stdin)");
  pull->add_option("--output", out_path, "output path");

  auto* cat = app.add_subcommand("catalog", "list cataloged generators");
  cat->add_option("--format", format, "json|text");
  cat->add_option("--output", out_path, "output path");

  auto* cert = app.add_subcommand("certify", "certify one quotient cell");
  std::vector<std::string> gen_names{"auto"};
  cert->add_option("--gens", gen_names, "generator names or 'auto'");
  add_context(cert);

  auto* table = app.add_subcommand("table", "run a campaign table");
  std::string table_id;
  table->add_option("--table", table_id,
                    "nodal|prop1|prop2|difvar|hyperelliptic|reference")
      ->required();
  table->add_option("--g", g, "genus (hyperelliptic threshold)");
  table->add_option("--format", format, "json|csv|text");
  table->add_option("--output", out_path, "output path");

  auto* age_cmd = app.add_subcommand("age", "tangent-action ages");
  bool all_units = false, involution = false, nonhyper = false;
  age_cmd->add_option("--g", g, "genus")->required();
  age_cmd->add_option("--order", order, "automorphism order")->required();
  age_cmd->add_flag("--all-units", all_units, "report every unit");
  age_cmd->add_flag("--involution", involution, "the hyperelliptic involution");
  age_cmd->add_flag("--nonhyperelliptic", nonhyper,
                    "the rotation lift (default action)");
  age_cmd->add_option("--output", out_path, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (cls->parsed()) {
    SpaceContext ctx = make_context(space, g, n, partition, level);
    DivisorClass c = named_class(name, ctx, weights);
    emit(format == "text" ? c.to_string() : c.to_json(), out_path);
    return 0;
  }

  if (pull->parsed()) {
    DivisorClass in = DivisorClass::from_json(read_input(input_path));
    DivisorClass out;
    if (map_name == "forgetful")
      out = maps::forgetful_pullback(in, which_label ? which_label
                                                    : in.context().n + 1);
    else if (map_name == "glue")
      out = maps::glue_pullback(in, glue_g, n);
    else if (map_name == "restrict")
      out = maps::hyperelliptic_restrict(in);
    else if (map_name == "rational")
      out = maps::rational_quotient_pullback(in, glue_g);
    else
      throw UsageError("unknown map '" + map_name + "'");
    emit(out.to_json(), out_path);
    return 0;
  }

  if (cat->parsed()) {
    auto entries = catalog::listing();
    if (format == "text") {
      std::ostringstream os;
      for (const auto& e : entries)
        os << e.name << "  " << e.context << "  [" << e.mode << "]  "
           << e.validity << "\n";
      emit(os.str(), out_path);
    } else {
      nlohmann::json j = nlohmann::json::array();
      for (const auto& e : entries)
        j.push_back({{"name", e.name},
                     {"context", e.context},
                     {"validity", e.validity},
                     {"mode", e.mode}});
      emit(j.dump(2), out_path);
    }
    return 0;
  }

  if (cert->parsed()) {
    if (space != "nodal")
      throw UsageError("certify currently handles the pair quotients");
    std::optional<certify::Certificate> best;
    std::string used;
    if (gen_names.size() == 1 && gen_names[0] == "auto") {
      for (auto family :
           {campaigns::Family::Weierstrass, campaigns::Family::MinimalResolution}) {
        std::string gens;
        auto c = campaigns::nodal_cell(g, n, family, &gens);
        if (!c) continue;
        if (!best || (best->verdict != certify::Verdict::GeneralType &&
                      c->verdict == certify::Verdict::GeneralType)) {
          best = c;
          used = gens;
        }
      }
      if (!best) throw UsageError("no admissible generator set at this cell");
    } else {
      std::vector<catalog::GeneratorSpec> gens;
      for (const auto& gn : gen_names) {
        gens.push_back(campaigns::cell_generator(g, n, gn));
        used += (used.empty() ? "" : "+") + gn;
      }
      best = certify::solve(campaigns::cell_canonical(g, n),
                            campaigns::cell_psi(g, n), gens,
                            campaigns::cell_coords(n));
    }
    nlohmann::json j = best->to_json();
    j["generators"] = used;
    emit(j.dump(2), out_path);
    return best->verdict == certify::Verdict::GeneralType ? 0 : 1;
  }

  if (table->parsed()) return run_table(table_id, g, format, out_path);

  if (age_cmd->parsed()) {
    auto action = singularity::hyperelliptic_tangent_action(g, order, involution);
    nlohmann::json j;
    j["g"] = g;
    j["order"] = order;
    j["exponents"] = action.exponents;
    j["age"] = to_fraction(singularity::age(action, 1));
    if (all_units) {
      nlohmann::json ages = nlohmann::json::array();
      for (int u = 1; u < order; ++u) {
        if (std::gcd(u, order) != 1) continue;
        ages.push_back({u, to_fraction(singularity::age(action, u))});
      }
      j["ages"] = ages;
    }
    j["class"] = singularity::action_class_name(singularity::classify(action));
    emit(j.dump(2), out_path);
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
