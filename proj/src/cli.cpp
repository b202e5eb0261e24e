#include "wick/cli.hpp"

#include <CLI11.hpp>

#include <json.hpp>

#include <algorithm>
#include <ostream>

#include "wick/errors.hpp"
#include "wick/fock.hpp"
#include "wick/model_config.hpp"
#include "wick/models.hpp"
#include "wick/parse.hpp"
#include "wick/render.hpp"
#include "wick/time_ordered.hpp"
#include "wick/wick.hpp"

namespace wick {

namespace {

constexpr double kCheckThreshold = 1e-10;

struct CommonFlags {
  std::string stats = "fermi";
  std::string model = "abstract";
  std::string model_file;
  std::string format = "text";
  int modes = 0;  // 0: infer from the product
  int cutoff = 8;
  bool time_ordered = false;
  bool oracle_check = false;
  bool symbolic = false;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--stats", f.stats, "Statistics: fermi or bose")
      ->check(CLI::IsMember({"fermi", "bose"}));
  cmd->add_option("--model", f.model, "Reference state: abstract, fermisea, bcs or bec")
      ->check(CLI::IsMember({"abstract", "fermisea", "bcs", "bec"}));
  cmd->add_option("--model-file", f.model_file, "JSON model description (overrides --model)");
  cmd->add_option("--format", f.format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--modes", f.modes, "Mode count for built-in models (default: inferred)");
  cmd->add_option("--cutoff", f.cutoff, "Max occupation per bosonic oracle mode");
  cmd->add_flag("--time-ordered", f.time_ordered, "Time-ordered theorem (needs @time labels)");
  cmd->add_flag("--oracle-check", f.oracle_check, "Also verify against the Fock oracle");
  cmd->add_flag("--symbolic", f.symbolic, "Keep contraction scalars formal for any model");
}

Statistics stats_of(const CommonFlags& f) {
  return f.stats == "bose" ? Statistics::Bose : Statistics::Fermi;
}

int inferred_modes(const OperatorExpr& expr) {
  int m = 1;
  for (const auto& atom : expr.atoms) {
    int needed = atom.mode;
    if (atom.spin) needed = 2 * (atom.mode - 1) + 1 + 1;  // flattened (k, spin) index, 1-based
    m = std::max(m, needed);
  }
  return m;
}

ModelPtr make_model(const CommonFlags& f, const OperatorExpr& expr) {
  if (!f.model_file.empty()) return model_from_json_file(f.model_file);
  const int modes = f.modes > 0 ? f.modes : inferred_modes(expr);
  return default_model(f.model, stats_of(f), modes);
}

FockSpace make_space(const CommonFlags& f, const Model& model) {
  const int cutoff = model.statistics() == Statistics::Fermi ? 1 : f.cutoff;
  return FockSpace(model.statistics(), model.field_mode_count(), cutoff);
}

void print_value(const Complex& value, const CommonFlags& f, std::ostream& out) {
  if (f.format == "json") {
    nlohmann::json j;
    j["schema"] = 1;
    j["value"] = {{"re", value.real()}, {"im", value.imag()}};
    out << j.dump(2) << "\n";
  } else {
    out << format_complex(value) << "\n";
  }
}

int run_expand(const CommonFlags& f, const std::string& input, std::ostream& out,
               std::ostream& err) {
  const OperatorExpr expr = parse(input);
  const ModelPtr model = make_model(f, expr);
  const Product product = to_symbols(expr, *model);

  const bool evaluate = !f.symbolic && std::string(model->name()) != "abstract";
  const ExpandOptions options{.evaluate = evaluate};
  const Expansion expansion = f.time_ordered ? wick_expand_t(product, *model, options)
                                             : wick_expand(product, *model, options);
  out << (f.format == "json" ? render_json(expansion, expr.atoms, *model, f.time_ordered)
                             : render_text(expansion, expr.atoms, *model, f.time_ordered));

  if (f.oracle_check) {
    if (f.time_ordered) {
      throw BadStateSpec("--oracle-check covers the static theorem only");
    }
    const FockSpace space = make_space(f, *model);
    const double deviation = check_wick_identity(product, space, *model);
    err << "oracle deviation = " << format_double(deviation) << "\n";
    if (deviation > kCheckThreshold) return 1;
  }
  return 0;
}

int run_vev(const CommonFlags& f, const std::string& input, std::ostream& out,
            std::ostream& err) {
  const OperatorExpr expr = parse(input);
  const ModelPtr model = make_model(f, expr);
  const Product product = to_symbols(expr, *model);
  const Complex value = f.time_ordered ? vev_time_ordered(product, *model) : vev(product, *model);
  print_value(value, f, out);

  if (f.oracle_check) {
    if (f.time_ordered) {
      throw BadStateSpec("--oracle-check covers the static theorem only");
    }
    const FockSpace space = make_space(f, *model);
    const auto ops = build_mode_operators(space);
    const auto state = build_state(space, state_spec_for(*model));
    Eigen::VectorXcd v = state;
    for (auto it = product.rbegin(); it != product.rend(); ++it) {
      v = symbol_matrix(space, ops, *model, *it) * v;
    }
    const double deviation = std::abs(state.dot(v) - value);
    err << "oracle deviation = " << format_double(deviation) << "\n";
    if (deviation > kCheckThreshold) return 1;
  }
  return 0;
}

std::vector<SpaceTimePoint> parse_points(const std::string& input) {
  std::vector<SpaceTimePoint> points;
  // Reuse the atom scanner by dressing entries as psi atoms: "2@1.0" etc.
  std::string dressed;
  std::size_t pos = 0;
  while (pos < input.size()) {
    while (pos < input.size() && std::isspace(static_cast<unsigned char>(input[pos]))) ++pos;
    if (pos >= input.size()) break;
    std::size_t end = pos;
    while (end < input.size() && !std::isspace(static_cast<unsigned char>(input[end]))) ++end;
    const std::string entry = input.substr(pos, end - pos);
    const std::size_t at = entry.find('@');
    if (at == std::string::npos) {
      throw ParseError("green points use mode@time", static_cast<int>(pos) + 1);
    }
    dressed += "psi(" + entry.substr(0, at) + ")@" + entry.substr(at + 1) + " ";
    pos = end;
  }
  const OperatorExpr expr = parse(dressed);
  if (expr.atoms.empty()) throw ParseError("empty point list", 1);
  for (const auto& atom : expr.atoms) {
    points.push_back({atom.mode - 1, atom.time.value_or(0.0)});
  }
  return points;
}

int run_green(const CommonFlags& f, const std::string& xs_input, const std::string& ys_input,
              std::ostream& out, std::ostream&) {
  const auto xs = parse_points(xs_input);
  const auto ys = parse_points(ys_input);
  OperatorExpr probe;
  for (const auto& p : xs) probe.atoms.push_back({"psi", false, p.mode + 1, {}, p.time, 0});
  for (const auto& p : ys) probe.atoms.push_back({"psi", true, p.mode + 1, {}, p.time, 0});
  CommonFlags flags = f;
  ModelPtr model;
  if (flags.model == "abstract" && flags.model_file.empty()) {
    // Propagators need a concrete reference state: Fermi sea, or an ideal
    // Bose gas (density-0 condensate) for bosons.
    if (stats_of(f) == Statistics::Fermi) {
      flags.model = "fermisea";
      model = make_model(flags, probe);
    } else {
      const int modes = flags.modes > 0 ? flags.modes : inferred_modes(probe);
      model = std::make_shared<BecModel>(modes, 0.0, 1.0);
    }
  } else {
    model = make_model(flags, probe);
  }
  const Complex value = n_particle_green(xs, ys, *model);
  print_value(value, f, out);
  return 0;
}

int run_check(const CommonFlags& f, const std::string& input, std::ostream& out,
              std::ostream&) {
  const OperatorExpr expr = parse(input);
  CommonFlags flags = f;
  if (flags.model == "abstract" && flags.model_file.empty()) {
    flags.model = stats_of(f) == Statistics::Fermi ? "fermisea" : "bec";
  }
  ModelPtr model;
  if (flags.model == "bec" && flags.model_file.empty()) {
    // Identity checks need a scalar-free reference: free bosons in vacuum.
    const int modes = flags.modes > 0 ? flags.modes : inferred_modes(expr);
    model = std::make_shared<BecModel>(modes, 0.0, 1.0);
  } else {
    model = make_model(flags, expr);
  }
  const Product product = to_symbols(expr, *model);
  const FockSpace space = make_space(flags, *model);
  const double deviation = check_wick_identity(product, space, *model);
  const bool pass = deviation <= kCheckThreshold;
  if (f.format == "json") {
    nlohmann::json j;
    j["schema"] = 1;
    j["deviation"] = deviation;
    j["pass"] = pass;
    out << j.dump(2) << "\n";
  } else {
    out << "max deviation = " << format_double(deviation) << (pass ? " (pass)" : " (FAIL)")
        << "\n";
  }
  return pass ? 0 : 1;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"wick: normal ordering, Wick expansions and reference-state correlators"};
  app.require_subcommand(1);

  CommonFlags f;
  std::string product_input, xs_input, ys_input;

  auto* expand_cmd = app.add_subcommand("expand", "Expand a product into normal-ordered terms");
  add_common(expand_cmd, f);
  expand_cmd->add_option("product", product_input, "Operator product, e.g. \"A(1) A(2) A(3)\"")
      ->required();

  auto* vev_cmd = app.add_subcommand("vev", "Reference-state expectation value of a product");
  add_common(vev_cmd, f);
  vev_cmd->add_option("product", product_input, "Operator product")->required();

  auto* green_cmd = app.add_subcommand("green", "n-particle Green function");
  add_common(green_cmd, f);
  green_cmd->add_option("xs", xs_input, "Annihilation points: \"mode@time ...\"")->required();
  green_cmd->add_option("ys", ys_input, "Creation points: \"mode@time ...\"")->required();

  auto* check_cmd = app.add_subcommand("check", "Verify the expansion as an operator identity");
  add_common(check_cmd, f);
  check_cmd->add_option("product", product_input, "Operator product")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (expand_cmd->parsed()) return run_expand(f, product_input, out, err);
    if (vev_cmd->parsed()) return run_vev(f, product_input, out, err);
    if (green_cmd->parsed()) return run_green(f, xs_input, ys_input, out, err);
    if (check_cmd->parsed()) return run_check(f, product_input, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const EmptyProduct& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "model error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

}  // namespace wick
