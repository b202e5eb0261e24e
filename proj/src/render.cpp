#include "wick/render.hpp"

#include <json.hpp>

#include <cstdio>

namespace wick {

using nlohmann::json;

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string format_complex(const Complex& z) {
  return "(" + format_double(z.real()) + "," + format_double(z.imag()) + ")";
}

namespace {

Atom factor_atom(const PositionedOp& factor, const std::vector<Atom>& source, const Model& model) {
  if (factor.position >= 0 && factor.position < static_cast<int>(source.size())) {
    return source[factor.position];
  }
  return atom_from_symbol(factor.op, model);
}

std::string coefficient_prefix(const Complex& c) {
  if (c == Complex{1.0, 0.0}) return "+ ";
  if (c == Complex{-1.0, 0.0}) return "- ";
  return "+ " + format_complex(c) + " ";
}

}  // namespace

std::string render_atom_text(const Atom& atom) { return print(atom); }

std::string render_text(const Expansion& expansion, const std::vector<Atom>& source,
                        const Model& model, bool time_ordered) {
  std::string out;
  for (const auto& term : expansion.terms) {
    std::string line = coefficient_prefix(term.coefficient);
    for (const auto& pair : term.contractions) {
      line += time_ordered ? "T<" : "<";
      line += std::to_string(pair.first + 1);
      line += ' ';
      line += std::to_string(pair.second + 1);
      line += "> ";
    }
    if (!term.normal_factors.empty()) {
      line += "N[";
      for (std::size_t i = 0; i < term.normal_factors.size(); ++i) {
        if (i) line += ' ';
        line += print(factor_atom(term.normal_factors[i], source, model));
      }
      line += ']';
    } else if (term.contractions.empty()) {
      line += '1';
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

namespace {

json atom_json(const Atom& atom) {
  json j;
  j["name"] = atom.name;
  j["dagger"] = atom.dagger;
  j["mode"] = atom.mode;
  if (atom.spin) j["spin"] = (*atom.spin == Spin::Up) ? "up" : "down";
  if (atom.time) j["time"] = *atom.time;
  return j;
}

}  // namespace

std::string render_json(const Expansion& expansion, const std::vector<Atom>& source,
                        const Model& model, bool time_ordered) {
  json j;
  j["schema"] = 1;
  j["statistics"] = to_string(expansion.statistics);
  j["length"] = expansion.original_length;
  j["time_ordered"] = time_ordered;
  j["evaluated"] = expansion.evaluated;
  j["terms"] = json::array();
  for (const auto& term : expansion.terms) {
    json t;
    t["coefficient"] = {{"re", term.coefficient.real()}, {"im", term.coefficient.imag()}};
    t["contractions"] = json::array();
    for (const auto& pair : term.contractions) {
      t["contractions"].push_back({pair.first + 1, pair.second + 1});
    }
    t["normal"] = json::array();
    for (const auto& factor : term.normal_factors) {
      t["normal"].push_back(atom_json(factor_atom(factor, source, model)));
    }
    j["terms"].push_back(std::move(t));
  }
  return j.dump(2) + "\n";
}

}  // namespace wick
