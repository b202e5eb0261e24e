#include "wick/model_config.hpp"

#include <json.hpp>

#include <fstream>

#include "wick/errors.hpp"
#include "wick/models.hpp"

namespace wick {

namespace {

using nlohmann::json;

Complex read_complex(const json& j, const char* what) {
  if (j.is_number()) return Complex{j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return Complex{j[0].get<double>(), j[1].get<double>()};
  }
  throw BadStateSpec(std::string("model file: ") + what +
                     " must be a number or a [re, im] pair");
}

Statistics read_statistics(const json& j) {
  const std::string s = j.get<std::string>();
  if (s == "fermi") return Statistics::Fermi;
  if (s == "bose") return Statistics::Bose;
  throw BadStateSpec("model file: statistics must be 'fermi' or 'bose'");
}

std::vector<double> read_frequencies(const json& j, int n_modes) {
  std::vector<double> out;
  if (!j.contains("frequencies")) return out;
  for (const auto& v : j.at("frequencies")) out.push_back(v.get<double>());
  if (static_cast<int>(out.size()) != n_modes) {
    throw BadStateSpec("model file: frequency list must have one entry per mode");
  }
  return out;
}

ModelPtr build_abstract(const json& j) {
  const Statistics stats =
      j.contains("statistics") ? read_statistics(j.at("statistics")) : Statistics::Fermi;
  const int modes = j.at("modes").get<int>();
  auto model = std::make_shared<AbstractModel>(stats, modes);
  if (j.contains("contractions")) {
    for (const auto& entry : j.at("contractions")) {
      const int a = entry.at("i").get<int>();
      const int b = entry.at("j").get<int>();
      model->set_contraction(a - 1, b - 1, read_complex(entry.at("value"), "contraction value"));
    }
  }
  if (j.contains("frequencies")) {
    const auto freq = read_frequencies(j, modes);
    for (int a = 0; a < modes; ++a) model->set_frequency(a, freq[a]);
  }
  return model;
}

ModelPtr build_fermisea(const json& j) {
  const int modes = j.at("modes").get<int>();
  const int filled = j.at("filled").get<int>();
  Eigen::MatrixXcd overlaps = Eigen::MatrixXcd::Identity(modes, modes);
  if (j.contains("overlaps")) {
    const auto& rows = j.at("overlaps");
    if (static_cast<int>(rows.size()) != modes) {
      throw BadStateSpec("model file: overlaps must be an M x M matrix");
    }
    for (int i = 0; i < modes; ++i) {
      if (static_cast<int>(rows[i].size()) != modes) {
        throw BadStateSpec("model file: overlaps must be an M x M matrix");
      }
      for (int a = 0; a < modes; ++a) overlaps(i, a) = read_complex(rows[i][a], "overlap");
    }
  }
  return std::make_shared<FermiSeaModel>(modes, filled, std::move(overlaps),
                                         read_frequencies(j, modes));
}

ModelPtr build_bcs(const json& j) {
  std::vector<BcsModel::Pair> pairs;
  for (const auto& entry : j.at("pairs")) {
    BcsModel::Pair p;
    p.u = read_complex(entry.at("u"), "u");
    p.v = read_complex(entry.at("v"), "v");
    if (entry.contains("energy")) p.energy = entry.at("energy").get<double>();
    pairs.push_back(p);
  }
  return std::make_shared<BcsModel>(std::move(pairs));
}

ModelPtr build_bec(const json& j) {
  const int modes = j.at("modes").get<int>();
  const double density = j.at("density").get<double>();
  const double volume = j.contains("volume") ? j.at("volume").get<double>() : 1.0;
  Eigen::VectorXcd condensate = Eigen::VectorXcd::Unit(modes, 0);
  if (j.contains("condensate")) {
    const auto& col = j.at("condensate");
    if (static_cast<int>(col.size()) != modes) {
      throw BadStateSpec("model file: condensate column must have M entries");
    }
    for (int i = 0; i < modes; ++i) condensate(i) = read_complex(col[i], "condensate overlap");
  }
  return std::make_shared<BecModel>(modes, density, volume, std::move(condensate),
                                    read_frequencies(j, modes));
}

}  // namespace

ModelPtr model_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw BadStateSpec(std::string("model file: invalid JSON: ") + e.what());
  }
  try {
    const std::string kind = j.at("model").get<std::string>();
    if (kind == "abstract") return build_abstract(j);
    if (kind == "fermisea") return build_fermisea(j);
    if (kind == "bcs") return build_bcs(j);
    if (kind == "bec") return build_bec(j);
    throw BadStateSpec("model file: unknown model '" + kind + "'");
  } catch (const json::exception& e) {
    throw BadStateSpec(std::string("model file: ") + e.what());
  }
}

ModelPtr model_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadStateSpec("model file: cannot open " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return model_from_json_text(text);
}

ModelPtr default_model(const std::string& kind, Statistics statistics, int n_modes) {
  if (n_modes < 1) n_modes = 1;
  if (kind == "abstract") {
    return std::make_shared<AbstractModel>(statistics, n_modes);
  }
  if (kind == "fermisea") {
    if (statistics != Statistics::Fermi) {
      throw BadStateSpec("fermisea model is fermionic; drop --stats bose");
    }
    return std::make_shared<FermiSeaModel>(n_modes, n_modes / 2);
  }
  if (kind == "bcs") {
    if (statistics != Statistics::Fermi) {
      throw BadStateSpec("bcs model is fermionic; drop --stats bose");
    }
    const int n_pairs = (n_modes + 1) / 2;
    std::vector<BcsModel::Pair> pairs(static_cast<std::size_t>(n_pairs),
                                      BcsModel::Pair{{0.6, 0.0}, {0.8, 0.0}, 1.0});
    return std::make_shared<BcsModel>(std::move(pairs));
  }
  if (kind == "bec") {
    if (statistics != Statistics::Bose) {
      throw BadStateSpec("bec model is bosonic; use --stats bose");
    }
    return std::make_shared<BecModel>(n_modes, 1.0, 1.0);
  }
  throw BadStateSpec("unknown model '" + kind + "'");
}

}  // namespace wick
