#pragma once

#include <string>

#include "wick/model.hpp"

namespace wick {

// Builds a model from its JSON description (see README for the schema).
// Throws BadStateSpec on malformed input.
ModelPtr model_from_json_text(const std::string& text);
ModelPtr model_from_json_file(const std::string& path);

// Built-in defaults used by the CLI when no model file is given.
ModelPtr default_model(const std::string& kind, Statistics statistics, int n_modes);

}  // namespace wick
