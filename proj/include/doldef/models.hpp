#ifndef DOLDEF_MODELS_HPP
#define DOLDEF_MODELS_HPP

#include <nlohmann/json_fwd.hpp>

#include "doldef/model.hpp"

namespace doldef {

/// Built-in catalog: "torus:<n>", "iwasawa", "nakamura_iii_3b".
ModelSpec builtin_model(const std::string& name);
std::vector<std::string> builtin_names();

nlohmann::ordered_json model_to_json(const ModelSpec& m);
/// Parses and validates; throws std::invalid_argument with the collected
/// diagnostics when the model is structurally broken.
ModelSpec model_from_json(const nlohmann::json& j);

ModelSpec load_model_file(const std::string& path);
void save_model_file(const ModelSpec& m, const std::string& path);

/// Resolves a CLI model argument: a builtin name or a path to a JSON file.
ModelSpec resolve_model(const std::string& name_or_path);

}  // namespace doldef

#endif
