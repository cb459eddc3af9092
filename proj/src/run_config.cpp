#include "navprobe/run_config.hpp"

#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace navprobe {

RunConfig RunConfig::from_json_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open config " + file.string());
  nlohmann::json j = nlohmann::json::parse(in);

  RunConfig config;
  config.seed = j.value("seed", config.seed);
  config.mask_token = j.value("mask_token", config.mask_token);
  config.turn_threshold_deg = j.value("turn_threshold_deg", config.turn_threshold_deg);
  config.around_threshold_deg = j.value("around_threshold_deg", config.around_threshold_deg);
  config.stair_z_threshold_m = j.value("stair_z_threshold_m", config.stair_z_threshold_m);
  config.mask_rate = j.value("mask_rate", config.mask_rate);

  const auto base = file.parent_path();
  auto path_value = [&](const char* key) -> std::optional<std::filesystem::path> {
    if (!j.contains(key)) return std::nullopt;
    std::filesystem::path p = j.at(key).get<std::string>();
    if (p.is_relative()) p = base / p;  // config-relative paths
    return p;
  };
  if (j.contains("lexicons")) {
    const auto& lex = j.at("lexicons");
    auto nested = [&](const char* key) -> std::optional<std::filesystem::path> {
      if (!lex.contains(key)) return std::nullopt;
      std::filesystem::path p = lex.at(key).get<std::string>();
      if (p.is_relative()) p = base / p;
      return p;
    };
    config.tag_lexicon_file = nested("tags");
    config.suffix_rules_file = nested("suffixes");
    config.object_words_file = nested("objects");
    config.spatial_words_file = nested("spatial");
    config.number_words_file = nested("numbers");
  }
  config.phrase_sets_file = path_value("phrase_sets");

  config.validate();
  return config;
}

void RunConfig::validate() const {
  if (turn_threshold_deg <= 0.0 || around_threshold_deg <= 0.0 ||
      stair_z_threshold_m <= 0.0) {
    throw std::invalid_argument("thresholds must be positive");
  }
  if (turn_threshold_deg >= around_threshold_deg) {
    throw std::invalid_argument("turn threshold must be below the around threshold");
  }
  if (!(mask_rate > 0.0 && mask_rate <= 1.0)) {
    throw std::invalid_argument("mask rate must be in (0, 1]");
  }
  if (mask_token.empty()) {
    throw std::invalid_argument("mask token must be non-empty");
  }
}

Lexicons RunConfig::make_lexicons() const {
  Lexicons lex = Lexicons::defaults();
  if (spatial_words_file) lex.load_spatial_words(*spatial_words_file);
  if (object_words_file) lex.load_object_words(*object_words_file);
  if (number_words_file) lex.load_number_words(*number_words_file);
  if (tag_lexicon_file) lex.load_tag_lexicon(*tag_lexicon_file);
  if (suffix_rules_file) lex.load_suffix_rules(*suffix_rules_file);
  return lex;
}

PhraseSets RunConfig::make_phrases() const {
  if (phrase_sets_file) return PhraseSets::from_json_file(*phrase_sets_file);
  return PhraseSets::defaults();
}

}  // namespace navprobe
