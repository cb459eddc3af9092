#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "navprobe/instruction_gen.hpp"
#include "navprobe/lexicons.hpp"
#include "navprobe/text_analysis.hpp"

namespace navprobe {

// Run-wide knobs shared by the CLI subcommands. File values come from a
// JSON config (--config or NAVPROBE_CONFIG); flags override file values.
struct RunConfig {
  std::uint64_t seed = 0;
  std::string mask_token = kDefaultMaskToken;
  double turn_threshold_deg = kTurnThresholdDeg;
  double around_threshold_deg = kAroundThresholdDeg;
  double stair_z_threshold_m = kStairZThresholdMeters;
  double mask_rate = 0.15;

  std::optional<std::filesystem::path> tag_lexicon_file;
  std::optional<std::filesystem::path> suffix_rules_file;
  std::optional<std::filesystem::path> object_words_file;
  std::optional<std::filesystem::path> spatial_words_file;
  std::optional<std::filesystem::path> number_words_file;
  std::optional<std::filesystem::path> phrase_sets_file;

  static RunConfig from_json_file(const std::filesystem::path& file);

  // Thresholds and the mask rate must be positive; mask_rate <= 1.
  void validate() const;

  // Defaults overlaid with whichever lexicon files are set.
  Lexicons make_lexicons() const;
  PhraseSets make_phrases() const;
};

}  // namespace navprobe
