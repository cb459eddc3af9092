#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace navprobe {

// Coarse part-of-speech classes. Every token receives exactly one tag.
enum class PosTag {
  Noun,
  Verb,
  Adjective,
  Adverb,
  Preposition,
  Determiner,
  Pronoun,
  Conjunction,
  Numeral,
  Other,
};

std::string_view to_string(PosTag tag);
PosTag pos_tag_from_string(std::string_view name);

// Token classes targeted by the masking ablations.
enum class CueSet {
  Nouns = 0,
  Adjectives,
  Verbs,
  Objects,
  Numerical,
  Spatial,
  LeftRight,
};

inline constexpr std::array<CueSet, 7> kAllCueSets = {
    CueSet::Nouns,     CueSet::Adjectives, CueSet::Verbs,    CueSet::Objects,
    CueSet::Numerical, CueSet::Spatial,    CueSet::LeftRight,
};

std::string_view to_string(CueSet cue);  // "nouns", ..., "left-right"
// Accepts the canonical names plus "left_right" / "leftright".
CueSet cue_set_from_string(std::string_view name);

struct SuffixRule {
  std::string suffix;
  PosTag tag;
};

// Word lists and the tag dictionary behind tokenization-level
// classification. All lookups are case-insensitive; entries are stored
// lowercased. Mutators re-check the class invariants:
//   - left/right words are exactly {left, right}
//   - the spatial list contains the 13 canonical direction words
//   - left/right words are a subset of the spatial list
class Lexicons {
 public:
  static Lexicons defaults();

  // Word-list files: UTF-8, one word per line, '#' starts a comment.
  static std::vector<std::string> read_word_list(const std::filesystem::path& file);
  // TSV files: word<TAB>tag per line, '#' comments. Suffix rules keep an
  // optional leading '-' on the suffix; file order is match order.
  static std::map<std::string, PosTag> read_tag_lexicon(const std::filesystem::path& file);
  static std::vector<SuffixRule> read_suffix_rules(const std::filesystem::path& file);

  void set_spatial_words(const std::vector<std::string>& words);
  void set_object_words(const std::vector<std::string>& words);
  void set_number_words(const std::vector<std::string>& words);
  void set_tag_lexicon(const std::map<std::string, PosTag>& entries);
  void set_suffix_rules(const std::vector<SuffixRule>& rules);

  void load_spatial_words(const std::filesystem::path& file);
  void load_object_words(const std::filesystem::path& file);
  void load_number_words(const std::filesystem::path& file);
  void load_tag_lexicon(const std::filesystem::path& file);
  void load_suffix_rules(const std::filesystem::path& file);

  bool is_spatial(std::string_view word) const;
  bool is_left_right(std::string_view word) const;
  bool is_object(std::string_view word) const;
  bool is_number_word(std::string_view word) const;
  std::optional<PosTag> lookup_tag(std::string_view word) const;
  const std::vector<SuffixRule>& suffix_rules() const { return suffix_rules_; }

  const std::set<std::string>& spatial_words() const { return spatial_words_; }
  const std::set<std::string>& left_right_words() const { return left_right_words_; }
  const std::set<std::string>& object_words() const { return object_words_; }
  const std::set<std::string>& number_words() const { return number_words_; }
  std::size_t tag_lexicon_size() const { return tag_lexicon_.size(); }

  // FNV-1a over the serialized contents; recorded in output manifests so
  // downstream corpora can be tied to the lexicons that produced them.
  std::string fingerprint() const;

 private:
  Lexicons() = default;
  void validate() const;

  std::set<std::string> spatial_words_;
  std::set<std::string> left_right_words_;
  std::set<std::string> object_words_;
  std::set<std::string> number_words_;
  std::map<std::string, PosTag> tag_lexicon_;
  std::vector<SuffixRule> suffix_rules_;
};

std::string ascii_lower(std::string_view text);

}  // namespace navprobe
