#include "navprobe/lexicons.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace navprobe {

namespace {

constexpr std::array<const char*, 13> kCanonicalSpatialWords = {
    "right", "left", "straight", "toward", "around",  "near",  "front",
    "above", "through", "down",  "up",     "between", "past",
};

std::string strip_comment_and_trim(const std::string& line) {
  std::string out = line;
  if (auto pos = out.find('#'); pos != std::string::npos) {
    out.erase(pos);
  }
  auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!out.empty() && is_space(out.back())) out.pop_back();
  std::size_t start = 0;
  while (start < out.size() && is_space(out[start])) ++start;
  return out.substr(start);
}

std::ifstream open_or_throw(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) {
    throw std::runtime_error("cannot open " + file.string());
  }
  return in;
}

std::set<std::string> to_lower_set(const std::vector<std::string>& words) {
  std::set<std::string> out;
  for (const auto& w : words) {
    if (!w.empty()) out.insert(ascii_lower(w));
  }
  return out;
}

}  // namespace

std::string ascii_lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

std::string_view to_string(PosTag tag) {
  switch (tag) {
    case PosTag::Noun: return "noun";
    case PosTag::Verb: return "verb";
    case PosTag::Adjective: return "adjective";
    case PosTag::Adverb: return "adverb";
    case PosTag::Preposition: return "preposition";
    case PosTag::Determiner: return "determiner";
    case PosTag::Pronoun: return "pronoun";
    case PosTag::Conjunction: return "conjunction";
    case PosTag::Numeral: return "numeral";
    case PosTag::Other: return "other";
  }
  return "other";
}

PosTag pos_tag_from_string(std::string_view name) {
  const std::string lower = ascii_lower(name);
  for (PosTag tag : {PosTag::Noun, PosTag::Verb, PosTag::Adjective, PosTag::Adverb,
                     PosTag::Preposition, PosTag::Determiner, PosTag::Pronoun,
                     PosTag::Conjunction, PosTag::Numeral, PosTag::Other}) {
    if (lower == to_string(tag)) return tag;
  }
  throw std::invalid_argument("unknown part-of-speech tag: " + std::string(name));
}

std::string_view to_string(CueSet cue) {
  switch (cue) {
    case CueSet::Nouns: return "nouns";
    case CueSet::Adjectives: return "adjectives";
    case CueSet::Verbs: return "verbs";
    case CueSet::Objects: return "objects";
    case CueSet::Numerical: return "numerical";
    case CueSet::Spatial: return "spatial";
    case CueSet::LeftRight: return "left-right";
  }
  return "nouns";
}

CueSet cue_set_from_string(std::string_view name) {
  std::string lower = ascii_lower(name);
  std::replace(lower.begin(), lower.end(), '_', '-');
  if (lower == "leftright") lower = "left-right";
  for (CueSet cue : kAllCueSets) {
    if (lower == to_string(cue)) return cue;
  }
  throw std::invalid_argument("unknown cue set: " + std::string(name));
}

std::vector<std::string> Lexicons::read_word_list(const std::filesystem::path& file) {
  auto in = open_or_throw(file);
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    std::string word = strip_comment_and_trim(line);
    if (!word.empty()) words.push_back(word);
  }
  return words;
}

namespace {

// Shared TSV walker for tag lexicons and suffix-rule files.
template <typename Fn>
void for_each_tsv_entry(const std::filesystem::path& file, Fn&& fn) {
  auto in = open_or_throw(file);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string entry = strip_comment_and_trim(line);
    if (entry.empty()) continue;
    auto tab = entry.find('\t');
    if (tab == std::string::npos) {
      throw std::runtime_error(file.string() + ":" + std::to_string(line_no) +
                               ": expected word<TAB>tag");
    }
    std::string word = strip_comment_and_trim(entry.substr(0, tab));
    std::string tag = strip_comment_and_trim(entry.substr(tab + 1));
    if (word.empty() || tag.empty()) {
      throw std::runtime_error(file.string() + ":" + std::to_string(line_no) +
                               ": empty word or tag");
    }
    fn(word, pos_tag_from_string(tag));
  }
}

}  // namespace

std::map<std::string, PosTag> Lexicons::read_tag_lexicon(const std::filesystem::path& file) {
  std::map<std::string, PosTag> entries;
  for_each_tsv_entry(file, [&](const std::string& word, PosTag tag) {
    entries[ascii_lower(word)] = tag;
  });
  return entries;
}

std::vector<SuffixRule> Lexicons::read_suffix_rules(const std::filesystem::path& file) {
  std::vector<SuffixRule> rules;
  for_each_tsv_entry(file, [&](const std::string& word, PosTag tag) {
    std::string suffix = ascii_lower(word);
    if (!suffix.empty() && suffix.front() == '-') suffix.erase(0, 1);
    if (suffix.empty()) {
      throw std::runtime_error(file.string() + ": empty suffix");
    }
    rules.push_back({suffix, tag});
  });
  return rules;
}

// Setters validate on a staged copy, so a rejected update leaves the
// object unchanged.
void Lexicons::set_spatial_words(const std::vector<std::string>& words) {
  Lexicons staged(*this);
  staged.spatial_words_ = to_lower_set(words);
  staged.validate();
  *this = std::move(staged);
}

void Lexicons::set_object_words(const std::vector<std::string>& words) {
  Lexicons staged(*this);
  staged.object_words_ = to_lower_set(words);
  staged.validate();
  *this = std::move(staged);
}

void Lexicons::set_number_words(const std::vector<std::string>& words) {
  Lexicons staged(*this);
  staged.number_words_ = to_lower_set(words);
  staged.validate();
  *this = std::move(staged);
}

void Lexicons::set_tag_lexicon(const std::map<std::string, PosTag>& entries) {
  Lexicons staged(*this);
  staged.tag_lexicon_.clear();
  for (const auto& [word, tag] : entries) {
    staged.tag_lexicon_[ascii_lower(word)] = tag;
  }
  staged.validate();
  *this = std::move(staged);
}

void Lexicons::set_suffix_rules(const std::vector<SuffixRule>& rules) {
  Lexicons staged(*this);
  staged.suffix_rules_.clear();
  for (const auto& rule : rules) {
    staged.suffix_rules_.push_back({ascii_lower(rule.suffix), rule.tag});
  }
  staged.validate();
  *this = std::move(staged);
}

void Lexicons::load_spatial_words(const std::filesystem::path& file) {
  set_spatial_words(read_word_list(file));
}

void Lexicons::load_object_words(const std::filesystem::path& file) {
  set_object_words(read_word_list(file));
}

void Lexicons::load_number_words(const std::filesystem::path& file) {
  set_number_words(read_word_list(file));
}

void Lexicons::load_tag_lexicon(const std::filesystem::path& file) {
  set_tag_lexicon(read_tag_lexicon(file));
}

void Lexicons::load_suffix_rules(const std::filesystem::path& file) {
  set_suffix_rules(read_suffix_rules(file));
}

bool Lexicons::is_spatial(std::string_view word) const {
  return spatial_words_.count(ascii_lower(word)) != 0;
}

bool Lexicons::is_left_right(std::string_view word) const {
  return left_right_words_.count(ascii_lower(word)) != 0;
}

bool Lexicons::is_object(std::string_view word) const {
  return object_words_.count(ascii_lower(word)) != 0;
}

bool Lexicons::is_number_word(std::string_view word) const {
  return number_words_.count(ascii_lower(word)) != 0;
}

std::optional<PosTag> Lexicons::lookup_tag(std::string_view word) const {
  auto it = tag_lexicon_.find(ascii_lower(word));
  if (it == tag_lexicon_.end()) return std::nullopt;
  return it->second;
}

void Lexicons::validate() const {
  if (left_right_words_ != std::set<std::string>{"left", "right"}) {
    throw std::invalid_argument("left/right word list must be exactly {left, right}");
  }
  for (const char* word : kCanonicalSpatialWords) {
    if (spatial_words_.count(word) == 0) {
      throw std::invalid_argument(std::string("spatial word list is missing \"") + word + "\"");
    }
  }
  for (const auto& word : left_right_words_) {
    if (spatial_words_.count(word) == 0) {
      throw std::invalid_argument("left/right words must be a subset of the spatial list");
    }
  }
  for (const auto& rule : suffix_rules_) {
    if (rule.suffix.empty()) {
      throw std::invalid_argument("suffix rules must have non-empty suffixes");
    }
  }
}

std::string Lexicons::fingerprint() const {
  std::uint64_t hash = 1469598103934665603ULL;  // FNV-1a 64 offset basis
  auto mix = [&hash](std::string_view text) {
    for (unsigned char c : text) {
      hash ^= c;
      hash *= 1099511628211ULL;
    }
    hash ^= 0x1f;
    hash *= 1099511628211ULL;
  };
  auto mix_set = [&](const char* label, const std::set<std::string>& words) {
    mix(label);
    for (const auto& w : words) mix(w);
  };
  mix_set("spatial", spatial_words_);
  mix_set("left_right", left_right_words_);
  mix_set("objects", object_words_);
  mix_set("numbers", number_words_);
  mix("tags");
  for (const auto& [word, tag] : tag_lexicon_) {
    mix(word);
    mix(to_string(tag));
  }
  mix("suffixes");
  for (const auto& rule : suffix_rules_) {
    mix(rule.suffix);
    mix(to_string(rule.tag));
  }
  std::ostringstream out;
  out << std::hex << hash;
  return out.str();
}

}  // namespace navprobe
