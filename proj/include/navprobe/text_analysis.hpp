#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "navprobe/lexicons.hpp"

namespace navprobe {

inline constexpr const char* kDefaultMaskToken = "[MASK]";

inline constexpr std::uint8_t cue_bit(CueSet cue) {
  return static_cast<std::uint8_t>(1u << static_cast<unsigned>(cue));
}

struct Token {
  std::string text;
  std::size_t index = 0;
  PosTag pos = PosTag::Other;
  std::uint8_t cues = 0;  // bitmask over CueSet

  bool has_cue(CueSet cue) const { return (cues & cue_bit(cue)) != 0; }
  std::vector<CueSet> cue_list() const;
};

struct Instruction {
  std::string raw;
  std::vector<Token> tokens;

  std::size_t size() const { return tokens.size(); }
  // Token texts joined by single spaces.
  std::string text() const;
};

// Lowercases, drops punctuation. Hyphens survive between word characters
// and decimal points between digits; everything else separates tokens.
// Total: empty input yields an empty list.
std::vector<std::string> tokenize(std::string_view raw);

// Exact lexicon hit wins; otherwise the first matching suffix rule;
// otherwise numeric literals are Numeral; otherwise Noun.
std::vector<PosTag> pos_tag(const std::vector<std::string>& tokens, const Lexicons& lex);

// Assigns cue-set memberships given texts and tags.
std::vector<Token> classify_cues(const std::vector<std::string>& tokens,
                                 const std::vector<PosTag>& tags, const Lexicons& lex);

// tokenize + pos_tag + classify_cues.
Instruction analyze(std::string_view raw, const Lexicons& lex);

// "12", "3.5", "1,000" and friends.
bool parses_as_number(std::string_view text);

// Replaces every token carrying `cue` with mask_token. Token count is
// preserved; replaced tokens lose their tag and cue memberships.
Instruction mask(const Instruction& instr, CueSet cue,
                 const std::string& mask_token = kDefaultMaskToken);

// Swaps "left" and "right" token texts; everything else is untouched.
Instruction swap_left_right(const Instruction& instr);

// Replaces every token with mask_token (the unimodal language ablation).
Instruction mask_all_language(const Instruction& instr,
                              const std::string& mask_token = kDefaultMaskToken);

}  // namespace navprobe
