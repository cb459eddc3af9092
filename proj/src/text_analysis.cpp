#include "navprobe/text_analysis.hpp"

#include <cctype>
#include <stdexcept>

namespace navprobe {

namespace {

bool is_word_char(unsigned char c) {
  return std::isalnum(c) != 0 || c >= 0x80;
}

bool is_digit(unsigned char c) { return std::isdigit(c) != 0; }

}  // namespace

std::vector<CueSet> Token::cue_list() const {
  std::vector<CueSet> out;
  for (CueSet cue : kAllCueSets) {
    if (has_cue(cue)) out.push_back(cue);
  }
  return out;
}

std::string Instruction::text() const {
  std::string out;
  for (const auto& token : tokens) {
    if (!out.empty()) out += ' ';
    out += token.text;
  }
  return out;
}

std::vector<std::string> tokenize(std::string_view raw) {
  const std::string text = ascii_lower(raw);
  std::vector<std::string> tokens;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) {
      tokens.push_back(current);
      current.clear();
    }
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (is_word_char(c)) {
      current += static_cast<char>(c);
      continue;
    }
    const bool has_prev = !current.empty();
    const unsigned char prev = has_prev ? static_cast<unsigned char>(current.back()) : 0;
    const unsigned char next =
        i + 1 < text.size() ? static_cast<unsigned char>(text[i + 1]) : 0;
    if (c == '-' && has_prev && is_word_char(prev) && is_word_char(next)) {
      current += '-';  // word-internal hyphen
      continue;
    }
    if (c == '.' && has_prev && is_digit(prev) && is_digit(next)) {
      current += '.';  // decimal point
      continue;
    }
    flush();
  }
  flush();
  return tokens;
}

bool parses_as_number(std::string_view text) {
  if (text.empty()) return false;
  bool seen_digit = false;
  bool seen_dot = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (is_digit(c)) {
      seen_digit = true;
    } else if (c == '.') {
      if (seen_dot) return false;
      seen_dot = true;
    } else if (c == ',') {
      // digit grouping, e.g. "1,000"
      if (i == 0 || !is_digit(static_cast<unsigned char>(text[i - 1]))) return false;
    } else {
      return false;
    }
  }
  return seen_digit;
}

std::vector<PosTag> pos_tag(const std::vector<std::string>& tokens, const Lexicons& lex) {
  std::vector<PosTag> tags;
  tags.reserve(tokens.size());
  for (const auto& token : tokens) {
    const std::string word = ascii_lower(token);
    if (auto tag = lex.lookup_tag(word)) {
      tags.push_back(*tag);
      continue;
    }
    PosTag tag = PosTag::Noun;
    bool matched = false;
    for (const auto& rule : lex.suffix_rules()) {
      if (word.size() >= rule.suffix.size() + 2 &&
          word.compare(word.size() - rule.suffix.size(), rule.suffix.size(), rule.suffix) == 0) {
        tag = rule.tag;
        matched = true;
        break;
      }
    }
    if (!matched && parses_as_number(word)) {
      tag = PosTag::Numeral;
    }
    tags.push_back(tag);
  }
  return tags;
}

std::vector<Token> classify_cues(const std::vector<std::string>& tokens,
                                 const std::vector<PosTag>& tags, const Lexicons& lex) {
  if (tokens.size() != tags.size()) {
    throw std::invalid_argument("classify_cues: tokens and tags lengths differ");
  }
  std::vector<Token> out;
  out.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    Token token;
    token.text = ascii_lower(tokens[i]);
    token.index = i;
    token.pos = tags[i];
    std::uint8_t cues = 0;
    if (token.pos == PosTag::Noun) cues |= cue_bit(CueSet::Nouns);
    if (token.pos == PosTag::Adjective) cues |= cue_bit(CueSet::Adjectives);
    if (token.pos == PosTag::Verb) cues |= cue_bit(CueSet::Verbs);
    if (token.pos == PosTag::Numeral || lex.is_number_word(token.text) ||
        parses_as_number(token.text)) {
      cues |= cue_bit(CueSet::Numerical);
    }
    if (lex.is_spatial(token.text)) cues |= cue_bit(CueSet::Spatial);
    if (lex.is_left_right(token.text)) cues |= cue_bit(CueSet::LeftRight);
    if (token.pos == PosTag::Noun && lex.is_object(token.text)) {
      cues |= cue_bit(CueSet::Objects);
    }
    token.cues = cues;
    out.push_back(std::move(token));
  }
  return out;
}

Instruction analyze(std::string_view raw, const Lexicons& lex) {
  Instruction instr;
  instr.raw = std::string(raw);
  const auto texts = tokenize(raw);
  instr.tokens = classify_cues(texts, pos_tag(texts, lex), lex);
  return instr;
}

namespace {

Instruction rebuild_raw(Instruction instr) {
  instr.raw = instr.text();
  return instr;
}

}  // namespace

Instruction mask(const Instruction& instr, CueSet cue, const std::string& mask_token) {
  Instruction out = instr;
  for (auto& token : out.tokens) {
    if (token.has_cue(cue)) {
      token.text = mask_token;
      token.pos = PosTag::Other;
      token.cues = 0;
    }
  }
  return rebuild_raw(std::move(out));
}

Instruction swap_left_right(const Instruction& instr) {
  Instruction out = instr;
  for (auto& token : out.tokens) {
    if (token.text == "left") {
      token.text = "right";
    } else if (token.text == "right") {
      token.text = "left";
    }
  }
  return rebuild_raw(std::move(out));
}

Instruction mask_all_language(const Instruction& instr, const std::string& mask_token) {
  Instruction out = instr;
  for (auto& token : out.tokens) {
    token.text = mask_token;
    token.pos = PosTag::Other;
    token.cues = 0;
  }
  return rebuild_raw(std::move(out));
}

}  // namespace navprobe
