#include "navprobe/augmentation.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "navprobe/rng.hpp"

namespace navprobe {

std::string_view to_string(VariantKind kind) {
  return kind == VariantKind::Original ? "original" : "shuffled";
}

std::uint64_t distinct_permutation_count(const std::vector<std::string>& nodes,
                                         std::uint64_t cap) {
  // n! / prod(multiplicities!) computed as a running product of
  // binomials, saturating at cap.
  std::map<std::string, std::uint64_t> counts;
  for (const auto& node : nodes) ++counts[node];
  std::uint64_t total = 1;
  std::uint64_t placed = 0;
  for (const auto& [_, c] : counts) {
    for (std::uint64_t k = 1; k <= c; ++k) {
      ++placed;
      if (total > cap) return cap;
      total = total * placed / k;  // exact: C(placed, k) is integral
    }
  }
  return std::min(total, cap);
}

std::vector<RankedPair> shuffle_negatives(const Episode& ep, std::uint64_t seed,
                                          std::size_t n_negatives) {
  if (ep.path.size() < 2) {
    throw std::invalid_argument("unshufflable: path \"" + ep.path_id +
                                "\" has fewer than 2 nodes");
  }
  if (n_negatives == 0) {
    throw std::invalid_argument("n_negatives must be at least 1");
  }

  std::vector<RankedPair> pairs;
  pairs.push_back({ep.path_id, ep.scan, ep.path, 1, VariantKind::Original});

  const std::uint64_t distinct = distinct_permutation_count(ep.path);
  const std::uint64_t available = distinct - 1;  // non-identity variants

  if (available <= n_negatives) {
    // Few enough to enumerate: emit every distinct non-identity
    // permutation in lexicographic order.
    std::vector<std::string> perm = ep.path;
    std::sort(perm.begin(), perm.end());
    do {
      if (perm != ep.path) {
        pairs.push_back({ep.path_id, ep.scan, perm, 0, VariantKind::Shuffled});
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return pairs;
  }

  Rng rng(seed);
  std::set<std::vector<std::string>> seen{ep.path};
  std::size_t guard = 0;
  const std::size_t guard_limit = 1000 * n_negatives + 100000;
  while (pairs.size() < n_negatives + 1) {
    if (++guard > guard_limit) {
      throw std::logic_error("shuffle_negatives failed to find distinct permutations");
    }
    std::vector<std::string> variant = ep.path;
    rng.shuffle(variant);
    if (!seen.insert(variant).second) continue;
    pairs.push_back({ep.path_id, ep.scan, std::move(variant), 0, VariantKind::Shuffled});
  }
  return pairs;
}

std::vector<std::string> reconstruct(const MlmRecord& record) {
  if (record.target_positions.size() != record.target_tokens.size()) {
    throw std::invalid_argument("mismatched target positions and tokens");
  }
  std::vector<std::string> tokens = record.masked_tokens;
  for (std::size_t i = 0; i < record.target_positions.size(); ++i) {
    const std::size_t pos = record.target_positions[i];
    if (pos >= tokens.size()) {
      throw std::invalid_argument("target position out of range");
    }
    tokens[pos] = record.target_tokens[i];
  }
  return tokens;
}

MlmRecord mlm_mask_standard(const Instruction& instr, std::uint64_t seed,
                            const MlmOptions& options) {
  if (instr.tokens.empty()) {
    throw std::invalid_argument("cannot mask an empty instruction");
  }
  if (!(options.rate > 0.0 && options.rate <= 1.0)) {
    throw std::invalid_argument("mask rate must be in (0, 1]");
  }

  Rng rng(seed);
  const std::size_t n = instr.tokens.size();
  std::vector<std::size_t> selected;
  for (std::size_t attempt = 0; attempt < 1000000 && selected.empty(); ++attempt) {
    for (std::size_t i = 0; i < n; ++i) {
      if (rng.next_unit() < options.rate) selected.push_back(i);
    }
  }
  if (selected.empty()) {
    selected.push_back(static_cast<std::size_t>(rng.next_below(n)));
  }

  std::vector<std::string> originals;
  originals.reserve(n);
  for (const auto& token : instr.tokens) originals.push_back(token.text);

  MlmRecord record;
  record.masked_tokens = originals;
  for (std::size_t pos : selected) {
    record.target_positions.push_back(pos);
    record.target_tokens.push_back(originals[pos]);
    if (options.bert_style) {
      const double r = rng.next_unit();
      if (r < 0.8) {
        record.masked_tokens[pos] = options.mask_token;
      } else if (r < 0.9) {
        record.masked_tokens[pos] = rng.pick(originals);
      }
      // else: token kept as-is
    } else {
      record.masked_tokens[pos] = options.mask_token;
    }
  }
  return record;
}

MlmRecord mlm_mask_spatial(const Instruction& instr, const Lexicons& lex,
                           const std::string& mask_token) {
  MlmRecord record;
  record.masked_tokens.reserve(instr.tokens.size());
  for (const auto& token : instr.tokens) {
    // The Spatial cue is defined purely lexically, so the word list is the
    // cue set even for instructions that skipped classification.
    if (lex.is_spatial(token.text)) {
      record.target_positions.push_back(token.index);
      record.target_tokens.push_back(token.text);
      record.masked_tokens.push_back(mask_token);
    } else {
      record.masked_tokens.push_back(token.text);
    }
  }
  record.skippable = record.target_positions.empty();
  return record;
}

}  // namespace navprobe
