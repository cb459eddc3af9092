#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "navprobe/dataset_io.hpp"
#include "navprobe/text_analysis.hpp"

namespace navprobe {

enum class VariantKind { Original, Shuffled };
std::string_view to_string(VariantKind kind);

// A path variant for ranking-style training: the aligned original
// (label 1) or a shuffled hard negative (label 0).
struct RankedPair {
  std::string path_id;
  std::string scan;
  std::vector<std::string> path_variant;
  int label = 1;
  VariantKind variant_kind = VariantKind::Original;
};

// One Original pair plus up to n_negatives distinct non-identity
// permutations of the node sequence, uniformly sampled. When the path
// admits fewer distinct non-identity permutations than requested, all of
// them are emitted. Throws "unshufflable" on single-node paths.
std::vector<RankedPair> shuffle_negatives(const Episode& ep, std::uint64_t seed,
                                          std::size_t n_negatives);

// Number of distinct permutations of the node multiset, saturating at cap.
std::uint64_t distinct_permutation_count(const std::vector<std::string>& nodes,
                                         std::uint64_t cap = 1'000'000);

struct MlmRecord {
  std::vector<std::string> masked_tokens;
  std::vector<std::size_t> target_positions;
  std::vector<std::string> target_tokens;
  bool skippable = false;  // spatial mode with zero targets
};

// Substitutes the targets back; equals the original token list.
std::vector<std::string> reconstruct(const MlmRecord& record);

struct MlmOptions {
  double rate = 0.15;
  std::string mask_token = kDefaultMaskToken;
  // BERT-style replacement mix for the selected positions:
  // 80% mask token, 10% random in-instruction token, 10% kept.
  bool bert_style = false;
};

// Selects each token independently with probability rate, resampling the
// whole selection while it comes out empty. Throws on empty instructions
// and rates outside (0, 1].
MlmRecord mlm_mask_standard(const Instruction& instr, std::uint64_t seed,
                            const MlmOptions& options = {});

// Masks exactly the tokens carrying the Spatial cue. Deterministic; a
// record with zero targets is flagged skippable.
MlmRecord mlm_mask_spatial(const Instruction& instr, const Lexicons& lex,
                           const std::string& mask_token = kDefaultMaskToken);

}  // namespace navprobe
