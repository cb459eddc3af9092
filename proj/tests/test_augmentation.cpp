#include <doctest.h>

#include <algorithm>
#include <set>

#include "navprobe/augmentation.hpp"
#include "navprobe/rng.hpp"

using namespace navprobe;

namespace {

const Lexicons& lex() {
  static const Lexicons instance = Lexicons::defaults();
  return instance;
}

Episode path_episode(std::size_t n_nodes) {
  Episode ep;
  ep.path_id = "ep";
  ep.scan = "scan";
  for (std::size_t i = 0; i < n_nodes; ++i) ep.path.push_back("n" + std::to_string(i));
  ep.instructions = {"walk"};
  return ep;
}

std::multiset<std::string> as_multiset(const std::vector<std::string>& nodes) {
  return {nodes.begin(), nodes.end()};
}

}  // namespace

TEST_CASE("distinct_permutation_count handles multisets and saturates") {
  CHECK(distinct_permutation_count({"a", "b"}) == 2);
  CHECK(distinct_permutation_count({"a", "a"}) == 1);
  CHECK(distinct_permutation_count({"a", "b", "c"}) == 6);
  CHECK(distinct_permutation_count({"a", "a", "b"}) == 3);
  std::vector<std::string> many;
  for (int i = 0; i < 30; ++i) many.push_back("n" + std::to_string(i));
  CHECK(distinct_permutation_count(many, 1000) == 1000);
}

TEST_CASE("shuffle_negatives: 2-node path yields exactly one negative") {
  const auto pairs = shuffle_negatives(path_episode(2), 5, 3);
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0].variant_kind == VariantKind::Original);
  CHECK(pairs[0].label == 1);
  CHECK(pairs[1].variant_kind == VariantKind::Shuffled);
  CHECK(pairs[1].label == 0);
  CHECK(pairs[1].path_variant == std::vector<std::string>{"n1", "n0"});
}

TEST_CASE("shuffle_negatives: distinct non-identity permutations") {
  const Episode ep = path_episode(6);
  const auto pairs = shuffle_negatives(ep, 11, 4);
  REQUIRE(pairs.size() == 5);  // original + 4 negatives
  std::set<std::vector<std::string>> seen;
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    const auto& variant = pairs[i].path_variant;
    CHECK(pairs[i].label == 0);
    CHECK(variant != ep.path);
    CHECK(as_multiset(variant) == as_multiset(ep.path));
    CHECK(seen.insert(variant).second);
  }
}

TEST_CASE("shuffle_negatives is deterministic under the seed") {
  const Episode ep = path_episode(7);
  const auto a = shuffle_negatives(ep, 99, 5);
  const auto b = shuffle_negatives(ep, 99, 5);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].path_variant == b[i].path_variant);
  }
  const auto c = shuffle_negatives(ep, 100, 5);
  bool any_difference = false;
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (a[i].path_variant != c[i].path_variant) any_difference = true;
  }
  CHECK(any_difference);
}

TEST_CASE("shuffle_negatives enumerates everything when the request exceeds supply") {
  // 3 distinct nodes -> 6 permutations -> 5 non-identity variants.
  const auto pairs = shuffle_negatives(path_episode(3), 1, 100);
  CHECK(pairs.size() == 6);
  std::set<std::vector<std::string>> variants;
  for (std::size_t i = 1; i < pairs.size(); ++i) variants.insert(pairs[i].path_variant);
  CHECK(variants.size() == 5);
}

TEST_CASE("shuffle_negatives rejects unshufflable paths") {
  CHECK_THROWS_WITH_AS(shuffle_negatives(path_episode(1), 1, 1),
                       doctest::Contains("unshufflable"), std::invalid_argument);
  CHECK_THROWS_AS(shuffle_negatives(path_episode(3), 1, 0), std::invalid_argument);
}

TEST_CASE("mlm_mask_standard masks at the configured rate") {
  std::string raw;
  for (int i = 0; i < 100; ++i) raw += "token" + std::to_string(i) + " ";
  const Instruction instr = analyze(raw, lex());
  REQUIRE(instr.size() == 100);

  double total_fraction = 0.0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const MlmRecord record = mlm_mask_standard(instr, seed);
    REQUIRE(!record.target_positions.empty());
    total_fraction += static_cast<double>(record.target_positions.size()) / 100.0;
    CHECK(reconstruct(record) == tokenize(raw));
    for (std::size_t pos : record.target_positions) {
      CHECK(record.masked_tokens[pos] == kDefaultMaskToken);
    }
  }
  const double mean = total_fraction / 1000.0;
  CHECK(std::abs(mean - 0.15) < 0.02);
}

TEST_CASE("mlm_mask_standard always masks at least one token") {
  const Instruction instr = analyze("stop", lex());
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const MlmRecord record = mlm_mask_standard(instr, seed);
    REQUIRE(record.target_positions.size() == 1);
    CHECK(record.target_tokens[0] == "stop");
    CHECK(record.masked_tokens[0] == kDefaultMaskToken);
  }
}

TEST_CASE("mlm_mask_standard validates input") {
  CHECK_THROWS_AS(mlm_mask_standard(Instruction{}, 1), std::invalid_argument);
  const Instruction instr = analyze("walk on", lex());
  MlmOptions bad;
  bad.rate = 0.0;
  CHECK_THROWS_AS(mlm_mask_standard(instr, 1, bad), std::invalid_argument);
  bad.rate = 1.5;
  CHECK_THROWS_AS(mlm_mask_standard(instr, 1, bad), std::invalid_argument);
}

TEST_CASE("mlm_mask_standard bert-style keeps reconstruction intact") {
  std::string raw;
  for (int i = 0; i < 50; ++i) raw += "word" + std::to_string(i) + " ";
  const Instruction instr = analyze(raw, lex());
  MlmOptions options;
  options.bert_style = true;
  options.rate = 0.3;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const MlmRecord record = mlm_mask_standard(instr, seed, options);
    CHECK(reconstruct(record) == tokenize(raw));
  }
}

TEST_CASE("mlm_mask_spatial masks exactly the spatial tokens") {
  const Instruction instr = analyze("walk past the sofa", lex());
  const MlmRecord record = mlm_mask_spatial(instr, lex());
  REQUIRE(record.target_positions.size() == 1);
  CHECK(record.target_positions[0] == 1);
  CHECK(record.target_tokens[0] == "past");
  CHECK(record.masked_tokens ==
        std::vector<std::string>{"walk", "[MASK]", "the", "sofa"});
  CHECK_FALSE(record.skippable);

  const Instruction directions = analyze("turn left and go right", lex());
  const MlmRecord dir_record = mlm_mask_spatial(directions, lex());
  CHECK(dir_record.target_tokens == std::vector<std::string>{"left", "right"});
}

TEST_CASE("mlm_mask_spatial flags spatial-free instructions as skippable") {
  const Instruction instr = analyze("the red sofa", lex());
  const MlmRecord record = mlm_mask_spatial(instr, lex());
  CHECK(record.target_positions.empty());
  CHECK(record.skippable);
  CHECK(reconstruct(record) == tokenize("the red sofa"));
}

TEST_CASE("mlm_mask_spatial equals the spatial cue set") {
  Rng rng(2025);
  const std::vector<std::string> pool = {"walk", "left", "up", "sofa", "past",
                                         "the",  "red",  "go", "near", "table"};
  for (int iter = 0; iter < 200; ++iter) {
    std::string raw;
    const std::size_t n = 1 + rng.next_below(10);
    for (std::size_t i = 0; i < n; ++i) {
      if (!raw.empty()) raw += ' ';
      raw += rng.pick(pool);
    }
    const Instruction instr = analyze(raw, lex());
    const MlmRecord record = mlm_mask_spatial(instr, lex());
    std::set<std::size_t> expected;
    for (const auto& token : instr.tokens) {
      if (token.has_cue(CueSet::Spatial)) expected.insert(token.index);
    }
    CHECK(std::set<std::size_t>(record.target_positions.begin(),
                                record.target_positions.end()) == expected);
  }
}
