#include <doctest.h>

#include <algorithm>

#include "navprobe/corpus_stats.hpp"

using namespace navprobe;

namespace {

const Lexicons& lex() {
  static const Lexicons instance = Lexicons::defaults();
  return instance;
}

std::vector<Instruction> corpus(const std::vector<std::string>& raws) {
  std::vector<Instruction> out;
  for (const auto& raw : raws) out.push_back(analyze(raw, lex()));
  return out;
}

Episode make_episode(const std::string& id, const std::vector<std::string>& instructions) {
  Episode ep;
  ep.path_id = id;
  ep.scan = "scan0";
  ep.path = {"n0", "n1"};
  ep.instructions = instructions;
  return ep;
}

}  // namespace

TEST_CASE("density on hand-computed fixtures") {
  CHECK(density(corpus({"left"}), CueSet::LeftRight) == doctest::Approx(1.0));
  CHECK(density(corpus({"walk left", "walk walk"}), CueSet::LeftRight) ==
        doctest::Approx(0.25));
}

TEST_CASE("density averages per instruction, not pooled") {
  // Pooled over tokens this would be 2/5 = 0.4; the mean of per-instruction
  // fractions is (1.0 + 0.25) / 2.
  const auto c = corpus({"left", "walk walk walk left"});
  CHECK(density(c, CueSet::LeftRight) == doctest::Approx(0.625));
}

TEST_CASE("density skips zero-token instructions") {
  const auto c = corpus({"left", "..."});
  CHECK(density(c, CueSet::LeftRight) == doctest::Approx(1.0));
}

TEST_CASE("density rejects empty corpora") {
  CHECK_THROWS_AS(density({}, CueSet::Nouns), std::invalid_argument);
  CHECK_THROWS_AS(density(corpus({"...", "!"}), CueSet::Nouns), std::invalid_argument);
}

TEST_CASE("report counts instructions, paths, vocab") {
  const std::vector<Episode> episodes = {
      make_episode("p1", {"walk to the sofa", "turn left", "go past the table"}),
  };
  const StatsReport r = report(episodes, lex());
  CHECK(r.n_instructions == 3);
  CHECK(r.n_paths == 1);
  CHECK(r.vocab_size == 9);  // walk to the sofa turn left go past table
  CHECK(r.avg_instr_length == doctest::Approx((4.0 + 2.0 + 4.0) / 3.0));
  CHECK(r.density.at(CueSet::LeftRight) <= r.density.at(CueSet::Spatial));
  CHECK(r.density.at(CueSet::Objects) <= r.density.at(CueSet::Nouns));
}

TEST_CASE("report is permutation invariant") {
  std::vector<Episode> episodes = {
      make_episode("p1", {"walk to the red sofa"}),
      make_episode("p2", {"turn left at the stairs"}),
      make_episode("p3", {"go straight toward the door"}),
  };
  const StatsReport a = report(episodes, lex());
  std::reverse(episodes.begin(), episodes.end());
  const StatsReport b = report(episodes, lex());
  CHECK(a.vocab_size == b.vocab_size);
  CHECK(a.avg_instr_length == doctest::Approx(b.avg_instr_length));
  for (CueSet cue : kAllCueSets) {
    CHECK(a.density.at(cue) == doctest::Approx(b.density.at(cue)));
  }
}

TEST_CASE("duplicate instructions keep vocab, pull the mean length") {
  std::vector<Episode> episodes = {
      make_episode("p1", {"walk to the sofa"}),            // 4 tokens
      make_episode("p2", {"turn left at the red table now please ok"}),  // 9 tokens
  };
  const StatsReport before = report(episodes, lex());
  episodes.push_back(make_episode("p3", {"walk to the sofa"}));
  const StatsReport after = report(episodes, lex());
  CHECK(after.vocab_size == before.vocab_size);
  CHECK(after.avg_instr_length < before.avg_instr_length);
  CHECK(after.avg_instr_length > 4.0);
}

TEST_CASE("report counts unique path ids") {
  const std::vector<Episode> episodes = {
      make_episode("p1", {"walk"}),
      make_episode("p1", {"turn left"}),
      make_episode("p2", {"stop"}),
  };
  CHECK(report(episodes, lex()).n_paths == 2);
}

TEST_CASE("stats serialize to json and tsv") {
  const std::vector<Episode> episodes = {make_episode("p1", {"turn left"})};
  const StatsReport r = report(episodes, lex());
  const std::string json_text = stats_to_json(r);
  CHECK(json_text.find("\"vocab_size\": 2") != std::string::npos);
  CHECK(json_text.find("\"left_right\"") != std::string::npos);
  const std::string tsv = stats_to_tsv(r);
  CHECK(tsv.find("density_left_right\t0.5") != std::string::npos);
}
