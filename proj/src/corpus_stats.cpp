#include "navprobe/corpus_stats.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace navprobe {

namespace {

struct Accumulator {
  std::size_t n_instructions = 0;
  std::size_t measurable = 0;  // instructions with at least one token
  std::size_t total_tokens = 0;
  std::set<std::string> vocab;
  std::map<CueSet, double> fraction_sums;

  void add(const Instruction& instr) {
    ++n_instructions;
    if (instr.tokens.empty()) return;
    ++measurable;
    total_tokens += instr.tokens.size();
    std::map<CueSet, std::size_t> counts;
    for (const auto& token : instr.tokens) {
      vocab.insert(token.text);
      for (CueSet cue : kAllCueSets) {
        if (token.has_cue(cue)) ++counts[cue];
      }
    }
    for (CueSet cue : kAllCueSets) {
      fraction_sums[cue] +=
          static_cast<double>(counts[cue]) / static_cast<double>(instr.tokens.size());
    }
  }

  StatsReport finish(std::size_t n_paths) const {
    if (measurable == 0) throw std::invalid_argument("empty corpus");
    StatsReport report;
    report.n_instructions = n_instructions;
    report.n_paths = n_paths;
    report.vocab_size = vocab.size();
    report.avg_instr_length =
        static_cast<double>(total_tokens) / static_cast<double>(measurable);
    for (CueSet cue : kAllCueSets) {
      const auto it = fraction_sums.find(cue);
      report.density[cue] =
          (it == fraction_sums.end() ? 0.0 : it->second) / static_cast<double>(measurable);
    }
    return report;
  }
};

}  // namespace

double density(const std::vector<Instruction>& corpus, CueSet cue) {
  if (corpus.empty()) throw std::invalid_argument("empty corpus");
  double sum = 0.0;
  std::size_t measurable = 0;
  for (const auto& instr : corpus) {
    if (instr.tokens.empty()) continue;
    ++measurable;
    std::size_t in_cue = 0;
    for (const auto& token : instr.tokens) {
      if (token.has_cue(cue)) ++in_cue;
    }
    sum += static_cast<double>(in_cue) / static_cast<double>(instr.tokens.size());
  }
  if (measurable == 0) throw std::invalid_argument("empty corpus");
  return sum / static_cast<double>(measurable);
}

StatsReport report(const std::vector<Episode>& episodes, const Lexicons& lex) {
  if (episodes.empty()) throw std::invalid_argument("empty corpus");
  Accumulator acc;
  std::set<std::string> paths;
  for (const auto& ep : episodes) {
    paths.insert(ep.path_id);
    for (const auto& raw : ep.instructions) {
      acc.add(analyze(raw, lex));
    }
  }
  return acc.finish(paths.size());
}

StatsReport report_instructions(const std::vector<Instruction>& corpus, std::size_t n_paths) {
  Accumulator acc;
  for (const auto& instr : corpus) acc.add(instr);
  return acc.finish(n_paths);
}

std::string_view density_key(CueSet cue) {
  switch (cue) {
    case CueSet::Nouns: return "noun";
    case CueSet::Adjectives: return "adjective";
    case CueSet::Verbs: return "verb";
    case CueSet::Objects: return "objects";
    case CueSet::Numerical: return "numerical";
    case CueSet::Spatial: return "spatial";
    case CueSet::LeftRight: return "left_right";
  }
  return "noun";
}

std::string stats_to_json(const StatsReport& report) {
  nlohmann::json density = nlohmann::json::object();
  for (CueSet cue : kAllCueSets) {
    density[std::string(density_key(cue))] = report.density.at(cue);
  }
  nlohmann::json j{
      {"instructions", report.n_instructions},
      {"paths", report.n_paths},
      {"vocab_size", report.vocab_size},
      {"avg_instr_length", report.avg_instr_length},
      {"density", density},
  };
  return j.dump(2);
}

std::string stats_to_tsv(const StatsReport& report) {
  std::ostringstream out;
  out << "instructions\t" << report.n_instructions << '\n';
  out << "paths\t" << report.n_paths << '\n';
  out << "vocab_size\t" << report.vocab_size << '\n';
  out << "avg_instr_length\t" << report.avg_instr_length << '\n';
  for (CueSet cue : kAllCueSets) {
    out << "density_" << density_key(cue) << '\t' << report.density.at(cue) << '\n';
  }
  return out.str();
}

}  // namespace navprobe
