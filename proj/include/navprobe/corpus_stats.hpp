#pragma once

#include <map>
#include <string>
#include <vector>

#include "navprobe/dataset_io.hpp"
#include "navprobe/text_analysis.hpp"

namespace navprobe {

// Corpus-level vocab/length/density aggregates.
struct StatsReport {
  std::size_t n_instructions = 0;
  std::size_t n_paths = 0;
  std::size_t vocab_size = 0;
  double avg_instr_length = 0.0;
  std::map<CueSet, double> density;
};

// Mean over instructions of the in-cue token fraction. Densities are
// averaged per instruction, never pooled corpus-wide. Instructions with
// zero tokens are skipped; an empty (or all-empty) corpus throws.
double density(const std::vector<Instruction>& corpus, CueSet cue);

StatsReport report(const std::vector<Episode>& episodes, const Lexicons& lex);
StatsReport report_instructions(const std::vector<Instruction>& corpus, std::size_t n_paths);

// Key used for a cue's density row in reports ("noun", "left_right", ...).
std::string_view density_key(CueSet cue);

std::string stats_to_json(const StatsReport& report);
std::string stats_to_tsv(const StatsReport& report);

}  // namespace navprobe
