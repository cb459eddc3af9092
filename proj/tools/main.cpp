#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "navprobe/augmentation.hpp"
#include "navprobe/corpus_stats.hpp"
#include "navprobe/counterfactual.hpp"
#include "navprobe/dataset_io.hpp"
#include "navprobe/instruction_gen.hpp"
#include "navprobe/nav_graph.hpp"
#include "navprobe/run_config.hpp"
#include "navprobe/rng.hpp"
#include "navprobe/text_analysis.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace navprobe;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

void log_line(const std::string& message) { std::cerr << "[navprobe] " << message << "\n"; }

void write_text(const std::string& text, const std::string& output) {
  if (output.empty() || output == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + output + " for writing");
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

// Shared flags; config file values are the base, flags override.
struct CommonArgs {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> mask_token;
  std::optional<double> turn_threshold;
  std::optional<double> around_threshold;
  std::optional<double> stair_z;
  std::optional<double> rate;
  std::optional<std::string> tag_lexicon;
  std::optional<std::string> suffix_rules;
  std::optional<std::string> object_words;
  std::optional<std::string> spatial_words;
  std::optional<std::string> number_words;

  RunConfig resolve() const {
    RunConfig config;
    std::string path = config_path;
    if (path.empty()) {
      if (const char* env = std::getenv("NAVPROBE_CONFIG")) path = env;
    }
    if (!path.empty()) config = RunConfig::from_json_file(path);
    if (seed) config.seed = *seed;
    if (mask_token) config.mask_token = *mask_token;
    if (turn_threshold) config.turn_threshold_deg = *turn_threshold;
    if (around_threshold) config.around_threshold_deg = *around_threshold;
    if (stair_z) config.stair_z_threshold_m = *stair_z;
    if (rate) config.mask_rate = *rate;
    if (tag_lexicon) config.tag_lexicon_file = *tag_lexicon;
    if (suffix_rules) config.suffix_rules_file = *suffix_rules;
    if (object_words) config.object_words_file = *object_words;
    if (spatial_words) config.spatial_words_file = *spatial_words;
    if (number_words) config.number_words_file = *number_words;
    config.validate();
    return config;
  }
};

void add_common_flags(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--config", args.config_path,
                  "JSON config file (falls back to $NAVPROBE_CONFIG)");
  cmd->add_option("--seed", args.seed, "RNG seed");
  cmd->add_option("--mask-token", args.mask_token, "Mask placeholder token");
  cmd->add_option("--turn-threshold", args.turn_threshold, "Turn threshold in degrees");
  cmd->add_option("--around-threshold", args.around_threshold,
                  "Turn-around threshold in degrees");
  cmd->add_option("--stair-z", args.stair_z, "Stair z threshold in meters");
  cmd->add_option("--rate", args.rate, "Standard MLM mask rate");
  cmd->add_option("--tag-lexicon", args.tag_lexicon, "Tag lexicon TSV override");
  cmd->add_option("--suffix-rules", args.suffix_rules, "Suffix rule TSV override");
  cmd->add_option("--object-words", args.object_words, "Object word list override");
  cmd->add_option("--spatial-words", args.spatial_words, "Spatial word list override");
  cmd->add_option("--number-words", args.number_words, "Number word list override");
}

std::vector<Episode> load_many(const std::vector<std::string>& inputs) {
  std::vector<Episode> episodes;
  for (const auto& input : inputs) {
    auto batch = load_episodes(input);
    log_line("loaded " + std::to_string(batch.size()) + " episodes from " + input);
    episodes.insert(episodes.end(), std::make_move_iterator(batch.begin()),
                    std::make_move_iterator(batch.end()));
  }
  return episodes;
}

std::set<std::vector<std::string>> exclusion_from_files(
    const std::vector<std::string>& files) {
  std::set<std::vector<std::string>> exclusion;
  for (const auto& file : files) {
    for (const auto& ep : load_episodes(file)) exclusion.insert(ep.path);
  }
  return exclusion;
}

void write_episode_file(const std::vector<Episode>& episodes, const std::string& output,
                        bool as_array) {
  if (as_array) {
    write_episodes_json(episodes, output);
  } else {
    write_episodes_jsonl(episodes, output);
  }
  log_line("wrote " + std::to_string(episodes.size()) + " episodes to " + output);
}

int run_stats(const std::vector<std::string>& inputs, const CommonArgs& common,
              const std::string& format, const std::string& output) {
  const RunConfig config = common.resolve();
  const Lexicons lex = config.make_lexicons();
  const auto episodes = load_many(inputs);
  const StatsReport result = report(episodes, lex);
  write_text(format == "tsv" ? stats_to_tsv(result) : stats_to_json(result), output);
  return kExitOk;
}

int run_ablate(const std::string& input, const CommonArgs& common, const std::string& cue_name,
               bool swap, bool no_language, const std::string& output) {
  const int modes = (!cue_name.empty() ? 1 : 0) + (swap ? 1 : 0) + (no_language ? 1 : 0);
  if (modes != 1) {
    throw CLI::ValidationError("ablate", "pass exactly one of --cue, --swap, --no-language");
  }
  const RunConfig config = common.resolve();
  const Lexicons lex = config.make_lexicons();

  std::optional<CueSet> cue;
  if (!cue_name.empty()) cue = cue_set_from_string(cue_name);

  auto episodes = load_episodes(input);
  for (auto& ep : episodes) {
    for (auto& raw : ep.instructions) {
      const Instruction instr = analyze(raw, lex);
      Instruction transformed;
      if (cue) {
        transformed = mask(instr, *cue, config.mask_token);
      } else if (swap) {
        transformed = swap_left_right(instr);
      } else {
        transformed = mask_all_language(instr, config.mask_token);
      }
      raw = transformed.text();
    }
  }
  write_episode_file(episodes, output, file_is_json_array(input));
  return kExitOk;
}

int run_counterfactuals(const std::string& input, const std::string& graphs_dir,
                        const CommonArgs& common, const std::string& output,
                        const std::string& per_episode_path) {
  const RunConfig config = common.resolve();
  const auto episodes = load_episodes(input);
  const auto graphs = load_graphs(graphs_dir);
  log_line("loaded " + std::to_string(graphs.size()) + " graphs from " + graphs_dir);

  std::vector<EpisodeTurnStats> per_episode;
  const auto result =
      analyze_corpus(episodes, graphs, per_episode_path.empty() ? nullptr : &per_episode,
                     config.turn_threshold_deg, config.around_threshold_deg);
  write_text(counterfactual_report_to_json(result), output);
  if (!per_episode_path.empty()) {
    std::string tsv = "path_id\tturns\tcounterfactuals\n";
    for (const auto& row : per_episode) {
      tsv += row.path_id + "\t" + std::to_string(row.n_turns) + "\t" +
             std::to_string(row.n_counterfactuals) + "\n";
    }
    write_text(tsv, per_episode_path);
  }
  return kExitOk;
}

int run_gen_paths(const std::string& graphs_dir, const CommonArgs& common, std::size_t count,
                  std::size_t min_edges, std::size_t max_edges,
                  const std::vector<std::string>& exclude_files, const std::string& output) {
  const RunConfig config = common.resolve();
  const auto graphs = load_graphs(graphs_dir);
  const auto exclusion = exclusion_from_files(exclude_files);

  std::vector<Episode> episodes;
  std::size_t scan_index = 0;
  std::size_t produced = 0;
  const std::size_t n_scans = graphs.size();
  for (const auto& [scan, g] : graphs) {
    const std::size_t quota =
        count / n_scans + (scan_index < count % n_scans ? 1 : 0);
    if (quota > 0) {
      std::vector<Path> paths;
      try {
        paths = sample_paths(g, derive_seed(config.seed, scan_index), quota, min_edges,
                             max_edges, exclusion);
      } catch (const std::runtime_error& e) {
        log_line(std::string("warning: ") + e.what());
      }
      for (std::size_t k = 0; k < paths.size(); ++k) {
        Episode ep;
        ep.scan = scan;
        ep.path_id = "gen_" + scan + "_" + std::to_string(k);
        ep.path = paths[k].nodes;
        ep.distance = path_length_meters(paths[k], g);
        ep.source = EpisodeSource::Generated;
        episodes.push_back(std::move(ep));
        ++produced;
      }
    }
    ++scan_index;
  }
  if (produced < count) {
    log_line("warning: sampled " + std::to_string(produced) + " of " + std::to_string(count) +
             " requested paths");
  }
  write_episode_file(episodes, output, false);
  return kExitOk;
}

int run_gen_instructions(const std::string& graphs_dir, const CommonArgs& common,
                         std::size_t count, std::size_t min_edges, std::size_t max_edges,
                         const std::vector<std::string>& exclude_files,
                         const std::string& phrases_file, const std::string& output) {
  RunConfig config = common.resolve();
  if (!phrases_file.empty()) config.phrase_sets_file = phrases_file;
  const auto graphs = load_graphs(graphs_dir);

  GenerationOptions options;
  options.target_count = count;
  options.seed = config.seed;
  options.min_edges = min_edges;
  options.max_edges = max_edges;
  options.turn_threshold = config.turn_threshold_deg;
  options.around_threshold = config.around_threshold_deg;
  options.z_threshold = config.stair_z_threshold_m;
  options.phrases = config.make_phrases();

  const auto result = generate_dataset(graphs, options, exclusion_from_files(exclude_files));
  if (result.shortfall > 0) {
    log_line("warning: generated " + std::to_string(result.episodes.size()) + " of " +
             std::to_string(count) + " requested episodes (" +
             std::to_string(result.shortfall) + " short)");
  }
  write_episode_file(result.episodes, output, false);
  return kExitOk;
}

int run_shuffle_negatives(const std::string& input, const CommonArgs& common,
                          std::size_t n_negatives, const std::string& output) {
  const RunConfig config = common.resolve();
  const auto episodes = load_episodes(input);
  std::string out;
  std::size_t rows = 0;
  for (std::size_t i = 0; i < episodes.size(); ++i) {
    const auto pairs =
        shuffle_negatives(episodes[i], derive_seed(config.seed, i), n_negatives);
    for (const auto& pair : pairs) {
      json j{{"path_id", pair.path_id},
             {"scan", pair.scan},
             {"label", pair.label},
             {"variant_kind", std::string(to_string(pair.variant_kind))},
             {"path", pair.path_variant}};
      out += j.dump();
      out += '\n';
      ++rows;
    }
  }
  write_text(out, output);
  log_line("wrote " + std::to_string(rows) + " ranked pairs");
  return kExitOk;
}

int run_mlm_corpus(const std::string& input, const CommonArgs& common, const std::string& mode,
                   bool bert_style, const std::string& output, std::string manifest_path) {
  const RunConfig config = common.resolve();
  const Lexicons lex = config.make_lexicons();
  const auto episodes = load_episodes(input);

  MlmOptions options;
  options.rate = config.mask_rate;
  options.mask_token = config.mask_token;
  options.bert_style = bert_style;

  std::string out;
  std::size_t records = 0;
  std::size_t skippable = 0;
  std::size_t stream = 0;
  for (const auto& ep : episodes) {
    for (std::size_t k = 0; k < ep.instructions.size(); ++k) {
      const Instruction instr = analyze(ep.instructions[k], lex);
      if (instr.tokens.empty()) continue;
      MlmRecord record;
      if (mode == "standard") {
        record = mlm_mask_standard(instr, derive_seed(config.seed, stream), options);
      } else {
        record = mlm_mask_spatial(instr, lex, config.mask_token);
      }
      ++stream;
      json j{{"path_id", ep.path_id},
             {"instruction_index", k},
             {"masked_tokens", record.masked_tokens},
             {"target_positions", record.target_positions},
             {"target_tokens", record.target_tokens}};
      if (record.skippable) j["skippable"] = true;
      out += j.dump();
      out += '\n';
      ++records;
      if (record.skippable) ++skippable;
    }
  }
  write_text(out, output);

  if (manifest_path.empty() && !output.empty() && output != "-") {
    manifest_path = output + ".manifest.json";
  }
  if (!manifest_path.empty()) {
    json manifest{{"mode", mode},
                  {"seed", config.seed},
                  {"rate", mode == "standard" ? json(options.rate) : json(1.0)},
                  {"mask_token", options.mask_token},
                  {"bert_style", bert_style},
                  {"lexicon_fingerprint", lex.fingerprint()},
                  {"records", records},
                  {"skippable_records", skippable}};
    write_text(manifest.dump(2), manifest_path);
  }
  log_line("wrote " + std::to_string(records) + " MLM records (" + std::to_string(skippable) +
           " skippable)");
  return kExitOk;
}

int run_eval_paths(const std::string& input, const std::string& reference,
                   const std::string& graphs_dir, const std::string& output) {
  const auto predictions = load_episodes(input);
  const auto references = load_episodes(reference);
  const auto graphs = load_graphs(graphs_dir);

  std::map<std::string, const Episode*> reference_by_id;
  for (const auto& ep : references) reference_by_id[ep.path_id] = &ep;

  json rows = json::array();
  double sum_ne = 0.0, sum_spl = 0.0;
  std::size_t successes = 0;
  for (const auto& pred : predictions) {
    auto ref = reference_by_id.find(pred.path_id);
    if (ref == reference_by_id.end()) {
      throw std::runtime_error("prediction \"" + pred.path_id + "\" has no reference episode");
    }
    auto graph = graphs.find(pred.scan);
    if (graph == graphs.end()) {
      throw std::runtime_error("no graph loaded for scan \"" + pred.scan + "\"");
    }
    const std::string& goal = ref->second->path.back();
    const PathMetrics metrics = evaluate(pred.nav_path(), goal, graph->second);
    rows.push_back({{"path_id", pred.path_id},
                    {"nav_error", metrics.nav_error},
                    {"success", metrics.success},
                    {"spl", metrics.spl}});
    sum_ne += metrics.nav_error;
    sum_spl += metrics.spl;
    if (metrics.success) ++successes;
  }
  if (predictions.empty()) throw std::runtime_error("no predictions to evaluate");

  const double n = static_cast<double>(predictions.size());
  json result{{"aggregate",
               {{"sr", 100.0 * static_cast<double>(successes) / n},
                {"spl", sum_spl / n},
                {"ne", sum_ne / n}}},
              {"episodes", rows}};
  write_text(result.dump(2), output);
  return kExitOk;
}

int run_validate(const std::string& input, const std::string& graphs_dir,
                 const std::string& output) {
  const auto episodes = load_episodes(input);
  const auto graphs = load_graphs(graphs_dir);
  const auto violations = validate_against_graphs(episodes, graphs);
  write_text(violations_to_json(violations).dump(2), output);
  if (!violations.empty()) {
    log_line(std::to_string(violations.size()) + " violations found");
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Language-side analysis toolkit for instruction-guided navigation corpora"};
  app.set_version_flag("--version", "navprobe 0.1.0");
  app.require_subcommand(1);

  CommonArgs common;

  // stats
  auto* stats_cmd = app.add_subcommand("stats", "Corpus vocab/length/density report");
  std::vector<std::string> stats_inputs;
  std::string stats_format = "json";
  std::string stats_output = "-";
  stats_cmd->add_option("--input", stats_inputs, "Episode file(s)")->required();
  stats_cmd->add_option("--format", stats_format, "json or tsv")
      ->check(CLI::IsMember({"json", "tsv"}));
  stats_cmd->add_option("--output", stats_output, "Output file ('-' for stdout)");
  add_common_flags(stats_cmd, common);

  // ablate
  auto* ablate_cmd = app.add_subcommand("ablate", "Mask a cue set, swap left/right, or mask all");
  std::string ablate_input, ablate_cue, ablate_output;
  bool ablate_swap = false, ablate_no_language = false;
  ablate_cmd->add_option("--input", ablate_input, "Episode file")->required();
  ablate_cmd->add_option("--cue", ablate_cue,
                         "nouns|adjectives|verbs|objects|numerical|spatial|left-right");
  ablate_cmd->add_flag("--swap", ablate_swap, "Swap left and right tokens");
  ablate_cmd->add_flag("--no-language", ablate_no_language, "Mask every token");
  ablate_cmd->add_option("--output", ablate_output, "Output episode file")->required();
  add_common_flags(ablate_cmd, common);

  // counterfactuals
  auto* cf_cmd = app.add_subcommand("counterfactuals", "Turn and counterfactual statistics");
  std::string cf_input, cf_graphs, cf_output = "-", cf_per_episode;
  cf_cmd->add_option("--input", cf_input, "Episode file")->required();
  cf_cmd->add_option("--graphs", cf_graphs, "Graph directory")->required();
  cf_cmd->add_option("--output", cf_output, "Report file ('-' for stdout)");
  cf_cmd->add_option("--per-episode", cf_per_episode, "Optional per-episode TSV");
  add_common_flags(cf_cmd, common);

  // gen-paths
  auto* gp_cmd = app.add_subcommand("gen-paths", "Sample shortest paths with 6-9 edges");
  std::string gp_graphs, gp_output;
  std::size_t gp_count = 1000, gp_min = 6, gp_max = 9;
  std::vector<std::string> gp_exclude;
  gp_cmd->add_option("--graphs", gp_graphs, "Graph directory")->required();
  gp_cmd->add_option("--count", gp_count, "Number of paths");
  gp_cmd->add_option("--min-edges", gp_min, "Minimum edge count");
  gp_cmd->add_option("--max-edges", gp_max, "Maximum edge count");
  gp_cmd->add_option("--exclude", gp_exclude, "Episode file(s) whose paths are excluded");
  gp_cmd->add_option("--output", gp_output, "Output JSONL")->required();
  add_common_flags(gp_cmd, common);

  // gen-instructions
  auto* gi_cmd = app.add_subcommand("gen-instructions",
                                    "Generate object-sparse instructions over sampled paths");
  std::string gi_graphs, gi_output, gi_phrases;
  std::size_t gi_count = 1000, gi_min = 6, gi_max = 9;
  std::vector<std::string> gi_exclude;
  gi_cmd->add_option("--graphs", gi_graphs, "Graph directory")->required();
  gi_cmd->add_option("--count", gi_count, "Number of episodes");
  gi_cmd->add_option("--min-edges", gi_min, "Minimum edge count");
  gi_cmd->add_option("--max-edges", gi_max, "Maximum edge count");
  gi_cmd->add_option("--exclude", gi_exclude, "Episode file(s) whose paths are excluded");
  gi_cmd->add_option("--phrases", gi_phrases, "Phrase-set JSON file");
  gi_cmd->add_option("--output", gi_output, "Output JSONL")->required();
  add_common_flags(gi_cmd, common);

  // shuffle-negatives
  auto* sn_cmd = app.add_subcommand("shuffle-negatives", "Emit shuffled hard-negative paths");
  std::string sn_input, sn_output;
  std::size_t sn_negatives = 4;
  sn_cmd->add_option("--input", sn_input, "Episode file")->required();
  sn_cmd->add_option("--negatives", sn_negatives, "Negatives per episode");
  sn_cmd->add_option("--output", sn_output, "Output JSONL")->required();
  add_common_flags(sn_cmd, common);

  // mlm-corpus
  auto* mlm_cmd = app.add_subcommand("mlm-corpus", "Masked-language-modeling corpus");
  std::string mlm_input, mlm_mode = "standard", mlm_output, mlm_manifest;
  bool mlm_bert = false;
  mlm_cmd->add_option("--input", mlm_input, "Episode file")->required();
  mlm_cmd->add_option("--mode", mlm_mode, "standard (random 15%) or spatial (all spatial tokens)")
      ->check(CLI::IsMember({"standard", "spatial"}));
  mlm_cmd->add_flag("--bert-style", mlm_bert, "80/10/10 replacement mix");
  mlm_cmd->add_option("--output", mlm_output, "Output JSONL")->required();
  mlm_cmd->add_option("--manifest", mlm_manifest, "Manifest path (default <output>.manifest.json)");
  add_common_flags(mlm_cmd, common);

  // eval-paths
  auto* ev_cmd = app.add_subcommand("eval-paths", "NE/SR/SPL against reference episodes");
  std::string ev_input, ev_reference, ev_graphs, ev_output = "-";
  ev_cmd->add_option("--input", ev_input, "Predicted paths (episode schema)")->required();
  ev_cmd->add_option("--reference", ev_reference, "Reference episode file")->required();
  ev_cmd->add_option("--graphs", ev_graphs, "Graph directory")->required();
  ev_cmd->add_option("--output", ev_output, "Report file ('-' for stdout)");
  add_common_flags(ev_cmd, common);

  // validate
  auto* val_cmd = app.add_subcommand("validate", "Check episodes against graphs");
  std::string val_input, val_graphs, val_output = "-";
  val_cmd->add_option("--input", val_input, "Episode file")->required();
  val_cmd->add_option("--graphs", val_graphs, "Graph directory")->required();
  val_cmd->add_option("--output", val_output, "Violation report ('-' for stdout)");
  add_common_flags(val_cmd, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (stats_cmd->parsed()) {
      return run_stats(stats_inputs, common, stats_format, stats_output);
    }
    if (ablate_cmd->parsed()) {
      return run_ablate(ablate_input, common, ablate_cue, ablate_swap, ablate_no_language,
                        ablate_output);
    }
    if (cf_cmd->parsed()) {
      return run_counterfactuals(cf_input, cf_graphs, common, cf_output, cf_per_episode);
    }
    if (gp_cmd->parsed()) {
      return run_gen_paths(gp_graphs, common, gp_count, gp_min, gp_max, gp_exclude, gp_output);
    }
    if (gi_cmd->parsed()) {
      return run_gen_instructions(gi_graphs, common, gi_count, gi_min, gi_max, gi_exclude,
                                  gi_phrases, gi_output);
    }
    if (sn_cmd->parsed()) {
      return run_shuffle_negatives(sn_input, common, sn_negatives, sn_output);
    }
    if (mlm_cmd->parsed()) {
      return run_mlm_corpus(mlm_input, common, mlm_mode, mlm_bert, mlm_output, mlm_manifest);
    }
    if (ev_cmd->parsed()) {
      return run_eval_paths(ev_input, ev_reference, ev_graphs, ev_output);
    }
    if (val_cmd->parsed()) {
      return run_validate(val_input, val_graphs, val_output);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
