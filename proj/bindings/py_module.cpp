#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "navprobe/augmentation.hpp"
#include "navprobe/corpus_stats.hpp"
#include "navprobe/counterfactual.hpp"
#include "navprobe/dataset_io.hpp"
#include "navprobe/instruction_gen.hpp"
#include "navprobe/nav_graph.hpp"
#include "navprobe/run_config.hpp"
#include "navprobe/text_analysis.hpp"

namespace py = pybind11;
using namespace navprobe;

namespace {

std::map<std::string, double> density_dict(const StatsReport& r) {
  std::map<std::string, double> out;
  for (CueSet cue : kAllCueSets) {
    out[std::string(density_key(cue))] = r.density.at(cue);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_navprobe, m) {
  m.doc() = "Language-side analysis toolkit for instruction-guided navigation corpora";

  py::enum_<PosTag>(m, "PosTag")
      .value("Noun", PosTag::Noun)
      .value("Verb", PosTag::Verb)
      .value("Adjective", PosTag::Adjective)
      .value("Adverb", PosTag::Adverb)
      .value("Preposition", PosTag::Preposition)
      .value("Determiner", PosTag::Determiner)
      .value("Pronoun", PosTag::Pronoun)
      .value("Conjunction", PosTag::Conjunction)
      .value("Numeral", PosTag::Numeral)
      .value("Other", PosTag::Other);

  py::enum_<CueSet>(m, "CueSet")
      .value("Nouns", CueSet::Nouns)
      .value("Adjectives", CueSet::Adjectives)
      .value("Verbs", CueSet::Verbs)
      .value("Objects", CueSet::Objects)
      .value("Numerical", CueSet::Numerical)
      .value("Spatial", CueSet::Spatial)
      .value("LeftRight", CueSet::LeftRight);

  py::enum_<TurnKind>(m, "TurnKind")
      .value("Left", TurnKind::Left)
      .value("Right", TurnKind::Right)
      .value("Around", TurnKind::Around);

  py::enum_<StairDirection>(m, "StairDirection")
      .value("Up", StairDirection::Up)
      .value("Down", StairDirection::Down);

  py::enum_<DirectionBin>(m, "DirectionBin")
      .value("Straight", DirectionBin::Straight)
      .value("Left", DirectionBin::Left)
      .value("Right", DirectionBin::Right)
      .value("Around", DirectionBin::Around);

  py::enum_<SegmentKind>(m, "SegmentKind")
      .value("Straight", SegmentKind::Straight)
      .value("Turn", SegmentKind::Turn)
      .value("Stairs", SegmentKind::Stairs);

  py::enum_<EpisodeSource>(m, "EpisodeSource")
      .value("Original", EpisodeSource::Original)
      .value("Generated", EpisodeSource::Generated);

  py::enum_<VariantKind>(m, "VariantKind")
      .value("Original", VariantKind::Original)
      .value("Shuffled", VariantKind::Shuffled);

  py::class_<Lexicons>(m, "Lexicons")
      .def_static("defaults", &Lexicons::defaults)
      .def("load_spatial_words", &Lexicons::load_spatial_words)
      .def("load_object_words", &Lexicons::load_object_words)
      .def("load_number_words", &Lexicons::load_number_words)
      .def("load_tag_lexicon", &Lexicons::load_tag_lexicon)
      .def("load_suffix_rules", &Lexicons::load_suffix_rules)
      .def("set_object_words", &Lexicons::set_object_words)
      .def("set_spatial_words", &Lexicons::set_spatial_words)
      .def("is_spatial", &Lexicons::is_spatial)
      .def("is_left_right", &Lexicons::is_left_right)
      .def("is_object", &Lexicons::is_object)
      .def("is_number_word", &Lexicons::is_number_word)
      .def("fingerprint", &Lexicons::fingerprint);

  py::class_<Token>(m, "Token")
      .def_readonly("text", &Token::text)
      .def_readonly("index", &Token::index)
      .def_readonly("pos", &Token::pos)
      .def("has_cue", &Token::has_cue)
      .def_property_readonly("cues", &Token::cue_list)
      .def("__repr__", [](const Token& t) {
        return "Token('" + t.text + "', " + std::string(to_string(t.pos)) + ")";
      });

  py::class_<Instruction>(m, "Instruction")
      .def_readonly("raw", &Instruction::raw)
      .def_readonly("tokens", &Instruction::tokens)
      .def("text", &Instruction::text)
      .def("__len__", &Instruction::size);

  m.def("tokenize", &tokenize, py::arg("raw"));
  m.def("pos_tag", &pos_tag, py::arg("tokens"), py::arg("lexicons"));
  m.def("analyze", &analyze, py::arg("raw"), py::arg("lexicons"));
  m.def("mask", &mask, py::arg("instruction"), py::arg("cue"),
        py::arg("mask_token") = std::string(kDefaultMaskToken));
  m.def("swap_left_right", &swap_left_right, py::arg("instruction"));
  m.def("mask_all_language", &mask_all_language, py::arg("instruction"),
        py::arg("mask_token") = std::string(kDefaultMaskToken));
  m.def("parses_as_number", &parses_as_number, py::arg("text"));

  py::class_<Vec3>(m, "Vec3")
      .def(py::init<>())
      .def(py::init([](double x, double y, double z) { return Vec3{x, y, z}; }),
           py::arg("x"), py::arg("y"), py::arg("z"))
      .def_readwrite("x", &Vec3::x)
      .def_readwrite("y", &Vec3::y)
      .def_readwrite("z", &Vec3::z);

  py::class_<NavGraph>(m, "NavGraph")
      .def(py::init<std::string>(), py::arg("scan_id") = "")
      .def_property_readonly("scan", &NavGraph::scan)
      .def("add_node",
           [](NavGraph& g, const std::string& id, double x, double y, double z) {
             g.add_node(id, Vec3{x, y, z});
           },
           py::arg("id"), py::arg("x"), py::arg("y"), py::arg("z"))
      .def("add_edge", &NavGraph::add_edge)
      .def("has_node", &NavGraph::has_node)
      .def("has_edge", &NavGraph::has_edge)
      .def("position", &NavGraph::position)
      .def("neighbors", &NavGraph::neighbors)
      .def("node_ids", &NavGraph::node_ids)
      .def("node_count", &NavGraph::node_count)
      .def("edge_count", &NavGraph::edge_count);

  py::class_<Path>(m, "Path")
      .def(py::init([](std::string scan, std::vector<std::string> nodes) {
             return Path{std::move(scan), std::move(nodes)};
           }),
           py::arg("scan_id"), py::arg("nodes"))
      .def_readwrite("scan_id", &Path::scan_id)
      .def_readwrite("nodes", &Path::nodes)
      .def("edge_count", &Path::edge_count);

  py::class_<TurnAnnotation>(m, "TurnAnnotation")
      .def_readonly("node_index", &TurnAnnotation::node_index)
      .def_readonly("delta_heading", &TurnAnnotation::delta_heading)
      .def_readonly("kind", &TurnAnnotation::kind);

  py::class_<StairSegment>(m, "StairSegment")
      .def_readonly("first_edge", &StairSegment::first_edge)
      .def_readonly("last_edge", &StairSegment::last_edge)
      .def_readonly("direction", &StairSegment::direction);

  py::class_<PathMetrics>(m, "PathMetrics")
      .def_readonly("nav_error", &PathMetrics::nav_error)
      .def_readonly("success", &PathMetrics::success)
      .def_readonly("spl", &PathMetrics::spl);

  m.def("heading", &heading, py::arg("a"), py::arg("b"));
  m.def("heading_change", &heading_change, py::arg("h_in"), py::arg("h_out"));
  m.def("detect_turns", &detect_turns, py::arg("path"), py::arg("graph"),
        py::arg("turn_threshold") = kTurnThresholdDeg,
        py::arg("around_threshold") = kAroundThresholdDeg);
  m.def("shortest_path", &shortest_path, py::arg("graph"), py::arg("start"), py::arg("goal"));
  m.def("path_length_meters", &path_length_meters, py::arg("path"), py::arg("graph"));
  m.def("sample_paths", &sample_paths, py::arg("graph"), py::arg("seed"), py::arg("count"),
        py::arg("min_edges") = 6, py::arg("max_edges") = 9,
        py::arg("exclusion") = std::set<std::vector<std::string>>{});
  m.def("stair_segments", &stair_segments, py::arg("path"), py::arg("graph"),
        py::arg("z_threshold") = kStairZThresholdMeters);
  m.def("evaluate", &evaluate, py::arg("predicted"), py::arg("goal"), py::arg("graph"));

  m.def("direction_bin", &direction_bin, py::arg("delta_heading"),
        py::arg("turn_threshold") = kTurnThresholdDeg,
        py::arg("around_threshold") = kAroundThresholdDeg);
  m.def("counterfactuals_at_turn", &counterfactuals_at_turn, py::arg("graph"), py::arg("path"),
        py::arg("turn"), py::arg("turn_threshold") = kTurnThresholdDeg,
        py::arg("around_threshold") = kAroundThresholdDeg);

  py::class_<CounterfactualReport>(m, "CounterfactualReport")
      .def_readonly("n_episodes", &CounterfactualReport::n_episodes)
      .def_readonly("n_turns", &CounterfactualReport::n_turns)
      .def_readonly("avg_turns_per_episode", &CounterfactualReport::avg_turns_per_episode)
      .def_readonly("avg_counterfactuals_per_turn",
                    &CounterfactualReport::avg_counterfactuals_per_turn)
      .def_readonly("pct_turns_with_counterfactual",
                    &CounterfactualReport::pct_turns_with_counterfactual);

  m.def(
      "analyze_corpus",
      [](const std::vector<Episode>& episodes, const std::map<std::string, NavGraph>& graphs,
         double turn_threshold, double around_threshold) {
        return analyze_corpus(episodes, graphs, nullptr, turn_threshold, around_threshold);
      },
      py::arg("episodes"), py::arg("graphs"), py::arg("turn_threshold") = kTurnThresholdDeg,
      py::arg("around_threshold") = kAroundThresholdDeg);

  py::class_<StatsReport>(m, "StatsReport")
      .def_readonly("n_instructions", &StatsReport::n_instructions)
      .def_readonly("n_paths", &StatsReport::n_paths)
      .def_readonly("vocab_size", &StatsReport::vocab_size)
      .def_readonly("avg_instr_length", &StatsReport::avg_instr_length)
      .def_property_readonly("density", &density_dict)
      .def("to_json", &stats_to_json)
      .def("to_tsv", &stats_to_tsv);

  m.def("density", &density, py::arg("corpus"), py::arg("cue"));
  m.def("report", &report, py::arg("episodes"), py::arg("lexicons"));

  py::class_<Segment>(m, "Segment")
      .def_readonly("kind", &Segment::kind)
      .def_readonly("first_node", &Segment::first_node)
      .def_readonly("last_node", &Segment::last_node)
      .def_readonly("distance", &Segment::distance)
      .def_readonly("turn", &Segment::turn)
      .def_readonly("stairs", &Segment::stairs);

  py::class_<PhraseSets>(m, "PhraseSets")
      .def_static("defaults", &PhraseSets::defaults)
      .def_static("from_json_file", &PhraseSets::from_json_file)
      .def_readwrite("straight_templates", &PhraseSets::straight_templates)
      .def_readwrite("stop_phrases", &PhraseSets::stop_phrases)
      .def_readwrite("walk_connector", &PhraseSets::walk_connector)
      .def_readwrite("turn_left", &PhraseSets::turn_left)
      .def_readwrite("turn_right", &PhraseSets::turn_right)
      .def_readwrite("turn_around", &PhraseSets::turn_around)
      .def_readwrite("stairs_up", &PhraseSets::stairs_up)
      .def_readwrite("stairs_down", &PhraseSets::stairs_down);

  m.def("segment_path", &segment_path, py::arg("path"), py::arg("graph"),
        py::arg("turn_threshold") = kTurnThresholdDeg,
        py::arg("around_threshold") = kAroundThresholdDeg,
        py::arg("z_threshold") = kStairZThresholdMeters);
  m.def("spell_meters", &spell_meters, py::arg("distance"));
  m.def("realize", &realize, py::arg("segments"), py::arg("phrases"), py::arg("seed"));

  py::class_<GenerationOptions>(m, "GenerationOptions")
      .def(py::init<>())
      .def_readwrite("target_count", &GenerationOptions::target_count)
      .def_readwrite("seed", &GenerationOptions::seed)
      .def_readwrite("min_edges", &GenerationOptions::min_edges)
      .def_readwrite("max_edges", &GenerationOptions::max_edges)
      .def_readwrite("turn_threshold", &GenerationOptions::turn_threshold)
      .def_readwrite("around_threshold", &GenerationOptions::around_threshold)
      .def_readwrite("z_threshold", &GenerationOptions::z_threshold)
      .def_readwrite("phrases", &GenerationOptions::phrases);

  py::class_<GenerationResult>(m, "GenerationResult")
      .def_readonly("episodes", &GenerationResult::episodes)
      .def_readonly("shortfall", &GenerationResult::shortfall);

  m.def("generate_dataset", &generate_dataset, py::arg("graphs"), py::arg("options"),
        py::arg("exclusion") = std::set<std::vector<std::string>>{});

  py::class_<Episode>(m, "Episode")
      .def(py::init<>())
      .def_readwrite("path_id", &Episode::path_id)
      .def_readwrite("scan", &Episode::scan)
      .def_readwrite("path", &Episode::path)
      .def_readwrite("heading", &Episode::heading)
      .def_readwrite("instructions", &Episode::instructions)
      .def_readwrite("distance", &Episode::distance)
      .def_readwrite("source", &Episode::source)
      .def("to_json", [](const Episode& ep) { return episode_to_json(ep).dump(); })
      .def("__repr__", [](const Episode& ep) {
        return "Episode(path_id='" + ep.path_id + "', scan='" + ep.scan + "')";
      });

  m.def("load_episodes", &load_episodes, py::arg("file"));
  m.def("write_episodes_json", &write_episodes_json, py::arg("episodes"), py::arg("file"));
  m.def("write_episodes_jsonl", &write_episodes_jsonl, py::arg("episodes"), py::arg("file"));
  m.def("load_graph", &load_graph, py::arg("file"));
  m.def("load_graphs", &load_graphs, py::arg("dir"));

  py::class_<Violation>(m, "Violation")
      .def_readonly("record_index", &Violation::record_index)
      .def_readonly("path_id", &Violation::path_id)
      .def_readonly("kind", &Violation::kind)
      .def_readonly("detail", &Violation::detail);

  m.def("validate_against_graphs", &validate_against_graphs, py::arg("episodes"),
        py::arg("graphs"));

  py::class_<RankedPair>(m, "RankedPair")
      .def_readonly("path_id", &RankedPair::path_id)
      .def_readonly("scan", &RankedPair::scan)
      .def_readonly("path_variant", &RankedPair::path_variant)
      .def_readonly("label", &RankedPair::label)
      .def_readonly("variant_kind", &RankedPair::variant_kind);

  m.def("shuffle_negatives", &shuffle_negatives, py::arg("episode"), py::arg("seed"),
        py::arg("n_negatives"));

  py::class_<MlmOptions>(m, "MlmOptions")
      .def(py::init<>())
      .def_readwrite("rate", &MlmOptions::rate)
      .def_readwrite("mask_token", &MlmOptions::mask_token)
      .def_readwrite("bert_style", &MlmOptions::bert_style);

  py::class_<MlmRecord>(m, "MlmRecord")
      .def_readonly("masked_tokens", &MlmRecord::masked_tokens)
      .def_readonly("target_positions", &MlmRecord::target_positions)
      .def_readonly("target_tokens", &MlmRecord::target_tokens)
      .def_readonly("skippable", &MlmRecord::skippable);

  m.def("reconstruct", &reconstruct, py::arg("record"));
  m.def("mlm_mask_standard", &mlm_mask_standard, py::arg("instruction"), py::arg("seed"),
        py::arg("options") = MlmOptions{});
  m.def("mlm_mask_spatial", &mlm_mask_spatial, py::arg("instruction"), py::arg("lexicons"),
        py::arg("mask_token") = std::string(kDefaultMaskToken));
}
