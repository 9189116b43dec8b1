#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "analytics.hpp"
#include "corpus.hpp"
#include "lora.hpp"
#include "task.hpp"

// Machine-readable transcriptions of the published benchmark study's result
// tables: per-configuration scores and emissions, the per-task gain and CEGI
// summary columns, emission annotations, trainable-parameter counts, and the
// greener-factor figures. Values are transcribed exactly as printed; cells the
// source tables print inconsistently with their own inputs carry a
// print_deviation flag alongside the reproducible recomputation inputs.
namespace cegi::fixtures {

// The full transcribed experimental corpus (image captioning + visual QA at
// 4-bit, summarization ROUGE-1 and text-to-SQL EA/VES over 2 quant levels and
// 3 ranks). Verifies the recorded checksum on every load.
corpus::Corpus load_paper_fixtures();

// Trainable-parameter table keyed by model size, with model-id aliases and
// the per-task mean override for Qwen2.5-0.5B (published summary columns use
// 0.36m where the per-rank table averages 0.42m).
lora::ParamTable paper_param_table();

struct GainPair {
  double reference;
  double target;
};

// One cell of a published gain table. lora_rank == 0 marks the aggregate
// per-model rows (summarization / text-to-SQL). The published value equals
// the mean of gain_pct over `inputs` except where print_deviation is set.
struct GainCell {
  Task task;
  std::string model_id;
  int lora_rank;
  analytics::ReferenceKind reference;
  double printed_gain_pct;
  bool print_deviation;
  std::vector<GainPair> inputs;
};

const std::vector<GainCell>& gain_table_cells();

// Parenthesized "+X%" emission annotations, one per printed table cell.
struct AnnotationCell {
  Task task;
  std::string model_id;
  int quant_bits;
  int lora_rank;
  double emissions_g;
  bool is_base;
  double printed_pct;     // valid when !is_base
  bool print_deviation;
};

const std::vector<AnnotationCell>& emission_annotation_cells();

// Published per-task summary columns (mean T_p, mean emissions, mean gain,
// CEGI). The published CEGI column is not reproducible from its own inputs;
// it ships for reference and ordinal checks only.
struct CegiSummaryRow {
  Task task;
  std::string model_id;
  double mean_tp_m;
  double mean_emissions_g;
  double mean_gain_pct;
  double published_cegi;
};

const std::vector<CegiSummaryRow>& cegi_summary_rows();

struct GreenerFigure {
  Task task;
  std::string candidate_model;
  std::string reference_model;
  double published_factor;
  bool from_appendix_text;  // prose figure that disagrees with the table ratio
};

const std::vector<GreenerFigure>& greener_figures();

struct ParamRow {
  std::string model_size;
  int rank;
  double tp_m;
};

const std::vector<ParamRow>& param_table_rows();

// Full summarization transcription including the ROUGE-2 / ROUGE-L columns
// (the corpus itself carries ROUGE-1 records only).
struct SummRougeRow {
  std::string model_id;
  int quant_bits;
  int lora_rank;
  double emissions_g;
  double base_r1, ft_r1;
  double base_r2, ft_r2;
  double base_rl, ft_rl;
};

const std::vector<SummRougeRow>& summarization_rouge_rows();

// GPT-4o baselines recorded twice where the published gains used a value
// other than the one printed beside the scores.
double vqa_gpt4o_bleu_table();          // 0.0013
double vqa_gpt4o_bleu_text();           // 0.0037
double sql_gpt4o_ea_printed();          // 0.80
double sql_gpt4o_ea_gains_reference();  // 0.81

double published_cegi(Task task, const std::string& model_id);

// FNV-1a 64 over the canonical serialization of every shipped table.
std::uint64_t fixture_checksum();
extern const std::uint64_t kRecordedChecksum;

}  // namespace cegi::fixtures
