#pragma once

#include <span>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "lora.hpp"
#include "task.hpp"

namespace cegi::analytics {

enum class ReferenceKind { base, gpt4o };

const char* to_string(ReferenceKind kind);

struct GainResult {
  double gain_pct = 0.0;
  ReferenceKind target_ref = ReferenceKind::base;
};

// 100 * (target - reference) / reference. Negative gains pass through.
double gain_pct(double target_score, double reference_score);

GainResult gain(const corpus::RunRecord& record, ReferenceKind reference);

struct AggregateGain {
  double mean_gain_pct = 0.0;
  int config_count = 0;      // configurations actually present
  double mean_emissions_g = 0.0;
};

// Mean per-config gain vs base and mean emissions over records sharing one
// (model, task, metric). Sums run in canonical record order so results do not
// depend on caller ordering.
AggregateGain avg_gain(std::span<const corpus::RunRecord> records);

// Sum(C_E) / Sum(G) over the configurations present; algebraically equal to
// mean(C_E)/mean(G) for equal-weight records.
double emission_per_unit_gain(std::span<const corpus::RunRecord> records);

struct CegiResult {
  double g_o = 0.0;        // grams per percent
  double mean_tp_m = 0.0;  // millions
  double cegi = 0.0;       // grams per percent per million params
  AggregateGain aggregate;
  std::vector<int> ranks;  // distinct LoRA ranks contributing
};

// cegi = g_o * |L_r| / Sum(T_p) over the ranks present, computed as
// g_o / mean(T_p).
CegiResult cegi(std::span<const corpus::RunRecord> records, const lora::ParamTable& params);

struct RankedModel {
  std::string model_id;
  CegiResult result;
};

struct RankingReport {
  Task task = Task::image_captioning;
  std::vector<RankedModel> ordered;  // ascending CEGI; ties by mean emissions, then model_id

  const RankedModel& sweet_spot() const { return ordered.front(); }
};

// Ranks every model with a computable CEGI on the task's primary metric.
// Models whose total gain is non-positive have no CEGI and are skipped.
RankingReport rank_by_cegi(Task task, const corpus::Corpus& corpus, const lora::ParamTable& params);

// reference / candidate ("7.62x greener").
double greener_factor(double candidate_emissions_g, double reference_emissions_g);

struct GreenerResult {
  Task task = Task::image_captioning;
  std::string candidate_model;   // lowest mean emissions on the task
  double candidate_emissions_g = 0.0;
  std::string reference_model;   // highest mean emissions on the task
  double reference_emissions_g = 0.0;
  double factor = 1.0;
};

GreenerResult greener_for_task(Task task, const corpus::Corpus& corpus);

// 100 * (emissions - base) / base; base is the task's lowest-emission config.
double pct_increase_from_base(double emissions_g, double base_emissions_g);

}  // namespace cegi::analytics
