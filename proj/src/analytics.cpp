#include "analytics.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "error.hpp"

namespace cegi::analytics {

const char* to_string(ReferenceKind kind) { return kind == ReferenceKind::base ? "base" : "gpt4o"; }

double gain_pct(double target_score, double reference_score) {
  if (!(reference_score > 0.0)) {
    fail(errc::non_positive_reference, "reference score must be > 0");
  }
  return 100.0 * (target_score - reference_score) / reference_score;
}

GainResult gain(const corpus::RunRecord& record, ReferenceKind reference) {
  double ref = record.base_score;
  if (reference == ReferenceKind::gpt4o) {
    if (!record.gpt4o_score) {
      fail(errc::invalid_argument, "record for " + record.model_id + " has no gpt4o_score");
    }
    ref = *record.gpt4o_score;
  }
  return GainResult{gain_pct(record.ft_score, ref), reference};
}

namespace {

std::vector<corpus::RunRecord> canonical_copy(std::span<const corpus::RunRecord> records) {
  std::vector<corpus::RunRecord> sorted(records.begin(), records.end());
  std::sort(sorted.begin(), sorted.end(), corpus::canonical_less);
  return sorted;
}

void require_single_selection(std::span<const corpus::RunRecord> records) {
  if (records.empty()) fail(errc::empty_selection, "no records selected");
  const corpus::RunRecord& first = records.front();
  for (const corpus::RunRecord& r : records) {
    if (r.model_id != first.model_id || r.task != first.task || r.metric != first.metric) {
      fail(errc::invariant_violation, "records must share one (model, task, metric)");
    }
  }
}

}  // namespace

AggregateGain avg_gain(std::span<const corpus::RunRecord> records) {
  require_single_selection(records);
  auto sorted = canonical_copy(records);
  double gain_sum = 0.0;
  double emissions_sum = 0.0;
  for (const corpus::RunRecord& r : sorted) {
    gain_sum += gain_pct(r.ft_score, r.base_score);
    emissions_sum += r.emissions_g;
  }
  AggregateGain agg;
  agg.config_count = static_cast<int>(sorted.size());
  agg.mean_gain_pct = gain_sum / agg.config_count;
  agg.mean_emissions_g = emissions_sum / agg.config_count;
  return agg;
}

double emission_per_unit_gain(std::span<const corpus::RunRecord> records) {
  require_single_selection(records);
  auto sorted = canonical_copy(records);
  double gain_sum = 0.0;
  double emissions_sum = 0.0;
  for (const corpus::RunRecord& r : sorted) {
    gain_sum += gain_pct(r.ft_score, r.base_score);
    emissions_sum += r.emissions_g;
  }
  if (!(gain_sum > 0.0)) {
    fail(errc::non_positive_total_gain, "total gain must be > 0 for emission-per-unit-gain");
  }
  return emissions_sum / gain_sum;
}

CegiResult cegi(std::span<const corpus::RunRecord> records, const lora::ParamTable& params) {
  CegiResult result;
  result.g_o = emission_per_unit_gain(records);
  result.aggregate = avg_gain(records);
  std::set<int> ranks;
  for (const corpus::RunRecord& r : records) ranks.insert(r.lora_rank);
  result.ranks.assign(ranks.begin(), ranks.end());
  result.mean_tp_m =
      lora::mean_trainable_params(records.front().model_id, result.ranks, params);
  result.cegi = result.g_o / result.mean_tp_m;
  return result;
}

RankingReport rank_by_cegi(Task task, const corpus::Corpus& corpus, const lora::ParamTable& params) {
  corpus::Filter filter;
  filter.task = task;
  filter.metric = primary_metric(task);
  auto records = corpus::query(corpus, filter);

  std::map<std::string, std::vector<corpus::RunRecord>> by_model;
  for (corpus::RunRecord& r : records) by_model[r.model_id].push_back(std::move(r));

  RankingReport report;
  report.task = task;
  for (const auto& [model_id, group] : by_model) {
    double gain_sum = 0.0;
    for (const corpus::RunRecord& r : group) gain_sum += gain_pct(r.ft_score, r.base_score);
    if (!(gain_sum > 0.0)) continue;  // CEGI undefined for this model
    report.ordered.push_back(RankedModel{model_id, cegi(group, params)});
  }
  if (report.ordered.empty()) {
    fail(errc::empty_selection, std::string("no model with computable CEGI for task ") + to_string(task));
  }
  std::sort(report.ordered.begin(), report.ordered.end(), [](const RankedModel& a, const RankedModel& b) {
    if (a.result.cegi != b.result.cegi) return a.result.cegi < b.result.cegi;
    if (a.result.aggregate.mean_emissions_g != b.result.aggregate.mean_emissions_g) {
      return a.result.aggregate.mean_emissions_g < b.result.aggregate.mean_emissions_g;
    }
    return a.model_id < b.model_id;
  });
  return report;
}

double greener_factor(double candidate_emissions_g, double reference_emissions_g) {
  if (!(candidate_emissions_g > 0.0)) {
    fail(errc::non_positive_candidate, "candidate emissions must be > 0");
  }
  return reference_emissions_g / candidate_emissions_g;
}

GreenerResult greener_for_task(Task task, const corpus::Corpus& corpus) {
  corpus::Filter filter;
  filter.task = task;
  filter.metric = primary_metric(task);
  auto records = corpus::query(corpus, filter);
  if (records.empty()) {
    fail(errc::empty_selection, std::string("no records for task ") + to_string(task));
  }
  std::map<std::string, std::pair<double, int>> sums;  // model -> (emissions sum, count)
  for (const corpus::RunRecord& r : records) {
    auto& [sum, count] = sums[r.model_id];
    sum += r.emissions_g;
    ++count;
  }
  GreenerResult result;
  result.task = task;
  bool first = true;
  for (const auto& [model_id, sc] : sums) {
    double mean = sc.first / sc.second;
    if (first || mean < result.candidate_emissions_g) {
      result.candidate_model = model_id;
      result.candidate_emissions_g = mean;
    }
    if (first || mean > result.reference_emissions_g) {
      result.reference_model = model_id;
      result.reference_emissions_g = mean;
    }
    first = false;
  }
  result.factor = greener_factor(result.candidate_emissions_g, result.reference_emissions_g);
  return result;
}

double pct_increase_from_base(double emissions_g, double base_emissions_g) {
  if (!(base_emissions_g > 0.0)) fail(errc::non_positive_base, "base emissions must be > 0");
  return 100.0 * (emissions_g - base_emissions_g) / base_emissions_g;
}

}  // namespace cegi::analytics
