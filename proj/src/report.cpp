#include "report.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "error.hpp"
#include "fixtures.hpp"
#include "format.hpp"

namespace cegi::report {

namespace {

using analytics::ReferenceKind;

std::string md_escape(const std::string& cell) {
  std::string out;
  for (char c : cell) {
    if (c == '|') out += "\\|";
    else out.push_back(c);
  }
  return out;
}

std::string csv_field(const std::string& cell) {
  if (cell.find_first_of(",\"\n\r") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::vector<corpus::RunRecord> task_records(Task task, const corpus::Corpus& c) {
  corpus::Filter filter;
  filter.task = task;
  filter.metric = primary_metric(task);
  auto records = corpus::query(c, filter);
  if (records.empty()) {
    fail(errc::empty_selection, std::string("no records for task ") + to_string(task));
  }
  return records;
}

// Preserves first-seen order, which is canonical (model groups are contiguous
// per task only in model-sorted order; queries return canonical order).
std::vector<std::string> model_order(const std::vector<corpus::RunRecord>& records) {
  std::vector<std::string> order;
  for (const auto& r : records) {
    if (std::find(order.begin(), order.end(), r.model_id) == order.end()) {
      order.push_back(r.model_id);
    }
  }
  return order;
}

bool is_aggregate_layout(const std::vector<corpus::RunRecord>& records) {
  std::set<int> quants;
  for (const auto& r : records) quants.insert(r.quant_bits);
  return quants.size() > 1;
}

double gpt4o_reference_for(const corpus::Corpus& c, Task task, const corpus::RunRecord& record) {
  if (auto ref = c.gpt4o_gains_reference(task)) return *ref;
  if (!record.gpt4o_score) {
    fail(errc::invalid_argument, "record for " + record.model_id + " has no gpt4o_score");
  }
  return *record.gpt4o_score;
}

std::string score_str(double value) { return format::sig(value, 6); }

}  // namespace

std::string to_markdown(const ReportTable& table) {
  std::ostringstream out;
  if (!table.title.empty()) out << "### " << table.title << "\n\n";
  out << "|";
  for (const auto& col : table.columns) out << ' ' << md_escape(col) << " |";
  out << "\n|";
  for (std::size_t i = 0; i < table.columns.size(); ++i) out << " --- |";
  out << "\n";
  for (const auto& row : table.rows) {
    out << "|";
    for (const auto& cell : row) out << ' ' << md_escape(cell) << " |";
    out << "\n";
  }
  for (const auto& note : table.footnotes) out << "\n" << note << "\n";
  return out.str();
}

std::string to_csv(const ReportTable& table) {
  std::ostringstream out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out << ',';
    out << csv_field(table.columns[i]);
  }
  out << "\r\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << csv_field(row[i]);
    }
    out << "\r\n";
  }
  return out.str();
}

std::string to_json(const ReportTable& table) {
  nlohmann::ordered_json doc;
  doc["title"] = table.title;
  doc["columns"] = table.columns;
  doc["rows"] = table.rows;
  doc["footnotes"] = table.footnotes;
  return doc.dump();
}

ReportTable render_gain_table(Task task, const corpus::Corpus& corpus, ReferenceKind reference) {
  auto records = task_records(task, corpus);
  ReportTable table;
  table.title = std::string("Performance gain vs ") + analytics::to_string(reference) + " — " +
                to_string(task);
  if (!is_aggregate_layout(records)) {
    table.columns = {"model", "lora_rank", "quant_bits", "base", "fine_tuned", "gain"};
    for (const auto& r : records) {
      double ref_score =
          reference == ReferenceKind::base ? r.base_score : gpt4o_reference_for(corpus, task, r);
      double g = analytics::gain_pct(r.ft_score, ref_score);
      table.rows.push_back({r.model_id, std::to_string(r.lora_rank), std::to_string(r.quant_bits),
                            score_str(r.base_score), score_str(r.ft_score),
                            format::signed_pct(g, 2)});
    }
  } else {
    // aggregate per model over quant x rank configurations
    table.columns = {"model", "configs", "avg_base", "avg_fine_tuned", "gain"};
    for (const auto& model : model_order(records)) {
      std::vector<corpus::RunRecord> group;
      for (const auto& r : records) {
        if (r.model_id == model) group.push_back(r);
      }
      double base_sum = 0.0, ft_sum = 0.0;
      for (const auto& r : group) {
        base_sum += r.base_score;
        ft_sum += r.ft_score;
      }
      double avg_base = base_sum / group.size();
      double avg_ft = ft_sum / group.size();
      double g = 0.0;
      if (reference == ReferenceKind::base) {
        g = analytics::avg_gain(group).mean_gain_pct;
      } else {
        g = analytics::gain_pct(avg_ft, gpt4o_reference_for(corpus, task, group.front()));
      }
      table.rows.push_back({model, std::to_string(group.size()), score_str(avg_base),
                            score_str(avg_ft), format::signed_pct(g, 2)});
    }
  }
  bool negative = false;
  for (const auto& row : table.rows) {
    if (!row.back().empty() && row.back()[0] == '-') negative = true;
  }
  if (negative) table.footnotes.push_back("Negative gains mark scores below the reference.");
  return table;
}

ReportTable render_cegi_table(Task task, const corpus::Corpus& corpus,
                              const lora::ParamTable& params) {
  analytics::RankingReport ranking = analytics::rank_by_cegi(task, corpus, params);

  // rows in model order, minimum marked
  std::map<std::string, const analytics::RankedModel*> by_model;
  for (const auto& rm : ranking.ordered) by_model[rm.model_id] = &rm;
  const std::string& best = ranking.sweet_spot().model_id;

  ReportTable table;
  table.title = std::string("CEGI — ") + to_string(task);
  bool published = corpus.published();
  table.columns = {"model", "mean_tp_m", "mean_emissions_g", "mean_gain_pct", "cegi_g_per_pct_per_m"};
  if (published) table.columns.push_back("published_cegi");
  for (const auto& [model, rm] : by_model) {
    std::vector<std::string> row;
    row.push_back(model == best ? model + " *" : model);
    row.push_back(format::fixed(rm->result.mean_tp_m, 2));
    row.push_back(format::fixed(rm->result.aggregate.mean_emissions_g, 2));
    row.push_back(format::fixed(rm->result.aggregate.mean_gain_pct, 2));
    row.push_back(format::fixed(rm->result.cegi, 3));
    if (published) {
      row.push_back(format::fixed(fixtures::published_cegi(task, model), 3));
    }
    table.rows.push_back(std::move(row));
  }
  table.footnotes.push_back("* lowest CEGI (sweet spot).");
  table.footnotes.push_back(
      "CEGI column computed as (mean emissions / mean gain) / mean trainable parameters. The "
      "published CEGI column is not reproducible from its own printed inputs and is shown for "
      "reference only; rankings here use the computed values.");
  return table;
}

ReportTable render_emission_annotations(Task task, const corpus::Corpus& corpus) {
  auto records = task_records(task, corpus);
  double base = records.front().emissions_g;
  for (const auto& r : records) base = std::min(base, r.emissions_g);

  ReportTable table;
  table.title = std::string("Emissions vs task base — ") + to_string(task);
  table.columns = {"model", "lora_rank", "quant_bits", "emissions_g", "vs_base"};
  for (const auto& r : records) {
    double pct = analytics::pct_increase_from_base(r.emissions_g, base);
    std::string cell = pct == 0.0 ? std::string("base") : format::signed_pct(pct, 1);
    table.rows.push_back({r.model_id, std::to_string(r.lora_rank), std::to_string(r.quant_bits),
                          format::fixed(r.emissions_g, 2), cell});
  }
  return table;
}

ReportTable render_greener_table(Task task, const corpus::Corpus& corpus) {
  analytics::GreenerResult g = analytics::greener_for_task(task, corpus);
  ReportTable table;
  table.title = std::string("Greener factor — ") + to_string(task);
  table.columns = {"task",   "candidate_model", "candidate_emissions_g",
                   "reference_model", "reference_emissions_g", "greener_factor"};
  table.rows.push_back({to_string(task), g.candidate_model, format::fixed(g.candidate_emissions_g, 2),
                        g.reference_model, format::fixed(g.reference_emissions_g, 2),
                        format::fixed(g.factor, 2)});
  if (corpus.published()) {
    for (const auto& fig : fixtures::greener_figures()) {
      if (fig.task == task && fig.from_appendix_text) {
        table.footnotes.push_back("Published prose states " + format::fixed(fig.published_factor, 2) +
                                  "x for this task; the table emissions ratio computes to " +
                                  format::fixed(g.factor, 2) + "x, reported here as computed.");
      }
    }
  }
  return table;
}

std::string greener_json(Task task, const corpus::Corpus& corpus) {
  analytics::GreenerResult g = analytics::greener_for_task(task, corpus);
  nlohmann::ordered_json doc;
  doc["task"] = to_string(task);
  doc["candidate"] = {{"model_id", g.candidate_model}, {"mean_emissions_g", g.candidate_emissions_g}};
  doc["reference"] = {{"model_id", g.reference_model}, {"mean_emissions_g", g.reference_emissions_g}};
  doc["greener_factor"] = format::round_half_away(g.factor, 2);
  if (corpus.published()) {
    for (const auto& fig : fixtures::greener_figures()) {
      if (fig.task == task) {
        doc["published_factor"] = fig.published_factor;
        if (fig.from_appendix_text) {
          doc["note"] = "published prose figure disagrees with the table emissions ratio; "
                        "greener_factor is the computed value";
        }
      }
    }
  }
  return doc.dump();
}

ReportTable render_ranking_table(Task task, const corpus::Corpus& corpus,
                                 const lora::ParamTable& params) {
  analytics::RankingReport ranking = analytics::rank_by_cegi(task, corpus, params);
  ReportTable table;
  table.title = std::string("CEGI ranking — ") + to_string(task);
  table.columns = {"rank", "model", "cegi_g_per_pct_per_m", "mean_emissions_g", "mean_gain_pct",
                   "mean_tp_m"};
  int position = 1;
  for (const auto& rm : ranking.ordered) {
    table.rows.push_back({std::to_string(position), rm.model_id, format::fixed(rm.result.cegi, 3),
                          format::fixed(rm.result.aggregate.mean_emissions_g, 2),
                          format::fixed(rm.result.aggregate.mean_gain_pct, 2),
                          format::fixed(rm.result.mean_tp_m, 2)});
    ++position;
  }
  table.footnotes.push_back("Sweet spot: " + ranking.sweet_spot().model_id + " (lowest CEGI).");
  return table;
}

std::string ranking_json(Task task, const corpus::Corpus& corpus, const lora::ParamTable& params) {
  analytics::RankingReport ranking = analytics::rank_by_cegi(task, corpus, params);
  nlohmann::ordered_json doc;
  doc["task"] = to_string(task);
  doc["ranking"] = nlohmann::ordered_json::array();
  for (const auto& rm : ranking.ordered) {
    doc["ranking"].push_back({{"model_id", rm.model_id},
                              {"cegi", rm.result.cegi},
                              {"g_o", rm.result.g_o},
                              {"mean_tp_m", rm.result.mean_tp_m},
                              {"mean_emissions_g", rm.result.aggregate.mean_emissions_g},
                              {"mean_gain_pct", rm.result.aggregate.mean_gain_pct},
                              {"config_count", rm.result.aggregate.config_count}});
  }
  doc["sweet_spot"] = ranking.sweet_spot().model_id;
  return doc.dump();
}

PlotSeries render_plot_data(Task task, const corpus::Corpus& corpus, const lora::ParamTable& params) {
  auto records = task_records(task, corpus);
  PlotSeries series;
  series.task = task;
  for (const auto& r : records) {
    series.points.push_back(PlotPoint{r.model_id, r.quant_bits, r.lora_rank, r.emissions_g, r.ft_score});
  }
  series.sweet_spot = analytics::rank_by_cegi(task, corpus, params).sweet_spot().model_id;
  return series;
}

std::string plot_series_json(const PlotSeries& series) {
  nlohmann::ordered_json doc;
  doc["task"] = to_string(series.task);
  doc["points"] = nlohmann::ordered_json::array();
  for (const auto& p : series.points) {
    doc["points"].push_back({{"model_id", p.model_id},
                             {"quant_bits", p.quant_bits},
                             {"lora_rank", p.lora_rank},
                             {"emissions_g", p.emissions_g},
                             {"score", p.score}});
  }
  doc["sweet_spot"] = series.sweet_spot;
  return doc.dump();
}

}  // namespace cegi::report
