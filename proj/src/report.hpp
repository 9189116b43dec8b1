#pragma once

#include <string>
#include <vector>

#include "analytics.hpp"
#include "corpus.hpp"
#include "lora.hpp"
#include "task.hpp"

namespace cegi::report {

struct ReportTable {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;  // rectangular
  std::vector<std::string> footnotes;
};

std::string to_markdown(const ReportTable& table);   // GitHub pipe tables
std::string to_csv(const ReportTable& table);        // RFC-4180 quoting
std::string to_json(const ReportTable& table);       // {title, columns, rows, footnotes}

// Gain table mirroring the published layouts: per-(model, rank) rows for the
// vision tasks, per-model aggregate rows (mean over quant x rank configs) for
// summarization and text-to-SQL. Gain cells render "+118.75%" / "-9.67%".
// GPT-4o gains use the corpus's per-task gains reference when set, otherwise
// each record's gpt4o_score.
ReportTable render_gain_table(Task task, const corpus::Corpus& corpus,
                              analytics::ReferenceKind reference);

// Model, mean T_p, mean emissions, mean gain, CEGI; minimum row marked.
// Published corpora add the published CEGI column; a footnote always states
// how the CEGI column is computed.
ReportTable render_cegi_table(Task task, const corpus::Corpus& corpus,
                              const lora::ParamTable& params);

// Lowest-emission configuration labeled "base", everything else "+X.X%".
ReportTable render_emission_annotations(Task task, const corpus::Corpus& corpus);

ReportTable render_greener_table(Task task, const corpus::Corpus& corpus);
std::string greener_json(Task task, const corpus::Corpus& corpus);

ReportTable render_ranking_table(Task task, const corpus::Corpus& corpus,
                                 const lora::ParamTable& params);
std::string ranking_json(Task task, const corpus::Corpus& corpus, const lora::ParamTable& params);

struct PlotPoint {
  std::string model_id;
  int quant_bits;
  int lora_rank;
  double emissions_g;
  double score;  // fine-tuned score on the task's primary metric
};

struct PlotSeries {
  Task task;
  std::vector<PlotPoint> points;
  std::string sweet_spot;  // rank_by_cegi argmin
};

PlotSeries render_plot_data(Task task, const corpus::Corpus& corpus, const lora::ParamTable& params);
std::string plot_series_json(const PlotSeries& series);

}  // namespace cegi::report
