#pragma once

#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "task.hpp"
#include "text_metrics.hpp"

namespace cegi::corpus {

// One experiment configuration's scores and cost for a single metric.
struct RunRecord {
  std::string model_id;
  Task task = Task::image_captioning;
  int quant_bits = 4;
  int lora_rank = 1;
  metrics::Metric metric = metrics::Metric::spice;
  double base_score = 0.0;
  double ft_score = 0.0;
  std::optional<double> gpt4o_score;
  double emissions_g = 0.0;
  double trainable_params_m = 0.0;
  int runs = 1;
};

// (model_id, task, metric, quant_bits, lora_rank) must be unique in a corpus.
bool same_key(const RunRecord& a, const RunRecord& b);

// Canonical order: task, model_id, quant_bits, lora_rank, then metric as the
// final tiebreak (text-to-SQL configs carry both EA and VES records).
bool canonical_less(const RunRecord& a, const RunRecord& b);

void validate_record(const RunRecord& record);  // throws InvariantViolation

struct IngestIssue {
  int line = 0;
  std::string field;  // empty unless a specific field is at fault
  std::string message;
};

struct IngestReport {
  int total_lines = 0;   // non-blank JSONL lines seen
  int loaded = 0;        // records loaded (0 when any issue exists)
  std::vector<IngestIssue> issues;
};

// Immutable snapshot of validated records in canonical order. Fixture corpora
// additionally carry per-task GPT-4o gain references (the published gain
// columns were not always computed against the score printed next to them).
class Corpus {
 public:
  Corpus() = default;
  explicit Corpus(std::vector<RunRecord> records);  // sorts; rejects duplicates

  std::span<const RunRecord> records() const { return records_; }
  std::size_t size() const { return records_.size(); }

  void set_gpt4o_gains_reference(Task task, double reference);
  std::optional<double> gpt4o_gains_reference(Task task) const;

  void set_published(bool published) { published_ = published; }
  bool published() const { return published_; }

 private:
  std::vector<RunRecord> records_;
  std::map<Task, double> gpt4o_refs_;
  bool published_ = false;
};

struct Filter {
  std::optional<Task> task;
  std::optional<std::string> model_id;
  std::optional<metrics::Metric> metric;
  std::optional<int> quant_bits;
  std::optional<int> lora_rank;
};

std::vector<RunRecord> query(const Corpus& corpus, const Filter& filter);

// All-or-nothing JSONL ingestion: the corpus is produced only when every line
// decodes, validates, and is key-unique; otherwise the report lists each
// failing line and the corpus stays empty.
struct IngestResult {
  std::optional<Corpus> corpus;
  IngestReport report;
};

IngestResult ingest_runs(std::istream& jsonl);
IngestResult ingest_runs_file(const std::string& path);

// Canonical JSONL: keys sorted, numbers at 6 significant digits, one record
// per line in canonical order.
std::string export_canonical(std::span<const RunRecord> records);
std::string export_canonical(const Corpus& corpus);

// Store layout: <dir>/runs.jsonl in canonical form.
Corpus open_store(const std::string& dir);
void save_store(const Corpus& corpus, const std::string& dir);

}  // namespace cegi::corpus
