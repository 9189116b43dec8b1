#include "corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "error.hpp"
#include "format.hpp"

namespace cegi::corpus {

namespace {

auto key_tuple(const RunRecord& r) {
  return std::tie(r.model_id, r.task, r.metric, r.quant_bits, r.lora_rank);
}

auto order_tuple(const RunRecord& r) {
  return std::tie(r.task, r.model_id, r.quant_bits, r.lora_rank, r.metric);
}

}  // namespace

bool same_key(const RunRecord& a, const RunRecord& b) { return key_tuple(a) == key_tuple(b); }

bool canonical_less(const RunRecord& a, const RunRecord& b) { return order_tuple(a) < order_tuple(b); }

void validate_record(const RunRecord& record) {
  auto bad = [&](const std::string& field, const std::string& why) {
    fail(errc::invariant_violation, "field '" + field + "': " + why);
  };
  if (record.model_id.empty()) bad("model_id", "must be non-empty");
  if (record.quant_bits != 4 && record.quant_bits != 8) bad("quant_bits", "must be 4 or 8");
  if (record.lora_rank < 1) bad("lora_rank", "must be >= 1");
  if (!(record.base_score >= 0.0 && record.base_score <= 1.0)) bad("base_score", "outside [0, 1]");
  if (!(record.ft_score >= 0.0 && record.ft_score <= 1.0)) bad("ft_score", "outside [0, 1]");
  if (record.gpt4o_score && !(*record.gpt4o_score >= 0.0 && *record.gpt4o_score <= 1.0)) {
    bad("gpt4o_score", "outside [0, 1]");
  }
  if (!(record.emissions_g >= 0.0)) bad("emissions_g", "must be >= 0");
  if (!(record.trainable_params_m > 0.0)) bad("trainable_params_m", "must be > 0");
  if (record.runs < 1) bad("runs", "must be >= 1");
}

Corpus::Corpus(std::vector<RunRecord> records) : records_(std::move(records)) {
  std::sort(records_.begin(), records_.end(), canonical_less);
  for (std::size_t i = 1; i < records_.size(); ++i) {
    if (same_key(records_[i - 1], records_[i])) {
      fail(errc::duplicate_key, "duplicate (model, task, metric, quant_bits, lora_rank): " +
                                    records_[i].model_id + "/" + to_string(records_[i].task));
    }
  }
}

void Corpus::set_gpt4o_gains_reference(Task task, double reference) { gpt4o_refs_[task] = reference; }

std::optional<double> Corpus::gpt4o_gains_reference(Task task) const {
  auto it = gpt4o_refs_.find(task);
  if (it == gpt4o_refs_.end()) return std::nullopt;
  return it->second;
}

std::vector<RunRecord> query(const Corpus& corpus, const Filter& filter) {
  std::vector<RunRecord> out;
  for (const RunRecord& r : corpus.records()) {
    if (filter.task && r.task != *filter.task) continue;
    if (filter.model_id && r.model_id != *filter.model_id) continue;
    if (filter.metric && r.metric != *filter.metric) continue;
    if (filter.quant_bits && r.quant_bits != *filter.quant_bits) continue;
    if (filter.lora_rank && r.lora_rank != *filter.lora_rank) continue;
    out.push_back(r);
  }
  return out;
}

namespace {

const char* const kRequiredKeys[] = {"model_id",    "task",     "quant_bits",
                                     "lora_rank",   "metric",   "base_score",
                                     "ft_score",    "gpt4o_score", "emissions_g",
                                     "trainable_params_m", "runs"};

// Decodes one JSONL object; throws Error on any problem.
RunRecord decode_line(const std::string& line) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    fail(errc::decode_error, e.what());
  }
  if (!doc.is_object()) fail(errc::decode_error, "expected a JSON object");

  for (const auto& [key, value] : doc.items()) {
    (void)value;
    bool known = false;
    for (const char* k : kRequiredKeys) {
      if (key == k) {
        known = true;
        break;
      }
    }
    if (!known) fail(errc::invariant_violation, "field '" + key + "': unknown key");
  }
  for (const char* k : kRequiredKeys) {
    if (!doc.contains(k)) fail(errc::invariant_violation, std::string("field '") + k + "': missing");
  }

  RunRecord r;
  try {
    r.model_id = doc.at("model_id").get<std::string>();
    r.task = task_from_string(doc.at("task").get<std::string>());
    r.quant_bits = doc.at("quant_bits").get<int>();
    r.lora_rank = doc.at("lora_rank").get<int>();
    r.metric = metrics::metric_from_string(doc.at("metric").get<std::string>());
    r.base_score = doc.at("base_score").get<double>();
    r.ft_score = doc.at("ft_score").get<double>();
    if (!doc.at("gpt4o_score").is_null()) r.gpt4o_score = doc.at("gpt4o_score").get<double>();
    r.emissions_g = doc.at("emissions_g").get<double>();
    r.trainable_params_m = doc.at("trainable_params_m").get<double>();
    r.runs = doc.at("runs").get<int>();
  } catch (const Error&) {
    throw;
  } catch (const nlohmann::json::exception& e) {
    fail(errc::decode_error, e.what());
  }
  validate_record(r);
  return r;
}

std::optional<std::string> error_field(const Error& e) {
  // validate_record / decode_line messages carry "field 'x': ..."
  const std::string what = e.what();
  auto pos = what.find("field '");
  if (pos == std::string::npos) return std::nullopt;
  auto end = what.find('\'', pos + 7);
  if (end == std::string::npos) return std::nullopt;
  return what.substr(pos + 7, end - pos - 7);
}

}  // namespace

IngestResult ingest_runs(std::istream& jsonl) {
  IngestResult result;
  std::vector<RunRecord> records;
  std::string line;
  int line_no = 0;
  while (std::getline(jsonl, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    ++result.report.total_lines;
    try {
      RunRecord r = decode_line(line);
      for (const RunRecord& prev : records) {
        if (same_key(prev, r)) {
          fail(errc::duplicate_key, "repeats the key of an earlier record");
        }
      }
      records.push_back(std::move(r));
    } catch (const Error& e) {
      IngestIssue issue;
      issue.line = line_no;
      issue.message = e.what();
      if (auto f = error_field(e)) issue.field = *f;
      result.report.issues.push_back(std::move(issue));
    }
  }
  if (result.report.issues.empty()) {
    result.report.loaded = static_cast<int>(records.size());
    result.corpus = Corpus(std::move(records));
  }
  return result;
}

IngestResult ingest_runs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::io_error, "cannot open run log '" + path + "'");
  return ingest_runs(in);
}

std::string export_canonical(std::span<const RunRecord> records) {
  std::vector<RunRecord> sorted(records.begin(), records.end());
  std::sort(sorted.begin(), sorted.end(), canonical_less);
  std::ostringstream out;
  for (const RunRecord& r : sorted) {
    out << "{\"base_score\":" << format::sig(r.base_score, 6)
        << ",\"emissions_g\":" << format::sig(r.emissions_g, 6)
        << ",\"ft_score\":" << format::sig(r.ft_score, 6) << ",\"gpt4o_score\":";
    if (r.gpt4o_score) {
      out << format::sig(*r.gpt4o_score, 6);
    } else {
      out << "null";
    }
    out << ",\"lora_rank\":" << r.lora_rank << ",\"metric\":\"" << metrics::to_string(r.metric)
        << "\",\"model_id\":\"" << r.model_id << "\",\"quant_bits\":" << r.quant_bits
        << ",\"runs\":" << r.runs << ",\"task\":\"" << to_string(r.task)
        << "\",\"trainable_params_m\":" << format::sig(r.trainable_params_m, 6) << "}\n";
  }
  return out.str();
}

std::string export_canonical(const Corpus& corpus) { return export_canonical(corpus.records()); }

Corpus open_store(const std::string& dir) {
  std::string path = (std::filesystem::path(dir) / "runs.jsonl").string();
  if (!std::filesystem::exists(path)) {
    fail(errc::io_error, "store has no runs.jsonl at '" + path + "'");
  }
  IngestResult result = ingest_runs_file(path);
  if (!result.corpus) {
    std::string detail;
    for (const auto& issue : result.report.issues) {
      if (!detail.empty()) detail += "; ";
      detail += "line " + std::to_string(issue.line) + ": " + issue.message;
    }
    fail(errc::decode_error, "store at '" + dir + "' is corrupt: " + detail);
  }
  return std::move(*result.corpus);
}

void save_store(const Corpus& corpus, const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) fail(errc::io_error, "cannot create store directory '" + dir + "': " + ec.message());
  std::string path = (std::filesystem::path(dir) / "runs.jsonl").string();
  std::ofstream out(path, std::ios::trunc);
  if (!out) fail(errc::io_error, "cannot write '" + path + "'");
  out << export_canonical(corpus);
  if (!out) fail(errc::io_error, "write failed for '" + path + "'");
}

}  // namespace cegi::corpus
