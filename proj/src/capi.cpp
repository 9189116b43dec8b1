#include "cegi/cegi.h"

#include <cstring>
#include <optional>
#include <string>

#include <json.hpp>

#include "analytics.hpp"
#include "corpus.hpp"
#include "emissions.hpp"
#include "error.hpp"
#include "fixtures.hpp"
#include "lora.hpp"
#include "report.hpp"
#include "text_metrics.hpp"

using namespace cegi;

struct cegi_corpus {
  corpus::Corpus corpus;
  lora::ParamTable params;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

cegi_status set_error(const std::string& message, cegi_status status) {
  g_last_error = message;
  return status;
}

cegi_status status_of(const Error& e) { return e.is_io() ? CEGI_ERR_IO : CEGI_ERR_DOMAIN; }

template <typename Fn>
cegi_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return CEGI_OK;
  } catch (const Error& e) {
    return set_error(e.what(), status_of(e));
  } catch (const std::exception& e) {
    return set_error(e.what(), CEGI_ERR_DOMAIN);
  }
}

cegi_status require(bool condition, const char* message) {
  return condition ? CEGI_OK : set_error(message, CEGI_ERR_DOMAIN);
}

// Per-rank counts taken from the records themselves; contradictory counts for
// one (model, rank) are a log consistency error.
lora::ParamTable params_from_records(const corpus::Corpus& c) {
  lora::ParamTable table;
  for (const corpus::RunRecord& r : c.records()) {
    if (table.has_entry(r.model_id, r.lora_rank)) {
      double existing = table.tp_millions(r.model_id, r.lora_rank);
      if (existing != r.trainable_params_m) {
        fail(errc::invariant_violation,
             "conflicting trainable_params_m for (" + r.model_id + ", rank " +
                 std::to_string(r.lora_rank) + ")");
      }
      continue;
    }
    table.add(r.model_id, r.lora_rank, r.trainable_params_m);
  }
  return table;
}

std::string ingest_report_json(const corpus::IngestReport& report) {
  nlohmann::ordered_json doc;
  doc["total_lines"] = report.total_lines;
  doc["loaded"] = report.loaded;
  doc["issues"] = nlohmann::ordered_json::array();
  for (const auto& issue : report.issues) {
    doc["issues"].push_back(
        {{"line", issue.line}, {"field", issue.field}, {"message", issue.message}});
  }
  return doc.dump();
}

std::string format_table(const report::ReportTable& table, const std::string& format) {
  if (format == "md") return report::to_markdown(table);
  if (format == "csv") return report::to_csv(table);
  if (format == "json") return report::to_json(table);
  fail(errc::invalid_argument, "format must be md, csv, or json");
}

}  // namespace

extern "C" {

const char* cegi_last_error(void) { return g_last_error.c_str(); }

void cegi_string_free(char* s) { delete[] s; }

void cegi_corpus_free(cegi_corpus* corpus) { delete corpus; }

cegi_status cegi_corpus_load_fixtures(cegi_corpus** out) {
  if (cegi_status s = require(out != nullptr, "out must not be null"); s != CEGI_OK) return s;
  return guarded([&] {
    auto handle = std::make_unique<cegi_corpus>();
    handle->corpus = fixtures::load_paper_fixtures();
    handle->params = fixtures::paper_param_table();
    *out = handle.release();
  });
}

cegi_status cegi_corpus_ingest_file(const char* jsonl_path, cegi_corpus** out, char** report_json) {
  if (cegi_status s = require(jsonl_path && out, "jsonl_path and out must not be null"); s != CEGI_OK) {
    return s;
  }
  *out = nullptr;
  if (report_json) *report_json = nullptr;
  try {
    corpus::IngestResult result = corpus::ingest_runs_file(jsonl_path);
    if (report_json) *report_json = dup_string(ingest_report_json(result.report));
    if (!result.corpus) {
      std::string detail = "ingest rejected " + std::string(jsonl_path) + ":";
      for (const auto& issue : result.report.issues) {
        detail += " line " + std::to_string(issue.line) + ": " + issue.message + ";";
      }
      return set_error(detail, CEGI_ERR_DOMAIN);
    }
    auto handle = std::make_unique<cegi_corpus>();
    handle->corpus = std::move(*result.corpus);
    handle->params = params_from_records(handle->corpus);
    *out = handle.release();
    g_last_error.clear();
    return CEGI_OK;
  } catch (const Error& e) {
    return set_error(e.what(), status_of(e));
  } catch (const std::exception& e) {
    return set_error(e.what(), CEGI_ERR_DOMAIN);
  }
}

cegi_status cegi_corpus_open_store(const char* dir, cegi_corpus** out) {
  if (cegi_status s = require(dir && out, "dir and out must not be null"); s != CEGI_OK) return s;
  return guarded([&] {
    auto handle = std::make_unique<cegi_corpus>();
    handle->corpus = corpus::open_store(dir);
    handle->params = params_from_records(handle->corpus);
    *out = handle.release();
  });
}

cegi_status cegi_corpus_save_store(const cegi_corpus* corpus_handle, const char* dir) {
  if (cegi_status s = require(corpus_handle && dir, "corpus and dir must not be null"); s != CEGI_OK) {
    return s;
  }
  return guarded([&] { corpus::save_store(corpus_handle->corpus, dir); });
}

cegi_status cegi_corpus_export(const cegi_corpus* corpus_handle, char** jsonl_out) {
  if (cegi_status s = require(corpus_handle && jsonl_out, "corpus and jsonl_out must not be null");
      s != CEGI_OK) {
    return s;
  }
  return guarded([&] { *jsonl_out = dup_string(corpus::export_canonical(corpus_handle->corpus)); });
}

size_t cegi_corpus_size(const cegi_corpus* corpus_handle) {
  return corpus_handle ? corpus_handle->corpus.size() : 0;
}

cegi_status cegi_track_replay_file(const char* trace_csv_path, const char* gamma_table_csv_path,
                                   const char* region_code, double pue, const double* default_gamma,
                                   char** summary_json) {
  if (cegi_status s = require(trace_csv_path && gamma_table_csv_path && region_code && summary_json,
                              "trace, gamma table, region, and summary_json must not be null");
      s != CEGI_OK) {
    return s;
  }
  return guarded([&] {
    emissions::IntensityTable table = emissions::IntensityTable::from_csv_file(gamma_table_csv_path);
    std::optional<double> fallback;
    if (default_gamma) fallback = *default_gamma;
    emissions::EmissionProfile profile;
    profile.gamma_kg_per_mwh = emissions::lookup_gamma(region_code, table, fallback);
    profile.pue = pue;
    profile.region_code = region_code;
    emissions::EmissionReading reading = emissions::track_replay_file(trace_csv_path, profile);
    nlohmann::ordered_json doc;
    doc["region_code"] = profile.region_code;
    doc["gamma_kg_per_mwh"] = profile.gamma_kg_per_mwh;
    doc["pue"] = profile.pue;
    doc["e_cpu_mwh"] = reading.ledger.e_cpu_mwh;
    doc["e_gpu_mwh"] = reading.ledger.e_gpu_mwh;
    doc["e_ram_mwh"] = reading.ledger.e_ram_mwh;
    doc["total_mwh"] = reading.ledger.total();
    doc["cf_kg"] = reading.cf_kg;
    doc["cf_g"] = reading.cf_g;
    *summary_json = dup_string(doc.dump());
  });
}

cegi_status cegi_score_pairs_file(const char* metric, const char* pairs_tsv_path, char** json_out) {
  if (cegi_status s = require(metric && pairs_tsv_path && json_out,
                              "metric, pairs path, and json_out must not be null");
      s != CEGI_OK) {
    return s;
  }
  return guarded([&] {
    metrics::Metric m = metrics::metric_from_string(metric);
    metrics::PairScores scores = metrics::score_pairs_file(pairs_tsv_path, m);
    nlohmann::ordered_json doc;
    doc["metric"] = metrics::to_string(scores.metric);
    doc["scores"] = nlohmann::ordered_json::array();
    for (double v : scores.per_pair) {
      doc["scores"].push_back({{"metric", metrics::to_string(scores.metric)}, {"value", v}});
    }
    doc["corpus_mean"] = scores.corpus_mean;
    *json_out = dup_string(doc.dump());
  });
}

cegi_status cegi_analyze(const cegi_corpus* corpus_handle, const char* kind, const char* task,
                         const char* format, const char* reference, char** out) {
  if (cegi_status s = require(corpus_handle && kind && task && out,
                              "corpus, kind, task, and out must not be null");
      s != CEGI_OK) {
    return s;
  }
  return guarded([&] {
    Task t = task_from_string(task);
    std::string fmt = format ? format : "md";
    std::string kind_s = kind;
    std::string output;
    if (kind_s == "gains") {
      analytics::ReferenceKind ref = analytics::ReferenceKind::base;
      if (reference != nullptr && std::string_view(reference) == "gpt4o") {
        ref = analytics::ReferenceKind::gpt4o;
      } else if (reference != nullptr && std::string_view(reference) != "base") {
        fail(errc::invalid_argument, "reference must be base or gpt4o");
      }
      output = format_table(report::render_gain_table(t, corpus_handle->corpus, ref), fmt);
    } else if (kind_s == "cegi") {
      output = format_table(report::render_cegi_table(t, corpus_handle->corpus, corpus_handle->params),
                            fmt);
    } else if (kind_s == "rank") {
      if (fmt == "json") {
        output = report::ranking_json(t, corpus_handle->corpus, corpus_handle->params);
      } else {
        output = format_table(
            report::render_ranking_table(t, corpus_handle->corpus, corpus_handle->params), fmt);
      }
    } else if (kind_s == "greener") {
      if (fmt == "json") {
        output = report::greener_json(t, corpus_handle->corpus);
      } else {
        output = format_table(report::render_greener_table(t, corpus_handle->corpus), fmt);
      }
    } else {
      fail(errc::invalid_argument, "kind must be gains, cegi, rank, or greener");
    }
    *out = dup_string(output);
  });
}

cegi_status cegi_render_plot(const cegi_corpus* corpus_handle, const char* task, char** json_out) {
  if (cegi_status s = require(corpus_handle && task && json_out,
                              "corpus, task, and json_out must not be null");
      s != CEGI_OK) {
    return s;
  }
  return guarded([&] {
    Task t = task_from_string(task);
    report::PlotSeries series =
        report::render_plot_data(t, corpus_handle->corpus, corpus_handle->params);
    *json_out = dup_string(report::plot_series_json(series));
  });
}

}  // extern "C"
