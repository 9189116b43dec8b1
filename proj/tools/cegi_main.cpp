// cegi command-line front end. Talks to the library exclusively through the
// C API in cegi/cegi.h; diagnostics go to stderr, data to stdout.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cegi/cegi.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitIo = 2;

struct CorpusHandle {
  cegi_corpus* ptr = nullptr;
  ~CorpusHandle() { cegi_corpus_free(ptr); }
};

struct ApiString {
  char* ptr = nullptr;
  ~ApiString() { cegi_string_free(ptr); }
  std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

int fail_with(cegi_status status) {
  std::cerr << "error: " << cegi_last_error() << "\n";
  return status == CEGI_ERR_IO ? kExitIo : kExitDomain;
}

int emit(const std::string& data, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << data;
    if (!data.empty() && data.back() != '\n') std::cout << "\n";
    return kExitOk;
  }
  std::ofstream out(out_path, std::ios::trunc | std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write '" << out_path << "'\n";
    return kExitIo;
  }
  out << data;
  return out ? kExitOk : kExitIo;
}

int run_ingest(const std::string& runs, const std::string& store) {
  CorpusHandle corpus;
  ApiString report;
  cegi_status status = cegi_corpus_ingest_file(runs.c_str(), &corpus.ptr, &report.ptr);
  if (status != CEGI_OK) {
    if (report.ptr) {
      auto doc = nlohmann::json::parse(report.str(), nullptr, false);
      if (doc.is_object()) {
        for (const auto& issue : doc["issues"]) {
          std::cerr << "line " << issue["line"].get<int>() << ": "
                    << issue["message"].get<std::string>() << "\n";
        }
        return kExitDomain;
      }
    }
    return fail_with(status);
  }
  if (!store.empty()) {
    cegi_status save_status = cegi_corpus_save_store(corpus.ptr, store.c_str());
    if (save_status != CEGI_OK) return fail_with(save_status);
  }
  std::cout << "ingested " << cegi_corpus_size(corpus.ptr) << " records\n";
  return kExitOk;
}

int run_track(const std::string& replay, const std::string& gamma_table, const std::string& region,
              double pue, bool has_default, double default_gamma) {
  ApiString summary;
  const double* fallback = has_default ? &default_gamma : nullptr;
  cegi_status status = cegi_track_replay_file(replay.c_str(), gamma_table.c_str(), region.c_str(),
                                              pue, fallback, &summary.ptr);
  if (status != CEGI_OK) return fail_with(status);
  auto doc = nlohmann::json::parse(summary.str());
  std::printf("%.2f g\n", doc["cf_g"].get<double>());
  return kExitOk;
}

int run_score(const std::string& metric, const std::string& pairs) {
  ApiString json;
  cegi_status status = cegi_score_pairs_file(metric.c_str(), pairs.c_str(), &json.ptr);
  if (status != CEGI_OK) return fail_with(status);
  std::cout << json.str() << "\n";
  return kExitOk;
}

int run_analyze(const std::string& kind, const std::string& task, bool paper_fixtures,
                const std::string& store, const std::string& format, const std::string& reference,
                const std::string& out_path) {
  CorpusHandle corpus;
  cegi_status status;
  if (paper_fixtures) {
    status = cegi_corpus_load_fixtures(&corpus.ptr);
  } else if (!store.empty()) {
    status = cegi_corpus_open_store(store.c_str(), &corpus.ptr);
  } else {
    std::cerr << "error: pass --paper-fixtures or --store DIR (or set CEGI_STORE)\n";
    return kExitDomain;
  }
  if (status != CEGI_OK) return fail_with(status);

  ApiString output;
  status = cegi_analyze(corpus.ptr, kind.c_str(), task.c_str(), format.c_str(),
                        reference.empty() ? nullptr : reference.c_str(), &output.ptr);
  if (status != CEGI_OK) return fail_with(status);
  return emit(output.str(), out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"carbon-efficiency accounting for fine-tuning experiments"};
  app.require_subcommand(1);

  // ingest
  std::string ingest_runs_path, ingest_store;
  CLI::App* ingest = app.add_subcommand("ingest", "validate a JSONL run log and store it");
  ingest->add_option("--runs", ingest_runs_path, "run log (JSONL)")->required();
  ingest->add_option("--store", ingest_store, "store directory")->envname("CEGI_STORE")->required();

  // track
  std::string track_replay_path, track_gamma, track_region;
  double track_pue = 1.0, track_default_gamma = 0.0;
  CLI::App* track = app.add_subcommand("track", "replay a power trace into grams of CO2");
  track->add_option("--replay", track_replay_path, "power-sample CSV")->required();
  track->add_option("--gamma-table", track_gamma, "intensity table CSV")->required();
  track->add_option("--region", track_region, "region code")->required();
  track->add_option("--pue", track_pue, "power usage effectiveness (>= 1)")->required();
  CLI::Option* default_gamma_opt =
      track->add_option("--default-gamma", track_default_gamma, "fallback intensity (kg/MWh)");

  // score
  std::string score_metric, score_pairs_path;
  CLI::App* score = app.add_subcommand("score", "score reference/hypothesis pairs");
  score->add_option("--metric", score_metric, "rouge1|rouge2|rougeL|bleu")->required();
  score->add_option("--pairs", score_pairs_path, "TSV of reference<TAB>hypothesis")->required();

  // analyze
  std::string analyze_kind, analyze_task, analyze_store, analyze_format = "md";
  std::string analyze_reference, analyze_out;
  bool paper_fixtures = false;
  CLI::App* analyze = app.add_subcommand("analyze", "gain, CEGI, ranking, and greener reports");
  analyze->add_option("kind", analyze_kind, "gains|cegi|rank|greener")->required();
  analyze->add_option("--task", analyze_task,
                      "image_captioning|visual_qa|summarization|text_to_sql")
      ->required();
  analyze->add_flag("--paper-fixtures", paper_fixtures, "use the shipped published corpus");
  analyze->add_option("--store", analyze_store, "store directory")->envname("CEGI_STORE");
  analyze->add_option("--format", analyze_format, "md|csv|json");
  analyze->add_option("--reference", analyze_reference, "base|gpt4o (gains only)");
  analyze->add_option("--out", analyze_out, "write output to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }

  if (ingest->parsed()) return run_ingest(ingest_runs_path, ingest_store);
  if (track->parsed()) {
    return run_track(track_replay_path, track_gamma, track_region, track_pue,
                     default_gamma_opt->count() > 0, track_default_gamma);
  }
  if (score->parsed()) return run_score(score_metric, score_pairs_path);
  if (analyze->parsed()) {
    return run_analyze(analyze_kind, analyze_task, paper_fixtures, analyze_store, analyze_format,
                       analyze_reference, analyze_out);
  }
  return kExitDomain;
}
