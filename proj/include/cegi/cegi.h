/*
 * cegi — carbon-efficiency accounting for fine-tuning experiments.
 *
 * C surface over the core library: opaque corpus handles, status codes, and
 * heap strings released with cegi_string_free. Status codes match the CLI
 * exit-code convention: 0 success, 1 validation/domain error, 2 I/O or
 * decode error. On failure, cegi_last_error() returns a thread-local
 * diagnostic valid until the next API call on that thread.
 */
#ifndef CEGI_H
#define CEGI_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cegi_status {
  CEGI_OK = 0,
  CEGI_ERR_DOMAIN = 1,
  CEGI_ERR_IO = 2
} cegi_status;

typedef struct cegi_corpus cegi_corpus;

const char* cegi_last_error(void);
void cegi_string_free(char* s);
void cegi_corpus_free(cegi_corpus* corpus);

/* Transcribed published experimental corpus (checksum-verified). */
cegi_status cegi_corpus_load_fixtures(cegi_corpus** out);

/* All-or-nothing JSONL ingestion. report_json (optional) receives
 * {"total_lines", "loaded", "issues": [{"line", "field", "message"}]} whether
 * or not ingestion succeeds; per-line failures return CEGI_ERR_DOMAIN. */
cegi_status cegi_corpus_ingest_file(const char* jsonl_path, cegi_corpus** out, char** report_json);

/* Store layout: <dir>/runs.jsonl in canonical form (keys sorted, 6
 * significant digits). */
cegi_status cegi_corpus_open_store(const char* dir, cegi_corpus** out);
cegi_status cegi_corpus_save_store(const cegi_corpus* corpus, const char* dir);

cegi_status cegi_corpus_export(const cegi_corpus* corpus, char** jsonl_out);
size_t cegi_corpus_size(const cegi_corpus* corpus);

/* Replays a power trace CSV (header t_s,cpu_w,gpu_w,ram_w) against a regional
 * intensity table CSV (header region_code,gamma_kg_per_mwh). default_gamma
 * may be NULL; when the region is missing and no default is given the call
 * fails with CEGI_ERR_DOMAIN. summary_json receives
 * {"region_code","gamma_kg_per_mwh","pue","e_cpu_mwh","e_gpu_mwh",
 *  "e_ram_mwh","total_mwh","cf_kg","cf_g"}. */
cegi_status cegi_track_replay_file(const char* trace_csv_path, const char* gamma_table_csv_path,
                                   const char* region_code, double pue,
                                   const double* default_gamma, char** summary_json);

/* Scores a reference<TAB>hypothesis TSV with a computable metric
 * (rouge1|rouge2|rougeL|bleu). spice/ea/ves are external-only and fail with
 * CEGI_ERR_DOMAIN. json_out receives
 * {"metric","scores":[{"metric","value"}...],"corpus_mean"}. */
cegi_status cegi_score_pairs_file(const char* metric, const char* pairs_tsv_path, char** json_out);

/* kind: gains|cegi|rank|greener. format: md|csv|json (default md when NULL).
 * reference: base|gpt4o, gains only (default base when NULL). */
cegi_status cegi_analyze(const cegi_corpus* corpus, const char* kind, const char* task,
                         const char* format, const char* reference, char** out);

/* Emission-vs-score series with the CEGI sweet spot:
 * {"task","points":[{"model_id","quant_bits","lora_rank","emissions_g",
 *  "score"}...],"sweet_spot"}. */
cegi_status cegi_render_plot(const cegi_corpus* corpus, const char* task, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* CEGI_H */
