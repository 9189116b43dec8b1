#include "fixtures.hpp"

#include <map>
#include <sstream>

#include "error.hpp"
#include "format.hpp"

namespace cegi::fixtures {

namespace {

using analytics::ReferenceKind;

constexpr double kVqaGpt4oTable = 0.0013;
constexpr double kVqaGpt4oText = 0.0037;
constexpr double kSqlGpt4oPrinted = 0.80;
constexpr double kSqlGpt4oGainsRef = 0.81;
constexpr double kCaptGpt4o = 0.16;
constexpr double kSummGpt4o = 0.37;
constexpr int kRunsAveraged = 5;

// ---------- vision tasks: 4-bit, ranks 8/16/32 ----------

struct VisionRow {
  const char* model_id;
  int lora_rank;
  double base_score, ft_score, emissions_g;
};

const VisionRow kCaptioningRows[] = {
    {"Qwen-VL-2B", 8, 0.16, 0.35, 95.5},      {"Qwen-VL-2B", 16, 0.16, 0.36, 97.8},
    {"Qwen-VL-2B", 32, 0.16, 0.35, 98.8},     {"Qwen-VL-7B", 8, 0.14, 0.37, 137.8},
    {"Qwen-VL-7B", 16, 0.14, 0.37, 137.9},    {"Qwen-VL-7B", 32, 0.14, 0.38, 138.2},
    {"Llama-3.2-11B", 8, 0.18, 0.30, 222.11}, {"Llama-3.2-11B", 16, 0.18, 0.29, 222.46},
    {"Llama-3.2-11B", 32, 0.18, 0.31, 221.51},
};

const VisionRow kVisualQaRows[] = {
    {"Qwen-VL-2B", 8, 0.0037, 0.0552, 60.1},    {"Qwen-VL-2B", 16, 0.0037, 0.0592, 60.7},
    {"Qwen-VL-2B", 32, 0.0037, 0.0587, 60.5},   {"Qwen-VL-7B", 8, 0.0010, 0.0732, 78.8},
    {"Qwen-VL-7B", 16, 0.0010, 0.0767, 77.3},   {"Qwen-VL-7B", 32, 0.0010, 0.0750, 78.9},
    {"Llama-3.2-11B", 8, 0.0006, 0.0014, 212.82}, {"Llama-3.2-11B", 16, 0.0006, 0.0017, 211.57},
    {"Llama-3.2-11B", 32, 0.0006, 0.0017, 213.9},
};

// ---------- summarization: 2 quant levels x ranks 4/8/16, ROUGE-1/2/L ----------

const SummRougeRow kSummRows[] = {
    {"Qwen2.5-0.5B", 4, 4, 25.2, 0.23, 0.42, 0.077, 0.16, 0.17, 0.33},
    {"Qwen2.5-0.5B", 4, 8, 25.3, 0.23, 0.41, 0.077, 0.16, 0.17, 0.33},
    {"Qwen2.5-0.5B", 4, 16, 25.4, 0.23, 0.43, 0.077, 0.17, 0.17, 0.34},
    {"Qwen2.5-0.5B", 8, 4, 25.2, 0.23, 0.42, 0.077, 0.16, 0.17, 0.33},
    {"Qwen2.5-0.5B", 8, 8, 25.3, 0.23, 0.43, 0.077, 0.16, 0.17, 0.33},
    {"Qwen2.5-0.5B", 8, 16, 25.4, 0.23, 0.43, 0.077, 0.17, 0.17, 0.33},
    {"Qwen2.5-3B", 4, 4, 56.4, 0.30, 0.50, 0.10, 0.24, 0.23, 0.40},
    {"Qwen2.5-3B", 4, 8, 54.3, 0.30, 0.50, 0.10, 0.24, 0.23, 0.40},
    {"Qwen2.5-3B", 4, 16, 55.3, 0.30, 0.49, 0.10, 0.24, 0.23, 0.40},
    {"Qwen2.5-3B", 8, 4, 54.3, 0.30, 0.50, 0.10, 0.24, 0.23, 0.40},
    {"Qwen2.5-3B", 8, 8, 55.2, 0.30, 0.49, 0.10, 0.23, 0.23, 0.40},
    {"Qwen2.5-3B", 8, 16, 54.3, 0.30, 0.49, 0.10, 0.24, 0.23, 0.40},
    {"Qwen2.5-7B", 4, 4, 78.2, 0.32, 0.51, 0.11, 0.24, 0.24, 0.41},
    {"Qwen2.5-7B", 4, 8, 77.3, 0.32, 0.50, 0.11, 0.24, 0.24, 0.40},
    {"Qwen2.5-7B", 4, 16, 78.3, 0.32, 0.51, 0.11, 0.25, 0.24, 0.41},
    {"Qwen2.5-7B", 8, 4, 77.2, 0.32, 0.50, 0.11, 0.24, 0.24, 0.40},
    {"Qwen2.5-7B", 8, 8, 77.3, 0.32, 0.50, 0.11, 0.24, 0.24, 0.41},
    {"Qwen2.5-7B", 8, 16, 77.3, 0.32, 0.50, 0.11, 0.24, 0.24, 0.41},
    {"Qwen2.5-14B", 4, 4, 147.6, 0.33, 0.51, 0.12, 0.26, 0.25, 0.42},
    {"Qwen2.5-14B", 4, 8, 147.8, 0.33, 0.52, 0.12, 0.26, 0.25, 0.43},
    {"Qwen2.5-14B", 4, 16, 161.3, 0.33, 0.51, 0.12, 0.25, 0.25, 0.42},
    {"Qwen2.5-14B", 8, 4, 154.6, 0.33, 0.51, 0.12, 0.26, 0.25, 0.43},
    {"Qwen2.5-14B", 8, 8, 152.5, 0.33, 0.52, 0.12, 0.26, 0.25, 0.42},
    {"Qwen2.5-14B", 8, 16, 158.4, 0.33, 0.51, 0.12, 0.26, 0.25, 0.43},
    {"Llama-3.2-1B", 4, 4, 37.3, 0.26, 0.49, 0.08, 0.24, 0.18, 0.40},
    {"Llama-3.2-1B", 4, 8, 38.1, 0.26, 0.49, 0.08, 0.23, 0.18, 0.39},
    {"Llama-3.2-1B", 4, 16, 37.5, 0.26, 0.48, 0.08, 0.23, 0.18, 0.40},
    {"Llama-3.2-1B", 8, 4, 37.6, 0.26, 0.49, 0.08, 0.23, 0.18, 0.40},
    {"Llama-3.2-1B", 8, 8, 39.2, 0.26, 0.49, 0.08, 0.23, 0.18, 0.40},
    {"Llama-3.2-1B", 8, 16, 36.4, 0.26, 0.49, 0.08, 0.23, 0.18, 0.40},
    {"Llama-3.2-3B", 4, 4, 73.2, 0.28, 0.50, 0.10, 0.25, 0.23, 0.41},
    {"Llama-3.2-3B", 4, 8, 71.8, 0.28, 0.49, 0.10, 0.24, 0.23, 0.41},
    {"Llama-3.2-3B", 4, 16, 72.3, 0.28, 0.49, 0.10, 0.24, 0.23, 0.40},
    {"Llama-3.2-3B", 8, 4, 70.3, 0.28, 0.50, 0.10, 0.25, 0.23, 0.41},
    {"Llama-3.2-3B", 8, 8, 70.2, 0.28, 0.47, 0.10, 0.23, 0.23, 0.39},
    {"Llama-3.2-3B", 8, 16, 68.6, 0.28, 0.48, 0.10, 0.23, 0.23, 0.39},
};

// ---------- text-to-SQL: 2 quant levels x ranks 4/8/16, EA + VES ----------

struct SqlRow {
  const char* model_id;
  int quant_bits;
  int lora_rank;
  double emissions_g;
  double base_ea, ft_ea;
  double base_ves, ft_ves;
};

const SqlRow kSqlRows[] = {
    {"Qwen2.5-0.5B", 4, 4, 30.9, 0.42, 0.73, 0.97, 0.98},
    {"Qwen2.5-0.5B", 4, 8, 30.96, 0.42, 0.74, 0.97, 0.98},
    {"Qwen2.5-0.5B", 4, 16, 30.98, 0.42, 0.75, 0.97, 0.98},
    {"Qwen2.5-0.5B", 8, 4, 30.71, 0.42, 0.72, 0.97, 0.98},
    {"Qwen2.5-0.5B", 8, 8, 31.16, 0.42, 0.73, 0.97, 0.98},
    {"Qwen2.5-0.5B", 8, 16, 31.06, 0.42, 0.72, 0.97, 0.98},
    {"Qwen2.5-3B", 4, 4, 78.11, 0.43, 0.79, 0.97, 0.98},
    {"Qwen2.5-3B", 4, 8, 77.94, 0.43, 0.81, 0.97, 0.99},
    {"Qwen2.5-3B", 4, 16, 75.36, 0.43, 0.79, 0.97, 0.98},
    {"Qwen2.5-3B", 8, 4, 77.69, 0.43, 0.79, 0.97, 0.99},
    {"Qwen2.5-3B", 8, 8, 77.23, 0.43, 0.79, 0.97, 0.98},
    {"Qwen2.5-3B", 8, 16, 73.75, 0.43, 0.79, 0.97, 0.98},
    {"Qwen2.5-7B", 4, 4, 123.2, 0.45, 0.76, 0.98, 0.99},
    {"Qwen2.5-7B", 4, 8, 122.67, 0.45, 0.79, 0.98, 0.98},
    {"Qwen2.5-7B", 4, 16, 122.84, 0.45, 0.77, 0.98, 0.99},
    {"Qwen2.5-7B", 8, 4, 122.86, 0.45, 0.78, 0.98, 0.99},
    {"Qwen2.5-7B", 8, 8, 122.85, 0.45, 0.77, 0.98, 0.98},
    {"Qwen2.5-7B", 8, 16, 122.09, 0.45, 0.77, 0.98, 0.98},
    {"Qwen2.5-14B", 4, 4, 237.31, 0.46, 0.81, 0.98, 0.99},
    {"Qwen2.5-14B", 4, 8, 234.2, 0.46, 0.81, 0.98, 0.98},
    {"Qwen2.5-14B", 4, 16, 235.9, 0.46, 0.81, 0.98, 0.99},
    {"Qwen2.5-14B", 8, 4, 236.69, 0.46, 0.82, 0.98, 0.99},
    {"Qwen2.5-14B", 8, 8, 235.97, 0.46, 0.81, 0.98, 0.99},
    {"Qwen2.5-14B", 8, 16, 234.85, 0.46, 0.81, 0.98, 0.99},
    {"Llama-3.2-1B", 4, 4, 53.35, 0.44, 0.74, 0.97, 0.98},
    {"Llama-3.2-1B", 4, 8, 48.56, 0.44, 0.75, 0.97, 0.98},
    {"Llama-3.2-1B", 4, 16, 49.72, 0.44, 0.74, 0.97, 0.98},
    {"Llama-3.2-1B", 8, 4, 52.69, 0.45, 0.75, 0.97, 0.98},
    {"Llama-3.2-1B", 8, 8, 51.49, 0.45, 0.75, 0.97, 0.98},
    {"Llama-3.2-1B", 8, 16, 51.86, 0.45, 0.75, 0.97, 0.98},
    {"Llama-3.2-3B", 4, 4, 107.03, 0.41, 0.78, 0.97, 0.99},
    {"Llama-3.2-3B", 4, 8, 96.25, 0.41, 0.79, 0.97, 0.98},
    {"Llama-3.2-3B", 4, 16, 96.94, 0.41, 0.78, 0.97, 0.98},
    {"Llama-3.2-3B", 8, 4, 104.36, 0.42, 0.77, 0.98, 0.99},
    {"Llama-3.2-3B", 8, 8, 94.42, 0.42, 0.78, 0.98, 0.98},
    {"Llama-3.2-3B", 8, 16, 94.48, 0.42, 0.79, 0.98, 0.98},
};

// ---------- trainable parameters by model size and rank ----------

const ParamRow kParamRows[] = {
    {"0.5B", 4, 0.18},  {"0.5B", 8, 0.36},  {"0.5B", 16, 0.72},  {"0.5B", 32, 1.43},
    {"1.0B", 4, 0.25},  {"1.0B", 8, 0.51},  {"1.0B", 16, 1.01},  {"1.0B", 32, 2.02},
    {"2.0B", 4, 0.36},  {"2.0B", 8, 0.72},  {"2.0B", 16, 1.43},  {"2.0B", 32, 2.86},
    {"3.0B", 4, 0.44},  {"3.0B", 8, 0.88},  {"3.0B", 16, 1.75},  {"3.0B", 32, 3.51},
    {"7.0B", 4, 0.67},  {"7.0B", 8, 1.34},  {"7.0B", 16, 2.68},  {"7.0B", 32, 5.35},
    {"11.0B", 4, 0.84}, {"11.0B", 8, 1.68}, {"11.0B", 16, 3.36}, {"11.0B", 32, 6.71},
    {"14.0B", 4, 0.95}, {"14.0B", 8, 1.89}, {"14.0B", 16, 3.79}, {"14.0B", 32, 7.57},
};

const std::pair<const char*, const char*> kModelSizes[] = {
    {"Qwen2.5-0.5B", "0.5B"}, {"Llama-3.2-1B", "1.0B"},  {"Qwen-VL-2B", "2.0B"},
    {"Qwen2.5-3B", "3.0B"},   {"Llama-3.2-3B", "3.0B"},  {"Qwen2.5-7B", "7.0B"},
    {"Qwen-VL-7B", "7.0B"},   {"Llama-3.2-11B", "11.0B"}, {"Qwen2.5-14B", "14.0B"},
};

double size_tp(const std::string& model_id, int rank) {
  const char* size = nullptr;
  for (const auto& [model, s] : kModelSizes) {
    if (model_id == model) size = s;
  }
  if (size == nullptr) fail(errc::missing_param_entry, "no size mapping for " + model_id);
  for (const ParamRow& row : kParamRows) {
    if (row.model_size == size && row.rank == rank) return row.tp_m;
  }
  fail(errc::missing_param_entry, "no param row for " + std::string(size) + " rank " + std::to_string(rank));
}

// ---------- published per-task summary columns ----------

const CegiSummaryRow kSummaryRows[] = {
    {Task::image_captioning, "Llama-3.2-11B", 3.92, 222.03, 66.67, 1.18},
    {Task::image_captioning, "Qwen-VL-2B", 1.67, 97.37, 120.83, 0.65},
    {Task::image_captioning, "Qwen-VL-7B", 3.12, 137.97, 166.67, 0.36},
    {Task::visual_qa, "Llama-3.2-11B", 3.92, 212.76, 166.67, 0.489},
    {Task::visual_qa, "Qwen-VL-2B", 1.67, 60.43, 1459.46, 0.034},
    {Task::visual_qa, "Qwen-VL-7B", 3.12, 78.33, 7396.67, 0.005},
    {Task::summarization, "Llama-3.2-1B", 0.59, 37.68, 87.82, 0.99},
    {Task::summarization, "Llama-3.2-3B", 1.02, 71.07, 74.40, 1.25},
    {Task::summarization, "Qwen2.5-0.5B", 0.36, 25.30, 84.06, 1.03},
    {Task::summarization, "Qwen2.5-14B", 2.21, 153.70, 55.56, 1.69},
    {Task::summarization, "Qwen2.5-3B", 1.02, 54.97, 65.00, 1.11},
    {Task::summarization, "Qwen2.5-7B", 1.56, 77.60, 57.29, 1.18},
    {Task::text_to_sql, "Llama-3.2-1B", 0.59, 51.28, 67.80, 1.77},
    {Task::text_to_sql, "Llama-3.2-3B", 1.02, 98.91, 88.39, 1.53},
    {Task::text_to_sql, "Qwen2.5-0.5B", 0.36, 30.96, 74.21, 1.43},
    {Task::text_to_sql, "Qwen2.5-14B", 2.21, 235.82, 76.45, 1.89},
    {Task::text_to_sql, "Qwen2.5-3B", 1.02, 76.68, 84.50, 1.22},
    {Task::text_to_sql, "Qwen2.5-7B", 1.56, 122.75, 71.85, 1.49},
};

// ---------- published gain tables ----------

// Per-config printed gains for the vision tasks: vs base and vs GPT-4o.
// The visual-QA GPT-4o column mixes the two published baselines; the
// reference recorded per cell is the one that reproduces the printed value
// (r8 of Qwen-VL-7B only reproduces under the 0.0013 baseline, and even then
// its printed value implies a target of 0.0733 against the printed 0.0732 —
// flagged, like the r16 cell whose inputs give 1972.97 against printed
// 1972.03).
struct VisionGainRow {
  const char* model_id;
  int lora_rank;
  double printed_vs_base;
  double gpt4o_reference;
  double printed_vs_gpt4o;
  bool gpt4o_deviation;
};

const VisionGainRow kCaptioningGains[] = {
    {"Qwen-VL-2B", 8, 118.75, kCaptGpt4o, 118.75, false},
    {"Qwen-VL-2B", 16, 125.00, kCaptGpt4o, 125.00, false},
    {"Qwen-VL-2B", 32, 118.75, kCaptGpt4o, 118.75, false},
    {"Qwen-VL-7B", 8, 164.29, kCaptGpt4o, 131.25, false},
    {"Qwen-VL-7B", 16, 164.29, kCaptGpt4o, 131.25, false},
    {"Qwen-VL-7B", 32, 171.43, kCaptGpt4o, 137.50, false},
    {"Llama-3.2-11B", 8, 66.67, kCaptGpt4o, 87.50, false},
    {"Llama-3.2-11B", 16, 61.11, kCaptGpt4o, 81.25, false},
    {"Llama-3.2-11B", 32, 72.22, kCaptGpt4o, 93.75, false},
};

const VisionGainRow kVisualQaGains[] = {
    {"Qwen-VL-2B", 8, 1391.89, kVqaGpt4oText, 1391.89, false},
    {"Qwen-VL-2B", 16, 1500.00, kVqaGpt4oText, 1500.00, false},
    {"Qwen-VL-2B", 32, 1486.49, kVqaGpt4oText, 1486.49, false},
    {"Qwen-VL-7B", 8, 7220.00, kVqaGpt4oTable, 5538.46, true},
    {"Qwen-VL-7B", 16, 7570.00, kVqaGpt4oText, 1972.03, true},
    {"Qwen-VL-7B", 32, 7400.00, kVqaGpt4oText, 1927.02, false},
    {"Llama-3.2-11B", 8, 133.33, kVqaGpt4oText, -62.16, false},
    {"Llama-3.2-11B", 16, 183.33, kVqaGpt4oText, -54.05, false},
    {"Llama-3.2-11B", 32, 183.33, kVqaGpt4oText, -54.05, false},
};

// Aggregate per-model rows of the summarization gain table. The published
// vs-base column is the gain of the printed average columns.
struct SummGainRow {
  const char* model_id;
  double avg_base, avg_ft;
  double printed_vs_base;
  double printed_vs_gpt4o;
};

const SummGainRow kSummGains[] = {
    {"Qwen2.5-0.5B", 0.23, 0.42, 82.61, 13.51}, {"Qwen2.5-3B", 0.30, 0.50, 66.67, 35.14},
    {"Qwen2.5-7B", 0.32, 0.50, 56.25, 35.14},   {"Qwen2.5-14B", 0.33, 0.51, 54.55, 37.84},
    {"Llama-3.2-1B", 0.26, 0.49, 88.46, 32.43}, {"Llama-3.2-3B", 0.28, 0.49, 75.00, 32.43},
};

// Aggregate per-model rows of the text-to-SQL gain table. The published
// vs-base column is the mean of per-config gains (matching the per-task
// summary table, which prints 67.80 / 88.39 where this table prints the
// flagged 67.84 / 88.36); the GPT-4o column reproduces only against the
// 0.81 reference.
struct SqlGainRow {
  const char* model_id;
  double printed_vs_base;
  bool base_deviation;
  double printed_vs_gpt4o;
};

const SqlGainRow kSqlGains[] = {
    {"Qwen2.5-0.5B", 74.21, false, -9.67}, {"Qwen2.5-3B", 84.50, false, -2.06},
    {"Qwen2.5-7B", 71.85, false, -4.53},   {"Qwen2.5-14B", 76.45, false, 0.21},
    {"Llama-3.2-1B", 67.84, true, -7.82},  {"Llama-3.2-3B", 88.36, true, -3.50},
};

// ---------- published emission annotations ----------

struct AnnotationSeed {
  Task task;
  const char* model_id;
  int quant_bits;
  int lora_rank;
  double emissions_g;
  double printed_pct;  // negative sentinel -1 => the "base" cell
  bool deviation;
};

constexpr double kBaseCell = -1.0;

const AnnotationSeed kAnnotationSeeds[] = {
    {Task::image_captioning, "Qwen-VL-2B", 4, 8, 95.5, kBaseCell, false},
    {Task::image_captioning, "Qwen-VL-2B", 4, 16, 97.8, 2.4, false},
    {Task::image_captioning, "Qwen-VL-2B", 4, 32, 98.8, 3.4, false},
    {Task::image_captioning, "Qwen-VL-7B", 4, 8, 137.8, 44.3, false},
    {Task::image_captioning, "Qwen-VL-7B", 4, 16, 137.9, 44.3, false},
    {Task::image_captioning, "Qwen-VL-7B", 4, 32, 138.2, 44.7, false},
    {Task::image_captioning, "Llama-3.2-11B", 4, 8, 222.11, 132.58, false},
    {Task::image_captioning, "Llama-3.2-11B", 4, 16, 222.46, 133.0, false},
    {Task::image_captioning, "Llama-3.2-11B", 4, 32, 221.51, 132.0, false},
    {Task::visual_qa, "Qwen-VL-2B", 4, 8, 60.1, kBaseCell, false},
    {Task::visual_qa, "Qwen-VL-2B", 4, 16, 60.7, 1.0, false},
    {Task::visual_qa, "Qwen-VL-2B", 4, 32, 60.5, 0.6, false},
    {Task::visual_qa, "Qwen-VL-7B", 4, 8, 78.8, 31.1, false},
    {Task::visual_qa, "Qwen-VL-7B", 4, 16, 77.3, 28.6, false},
    {Task::visual_qa, "Qwen-VL-7B", 4, 32, 78.9, 31.3, false},
    {Task::visual_qa, "Llama-3.2-11B", 4, 8, 212.82, 254.1, false},
    {Task::visual_qa, "Llama-3.2-11B", 4, 16, 211.57, 252.03, false},
    {Task::visual_qa, "Llama-3.2-11B", 4, 32, 213.9, 256.0, false},
    {Task::summarization, "Qwen2.5-0.5B", 8, 4, 25.2, kBaseCell, false},
    {Task::summarization, "Qwen2.5-0.5B", 8, 8, 25.3, 0.4, false},
    {Task::summarization, "Qwen2.5-0.5B", 8, 16, 25.4, 0.8, false},
    {Task::summarization, "Qwen2.5-3B", 8, 4, 54.3, 115.5, false},
    {Task::summarization, "Qwen2.5-3B", 8, 8, 55.2, 119.0, false},
    {Task::summarization, "Qwen2.5-3B", 8, 16, 54.3, 115.5, false},
    {Task::summarization, "Qwen2.5-7B", 8, 4, 77.2, 206.3, false},
    {Task::summarization, "Qwen2.5-7B", 8, 8, 77.3, 206.7, false},
    {Task::summarization, "Qwen2.5-7B", 8, 16, 77.3, 206.7, false},
    {Task::summarization, "Qwen2.5-14B", 8, 4, 154.6, 513.5, false},
    {Task::summarization, "Qwen2.5-14B", 8, 8, 152.5, 505.6, true},  // inputs give 505.16
    {Task::summarization, "Qwen2.5-14B", 8, 16, 158.4, 528.6, false},
    {Task::summarization, "Llama-3.2-1B", 8, 4, 37.6, 49.2, false},
    {Task::summarization, "Llama-3.2-1B", 8, 8, 39.2, 55.6, false},
    {Task::summarization, "Llama-3.2-1B", 8, 16, 36.4, 44.4, false},
    {Task::summarization, "Llama-3.2-3B", 8, 4, 70.3, 179.0, false},
    {Task::summarization, "Llama-3.2-3B", 8, 8, 70.2, 178.6, false},
    {Task::summarization, "Llama-3.2-3B", 8, 16, 68.6, 172.2, false},
    {Task::text_to_sql, "Qwen2.5-0.5B", 8, 4, 30.71, kBaseCell, false},
    {Task::text_to_sql, "Qwen2.5-0.5B", 8, 8, 31.16, 1.5, false},
    {Task::text_to_sql, "Qwen2.5-0.5B", 8, 16, 31.06, 1.1, false},
    {Task::text_to_sql, "Qwen2.5-3B", 8, 4, 77.69, 153.0, false},
    {Task::text_to_sql, "Qwen2.5-3B", 8, 8, 77.23, 151.5, false},
    {Task::text_to_sql, "Qwen2.5-3B", 8, 16, 73.75, 140.2, false},
    {Task::text_to_sql, "Qwen2.5-7B", 8, 4, 122.86, 300.1, false},
    {Task::text_to_sql, "Qwen2.5-7B", 8, 8, 122.85, 300.1, false},
    {Task::text_to_sql, "Qwen2.5-7B", 8, 16, 122.09, 297.5, false},
    // the 14B row was evidently annotated against an unrounded base (~30.70)
    {Task::text_to_sql, "Qwen2.5-14B", 8, 4, 236.69, 671.0, true},
    {Task::text_to_sql, "Qwen2.5-14B", 8, 8, 235.97, 668.5, true},
    {Task::text_to_sql, "Qwen2.5-14B", 8, 16, 234.85, 664.9, true},
    {Task::text_to_sql, "Llama-3.2-1B", 8, 4, 52.69, 71.6, false},
    {Task::text_to_sql, "Llama-3.2-1B", 8, 8, 51.49, 67.7, false},
    {Task::text_to_sql, "Llama-3.2-1B", 8, 16, 51.86, 68.9, false},
    {Task::text_to_sql, "Llama-3.2-3B", 8, 4, 104.36, 239.8, false},
    {Task::text_to_sql, "Llama-3.2-3B", 8, 8, 94.42, 207.4, false},
    {Task::text_to_sql, "Llama-3.2-3B", 8, 16, 94.48, 207.6, false},
};

const GreenerFigure kGreenerFigures[] = {
    {Task::text_to_sql, "Qwen2.5-0.5B", "Qwen2.5-14B", 7.62, false},
    {Task::visual_qa, "Qwen-VL-2B", "Llama-3.2-11B", 3.52, false},
    {Task::image_captioning, "Qwen-VL-2B", "Llama-3.2-11B", 2.28, false},
    // prose states 2.8x; the table emissions ratio computes to 6.08x
    {Task::summarization, "Qwen2.5-0.5B", "Qwen2.5-14B", 2.8, true},
};

std::vector<corpus::RunRecord> build_records() {
  std::vector<corpus::RunRecord> records;
  auto vision = [&](const VisionRow& row, Task task, metrics::Metric metric, double gpt4o) {
    corpus::RunRecord r;
    r.model_id = row.model_id;
    r.task = task;
    r.quant_bits = 4;
    r.lora_rank = row.lora_rank;
    r.metric = metric;
    r.base_score = row.base_score;
    r.ft_score = row.ft_score;
    r.gpt4o_score = gpt4o;
    r.emissions_g = row.emissions_g;
    r.trainable_params_m = size_tp(r.model_id, r.lora_rank);
    r.runs = kRunsAveraged;
    records.push_back(std::move(r));
  };
  for (const VisionRow& row : kCaptioningRows) {
    vision(row, Task::image_captioning, metrics::Metric::spice, kCaptGpt4o);
  }
  for (const VisionRow& row : kVisualQaRows) {
    vision(row, Task::visual_qa, metrics::Metric::bleu, kVqaGpt4oTable);
  }
  for (const SummRougeRow& row : kSummRows) {
    corpus::RunRecord r;
    r.model_id = row.model_id;
    r.task = Task::summarization;
    r.quant_bits = row.quant_bits;
    r.lora_rank = row.lora_rank;
    r.metric = metrics::Metric::rouge1;
    r.base_score = row.base_r1;
    r.ft_score = row.ft_r1;
    r.gpt4o_score = kSummGpt4o;
    r.emissions_g = row.emissions_g;
    r.trainable_params_m = size_tp(r.model_id, r.lora_rank);
    r.runs = kRunsAveraged;
    records.push_back(std::move(r));
  }
  for (const SqlRow& row : kSqlRows) {
    corpus::RunRecord ea;
    ea.model_id = row.model_id;
    ea.task = Task::text_to_sql;
    ea.quant_bits = row.quant_bits;
    ea.lora_rank = row.lora_rank;
    ea.metric = metrics::Metric::ea;
    ea.base_score = row.base_ea;
    ea.ft_score = row.ft_ea;
    ea.gpt4o_score = kSqlGpt4oPrinted;
    ea.emissions_g = row.emissions_g;
    ea.trainable_params_m = size_tp(ea.model_id, ea.lora_rank);
    ea.runs = kRunsAveraged;
    corpus::RunRecord ves = ea;
    ves.metric = metrics::Metric::ves;
    ves.base_score = row.base_ves;
    ves.ft_score = row.ft_ves;
    ves.gpt4o_score = 0.98;
    records.push_back(std::move(ea));
    records.push_back(std::move(ves));
  }
  return records;
}

std::vector<GainCell> build_gain_cells() {
  std::vector<GainCell> cells;
  auto vision_rows = [&](Task task, const VisionRow* data, const VisionGainRow* gains, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      const VisionRow& row = data[i];
      const VisionGainRow& g = gains[i];
      cells.push_back(GainCell{task, row.model_id, row.lora_rank, ReferenceKind::base,
                               g.printed_vs_base, false,
                               {GainPair{row.base_score, row.ft_score}}});
      cells.push_back(GainCell{task, row.model_id, row.lora_rank, ReferenceKind::gpt4o,
                               g.printed_vs_gpt4o, g.gpt4o_deviation,
                               {GainPair{g.gpt4o_reference, row.ft_score}}});
    }
  };
  vision_rows(Task::image_captioning, kCaptioningRows, kCaptioningGains,
              std::size(kCaptioningRows));
  vision_rows(Task::visual_qa, kVisualQaRows, kVisualQaGains, std::size(kVisualQaRows));

  for (const SummGainRow& g : kSummGains) {
    cells.push_back(GainCell{Task::summarization, g.model_id, 0, ReferenceKind::base,
                             g.printed_vs_base, false, {GainPair{g.avg_base, g.avg_ft}}});
    cells.push_back(GainCell{Task::summarization, g.model_id, 0, ReferenceKind::gpt4o,
                             g.printed_vs_gpt4o, false, {GainPair{kSummGpt4o, g.avg_ft}}});
  }
  for (const SqlGainRow& g : kSqlGains) {
    std::vector<GainPair> base_pairs;
    double ft_sum = 0.0;
    int count = 0;
    for (const SqlRow& row : kSqlRows) {
      if (g.model_id == std::string_view(row.model_id)) {
        base_pairs.push_back(GainPair{row.base_ea, row.ft_ea});
        ft_sum += row.ft_ea;
        ++count;
      }
    }
    cells.push_back(GainCell{Task::text_to_sql, g.model_id, 0, ReferenceKind::base,
                             g.printed_vs_base, g.base_deviation, std::move(base_pairs)});
    cells.push_back(GainCell{Task::text_to_sql, g.model_id, 0, ReferenceKind::gpt4o,
                             g.printed_vs_gpt4o, false,
                             {GainPair{kSqlGpt4oGainsRef, ft_sum / count}}});
  }
  return cells;
}

std::vector<AnnotationCell> build_annotation_cells() {
  std::vector<AnnotationCell> cells;
  for (const AnnotationSeed& seed : kAnnotationSeeds) {
    AnnotationCell cell;
    cell.task = seed.task;
    cell.model_id = seed.model_id;
    cell.quant_bits = seed.quant_bits;
    cell.lora_rank = seed.lora_rank;
    cell.emissions_g = seed.emissions_g;
    cell.is_base = seed.printed_pct == kBaseCell;
    cell.printed_pct = cell.is_base ? 0.0 : seed.printed_pct;
    cell.print_deviation = seed.deviation;
    cells.push_back(std::move(cell));
  }
  return cells;
}

}  // namespace

const std::vector<SummRougeRow>& summarization_rouge_rows() {
  static const std::vector<SummRougeRow> rows(std::begin(kSummRows), std::end(kSummRows));
  return rows;
}

const std::vector<ParamRow>& param_table_rows() {
  static const std::vector<ParamRow> rows(std::begin(kParamRows), std::end(kParamRows));
  return rows;
}

const std::vector<CegiSummaryRow>& cegi_summary_rows() {
  static const std::vector<CegiSummaryRow> rows(std::begin(kSummaryRows), std::end(kSummaryRows));
  return rows;
}

const std::vector<GainCell>& gain_table_cells() {
  static const std::vector<GainCell> cells = build_gain_cells();
  return cells;
}

const std::vector<AnnotationCell>& emission_annotation_cells() {
  static const std::vector<AnnotationCell> cells = build_annotation_cells();
  return cells;
}

const std::vector<GreenerFigure>& greener_figures() {
  static const std::vector<GreenerFigure> figures(std::begin(kGreenerFigures),
                                                  std::end(kGreenerFigures));
  return figures;
}

double vqa_gpt4o_bleu_table() { return kVqaGpt4oTable; }
double vqa_gpt4o_bleu_text() { return kVqaGpt4oText; }
double sql_gpt4o_ea_printed() { return kSqlGpt4oPrinted; }
double sql_gpt4o_ea_gains_reference() { return kSqlGpt4oGainsRef; }

double published_cegi(Task task, const std::string& model_id) {
  for (const CegiSummaryRow& row : kSummaryRows) {
    if (row.task == task && model_id == row.model_id) return row.published_cegi;
  }
  fail(errc::empty_selection, "no published summary row for " + model_id);
}

lora::ParamTable paper_param_table() {
  lora::ParamTable table;
  for (const ParamRow& row : kParamRows) table.add(row.model_size, row.rank, row.tp_m);
  for (const auto& [model, size] : kModelSizes) table.add_alias(model, size);
  // published per-task mean (0.36m) diverges from the per-rank table's 0.42m
  table.set_mean_override("Qwen2.5-0.5B", 0.36);
  return table;
}

namespace {

// FNV-1a 64
std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  return hash;
}

std::string serialize_all() {
  std::ostringstream out;
  out << corpus::export_canonical(build_records());
  for (const GainCell& c : gain_table_cells()) {
    out << "gain|" << to_string(c.task) << '|' << c.model_id << '|' << c.lora_rank << '|'
        << analytics::to_string(c.reference) << '|' << format::sig(c.printed_gain_pct, 6) << '|'
        << (c.print_deviation ? 1 : 0);
    for (const GainPair& p : c.inputs) {
      out << '|' << format::sig(p.reference, 6) << ',' << format::sig(p.target, 6);
    }
    out << '\n';
  }
  for (const AnnotationCell& c : emission_annotation_cells()) {
    out << "annot|" << to_string(c.task) << '|' << c.model_id << '|' << c.quant_bits << '|'
        << c.lora_rank << '|' << format::sig(c.emissions_g, 6) << '|' << (c.is_base ? 1 : 0) << '|'
        << format::sig(c.printed_pct, 6) << '|' << (c.print_deviation ? 1 : 0) << '\n';
  }
  for (const CegiSummaryRow& r : cegi_summary_rows()) {
    out << "summary|" << to_string(r.task) << '|' << r.model_id << '|' << format::sig(r.mean_tp_m, 6)
        << '|' << format::sig(r.mean_emissions_g, 6) << '|' << format::sig(r.mean_gain_pct, 6) << '|'
        << format::sig(r.published_cegi, 6) << '\n';
  }
  for (const ParamRow& r : param_table_rows()) {
    out << "param|" << r.model_size << '|' << r.rank << '|' << format::sig(r.tp_m, 6) << '\n';
  }
  for (const SummRougeRow& r : summarization_rouge_rows()) {
    out << "rouge|" << r.model_id << '|' << r.quant_bits << '|' << r.lora_rank << '|'
        << format::sig(r.emissions_g, 6) << '|' << format::sig(r.base_r2, 6) << ','
        << format::sig(r.ft_r2, 6) << '|' << format::sig(r.base_rl, 6) << ',' << format::sig(r.ft_rl, 6)
        << '\n';
  }
  for (const GreenerFigure& g : greener_figures()) {
    out << "greener|" << to_string(g.task) << '|' << g.candidate_model << '|' << g.reference_model
        << '|' << format::sig(g.published_factor, 6) << '|' << (g.from_appendix_text ? 1 : 0) << '\n';
  }
  out << "baselines|" << format::sig(kVqaGpt4oTable, 6) << '|' << format::sig(kVqaGpt4oText, 6) << '|'
      << format::sig(kSqlGpt4oPrinted, 6) << '|' << format::sig(kSqlGpt4oGainsRef, 6) << '\n';
  return out.str();
}

}  // namespace

std::uint64_t fixture_checksum() { return fnv1a(serialize_all()); }

// Frozen over the serialization above; a change to any shipped value must be
// deliberate and re-recorded.
const std::uint64_t kRecordedChecksum = 0xFFFFFFFFFFFFFFFFull;  // placeholder until first freeze

corpus::Corpus load_paper_fixtures() {
  std::uint64_t actual = fixture_checksum();
  if (actual != kRecordedChecksum) {
    std::ostringstream msg;
    msg << "fixture checksum mismatch: computed 0x" << std::hex << actual << ", recorded 0x"
        << kRecordedChecksum;
    fail(errc::checksum_mismatch, msg.str());
  }
  corpus::Corpus corpus{build_records()};
  corpus.set_published(true);
  corpus.set_gpt4o_gains_reference(Task::image_captioning, kCaptGpt4o);
  corpus.set_gpt4o_gains_reference(Task::visual_qa, kVqaGpt4oText);
  corpus.set_gpt4o_gains_reference(Task::summarization, kSummGpt4o);
  corpus.set_gpt4o_gains_reference(Task::text_to_sql, kSqlGpt4oGainsRef);
  return corpus;
}

}  // namespace cegi::fixtures
