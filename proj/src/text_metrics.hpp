#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace cegi::metrics {

using TokenSequence = std::vector<std::string>;

// Lowercases and splits on maximal runs of non-alphanumeric characters
// (ASCII alnum; anything else, including multi-byte sequences, separates).
TokenSequence tokenize(std::string_view text);

struct PrfScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Clipped n-gram overlap. Zero-denominator components come back as 0.
PrfScore rouge_n(const TokenSequence& reference, const TokenSequence& hypothesis, int n);

// Longest-common-subsequence variant.
PrfScore rouge_l(const TokenSequence& reference, const TokenSequence& hypothesis);

// Geometric mean of modified n-gram precisions p_1..p_max_n. Any precision
// with a zero numerator gets add-one smoothing ((num+1)/(den+1)). Brevity
// penalty exp(1 - |ref|/|hyp|) applies when the hypothesis is shorter.
// Empty hypothesis scores 0.
double smoothed_bleu(const TokenSequence& reference, const TokenSequence& hypothesis, int max_n = 4);

enum class Metric { rouge1, rouge2, rougeL, bleu, spice, ea, ves };

Metric metric_from_string(std::string_view name);
const char* to_string(Metric metric);

// spice / ea / ves arrive as externally computed scores and are never
// produced by this module's scorers.
bool is_external(Metric metric);

struct MetricScore {
  Metric metric;
  double value = 0.0;
  bool external = false;
};

MetricScore ingest_external_score(Metric metric, double value);

// Scores a two-column TSV (reference<TAB>hypothesis, one pair per line).
// ROUGE metrics report F1; BLEU reports the smoothed score.
struct PairScores {
  Metric metric;
  std::vector<double> per_pair;
  double corpus_mean = 0.0;
};

PairScores score_pairs(std::istream& tsv, Metric metric);
PairScores score_pairs_file(const std::string& path, Metric metric);

}  // namespace cegi::metrics
