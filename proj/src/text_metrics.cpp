#include "text_metrics.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>

#include "error.hpp"

namespace cegi::metrics {

TokenSequence tokenize(std::string_view text) {
  TokenSequence tokens;
  std::string current;
  for (unsigned char c : text) {
    if (std::isalnum(c) && c < 0x80) {
      current.push_back(static_cast<char>(std::tolower(c)));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

namespace {

// n-grams keyed by their tokens joined with a separator byte that tokenize
// can never emit.
std::map<std::string, int> ngram_counts(const TokenSequence& tokens, int n) {
  std::map<std::string, int> counts;
  if (n < 1 || tokens.size() < static_cast<std::size_t>(n)) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    std::string key = tokens[i];
    for (int j = 1; j < n; ++j) {
      key.push_back('\x1f');
      key += tokens[i + j];
    }
    ++counts[key];
  }
  return counts;
}

std::size_t ngram_total(const TokenSequence& tokens, int n) {
  return tokens.size() >= static_cast<std::size_t>(n) ? tokens.size() - n + 1 : 0;
}

PrfScore prf_from_overlap(double overlap, std::size_t hyp_total, std::size_t ref_total) {
  PrfScore s;
  s.precision = hyp_total > 0 ? overlap / static_cast<double>(hyp_total) : 0.0;
  s.recall = ref_total > 0 ? overlap / static_cast<double>(ref_total) : 0.0;
  s.f1 = (s.precision + s.recall) > 0 ? 2.0 * s.precision * s.recall / (s.precision + s.recall) : 0.0;
  return s;
}

}  // namespace

PrfScore rouge_n(const TokenSequence& reference, const TokenSequence& hypothesis, int n) {
  if (n < 1) fail(errc::invalid_argument, "n must be >= 1");
  auto ref_counts = ngram_counts(reference, n);
  auto hyp_counts = ngram_counts(hypothesis, n);
  double overlap = 0.0;
  for (const auto& [gram, count] : hyp_counts) {
    auto it = ref_counts.find(gram);
    if (it != ref_counts.end()) overlap += std::min(count, it->second);
  }
  return prf_from_overlap(overlap, ngram_total(hypothesis, n), ngram_total(reference, n));
}

PrfScore rouge_l(const TokenSequence& reference, const TokenSequence& hypothesis) {
  const std::size_t nr = reference.size();
  const std::size_t nh = hypothesis.size();
  std::size_t lcs = 0;
  if (nr > 0 && nh > 0) {
    // rolling-row DP
    std::vector<std::size_t> prev(nh + 1, 0), curr(nh + 1, 0);
    for (std::size_t i = 1; i <= nr; ++i) {
      for (std::size_t j = 1; j <= nh; ++j) {
        if (reference[i - 1] == hypothesis[j - 1]) {
          curr[j] = prev[j - 1] + 1;
        } else {
          curr[j] = std::max(prev[j], curr[j - 1]);
        }
      }
      std::swap(prev, curr);
    }
    lcs = prev[nh];
  }
  return prf_from_overlap(static_cast<double>(lcs), nh, nr);
}

double smoothed_bleu(const TokenSequence& reference, const TokenSequence& hypothesis, int max_n) {
  if (max_n < 1) fail(errc::invalid_argument, "max_n must be >= 1");
  if (hypothesis.empty()) return 0.0;
  double log_sum = 0.0;
  for (int n = 1; n <= max_n; ++n) {
    auto ref_counts = ngram_counts(reference, n);
    auto hyp_counts = ngram_counts(hypothesis, n);
    double num = 0.0;
    for (const auto& [gram, count] : hyp_counts) {
      auto it = ref_counts.find(gram);
      if (it != ref_counts.end()) num += std::min(count, it->second);
    }
    double den = static_cast<double>(ngram_total(hypothesis, n));
    if (num == 0.0) {
      num += 1.0;
      den += 1.0;
    }
    log_sum += std::log(num / den);
  }
  double score = std::exp(log_sum / max_n);
  if (hypothesis.size() < reference.size()) {
    score *= std::exp(1.0 - static_cast<double>(reference.size()) / static_cast<double>(hypothesis.size()));
  }
  return score;
}

Metric metric_from_string(std::string_view name) {
  if (name == "rouge1") return Metric::rouge1;
  if (name == "rouge2") return Metric::rouge2;
  if (name == "rougeL") return Metric::rougeL;
  if (name == "bleu") return Metric::bleu;
  if (name == "spice") return Metric::spice;
  if (name == "ea") return Metric::ea;
  if (name == "ves") return Metric::ves;
  fail(errc::unknown_metric, "unknown metric '" + std::string(name) + "'");
}

const char* to_string(Metric metric) {
  switch (metric) {
    case Metric::rouge1: return "rouge1";
    case Metric::rouge2: return "rouge2";
    case Metric::rougeL: return "rougeL";
    case Metric::bleu: return "bleu";
    case Metric::spice: return "spice";
    case Metric::ea: return "ea";
    case Metric::ves: return "ves";
  }
  return "?";
}

bool is_external(Metric metric) {
  return metric == Metric::spice || metric == Metric::ea || metric == Metric::ves;
}

MetricScore ingest_external_score(Metric metric, double value) {
  if (!is_external(metric)) {
    fail(errc::invalid_argument, std::string(to_string(metric)) + " is computed, not ingested");
  }
  if (!(value >= 0.0 && value <= 1.0)) {
    fail(errc::out_of_range, std::string(to_string(metric)) + " score " + std::to_string(value) +
                                 " outside [0, 1]");
  }
  return MetricScore{metric, value, true};
}

PairScores score_pairs(std::istream& tsv, Metric metric) {
  if (is_external(metric)) {
    fail(errc::external_only_metric,
         std::string(to_string(metric)) + " is an external-only metric; it cannot be computed here");
  }
  PairScores result;
  result.metric = metric;
  std::string line;
  int line_no = 0;
  while (std::getline(tsv, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      fail(errc::decode_error, "line " + std::to_string(line_no) + ": expected reference<TAB>hypothesis");
    }
    TokenSequence ref = tokenize(std::string_view(line).substr(0, tab));
    TokenSequence hyp = tokenize(std::string_view(line).substr(tab + 1));
    double value = 0.0;
    switch (metric) {
      case Metric::rouge1: value = rouge_n(ref, hyp, 1).f1; break;
      case Metric::rouge2: value = rouge_n(ref, hyp, 2).f1; break;
      case Metric::rougeL: value = rouge_l(ref, hyp).f1; break;
      case Metric::bleu: value = smoothed_bleu(ref, hyp); break;
      default: fail(errc::external_only_metric, "unreachable");
    }
    result.per_pair.push_back(value);
  }
  if (!result.per_pair.empty()) {
    double sum = 0.0;
    for (double v : result.per_pair) sum += v;
    result.corpus_mean = sum / static_cast<double>(result.per_pair.size());
  }
  return result;
}

PairScores score_pairs_file(const std::string& path, Metric metric) {
  std::ifstream in(path);
  if (!in) fail(errc::io_error, "cannot open pairs file '" + path + "'");
  return score_pairs(in, metric);
}

}  // namespace cegi::metrics
