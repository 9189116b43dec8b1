#pragma once

// Brute-force reference implementations kept independent of the library code
// paths they check. Everything here favors obviousness over speed.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace oracles {

using Tokens = std::vector<std::string>;

// All contiguous n-grams as explicit token vectors.
inline std::vector<Tokens> enumerate_ngrams(const Tokens& tokens, int n) {
  std::vector<Tokens> grams;
  if (n < 1) return grams;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    grams.emplace_back(tokens.begin() + i, tokens.begin() + i + n);
  }
  return grams;
}

// Multiset intersection size by repeatedly removing matches from a copy.
inline std::size_t multiset_overlap(const Tokens& ref, const Tokens& hyp, int n) {
  std::vector<Tokens> ref_grams = enumerate_ngrams(ref, n);
  std::vector<Tokens> hyp_grams = enumerate_ngrams(hyp, n);
  std::size_t overlap = 0;
  for (const Tokens& gram : hyp_grams) {
    auto it = std::find(ref_grams.begin(), ref_grams.end(), gram);
    if (it != ref_grams.end()) {
      ref_grams.erase(it);
      ++overlap;
    }
  }
  return overlap;
}

// Longest common subsequence by enumerating every subsequence of `a` (2^|a|)
// and testing it against `b`. Keep |a| small.
inline std::size_t lcs_bruteforce(const Tokens& a, const Tokens& b) {
  auto is_subsequence = [](const Tokens& needle, const Tokens& haystack) {
    std::size_t i = 0;
    for (const std::string& tok : haystack) {
      if (i < needle.size() && needle[i] == tok) ++i;
    }
    return i == needle.size();
  };
  std::size_t best = 0;
  const std::size_t n = a.size();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    Tokens candidate;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) candidate.push_back(a[i]);
    }
    if (candidate.size() > best && is_subsequence(candidate, b)) best = candidate.size();
  }
  return best;
}

// Smoothed BLEU by direct enumeration, structured differently from the
// library implementation (explicit gram vectors, per-order products).
inline double bleu_bruteforce(const Tokens& ref, const Tokens& hyp, int max_n) {
  if (hyp.empty()) return 0.0;
  double product = 1.0;
  for (int n = 1; n <= max_n; ++n) {
    double numerator = static_cast<double>(multiset_overlap(ref, hyp, n));
    double denominator = static_cast<double>(enumerate_ngrams(hyp, n).size());
    if (numerator == 0.0) {
      numerator += 1.0;
      denominator += 1.0;
    }
    product *= numerator / denominator;
  }
  double score = std::pow(product, 1.0 / max_n);
  if (hyp.size() < ref.size()) {
    score *= std::exp(1.0 - static_cast<double>(ref.size()) / static_cast<double>(hyp.size()));
  }
  return score;
}

// Entry count of materialized rank factors: fills two matrices and counts.
inline long long materialized_entry_count(long long d, long long k, int r) {
  std::vector<std::vector<int>> b(d, std::vector<int>(r, 1));
  std::vector<std::vector<int>> a(r, std::vector<int>(k, 1));
  long long count = 0;
  for (const auto& row : b) count += static_cast<long long>(row.size());
  for (const auto& row : a) count += static_cast<long long>(row.size());
  return count;
}

// Deterministic token-sequence generator over a small alphabet.
inline Tokens random_tokens(std::mt19937_64& rng, std::size_t max_len, int alphabet) {
  static const char* kSymbols[] = {"a", "b", "c", "d", "e", "f"};
  std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
  std::uniform_int_distribution<int> sym_dist(0, alphabet - 1);
  Tokens out;
  std::size_t len = len_dist(rng);
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i) out.push_back(kSymbols[sym_dist(rng)]);
  return out;
}

// Every sequence of exactly `len` symbols over the alphabet, via odometer.
inline bool next_sequence(std::vector<int>& digits, int alphabet) {
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (++digits[i] < alphabet) return true;
    digits[i] = 0;
  }
  return false;
}

inline Tokens to_tokens(const std::vector<int>& digits) {
  static const char* kSymbols[] = {"a", "b", "c", "d", "e", "f"};
  Tokens out;
  out.reserve(digits.size());
  for (int d : digits) out.push_back(kSymbols[d]);
  return out;
}

}  // namespace oracles
