// Copyright 2026 The btforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "btforge/metrics/lexical.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace btforge::metrics {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
         c == '\v';
}

bool is_boundary(char c) {
  return c == '<' || c == '>' || c == '"' || c == '\'';
}

// n-gram multiset, keyed by the joined token span.
std::map<std::string, int> ngram_counts(const std::vector<std::string>& tokens,
                                        size_t n) {
  std::map<std::string, int> counts;
  if (tokens.size() < n) return counts;
  for (size_t i = 0; i + n <= tokens.size(); ++i) {
    std::string key;
    for (size_t j = 0; j < n; ++j) {
      if (j > 0) key.push_back('\x1f');
      key += tokens[i + j];
    }
    ++counts[key];
  }
  return counts;
}

size_t clipped_matches(const std::map<std::string, int>& hyp,
                       const std::map<std::string, int>& ref) {
  size_t matches = 0;
  for (const auto& [gram, count] : hyp) {
    auto it = ref.find(gram);
    if (it != ref.end()) {
      matches += static_cast<size_t>(std::min(count, it->second));
    }
  }
  return matches;
}

double f1(double precision, double recall) {
  if (precision + recall == 0.0) return 0.0;
  return 2.0 * precision * recall / (precision + recall);
}

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      lines.emplace_back(text.substr(start));
      break;
    }
    lines.emplace_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

// Indices of `ref` covered by one LCS alignment with `hyp`.
std::set<size_t> lcs_ref_indices(const std::vector<std::string>& ref,
                                 const std::vector<std::string>& hyp) {
  size_t m = ref.size();
  size_t n = hyp.size();
  std::vector<std::vector<int>> dp(m + 1, std::vector<int>(n + 1, 0));
  for (size_t i = 1; i <= m; ++i) {
    for (size_t j = 1; j <= n; ++j) {
      dp[i][j] = ref[i - 1] == hyp[j - 1]
                     ? dp[i - 1][j - 1] + 1
                     : std::max(dp[i - 1][j], dp[i][j - 1]);
    }
  }
  std::set<size_t> indices;
  size_t i = m;
  size_t j = n;
  while (i > 0 && j > 0) {
    if (ref[i - 1] == hyp[j - 1]) {
      indices.insert(i - 1);
      --i;
      --j;
    } else if (dp[i - 1][j] >= dp[i][j - 1]) {
      --i;
    } else {
      --j;
    }
  }
  return indices;
}

// Summary-level LCS with token clipping, one line per sentence.
double summary_lcs_f1(const std::vector<std::vector<std::string>>& hyp_lines,
                      const std::vector<std::vector<std::string>>& ref_lines) {
  size_t hyp_total = 0;
  size_t ref_total = 0;
  std::map<std::string, int> hyp_counts;
  std::map<std::string, int> ref_counts;
  for (const auto& line : hyp_lines) {
    hyp_total += line.size();
    for (const std::string& token : line) ++hyp_counts[token];
  }
  for (const auto& line : ref_lines) {
    ref_total += line.size();
    for (const std::string& token : line) ++ref_counts[token];
  }
  if (hyp_total == 0 && ref_total == 0) return 1.0;
  if (hyp_total == 0 || ref_total == 0) return 0.0;

  size_t hits = 0;
  for (const auto& ref_line : ref_lines) {
    std::set<size_t> covered;
    for (const auto& hyp_line : hyp_lines) {
      std::set<size_t> indices = lcs_ref_indices(ref_line, hyp_line);
      covered.insert(indices.begin(), indices.end());
    }
    for (size_t index : covered) {
      const std::string& token = ref_line[index];
      if (hyp_counts[token] > 0 && ref_counts[token] > 0) {
        ++hits;
        --hyp_counts[token];
        --ref_counts[token];
      }
    }
  }
  double precision = static_cast<double>(hits) / static_cast<double>(hyp_total);
  double recall = static_cast<double>(hits) / static_cast<double>(ref_total);
  return f1(precision, recall);
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  };
  for (char c : text) {
    if (is_space(c)) {
      flush();
    } else if (is_boundary(c)) {
      flush();
      tokens.emplace_back(1, c);
    } else {
      current.push_back(c);
    }
  }
  flush();
  return tokens;
}

double bleu(const std::vector<std::string>& hypothesis,
            const std::vector<std::string>& reference) {
  if (hypothesis.empty() || reference.empty()) return 0.0;

  size_t max_n = std::min<size_t>(4, hypothesis.size());
  double log_sum = 0.0;
  for (size_t n = 1; n <= max_n; ++n) {
    auto hyp_counts = ngram_counts(hypothesis, n);
    auto ref_counts = ngram_counts(reference, n);
    double total = static_cast<double>(hypothesis.size() - n + 1);
    double matches = static_cast<double>(clipped_matches(hyp_counts, ref_counts));
    double precision;
    if (matches > 0.0) {
      precision = matches / total;
    } else if (n >= 2) {
      precision = (matches + 1.0) / (total + 1.0);
    } else {
      return 0.0;  // zero unigram overlap
    }
    log_sum += std::log(precision);
  }
  double geometric_mean = std::exp(log_sum / static_cast<double>(max_n));

  double h = static_cast<double>(hypothesis.size());
  double r = static_cast<double>(reference.size());
  double brevity = h >= r ? 1.0 : std::exp(1.0 - r / h);
  return brevity * geometric_mean;
}

double bleu_text(std::string_view hypothesis, std::string_view reference) {
  return bleu(tokenize(hypothesis), tokenize(reference));
}

double lcs_length(const std::vector<std::string>& a,
                  const std::vector<std::string>& b) {
  if (a.empty() || b.empty()) return 0.0;
  std::vector<std::vector<int>> dp(a.size() + 1,
                                   std::vector<int>(b.size() + 1, 0));
  for (size_t i = 1; i <= a.size(); ++i) {
    for (size_t j = 1; j <= b.size(); ++j) {
      dp[i][j] = a[i - 1] == b[j - 1] ? dp[i - 1][j - 1] + 1
                                      : std::max(dp[i - 1][j], dp[i][j - 1]);
    }
  }
  return static_cast<double>(dp[a.size()][b.size()]);
}

double ngram_f1(const std::vector<std::string>& hypothesis,
                const std::vector<std::string>& reference, size_t n) {
  size_t hyp_total = hypothesis.size() >= n ? hypothesis.size() - n + 1 : 0;
  size_t ref_total = reference.size() >= n ? reference.size() - n + 1 : 0;
  if (hyp_total == 0 && ref_total == 0) return 1.0;
  if (hyp_total == 0 || ref_total == 0) return 0.0;
  size_t matches =
      clipped_matches(ngram_counts(hypothesis, n), ngram_counts(reference, n));
  double precision = static_cast<double>(matches) / static_cast<double>(hyp_total);
  double recall = static_cast<double>(matches) / static_cast<double>(ref_total);
  return f1(precision, recall);
}

RougeScores rouge(std::string_view hypothesis, std::string_view reference) {
  std::vector<std::string> hyp = tokenize(hypothesis);
  std::vector<std::string> ref = tokenize(reference);

  RougeScores scores;
  if (hyp.empty() && ref.empty()) {
    scores.rouge_1 = scores.rouge_2 = scores.rouge_l = scores.rouge_lsum = 1.0;
    return scores;
  }
  if (hyp.empty() || ref.empty()) return scores;

  scores.rouge_1 = ngram_f1(hyp, ref, 1);
  scores.rouge_2 = ngram_f1(hyp, ref, 2);

  double lcs = lcs_length(hyp, ref);
  scores.rouge_l = f1(lcs / static_cast<double>(hyp.size()),
                      lcs / static_cast<double>(ref.size()));

  std::vector<std::vector<std::string>> hyp_lines;
  for (std::string_view line : split_lines(hypothesis)) {
    std::vector<std::string> tokens = tokenize(line);
    if (!tokens.empty()) hyp_lines.push_back(std::move(tokens));
  }
  std::vector<std::vector<std::string>> ref_lines;
  for (std::string_view line : split_lines(reference)) {
    std::vector<std::string> tokens = tokenize(line);
    if (!tokens.empty()) ref_lines.push_back(std::move(tokens));
  }
  scores.rouge_lsum = summary_lcs_f1(hyp_lines, ref_lines);
  return scores;
}

}  // namespace btforge::metrics
