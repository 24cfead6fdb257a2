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

#ifndef BTFORGE_METRICS_LEXICAL_HPP_
#define BTFORGE_METRICS_LEXICAL_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace btforge::metrics {

// Frozen tokenization rule for the lexical metrics: whitespace separates
// tokens; each of < > " ' is emitted as its own single-character token.
// No case folding. Scores are reproducible bit-for-bit under this rule.
std::vector<std::string> tokenize(std::string_view text);

// Sentence BLEU, n-grams up to min(4, |hypothesis|), uniform weights,
// brevity penalty exp(1 - |ref|/|hyp|) when the hypothesis is shorter.
// Zero match counts for n >= 2 are smoothed add-one: (m+1)/(t+1).
// An empty hypothesis or reference scores 0 by convention.
double bleu(const std::vector<std::string>& hypothesis,
            const std::vector<std::string>& reference);
double bleu_text(std::string_view hypothesis, std::string_view reference);

struct RougeScores {
  double rouge_1 = 0.0;
  double rouge_2 = 0.0;
  double rouge_l = 0.0;
  double rouge_lsum = 0.0;
};

// F1 variants of unigram, bigram, LCS and summary-level LCS overlap.
// rouge_lsum treats each input line as one sentence. Two empty inputs
// score 1.0 on every variant; a single empty side scores 0.
RougeScores rouge(std::string_view hypothesis, std::string_view reference);

// Shared internals, exposed for oracle tests.
double lcs_length(const std::vector<std::string>& a,
                  const std::vector<std::string>& b);
double ngram_f1(const std::vector<std::string>& hypothesis,
                const std::vector<std::string>& reference, size_t n);

}  // namespace btforge::metrics

#endif  // BTFORGE_METRICS_LEXICAL_HPP_
