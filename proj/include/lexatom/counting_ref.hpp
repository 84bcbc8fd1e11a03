#pragma once

// Serial reference implementations of the counting operations, one readable
// function per operation. The OpenMP engine in counting.hpp must agree with
// these on every corpus; tests and the benchmark hold it to that.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lexatom/counting.hpp"
#include "lexatom/corpus.hpp"

namespace lexatom::ref {

using StringCounts = std::map<std::string, uint64_t>;
using PairCounts = std::map<std::pair<std::string, std::string>, uint64_t>;

StringCounts count_unigrams(const std::vector<TokenStream>& corpus, uint64_t* total_tokens);

PairCounts count_adjacent_pairs(const std::vector<TokenStream>& corpus);

std::vector<CandidatePair> extract_candidates(const std::vector<TokenStream>& corpus,
                                              const CandidateOptions& opts);

// FQ(x:y): unordered occurrence pairs at distance <= N/2, each counted once.
uint64_t count_window_cooccurrence(const std::vector<TokenStream>& corpus,
                                   const std::string& x, const std::string& y, int window_size);

// FQ(w:[u,v]) for every w: windows around each (u,v) site, the two phrase
// positions themselves excluded.
StringCounts count_phrase_context(const std::vector<TokenStream>& corpus, const std::string& u,
                                  const std::string& v, int window_size);

// Context collection counts for a single word: windows around each occurrence,
// the occurrence position excluded (other occurrences of w do count).
StringCounts word_context_counts(const std::vector<TokenStream>& corpus, const std::string& w,
                                 int window_size);

}  // namespace lexatom::ref
