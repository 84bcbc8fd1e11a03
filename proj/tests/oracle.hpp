#pragma once

// Brute-force oracle: every quantity is recomputed by enumerating index pairs
// with the defining predicate, on string-keyed maps, with no shared code path
// into counting.cpp / counting_ref.cpp / measures.cpp. Deliberately O(n^2);
// only ever run on small corpora.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lexatom/corpus.hpp"
#include "lexatom/counting.hpp"
#include "lexatom/measures.hpp"

namespace lexatom::oracle {

using WordCounts = std::map<std::string, uint64_t>;
using PairCounts = std::map<std::pair<std::string, std::string>, uint64_t>;
using Vec = std::map<std::string, double>;

struct Tables {
    uint64_t total_tokens = 0;
    WordCounts unigram;
    PairCounts adjacent;
    PairCounts adjacent_noun_noun;
    PairCounts window;  // canonical x <= y; unordered occurrence pairs, once each
};

Tables count(const std::vector<TokenStream>& corpus, int window_size);

WordCounts phrase_context(const std::vector<TokenStream>& corpus, const std::string& u,
                          const std::string& v, int window_size);

WordCounts word_context(const std::vector<TokenStream>& corpus, const std::string& w,
                        int window_size);

std::vector<CandidatePair> candidates(const Tables& tables, int top_k, uint64_t min_freq,
                                      uint64_t max_freq);

Vec weigh(const WordCounts& counts, const WordCounts& unigram, Weighting wt, LogBase base);

double cosine(const Vec& a, const Vec& b);

struct Scores {
    CandidatePair pair;
    double pwc_u, pwc_v, pwc_combined;
    double wa;
    double cs_u, cs_v, cs_combined;
    double mi;
};

std::vector<Scores> score_all(const std::vector<TokenStream>& corpus, int window_size, int top_k,
                              uint64_t min_freq, uint64_t max_freq, Weighting wt, LogBase base,
                              PwcCombine combine);

}  // namespace lexatom::oracle
