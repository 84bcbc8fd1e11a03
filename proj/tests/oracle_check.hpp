#pragma once

// Engine-vs-oracle comparison used by both the unit tests and the acceptance
// suite. Returns an empty string when everything matches, else a description
// of the first mismatch.

#include <cmath>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "lexatom/counting.hpp"
#include "lexatom/measures.hpp"
#include "oracle.hpp"

namespace lexatom::testutil {

inline oracle::WordCounts to_word_counts(const FrequencyStore& store, const SparseCounts& rows) {
    oracle::WordCounts out;
    for (const auto& [id, count] : rows) out[store.words[id]] = count;
    return out;
}

inline std::string compare_store_oracle(const std::vector<TokenStream>& corpus,
                                        const FrequencyStore& store, int window_size,
                                        int top_k, uint64_t min_freq, uint64_t max_freq) {
    std::ostringstream err;
    oracle::Tables tables = oracle::count(corpus, window_size);

    if (store.total_tokens != tables.total_tokens)
        return "total_tokens: engine " + std::to_string(store.total_tokens) + " oracle " +
               std::to_string(tables.total_tokens);

    uint64_t uni_sum = 0;
    for (uint64_t c : store.unigram) uni_sum += c;
    if (uni_sum != tables.total_tokens) return "unigram sum rule violated";
    for (const auto& [word, count] : tables.unigram)
        if (store.fq(word) != count)
            return "unigram mismatch for '" + word + "'";
    if (store.words.size() != tables.unigram.size()) return "vocab size mismatch";

    uint64_t adj_sum_engine = 0, adj_sum_oracle = 0;
    for (const auto& [key, count] : store.adjacent) adj_sum_engine += count;
    for (const auto& [key, count] : tables.adjacent) {
        adj_sum_oracle += count;
        if (store.fq_adjacent(key.first, key.second) != count)
            return "adjacent mismatch for [" + key.first + "," + key.second + "]";
    }
    if (adj_sum_engine != adj_sum_oracle) return "adjacent table has extra rows";

    auto cands = oracle::candidates(tables, top_k, min_freq, max_freq);
    if (cands != store.candidates) return "candidate lists differ";

    // window rows: every oracle pair that touches a tracked owner must match,
    // and the engine's own rows must all be confirmed by the oracle.
    auto is_tracked = [&store](const std::string& w) {
        auto id = store.id_of(w);
        return id && store.word_context.count(*id) > 0;
    };
    for (const auto& [key, count] : tables.window) {
        if (!is_tracked(key.first) && !is_tracked(key.second)) continue;
        if (store.fq_window(key.first, key.second) != count)
            return "window mismatch for (" + key.first + ":" + key.second + ")";
    }
    for (const auto& [owner, rows] : store.word_context) {
        const std::string& ow = store.words[owner];
        oracle::WordCounts expect = oracle::word_context(corpus, ow, window_size);
        oracle::WordCounts got = to_word_counts(store, rows);
        if (got != expect) return "word context mismatch for '" + ow + "'";
    }

    for (size_t k = 0; k < store.candidates.size(); ++k) {
        const auto& pair = store.candidates[k];
        oracle::WordCounts expect = oracle::phrase_context(corpus, pair.u, pair.v, window_size);
        oracle::WordCounts got = to_word_counts(store, store.phrase_context[k]);
        if (got != expect)
            return "phrase context mismatch for [" + pair.u + "," + pair.v + "]";
    }
    return "";
}

inline bool close_rel(double a, double b, double tol) {
    if (a == b) return true;
    double scale = std::max(std::abs(a), std::abs(b));
    return std::abs(a - b) <= tol * std::max(scale, 1.0);
}

inline std::string compare_scores_oracle(const std::vector<TokenStream>& corpus,
                                         const FrequencyStore& store, int window_size, int top_k,
                                         uint64_t min_freq, uint64_t max_freq, Weighting wt,
                                         double tol) {
    ScoreOptions opts;
    opts.weighting = wt;
    opts.log_base = LogBase::Natural;
    opts.pwc_combine = PwcCombine::Product;
    auto got = score_all(store, opts);
    auto expect = oracle::score_all(corpus, window_size, top_k, min_freq, max_freq, wt,
                                    LogBase::Natural, PwcCombine::Product);
    if (got.size() != expect.size()) return "score count mismatch";
    for (size_t i = 0; i < got.size(); ++i) {
        const auto& g = got[i];
        const auto& e = expect[i];
        if (g.pair != e.pair) return "score order mismatch at " + std::to_string(i);
        auto bad = [&](const char* name, double a, double b) {
            return std::string("measure ") + name + " mismatch for [" + g.pair.u + "," +
                   g.pair.v + "]: engine " + std::to_string(a) + " oracle " + std::to_string(b);
        };
        if (!close_rel(g.pwc_u, e.pwc_u, tol)) return bad("pwc_u", g.pwc_u, e.pwc_u);
        if (!close_rel(g.pwc_v, e.pwc_v, tol)) return bad("pwc_v", g.pwc_v, e.pwc_v);
        if (!close_rel(g.pwc_combined, e.pwc_combined, tol))
            return bad("pwc_comb", g.pwc_combined, e.pwc_combined);
        if (!close_rel(g.wa, e.wa, tol)) return bad("wa", g.wa, e.wa);
        if (!close_rel(g.cs_u, e.cs_u, tol)) return bad("cs_u", g.cs_u, e.cs_u);
        if (!close_rel(g.cs_v, e.cs_v, tol)) return bad("cs_v", g.cs_v, e.cs_v);
        if (!close_rel(g.cs_combined, e.cs_combined, tol))
            return bad("cs_comb", g.cs_combined, e.cs_combined);
        if (!close_rel(g.mi, e.mi, tol)) return bad("mi", g.mi, e.mi);
    }
    return "";
}

}  // namespace lexatom::testutil
