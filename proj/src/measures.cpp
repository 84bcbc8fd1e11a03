#include "lexatom/measures.hpp"

#include <cmath>

#include "lexatom/errors.hpp"

namespace lexatom {

PwcCombine pwc_combine_from_string(const std::string& s) {
    if (s == "product") return PwcCombine::Product;
    if (s == "sum") return PwcCombine::Sum;
    throw ArgumentError("unknown pwc_combine '" + s + "' (expected product or sum)");
}

const char* pwc_combine_name(PwcCombine c) {
    return c == PwcCombine::Product ? "product" : "sum";
}

namespace {

std::string pair_label(const CandidatePair& p) {
    return "[" + p.u + "," + p.v + "]";
}

uint64_t require_pair_freq(const FrequencyStore& store, const CandidatePair& pair) {
    uint64_t freq = store.fq_adjacent(pair.u, pair.v);
    if (freq == 0)
        throw DataError("FQ(" + pair_label(pair) + ") is zero; pair is not a counted candidate");
    return freq;
}

}  // namespace

PwcValues pwc(const FrequencyStore& store, const CandidatePair& pair, PwcCombine combine) {
    double pair_freq = static_cast<double>(require_pair_freq(store, pair));
    auto slot = store.candidate_index(pair.u, pair.v);
    if (!slot)
        throw DataError("no phrase context counted for " + pair_label(pair));
    PwcValues out;
    out.u = static_cast<double>(store.fq_phrase_context(pair.u, *slot)) / pair_freq;
    out.v = static_cast<double>(store.fq_phrase_context(pair.v, *slot)) / pair_freq;
    out.combined = combine == PwcCombine::Product ? out.u * out.v : out.u + out.v;
    return out;
}

double wa(const FrequencyStore& store, const CandidatePair& pair) {
    double pair_freq = static_cast<double>(require_pair_freq(store, pair));
    double window = static_cast<double>(store.fq_window(pair.u, pair.v));
    return (window - pair_freq) / pair_freq;
}

double cosine(const ContextVector& v1, const ContextVector& v2) {
    double dot = 0, n1 = 0, n2 = 0;
    for (const auto& [id, w] : v1.entries) n1 += w * w;
    for (const auto& [id, w] : v2.entries) n2 += w * w;
    if (n1 == 0 || n2 == 0) return 0.0;
    auto a = v1.entries.begin();
    auto b = v2.entries.begin();
    while (a != v1.entries.end() && b != v2.entries.end()) {
        if (a->first < b->first) {
            ++a;
        } else if (b->first < a->first) {
            ++b;
        } else {
            dot += a->second * b->second;
            ++a;
            ++b;
        }
    }
    return dot / (std::sqrt(n1) * std::sqrt(n2));
}

CsValues cs(const ContextVector& pair_vec, const ContextVector& u_vec,
            const ContextVector& v_vec) {
    if (pair_vec.weighting != u_vec.weighting || pair_vec.weighting != v_vec.weighting)
        throw ArgumentError("context vectors mix weighting modes");
    CsValues out;
    out.u = cosine(pair_vec, u_vec);
    out.v = cosine(pair_vec, v_vec);
    out.combined = out.u + out.v;
    return out;
}

double mi(const FrequencyStore& store, const CandidatePair& pair) {
    if (store.total_tokens == 0) throw DataError("mi over an empty corpus");
    uint64_t pair_freq = require_pair_freq(store, pair);
    uint64_t fu = store.fq(pair.u);
    uint64_t fv = store.fq(pair.v);
    if (fu == 0 || fv == 0)
        throw DataError("zero unigram frequency for a word of " + pair_label(pair));
    double t = static_cast<double>(store.total_tokens);
    double p_pair = static_cast<double>(pair_freq) / t;
    double p_u = static_cast<double>(fu) / t;
    double p_v = static_cast<double>(fv) / t;
    return std::log2(p_pair / (p_u * p_v));
}

std::vector<ScoreRecord> score_all(const FrequencyStore& store, const ScoreOptions& opts) {
    std::vector<ScoreRecord> records;
    records.reserve(store.candidates.size());
    for (size_t k = 0; k < store.candidates.size(); ++k) {
        const CandidatePair& pair = store.candidates[k];
        try {
            ScoreRecord rec;
            rec.pair = pair;
            rec.degenerate = pair.u == pair.v;
            PwcValues p = pwc(store, pair, opts.pwc_combine);
            rec.pwc_u = p.u;
            rec.pwc_v = p.v;
            rec.pwc_combined = p.combined;
            rec.wa = wa(store, pair);
            ContextVector pair_vec = store.context_vector_pair(k, opts.weighting, opts.log_base);
            ContextVector u_vec =
                store.context_vector_word(pair.u, opts.weighting, opts.log_base);
            ContextVector v_vec =
                store.context_vector_word(pair.v, opts.weighting, opts.log_base);
            CsValues c = cs(pair_vec, u_vec, v_vec);
            rec.cs_u = c.u;
            rec.cs_v = c.v;
            rec.cs_combined = c.combined;
            rec.mi = mi(store, pair);
            records.push_back(std::move(rec));
        } catch (const DataError& e) {
            throw DataError(pair_label(pair) + ": " + e.what());
        }
    }
    return records;
}

}  // namespace lexatom
