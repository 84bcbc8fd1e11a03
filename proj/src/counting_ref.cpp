#include "lexatom/counting_ref.hpp"

#include <algorithm>

#include "lexatom/errors.hpp"

namespace lexatom::ref {

namespace {

void check_window(int window_size) {
    if (window_size < 2 || window_size % 2 != 0)
        throw ArgumentError("window_size must be even and >= 2, got " +
                            std::to_string(window_size));
}

std::vector<size_t> positions_of(const TokenStream& doc, const std::string& w) {
    std::vector<size_t> out;
    for (size_t i = 0; i < doc.tokens.size(); ++i)
        if (doc.tokens[i].surface == w) out.push_back(i);
    return out;
}

}  // namespace

StringCounts count_unigrams(const std::vector<TokenStream>& corpus, uint64_t* total_tokens) {
    StringCounts counts;
    uint64_t total = 0;
    for (const auto& doc : corpus) {
        total += doc.tokens.size();
        for (const auto& tok : doc.tokens) ++counts[tok.surface];
    }
    if (total_tokens) *total_tokens = total;
    return counts;
}

PairCounts count_adjacent_pairs(const std::vector<TokenStream>& corpus) {
    PairCounts counts;
    for (const auto& doc : corpus)
        for (size_t i = 0; i + 1 < doc.tokens.size(); ++i)
            ++counts[{doc.tokens[i].surface, doc.tokens[i + 1].surface}];
    return counts;
}

std::vector<CandidatePair> extract_candidates(const std::vector<TokenStream>& corpus,
                                              const CandidateOptions& opts) {
    if (opts.top_k <= 0)
        throw ArgumentError("top_k must be positive, got " + std::to_string(opts.top_k));
    if (opts.min_freq < 1 || opts.min_freq > opts.max_freq)
        throw ArgumentError("candidate frequency range must satisfy 1 <= min_freq <= max_freq");

    PairCounts total, noun_noun;
    for (const auto& doc : corpus) {
        for (size_t i = 0; i + 1 < doc.tokens.size(); ++i) {
            std::pair<std::string, std::string> key{doc.tokens[i].surface,
                                                    doc.tokens[i + 1].surface};
            ++total[key];
            if (doc.tokens[i].tag == Tag::Noun && doc.tokens[i + 1].tag == Tag::Noun)
                ++noun_noun[key];
        }
    }

    std::vector<CandidatePair> cands;
    for (const auto& [key, freq] : total) {
        auto nn = noun_noun.find(key);
        uint64_t nn_count = nn == noun_noun.end() ? 0 : nn->second;
        if (nn_count * 2 < freq) continue;  // majority of occurrences must be noun-noun
        if (freq < opts.min_freq || freq > opts.max_freq) continue;
        cands.push_back({key.first, key.second, freq});
    }
    std::sort(cands.begin(), cands.end(), [](const CandidatePair& a, const CandidatePair& b) {
        if (a.pair_freq != b.pair_freq) return a.pair_freq > b.pair_freq;
        if (a.u != b.u) return a.u < b.u;
        return a.v < b.v;
    });
    if (cands.size() > static_cast<size_t>(opts.top_k)) cands.resize(opts.top_k);
    return cands;
}

uint64_t count_window_cooccurrence(const std::vector<TokenStream>& corpus, const std::string& x,
                                   const std::string& y, int window_size) {
    check_window(window_size);
    const size_t half = window_size / 2;
    uint64_t count = 0;
    for (const auto& doc : corpus) {
        if (x == y) {
            auto pos = positions_of(doc, x);
            for (size_t a = 0; a < pos.size(); ++a)
                for (size_t b = a + 1; b < pos.size() && pos[b] - pos[a] <= half; ++b) ++count;
        } else {
            auto px = positions_of(doc, x);
            auto py = positions_of(doc, y);
            for (size_t i : px)
                for (size_t j : py)
                    if ((i > j ? i - j : j - i) <= half) ++count;
        }
    }
    return count;
}

StringCounts count_phrase_context(const std::vector<TokenStream>& corpus, const std::string& u,
                                  const std::string& v, int window_size) {
    check_window(window_size);
    const size_t half = window_size / 2;
    StringCounts counts;
    for (const auto& doc : corpus) {
        for (size_t i = 0; i + 1 < doc.tokens.size(); ++i) {
            if (doc.tokens[i].surface != u || doc.tokens[i + 1].surface != v) continue;
            size_t lo = i >= half ? i - half : 0;
            size_t hi = std::min(doc.tokens.size() - 1, i + 1 + half);
            for (size_t j = lo; j <= hi; ++j) {
                if (j == i || j == i + 1) continue;
                ++counts[doc.tokens[j].surface];
            }
        }
    }
    return counts;
}

StringCounts word_context_counts(const std::vector<TokenStream>& corpus, const std::string& w,
                                 int window_size) {
    check_window(window_size);
    const size_t half = window_size / 2;
    StringCounts counts;
    for (const auto& doc : corpus) {
        for (size_t i : positions_of(doc, w)) {
            size_t lo = i >= half ? i - half : 0;
            size_t hi = std::min(doc.tokens.size() - 1, i + half);
            for (size_t j = lo; j <= hi; ++j) {
                if (j == i) continue;
                ++counts[doc.tokens[j].surface];
            }
        }
    }
    return counts;
}

}  // namespace lexatom::ref
