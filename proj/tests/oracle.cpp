#include "oracle.hpp"

#include <algorithm>
#include <cmath>

namespace lexatom::oracle {

Tables count(const std::vector<TokenStream>& corpus, int window_size) {
    Tables t;
    const int64_t half = window_size / 2;
    for (const auto& doc : corpus) {
        const auto& toks = doc.tokens;
        t.total_tokens += toks.size();
        for (size_t i = 0; i < toks.size(); ++i) ++t.unigram[toks[i].surface];
        for (size_t i = 0; i + 1 < toks.size(); ++i) {
            std::pair<std::string, std::string> key{toks[i].surface, toks[i + 1].surface};
            ++t.adjacent[key];
            if (toks[i].tag == Tag::Noun && toks[i + 1].tag == Tag::Noun)
                ++t.adjacent_noun_noun[key];
        }
        for (size_t i = 0; i < toks.size(); ++i) {
            for (size_t j = i + 1; j < toks.size(); ++j) {
                if (static_cast<int64_t>(j - i) > half) continue;
                const std::string& a = toks[i].surface;
                const std::string& b = toks[j].surface;
                ++t.window[a <= b ? std::make_pair(a, b) : std::make_pair(b, a)];
            }
        }
    }
    return t;
}

WordCounts phrase_context(const std::vector<TokenStream>& corpus, const std::string& u,
                          const std::string& v, int window_size) {
    const int64_t half = window_size / 2;
    WordCounts counts;
    for (const auto& doc : corpus) {
        const auto& toks = doc.tokens;
        for (size_t i = 0; i + 1 < toks.size(); ++i) {
            if (toks[i].surface != u || toks[i + 1].surface != v) continue;
            for (size_t j = 0; j < toks.size(); ++j) {
                if (j == i || j == i + 1) continue;
                int64_t pos = static_cast<int64_t>(j);
                if (pos < static_cast<int64_t>(i) - half) continue;
                if (pos > static_cast<int64_t>(i) + 1 + half) continue;
                ++counts[toks[j].surface];
            }
        }
    }
    return counts;
}

WordCounts word_context(const std::vector<TokenStream>& corpus, const std::string& w,
                        int window_size) {
    const int64_t half = window_size / 2;
    WordCounts counts;
    for (const auto& doc : corpus) {
        const auto& toks = doc.tokens;
        for (size_t i = 0; i < toks.size(); ++i) {
            if (toks[i].surface != w) continue;
            for (size_t j = 0; j < toks.size(); ++j) {
                if (j == i) continue;
                int64_t dist = std::abs(static_cast<int64_t>(i) - static_cast<int64_t>(j));
                if (dist <= half) ++counts[toks[j].surface];
            }
        }
    }
    return counts;
}

std::vector<CandidatePair> candidates(const Tables& tables, int top_k, uint64_t min_freq,
                                      uint64_t max_freq) {
    std::vector<CandidatePair> out;
    for (const auto& [key, freq] : tables.adjacent) {
        auto nn = tables.adjacent_noun_noun.find(key);
        uint64_t nn_count = nn == tables.adjacent_noun_noun.end() ? 0 : nn->second;
        if (nn_count * 2 < freq) continue;
        if (freq < min_freq || freq > max_freq) continue;
        out.push_back({key.first, key.second, freq});
    }
    std::sort(out.begin(), out.end(), [](const CandidatePair& a, const CandidatePair& b) {
        if (a.pair_freq != b.pair_freq) return a.pair_freq > b.pair_freq;
        if (a.u != b.u) return a.u < b.u;
        return a.v < b.v;
    });
    if (out.size() > static_cast<size_t>(top_k)) out.resize(top_k);
    return out;
}

Vec weigh(const WordCounts& counts, const WordCounts& unigram, Weighting wt, LogBase base) {
    Vec vec;
    for (const auto& [word, count] : counts) {
        double w = static_cast<double>(count);
        if (wt == Weighting::IdfTf) {
            double fq = static_cast<double>(unigram.at(word)) + 1.0;
            double denom = base == LogBase::Natural ? std::log(fq)
                           : base == LogBase::Log2  ? std::log2(fq)
                                                    : std::log10(fq);
            w /= denom;
        }
        vec[word] = w;
    }
    return vec;
}

double cosine(const Vec& a, const Vec& b) {
    double dot = 0, na = 0, nb = 0;
    for (const auto& [w, x] : a) na += x * x;
    for (const auto& [w, y] : b) nb += y * y;
    if (na == 0 || nb == 0) return 0.0;
    for (const auto& [w, x] : a) {
        auto it = b.find(w);
        if (it != b.end()) dot += x * it->second;
    }
    return dot / (std::sqrt(na) * std::sqrt(nb));
}

std::vector<Scores> score_all(const std::vector<TokenStream>& corpus, int window_size, int top_k,
                              uint64_t min_freq, uint64_t max_freq, Weighting wt, LogBase base,
                              PwcCombine combine) {
    Tables tables = count(corpus, window_size);
    auto cands = candidates(tables, top_k, min_freq, max_freq);

    std::vector<Scores> out;
    for (const auto& pair : cands) {
        Scores s;
        s.pair = pair;
        double pair_freq = static_cast<double>(tables.adjacent.at({pair.u, pair.v}));

        WordCounts pctx = phrase_context(corpus, pair.u, pair.v, window_size);
        auto pctx_count = [&pctx](const std::string& w) -> double {
            auto it = pctx.find(w);
            return it == pctx.end() ? 0.0 : static_cast<double>(it->second);
        };
        s.pwc_u = pctx_count(pair.u) / pair_freq;
        s.pwc_v = pctx_count(pair.v) / pair_freq;
        s.pwc_combined = combine == PwcCombine::Product ? s.pwc_u * s.pwc_v : s.pwc_u + s.pwc_v;

        auto wkey = pair.u <= pair.v ? std::make_pair(pair.u, pair.v)
                                     : std::make_pair(pair.v, pair.u);
        auto wit = tables.window.find(wkey);
        double cooc = wit == tables.window.end() ? 0.0 : static_cast<double>(wit->second);
        s.wa = (cooc - pair_freq) / pair_freq;

        Vec pair_vec = weigh(pctx, tables.unigram, wt, base);
        Vec u_vec = weigh(word_context(corpus, pair.u, window_size), tables.unigram, wt, base);
        Vec v_vec = weigh(word_context(corpus, pair.v, window_size), tables.unigram, wt, base);
        s.cs_u = cosine(pair_vec, u_vec);
        s.cs_v = cosine(pair_vec, v_vec);
        s.cs_combined = s.cs_u + s.cs_v;

        double t = static_cast<double>(tables.total_tokens);
        double p_pair = pair_freq / t;
        double p_u = static_cast<double>(tables.unigram.at(pair.u)) / t;
        double p_v = static_cast<double>(tables.unigram.at(pair.v)) / t;
        s.mi = std::log2(p_pair / (p_u * p_v));

        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace lexatom::oracle
