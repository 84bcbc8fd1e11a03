#include "lexatom/counting.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "lexatom/errors.hpp"

namespace lexatom {

Weighting weighting_from_string(const std::string& s) {
    if (s == "tf") return Weighting::Tf;
    if (s == "idf-tf") return Weighting::IdfTf;
    throw ArgumentError("unknown weighting '" + s + "' (expected tf or idf-tf)");
}

LogBase log_base_from_string(const std::string& s) {
    if (s == "natural") return LogBase::Natural;
    if (s == "log2") return LogBase::Log2;
    if (s == "log10") return LogBase::Log10;
    throw ArgumentError("unknown log base '" + s + "' (expected natural, log2 or log10)");
}

const char* weighting_name(Weighting w) {
    return w == Weighting::Tf ? "tf" : "idf-tf";
}

const char* log_base_name(LogBase b) {
    switch (b) {
        case LogBase::Natural: return "natural";
        case LogBase::Log2: return "log2";
        case LogBase::Log10: return "log10";
    }
    return "?";
}

double apply_log(LogBase b, double x) {
    switch (b) {
        case LogBase::Natural: return std::log(x);
        case LogBase::Log2: return std::log2(x);
        case LogBase::Log10: return std::log10(x);
    }
    return std::log(x);
}

std::optional<uint32_t> FrequencyStore::id_of(std::string_view w) const {
    auto it = word_ids.find(std::string(w));
    if (it == word_ids.end()) return std::nullopt;
    return it->second;
}

uint64_t FrequencyStore::fq(std::string_view x) const {
    auto id = id_of(x);
    return id ? unigram[*id] : 0;
}

uint64_t FrequencyStore::fq_adjacent(std::string_view u, std::string_view v) const {
    auto ui = id_of(u), vi = id_of(v);
    if (!ui || !vi) return 0;
    auto it = adjacent.find(pack_pair(*ui, *vi));
    return it == adjacent.end() ? 0 : it->second;
}

namespace {

uint64_t sparse_lookup(const SparseCounts& rows, uint32_t id) {
    auto it = std::lower_bound(rows.begin(), rows.end(), id,
                               [](const auto& e, uint32_t k) { return e.first < k; });
    return (it != rows.end() && it->first == id) ? it->second : 0;
}

}  // namespace

uint64_t FrequencyStore::fq_window(std::string_view x, std::string_view y) const {
    auto xi = id_of(x), yi = id_of(y);
    if (!xi || !yi) return 0;
    if (*xi == *yi) {
        auto it = word_context.find(*xi);
        // D_w[w] counts every symmetric occurrence pair twice.
        return it == word_context.end() ? 0 : sparse_lookup(it->second, *xi) / 2;
    }
    if (auto it = word_context.find(*xi); it != word_context.end())
        return sparse_lookup(it->second, *yi);
    if (auto it = word_context.find(*yi); it != word_context.end())
        return sparse_lookup(it->second, *xi);
    return 0;
}

uint64_t FrequencyStore::fq_phrase_context(std::string_view w, size_t candidate_index) const {
    auto wi = id_of(w);
    if (!wi || candidate_index >= phrase_context.size()) return 0;
    return sparse_lookup(phrase_context[candidate_index], *wi);
}

std::optional<size_t> FrequencyStore::candidate_index(std::string_view u, std::string_view v) const {
    auto ui = id_of(u), vi = id_of(v);
    if (!ui || !vi) return std::nullopt;
    auto it = candidate_slots.find(pack_pair(*ui, *vi));
    if (it == candidate_slots.end()) return std::nullopt;
    return it->second;
}

namespace {

ContextVector weight_counts(const SparseCounts& counts, Weighting wt, LogBase base,
                            const std::vector<uint64_t>& unigram) {
    ContextVector vec;
    vec.weighting = wt;
    vec.entries.reserve(counts.size());
    for (const auto& [id, count] : counts) {
        double w = static_cast<double>(count);
        if (wt == Weighting::IdfTf)
            w /= apply_log(base, static_cast<double>(unigram[id]) + 1.0);
        vec.entries.emplace_back(id, w);
    }
    return vec;
}

}  // namespace

ContextVector FrequencyStore::context_vector_word(std::string_view w, Weighting wt,
                                                  LogBase base) const {
    auto wi = id_of(w);
    if (!wi) return ContextVector{wt, {}};
    auto it = word_context.find(*wi);
    if (it == word_context.end()) return ContextVector{wt, {}};
    return weight_counts(it->second, wt, base, unigram);
}

ContextVector FrequencyStore::context_vector_pair(size_t candidate_index, Weighting wt,
                                                  LogBase base) const {
    if (candidate_index >= phrase_context.size()) return ContextVector{wt, {}};
    return weight_counts(phrase_context[candidate_index], wt, base, unigram);
}

std::string corpus_fingerprint(const std::vector<TokenStream>& corpus) {
    uint64_t h = 14695981039346656037ULL;
    auto mix = [&h](const char* data, size_t n) {
        for (size_t i = 0; i < n; ++i) {
            h ^= static_cast<unsigned char>(data[i]);
            h *= 1099511628211ULL;
        }
    };
    auto mix_byte = [&mix](char c) { mix(&c, 1); };
    for (const auto& doc : corpus) {
        mix(doc.doc_id.data(), doc.doc_id.size());
        mix_byte('\x1f');
        for (const auto& tok : doc.tokens) {
            mix(tok.surface.data(), tok.surface.size());
            mix_byte('\x1e');
            mix_byte(tag_letter(tok.tag));
            mix_byte('\x1d');
        }
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

struct EncodedDoc {
    std::vector<uint32_t> ids;
    std::vector<Tag> tags;
};

struct AdjacentCounts {
    uint64_t total = 0;
    uint64_t noun_noun = 0;
};

void validate_options(const CountOptions& opts) {
    if (opts.window_size < 2 || opts.window_size % 2 != 0)
        throw ArgumentError("window_size must be even and >= 2, got " +
                            std::to_string(opts.window_size));
    if (opts.candidates.top_k <= 0)
        throw ArgumentError("top_k must be positive, got " +
                            std::to_string(opts.candidates.top_k));
    if (opts.candidates.min_freq < 1 || opts.candidates.min_freq > opts.candidates.max_freq)
        throw ArgumentError("candidate frequency range must satisfy 1 <= min_freq <= max_freq");
    if (opts.threads < 1)
        throw ArgumentError("threads must be >= 1, got " + std::to_string(opts.threads));
}

}  // namespace

FrequencyStore count_corpus(const std::vector<TokenStream>& corpus, const CountOptions& opts) {
    validate_options(opts);

    FrequencyStore store;
    store.window_size = opts.window_size;
    store.log_base = opts.log_base;
    store.fingerprint = corpus_fingerprint(corpus);

    // Intern the vocabulary in corpus order; ids are internal only, every
    // serialization sorts by surface.
    std::vector<EncodedDoc> docs(corpus.size());
    for (size_t d = 0; d < corpus.size(); ++d) {
        docs[d].ids.reserve(corpus[d].tokens.size());
        docs[d].tags.reserve(corpus[d].tokens.size());
        for (const auto& tok : corpus[d].tokens) {
            auto [it, inserted] =
                store.word_ids.try_emplace(tok.surface, static_cast<uint32_t>(store.words.size()));
            if (inserted) store.words.push_back(tok.surface);
            docs[d].ids.push_back(it->second);
            docs[d].tags.push_back(tok.tag);
        }
    }
    const size_t vocab = store.words.size();
    const int num_threads = opts.threads;
    const int half = opts.window_size / 2;

    // Pass A: unigram + adjacent counts, sharded per document, merged key-wise.
    store.unigram.assign(vocab, 0);
    std::unordered_map<uint64_t, AdjacentCounts> adjacent;
    {
        std::vector<std::vector<uint64_t>> uni_shards(num_threads);
        std::vector<std::unordered_map<uint64_t, AdjacentCounts>> adj_shards(num_threads);
#pragma omp parallel num_threads(num_threads)
        {
            int t = omp_get_thread_num();
            uni_shards[t].assign(vocab, 0);
#pragma omp for schedule(static)
            for (int64_t d = 0; d < static_cast<int64_t>(docs.size()); ++d) {
                const auto& doc = docs[d];
                for (size_t i = 0; i < doc.ids.size(); ++i) {
                    ++uni_shards[t][doc.ids[i]];
                    if (i + 1 < doc.ids.size()) {
                        auto& cell = adj_shards[t][pack_pair(doc.ids[i], doc.ids[i + 1])];
                        ++cell.total;
                        if (doc.tags[i] == Tag::Noun && doc.tags[i + 1] == Tag::Noun)
                            ++cell.noun_noun;
                    }
                }
            }
        }
        for (int t = 0; t < num_threads; ++t) {
            if (uni_shards[t].empty()) continue;
            for (size_t w = 0; w < vocab; ++w) store.unigram[w] += uni_shards[t][w];
            for (const auto& [key, counts] : adj_shards[t]) {
                auto& cell = adjacent[key];
                cell.total += counts.total;
                cell.noun_noun += counts.noun_noun;
            }
        }
    }
    for (uint64_t c : store.unigram) store.total_tokens += c;
    store.adjacent.reserve(adjacent.size());
    for (const auto& [key, counts] : adjacent) store.adjacent.emplace(key, counts.total);

    // Candidate extraction: a pair qualifies as noun-noun when at least half
    // of its adjacent occurrences had both tokens tagged noun.
    struct Cand {
        uint32_t u, v;
        uint64_t freq;
    };
    std::vector<Cand> cands;
    for (const auto& [key, counts] : adjacent) {
        if (counts.noun_noun * 2 < counts.total) continue;
        if (counts.total < opts.candidates.min_freq || counts.total > opts.candidates.max_freq)
            continue;
        cands.push_back({static_cast<uint32_t>(key >> 32), static_cast<uint32_t>(key), counts.total});
    }
    std::sort(cands.begin(), cands.end(), [&store](const Cand& a, const Cand& b) {
        if (a.freq != b.freq) return a.freq > b.freq;
        if (store.words[a.u] != store.words[b.u]) return store.words[a.u] < store.words[b.u];
        return store.words[a.v] < store.words[b.v];
    });
    if (cands.size() > static_cast<size_t>(opts.candidates.top_k))
        cands.resize(opts.candidates.top_k);

    store.candidates.reserve(cands.size());
    for (size_t k = 0; k < cands.size(); ++k) {
        store.candidates.push_back({store.words[cands[k].u], store.words[cands[k].v], cands[k].freq});
        store.candidate_slots.emplace(pack_pair(cands[k].u, cands[k].v), k);
    }

    // Occurrence lists for tracked owners (candidate constituents) and for
    // candidate pair sites.
    std::vector<uint32_t> owners;
    for (const auto& c : cands) {
        owners.push_back(c.u);
        owners.push_back(c.v);
    }
    std::sort(owners.begin(), owners.end());
    owners.erase(std::unique(owners.begin(), owners.end()), owners.end());

    std::vector<int32_t> owner_slot(vocab, -1);
    for (size_t s = 0; s < owners.size(); ++s) owner_slot[owners[s]] = static_cast<int32_t>(s);

    struct Site {
        uint32_t doc;
        uint32_t pos;
    };
    std::vector<std::vector<Site>> owner_sites(owners.size());
    std::vector<std::vector<Site>> pair_sites(cands.size());
    for (size_t d = 0; d < docs.size(); ++d) {
        const auto& ids = docs[d].ids;
        for (size_t i = 0; i < ids.size(); ++i) {
            if (int32_t s = owner_slot[ids[i]]; s >= 0)
                owner_sites[s].push_back({static_cast<uint32_t>(d), static_cast<uint32_t>(i)});
            if (i + 1 < ids.size()) {
                auto it = store.candidate_slots.find(pack_pair(ids[i], ids[i + 1]));
                if (it != store.candidate_slots.end())
                    pair_sites[it->second].push_back(
                        {static_cast<uint32_t>(d), static_cast<uint32_t>(i)});
            }
        }
    }

    // Pass B: window kernels, parallel over owners/pairs. Owner costs vary
    // wildly with frequency, hence the dynamic schedule.
    std::vector<SparseCounts> owner_rows(owners.size());
    store.phrase_context.assign(cands.size(), {});
#pragma omp parallel num_threads(num_threads)
    {
        std::vector<uint64_t> dense(vocab, 0);
        std::vector<uint32_t> touched;
        auto flush = [&](SparseCounts& out) {
            std::sort(touched.begin(), touched.end());
            out.reserve(touched.size());
            for (uint32_t c : touched) {
                out.emplace_back(c, dense[c]);
                dense[c] = 0;
            }
            touched.clear();
        };

#pragma omp for schedule(dynamic, 1) nowait
        for (int64_t s = 0; s < static_cast<int64_t>(owners.size()); ++s) {
            for (const Site& site : owner_sites[s]) {
                const auto& ids = docs[site.doc].ids;
                size_t lo = site.pos >= static_cast<uint32_t>(half) ? site.pos - half : 0;
                size_t hi = std::min(ids.size() - 1, static_cast<size_t>(site.pos) + half);
                for (size_t j = lo; j <= hi; ++j) {
                    if (j == site.pos) continue;
                    if (dense[ids[j]]++ == 0) touched.push_back(ids[j]);
                }
            }
            flush(owner_rows[s]);
        }

#pragma omp for schedule(dynamic, 1)
        for (int64_t k = 0; k < static_cast<int64_t>(cands.size()); ++k) {
            for (const Site& site : pair_sites[k]) {
                const auto& ids = docs[site.doc].ids;
                size_t lo = site.pos >= static_cast<uint32_t>(half) ? site.pos - half : 0;
                size_t hi = std::min(ids.size() - 1, static_cast<size_t>(site.pos) + 1 + half);
                for (size_t j = lo; j <= hi; ++j) {
                    if (j == site.pos || j == site.pos + 1) continue;
                    if (dense[ids[j]]++ == 0) touched.push_back(ids[j]);
                }
            }
            flush(store.phrase_context[k]);
        }
    }

    store.word_context.reserve(owners.size());
    for (size_t s = 0; s < owners.size(); ++s)
        store.word_context.emplace(owners[s], std::move(owner_rows[s]));

    return store;
}

}  // namespace lexatom
