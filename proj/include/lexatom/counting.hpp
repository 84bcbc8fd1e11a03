#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lexatom/corpus.hpp"

namespace lexatom {

struct CandidatePair {
    std::string u;
    std::string v;
    uint64_t pair_freq = 0;  // FQ([u,v])

    bool operator==(const CandidatePair&) const = default;
};

enum class Weighting : uint8_t { Tf, IdfTf };
enum class LogBase : uint8_t { Natural, Log2, Log10 };

Weighting weighting_from_string(const std::string& s);
LogBase log_base_from_string(const std::string& s);
const char* weighting_name(Weighting w);
const char* log_base_name(LogBase b);
double apply_log(LogBase b, double x);

// Sparse context-word -> weight map. Keys are word ids of the owning
// FrequencyStore; entries stay sorted by id.
struct ContextVector {
    Weighting weighting = Weighting::Tf;
    std::vector<std::pair<uint32_t, double>> entries;
};

struct CandidateOptions {
    int top_k = 400;
    uint64_t min_freq = 11;
    uint64_t max_freq = 700;
};

struct CountOptions {
    int window_size = 80;  // N; symmetric N/2 on each side; even, >= 2
    CandidateOptions candidates;
    LogBase log_base = LogBase::Natural;  // recorded in meta, applied at scoring time
    int threads = 1;
};

// id -> count rows, sorted by id
using SparseCounts = std::vector<std::pair<uint32_t, uint64_t>>;

inline uint64_t pack_pair(uint32_t a, uint32_t b) {
    return (static_cast<uint64_t>(a) << 32) | b;
}

// All count quantities over one corpus, interned against its vocabulary.
// Sealed after construction; all accessors are const and thread-safe.
//
// word_context holds, per tracked word w, the per-occurrence collection counts
// D_w[c] = total occurrences of c inside the N/2 windows around occurrences of
// w (the occurrence site itself excluded). For c != w this equals the
// unordered co-occurrence count FQ(c:w); for c == w it is exactly 2*FQ(w:w),
// which fq_window corrects for. Tracked words are the candidate constituents.
struct FrequencyStore {
    uint64_t total_tokens = 0;
    int window_size = 0;
    LogBase log_base = LogBase::Natural;
    std::string fingerprint;

    std::vector<std::string> words;  // id -> surface
    std::unordered_map<std::string, uint32_t> word_ids;
    std::vector<uint64_t> unigram;  // FQ(X) by id

    std::unordered_map<uint64_t, uint64_t> adjacent;  // pack(u,v) -> FQ([u,v])

    std::unordered_map<uint32_t, SparseCounts> word_context;

    std::vector<CandidatePair> candidates;
    std::vector<SparseCounts> phrase_context;           // aligned with candidates
    std::unordered_map<uint64_t, size_t> candidate_slots;  // pack(u,v) -> index

    std::optional<uint32_t> id_of(std::string_view w) const;
    const std::string& word(uint32_t id) const { return words[id]; }

    uint64_t fq(std::string_view x) const;                               // FQ(X)
    uint64_t fq_adjacent(std::string_view u, std::string_view v) const;  // FQ([u,v])
    uint64_t fq_window(std::string_view x, std::string_view y) const;    // FQ(X:Y)
    uint64_t fq_phrase_context(std::string_view w, size_t candidate_index) const;

    std::optional<size_t> candidate_index(std::string_view u, std::string_view v) const;

    // Empty vector when the owner never occurs / has no tracked contexts.
    ContextVector context_vector_word(std::string_view w, Weighting wt, LogBase base) const;
    ContextVector context_vector_pair(size_t candidate_index, Weighting wt, LogBase base) const;
};

// The OpenMP counting engine: unigram and adjacent tables sharded per
// document and merged key-wise, then window/context kernels parallel over
// tracked owners. Results are identical for any thread count.
FrequencyStore count_corpus(const std::vector<TokenStream>& corpus, const CountOptions& opts);

// FNV-1a over doc ids, surfaces and tags; hex string.
std::string corpus_fingerprint(const std::vector<TokenStream>& corpus);

}  // namespace lexatom
