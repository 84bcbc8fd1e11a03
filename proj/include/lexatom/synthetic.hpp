#pragma once

#include <cstdint>
#include <vector>

#include "lexatom/corpus.hpp"

namespace lexatom {

// Deterministic Zipf-distributed token streams; stands in for licensed news
// corpora in benchmarks and stress tests.
struct SynthOptions {
    uint64_t total_tokens = 100000;
    uint32_t vocab = 5000;
    uint32_t doc_tokens = 2000;  // tokens per document
    double zipf_exponent = 1.0;
    uint64_t seed = 1;
};

std::vector<TokenStream> synth_corpus(const SynthOptions& opts);

}  // namespace lexatom
