#include "lexatom/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace lexatom {

namespace {

std::string word_surface(uint32_t id) {
    // w0, w1, ... : short, distinct, lexicon-free
    return "w" + std::to_string(id);
}

Tag word_tag(uint32_t id) {
    // fixed per-word tags, mostly nouns so candidate pairs exist
    switch (id % 10) {
        case 7: return Tag::Verb;
        case 8: return Tag::Adjective;
        case 9: return Tag::Other;
        default: return Tag::Noun;
    }
}

}  // namespace

std::vector<TokenStream> synth_corpus(const SynthOptions& opts) {
    std::vector<double> cdf(opts.vocab);
    double acc = 0;
    for (uint32_t r = 0; r < opts.vocab; ++r) {
        acc += 1.0 / std::pow(static_cast<double>(r + 1), opts.zipf_exponent);
        cdf[r] = acc;
    }
    for (double& c : cdf) c /= acc;

    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);

    std::vector<TokenStream> corpus;
    uint64_t emitted = 0;
    uint32_t doc_index = 0;
    while (emitted < opts.total_tokens) {
        TokenStream doc;
        char id[8];
        std::snprintf(id, sizeof(id), "%06u", doc_index++);
        doc.doc_id = "synth" + std::string(id);
        uint64_t n = std::min<uint64_t>(opts.doc_tokens, opts.total_tokens - emitted);
        doc.tokens.reserve(n);
        for (uint64_t i = 0; i < n; ++i) {
            auto it = std::lower_bound(cdf.begin(), cdf.end(), uniform(rng));
            uint32_t word = static_cast<uint32_t>(it - cdf.begin());
            doc.tokens.push_back({word_surface(word), word_tag(word)});
        }
        emitted += n;
        corpus.push_back(std::move(doc));
    }
    return corpus;
}

}  // namespace lexatom
