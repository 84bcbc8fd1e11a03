#pragma once

#include <unistd.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lexatom/corpus.hpp"

namespace lexatom::testutil {

namespace fs = std::filesystem;

struct TempDir {
    fs::path path;

    TempDir() {
        static std::atomic<uint64_t> counter{0};
        path = fs::temp_directory_path() /
               ("lexatom_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter.fetch_add(1)));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    fs::path file(const std::string& name, const std::string& content) const {
        fs::path p = path / name;
        fs::create_directories(p.parent_path());
        std::ofstream out(p, std::ios::binary);
        out << content;
        return p;
    }
};

inline std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// One document from space-separated surfaces, every token tagged noun.
inline TokenStream stream_of(const std::string& doc_id, const std::string& words) {
    TokenStream s;
    s.doc_id = doc_id;
    std::istringstream ws(words);
    std::string w;
    while (ws >> w) s.tokens.push_back({w, Tag::Noun});
    return s;
}

inline std::vector<TokenStream> corpus_of(const std::vector<std::string>& docs) {
    std::vector<TokenStream> out;
    for (size_t i = 0; i < docs.size(); ++i)
        out.push_back(stream_of("doc" + std::to_string(i), docs[i]));
    return out;
}

// Random small corpus over a compact alphabet; tags randomized with a noun
// bias so candidate pairs show up.
inline std::vector<TokenStream> random_corpus(std::mt19937_64& rng, size_t max_total_tokens,
                                              size_t alphabet_size, size_t max_docs) {
    std::uniform_int_distribution<size_t> doc_count(1, max_docs);
    std::uniform_int_distribution<size_t> word(0, alphabet_size - 1);
    std::uniform_int_distribution<int> tag_roll(0, 9);
    size_t docs = doc_count(rng);
    std::vector<TokenStream> corpus;
    size_t budget = max_total_tokens;
    for (size_t d = 0; d < docs; ++d) {
        std::uniform_int_distribution<size_t> len(0, budget / (docs - d));
        size_t n = len(rng);
        budget -= n;
        TokenStream s;
        s.doc_id = "doc" + std::to_string(d);
        for (size_t i = 0; i < n; ++i) {
            Tag tag = Tag::Noun;
            switch (tag_roll(rng)) {
                case 0: tag = Tag::Verb; break;
                case 1: tag = Tag::Adjective; break;
                case 2: tag = Tag::Other; break;
                default: break;
            }
            s.tokens.push_back({"w" + std::to_string(word(rng)), tag});
        }
        corpus.push_back(std::move(s));
    }
    return corpus;
}

}  // namespace lexatom::testutil
