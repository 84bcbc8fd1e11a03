#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace lexatom {

enum class Tag : uint8_t { Noun, Verb, Adjective, Other, Function };

// Short corpus tags NN/VB/JJ/OT/FW and the long names are both accepted.
Tag tag_from_string(const std::string& s);
const char* tag_name(Tag t);
char tag_letter(Tag t);

struct RawDocument {
    std::string doc_id;
    std::string text;  // raw prose, or "surface/TAG" tokens when pretagged

    bool operator==(const RawDocument&) const = default;
};

struct TaggedWord {
    std::string surface;
    Tag tag;

    bool operator==(const TaggedWord&) const = default;
};

// A condensed token; its position is its index in the stream.
struct Token {
    std::string surface;
    Tag tag;  // never Function after condensation

    bool operator==(const Token&) const = default;
};

struct TokenStream {
    std::string doc_id;
    std::vector<Token> tokens;

    bool operator==(const TokenStream&) const = default;
};

struct Lexicon {
    std::unordered_map<std::string, Tag> entries;
    std::unordered_set<std::string> stoplist;
};

enum class CorpusFormat { Plain, Pretagged };

CorpusFormat corpus_format_from_string(const std::string& s);

// Path may be a directory of .txt files (one document each, doc_id = file stem)
// or a single file with documents introduced by lines "%%DOC <doc_id>".
// Documents come back sorted by doc_id. Pretagged input is validated here so
// parse errors can name the offending line.
std::vector<RawDocument> load_corpus(const std::filesystem::path& path, CorpusFormat format);

// entries file: "word<TAB>tag" per line; stoplist file: one word per line.
// Either path may be empty. Stoplist words tagged noun/verb/adjective in the
// entries file are rejected.
Lexicon load_lexicon(const std::filesystem::path& entries_path,
                     const std::filesystem::path& stoplist_path);

// Splits on whitespace, trims leading/trailing non-alphanumeric bytes
// (internal hyphens and apostrophes survive), folds ASCII case, then tags:
// stoplist -> function, lexicon entry -> its tag, unknown -> other.
// Pretagged documents take tags from the input instead; lexicon may be null.
std::vector<TaggedWord> tokenize(const RawDocument& doc, const Lexicon* lexicon,
                                 CorpusFormat format);

// Drops function words and re-indexes the survivors 0..n-1.
TokenStream condense(const std::string& doc_id, const std::vector<TaggedWord>& tagged);

std::vector<TokenStream> build_streams(const std::vector<RawDocument>& docs,
                                       const Lexicon* lexicon, CorpusFormat format);

}  // namespace lexatom
