#include "lexatom/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "lexatom/errors.hpp"

namespace lexatom {

namespace fs = std::filesystem;

Tag tag_from_string(const std::string& s) {
    if (s == "NN" || s == "noun") return Tag::Noun;
    if (s == "VB" || s == "verb") return Tag::Verb;
    if (s == "JJ" || s == "adjective") return Tag::Adjective;
    if (s == "OT" || s == "other") return Tag::Other;
    if (s == "FW" || s == "function") return Tag::Function;
    throw DataError("unknown tag '" + s + "'");
}

const char* tag_name(Tag t) {
    switch (t) {
        case Tag::Noun: return "noun";
        case Tag::Verb: return "verb";
        case Tag::Adjective: return "adjective";
        case Tag::Other: return "other";
        case Tag::Function: return "function";
    }
    return "?";
}

char tag_letter(Tag t) {
    switch (t) {
        case Tag::Noun: return 'N';
        case Tag::Verb: return 'V';
        case Tag::Adjective: return 'J';
        case Tag::Other: return 'O';
        case Tag::Function: return 'F';
    }
    return '?';
}

CorpusFormat corpus_format_from_string(const std::string& s) {
    if (s == "plain") return CorpusFormat::Plain;
    if (s == "pretagged") return CorpusFormat::Pretagged;
    throw ArgumentError("unknown corpus format '" + s + "' (expected plain or pretagged)");
}

namespace {

bool keep_byte(unsigned char c) {
    return std::isalnum(c) || c >= 0x80;  // UTF-8 continuation bytes pass through
}

// Trim leading/trailing non-alphanumeric bytes; lowercase ASCII.
std::string clean_word(std::string_view raw) {
    size_t b = 0, e = raw.size();
    while (b < e && !keep_byte(static_cast<unsigned char>(raw[b]))) ++b;
    while (e > b && !keep_byte(static_cast<unsigned char>(raw[e - 1]))) --e;
    std::string out;
    out.reserve(e - b);
    for (size_t i = b; i < e; ++i) {
        unsigned char c = static_cast<unsigned char>(raw[i]);
        out.push_back(c < 0x80 ? static_cast<char>(std::tolower(c)) : raw[i]);
    }
    return out;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw IoError("cannot read " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool blank(std::string_view s) {
    return s.find_first_not_of(" \t\r\n") == std::string_view::npos;
}

// Each whitespace-separated item must be surface/TAG with a known TAG.
void validate_pretagged(const std::string& text, const std::string& where) {
    std::istringstream lines(text);
    std::string line;
    size_t lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        std::istringstream ws(line);
        std::string item;
        while (ws >> item) {
            size_t slash = item.rfind('/');
            if (slash == std::string::npos || slash == 0 || slash + 1 == item.size())
                throw DataError(where + ":" + std::to_string(lineno) +
                                ": malformed pretagged token '" + item + "'");
            std::string tag = item.substr(slash + 1);
            if (tag != "NN" && tag != "VB" && tag != "JJ" && tag != "OT" && tag != "FW")
                throw DataError(where + ":" + std::to_string(lineno) +
                                ": unknown tag in '" + item + "'");
        }
    }
}

}  // namespace

std::vector<RawDocument> load_corpus(const fs::path& path, CorpusFormat format) {
    std::vector<RawDocument> docs;
    std::error_code ec;
    if (fs::is_directory(path, ec)) {
        for (const auto& entry : fs::directory_iterator(path)) {
            if (!entry.is_regular_file() || entry.path().extension() != ".txt") continue;
            RawDocument doc;
            doc.doc_id = entry.path().stem().string();
            doc.text = read_file(entry.path());
            docs.push_back(std::move(doc));
        }
    } else if (fs::is_regular_file(path, ec)) {
        std::istringstream lines(read_file(path));
        std::string line;
        size_t lineno = 0;
        bool in_doc = false;
        while (std::getline(lines, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.rfind("%%DOC ", 0) == 0) {
                RawDocument doc;
                doc.doc_id = line.substr(6);
                if (doc.doc_id.empty())
                    throw DataError(path.string() + ":" + std::to_string(lineno) +
                                    ": %%DOC line without a doc id");
                docs.push_back(std::move(doc));
                in_doc = true;
            } else if (!in_doc) {
                if (!blank(line))
                    throw DataError(path.string() + ":" + std::to_string(lineno) +
                                    ": content before the first %%DOC separator");
            } else {
                docs.back().text += line;
                docs.back().text += '\n';
            }
        }
    } else {
        throw IoError("corpus path does not exist: " + path.string());
    }

    std::sort(docs.begin(), docs.end(),
              [](const RawDocument& a, const RawDocument& b) { return a.doc_id < b.doc_id; });
    for (size_t i = 1; i < docs.size(); ++i)
        if (docs[i].doc_id == docs[i - 1].doc_id)
            throw DataError("duplicate doc_id '" + docs[i].doc_id + "' in corpus");

    if (format == CorpusFormat::Pretagged)
        for (const auto& d : docs) validate_pretagged(d.text, d.doc_id);
    return docs;
}

Lexicon load_lexicon(const fs::path& entries_path, const fs::path& stoplist_path) {
    Lexicon lex;
    if (!entries_path.empty()) {
        std::ifstream in(entries_path);
        if (!in) throw IoError("cannot read lexicon " + entries_path.string());
        std::string line;
        size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (blank(line)) continue;
            size_t tab = line.find('\t');
            if (tab == std::string::npos)
                throw DataError(entries_path.string() + ":" + std::to_string(lineno) +
                                ": expected word<TAB>tag");
            std::string word = clean_word(line.substr(0, tab));
            if (word.empty()) continue;
            lex.entries[word] = tag_from_string(line.substr(tab + 1));
        }
    }
    if (!stoplist_path.empty()) {
        std::ifstream in(stoplist_path);
        if (!in) throw IoError("cannot read stoplist " + stoplist_path.string());
        std::string line;
        while (std::getline(in, line)) {
            std::string word = clean_word(line);
            if (!word.empty()) lex.stoplist.insert(word);
        }
    }
    for (const auto& w : lex.stoplist) {
        auto it = lex.entries.find(w);
        if (it != lex.entries.end() && it->second != Tag::Function)
            throw DataError("stoplist word '" + w + "' is tagged " + tag_name(it->second) +
                            " in the lexicon; the two must be disjoint");
    }
    return lex;
}

std::vector<TaggedWord> tokenize(const RawDocument& doc, const Lexicon* lexicon,
                                 CorpusFormat format) {
    std::vector<TaggedWord> out;
    std::istringstream ws(doc.text);
    std::string item;
    if (format == CorpusFormat::Pretagged) {
        while (ws >> item) {
            size_t slash = item.rfind('/');
            if (slash == std::string::npos || slash == 0 || slash + 1 == item.size())
                throw DataError(doc.doc_id + ": malformed pretagged token '" + item + "'");
            std::string surface = clean_word(std::string_view(item).substr(0, slash));
            if (surface.empty()) continue;
            out.push_back({std::move(surface), tag_from_string(item.substr(slash + 1))});
        }
        return out;
    }
    if (lexicon == nullptr)
        throw ArgumentError("plain-format tokenization requires a lexicon");
    while (ws >> item) {
        std::string surface = clean_word(item);
        if (surface.empty()) continue;
        Tag tag = Tag::Other;
        if (lexicon->stoplist.count(surface)) {
            tag = Tag::Function;
        } else if (auto it = lexicon->entries.find(surface); it != lexicon->entries.end()) {
            tag = it->second;
        }
        out.push_back({std::move(surface), tag});
    }
    return out;
}

TokenStream condense(const std::string& doc_id, const std::vector<TaggedWord>& tagged) {
    TokenStream stream;
    stream.doc_id = doc_id;
    stream.tokens.reserve(tagged.size());
    for (const auto& tw : tagged)
        if (tw.tag != Tag::Function) stream.tokens.push_back({tw.surface, tw.tag});
    return stream;
}

std::vector<TokenStream> build_streams(const std::vector<RawDocument>& docs,
                                       const Lexicon* lexicon, CorpusFormat format) {
    std::vector<TokenStream> streams;
    streams.reserve(docs.size());
    for (const auto& doc : docs)
        streams.push_back(condense(doc.doc_id, tokenize(doc, lexicon, format)));
    return streams;
}

}  // namespace lexatom
