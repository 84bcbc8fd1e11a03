#include "lexatom/corpus.hpp"

#include <random>

#include "doctest.h"
#include "lexatom/errors.hpp"
#include "test_util.hpp"

using namespace lexatom;
using testutil::TempDir;

namespace {

Lexicon small_lexicon() {
    Lexicon lex;
    lex.entries = {{"dog", Tag::Noun}, {"barked", Tag::Verb}, {"red", Tag::Adjective}};
    lex.stoplist = {"the", "a"};
    return lex;
}

}  // namespace

TEST_CASE("load_corpus: directory of txt files, filename order") {
    TempDir tmp;
    tmp.file("b.txt", "two");
    tmp.file("a.txt", "one");
    tmp.file("c.txt", "three");
    tmp.file("ignored.dat", "nope");
    auto docs = load_corpus(tmp.path, CorpusFormat::Plain);
    REQUIRE(docs.size() == 3);
    CHECK(docs[0].doc_id == "a");
    CHECK(docs[1].doc_id == "b");
    CHECK(docs[2].doc_id == "c");
    CHECK(docs[1].text == "two");
}

TEST_CASE("load_corpus: empty file yields empty text") {
    TempDir tmp;
    tmp.file("empty.txt", "");
    auto docs = load_corpus(tmp.path, CorpusFormat::Plain);
    REQUIRE(docs.size() == 1);
    CHECK(docs[0].text.empty());
}

TEST_CASE("load_corpus: %%DOC separated single file") {
    TempDir tmp;
    auto p = tmp.file("corpus.txt", "%%DOC beta\nsecond doc\n%%DOC alpha\nfirst doc\nmore\n");
    auto docs = load_corpus(p, CorpusFormat::Plain);
    REQUIRE(docs.size() == 2);
    CHECK(docs[0].doc_id == "alpha");
    CHECK(docs[0].text == "first doc\nmore\n");
    CHECK(docs[1].doc_id == "beta");
    CHECK(docs[1].text == "second doc\n");
}

TEST_CASE("load_corpus: content before first separator is rejected") {
    TempDir tmp;
    auto p = tmp.file("corpus.txt", "stray text\n%%DOC a\nbody\n");
    CHECK_THROWS_AS(load_corpus(p, CorpusFormat::Plain), DataError);
}

TEST_CASE("load_corpus: duplicate doc ids are rejected") {
    TempDir tmp;
    auto p = tmp.file("corpus.txt", "%%DOC a\nx\n%%DOC a\ny\n");
    CHECK_THROWS_AS(load_corpus(p, CorpusFormat::Plain), DataError);
}

TEST_CASE("load_corpus: missing path is an I/O error") {
    CHECK_THROWS_AS(load_corpus("/nonexistent/corpus", CorpusFormat::Plain), IoError);
}

TEST_CASE("load_corpus: malformed pretagged line names the location") {
    TempDir tmp;
    tmp.file("d.txt", "dog/NN\nran/VB broken\n");
    try {
        load_corpus(tmp.path, CorpusFormat::Pretagged);
        FAIL("expected a parse error");
    } catch (const DataError& e) {
        CHECK(std::string(e.what()).find("d:2") != std::string::npos);
    }
}

TEST_CASE("tokenize: pretagged surface/TAG pairs") {
    RawDocument doc{"d", "dog/NN ran/VB"};
    auto toks = tokenize(doc, nullptr, CorpusFormat::Pretagged);
    REQUIRE(toks.size() == 2);
    CHECK(toks[0] == TaggedWord{"dog", Tag::Noun});
    CHECK(toks[1] == TaggedWord{"ran", Tag::Verb});
}

TEST_CASE("tokenize: lexicon tagging and punctuation stripping") {
    Lexicon lex = small_lexicon();
    RawDocument doc{"d", "The dog barked."};
    auto toks = tokenize(doc, &lex, CorpusFormat::Plain);
    REQUIRE(toks.size() == 3);
    CHECK(toks[0] == TaggedWord{"the", Tag::Function});
    CHECK(toks[1] == TaggedWord{"dog", Tag::Noun});
    CHECK(toks[2] == TaggedWord{"barked", Tag::Verb});
}

TEST_CASE("tokenize: empty text") {
    Lexicon lex = small_lexicon();
    CHECK(tokenize({"d", ""}, &lex, CorpusFormat::Plain).empty());
}

TEST_CASE("tokenize: case folding") {
    Lexicon lex = small_lexicon();
    auto toks = tokenize({"d", "DOG dog"}, &lex, CorpusFormat::Plain);
    REQUIRE(toks.size() == 2);
    CHECK(toks[0].surface == "dog");
    CHECK(toks[1].surface == "dog");
    CHECK(toks[0].tag == Tag::Noun);
}

TEST_CASE("tokenize: unknown words get tag other; edges trimmed, internals kept") {
    Lexicon lex = small_lexicon();
    auto toks = tokenize({"d", "(hello!) state-of-the-art don't ... 42"}, &lex,
                         CorpusFormat::Plain);
    REQUIRE(toks.size() == 4);  // "..." trims to nothing and is dropped
    CHECK(toks[0] == TaggedWord{"hello", Tag::Other});
    CHECK(toks[1] == TaggedWord{"state-of-the-art", Tag::Other});
    CHECK(toks[2] == TaggedWord{"don't", Tag::Other});
    CHECK(toks[3] == TaggedWord{"42", Tag::Other});
}

TEST_CASE("tokenize: plain format requires a lexicon") {
    CHECK_THROWS_AS(tokenize({"d", "x"}, nullptr, CorpusFormat::Plain), ArgumentError);
}

TEST_CASE("condense: drops function words and reindexes") {
    std::vector<TaggedWord> tagged = {
        {"the", Tag::Function}, {"dog", Tag::Noun}, {"barked", Tag::Verb}};
    TokenStream s = condense("d", tagged);
    REQUIRE(s.tokens.size() == 2);
    CHECK(s.tokens[0] == Token{"dog", Tag::Noun});
    CHECK(s.tokens[1] == Token{"barked", Tag::Verb});
}

TEST_CASE("condense: all-function input gives an empty stream") {
    std::vector<TaggedWord> tagged = {{"the", Tag::Function}, {"a", Tag::Function}};
    CHECK(condense("d", tagged).tokens.empty());
}

TEST_CASE("condense: idempotent and never grows") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> tag_roll(0, 4);
    for (int round = 0; round < 50; ++round) {
        std::vector<TaggedWord> tagged;
        std::uniform_int_distribution<size_t> len(0, 40);
        size_t n = len(rng);
        size_t functions = 0;
        for (size_t i = 0; i < n; ++i) {
            Tag t = static_cast<Tag>(tag_roll(rng));
            if (t == Tag::Function) ++functions;
            tagged.push_back({"w" + std::to_string(i % 5), t});
        }
        TokenStream once = condense("d", tagged);
        CHECK(once.tokens.size() == n - functions);

        std::vector<TaggedWord> again;
        for (const auto& tok : once.tokens) again.push_back({tok.surface, tok.tag});
        CHECK(condense("d", again) == once);
    }
}

TEST_CASE("build_streams is deterministic") {
    TempDir tmp;
    tmp.file("a.txt", "The dog barked. A dog ran off; the red dog!");
    Lexicon lex = small_lexicon();
    auto docs = load_corpus(tmp.path, CorpusFormat::Plain);
    auto s1 = build_streams(docs, &lex, CorpusFormat::Plain);
    auto s2 = build_streams(docs, &lex, CorpusFormat::Plain);
    CHECK(s1 == s2);
    REQUIRE(s1.size() == 1);
    for (const auto& tok : s1[0].tokens) CHECK(tok.tag != Tag::Function);
}

TEST_CASE("load_lexicon: entries, stoplist, and the disjointness rule") {
    TempDir tmp;
    auto lexfile = tmp.file("lex.tsv", "Dog\tNN\nbarked\tVB\nred\tJJ\nmisc\tOT\n");
    auto stopfile = tmp.file("stop.txt", "the\nA\n\n");
    Lexicon lex = load_lexicon(lexfile, stopfile);
    CHECK(lex.entries.at("dog") == Tag::Noun);  // case folded on load
    CHECK(lex.entries.at("misc") == Tag::Other);
    CHECK(lex.stoplist.count("a") == 1);

    auto clash = tmp.file("clash.tsv", "the\tNN\n");
    CHECK_THROWS_AS(load_lexicon(clash, stopfile), DataError);
}

TEST_CASE("load_lexicon: long tag names accepted") {
    TempDir tmp;
    auto lexfile = tmp.file("lex.tsv", "dog\tnoun\nran\tverb\n");
    Lexicon lex = load_lexicon(lexfile, "");
    CHECK(lex.entries.at("ran") == Tag::Verb);
}

TEST_CASE("pretagged punctuation-only surfaces are dropped") {
    RawDocument doc{"d", "dog/NN ./OT cat/NN"};
    auto toks = tokenize(doc, nullptr, CorpusFormat::Pretagged);
    REQUIRE(toks.size() == 2);
    CHECK(toks[1].surface == "cat");
}
