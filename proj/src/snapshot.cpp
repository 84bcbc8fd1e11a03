#include "lexatom/snapshot.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>

#include "lexatom/errors.hpp"
#include "lexatom/text_format.hpp"

namespace lexatom {

namespace fs = std::filesystem;

namespace {

class BufferedWriter {
  public:
    BufferedWriter(const fs::path& path) : path_(path.string()), out_(path, std::ios::binary) {
        if (!out_) throw IoError("cannot write " + path_);
        buf_.reserve(1 << 20);
    }
    ~BufferedWriter() { flush(); }

    void text(std::string_view s) {
        buf_.append(s);
        maybe_flush();
    }
    void number(uint64_t v) {
        char tmp[24];
        auto res = std::to_chars(tmp, tmp + sizeof(tmp), v);
        buf_.append(tmp, res.ptr);
        maybe_flush();
    }
    void tab() { buf_.push_back('\t'); }
    void newline() {
        buf_.push_back('\n');
        maybe_flush();
    }
    void flush() {
        out_.write(buf_.data(), static_cast<std::streamsize>(buf_.size()));
        buf_.clear();
        if (!out_) throw IoError("write failed for " + path_);
    }

  private:
    void maybe_flush() {
        if (buf_.size() >= (1 << 20)) flush();
    }
    std::string path_;
    std::ofstream out_;
    std::string buf_;
};

struct WindowRow {
    std::string_view x, y;
    uint64_t count;
};

struct PhraseRow {
    std::string_view w, u, v;
    uint64_t count;
};

std::vector<std::string> read_lines(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path.string());
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        chomp(line);
        lines.push_back(line);
    }
    return lines;
}

std::vector<std::string_view> fields_of(const std::string& line, size_t n, const std::string& where,
                                        size_t lineno) {
    auto f = split_tabs(line);
    if (f.size() != n)
        throw DataError(where + ":" + std::to_string(lineno) + ": expected " + std::to_string(n) +
                        " tab-separated fields");
    return f;
}

}  // namespace

void write_snapshot(const FrequencyStore& store, const fs::path& dir, const ConfigEcho& echo) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create snapshot directory " + dir.string());

    {
        BufferedWriter w(dir / "meta.tsv");
        w.text("total_tokens\t");
        w.number(store.total_tokens);
        w.newline();
        w.text("window_size\t");
        w.number(static_cast<uint64_t>(store.window_size));
        w.newline();
        w.text("log_base\t");
        w.text(log_base_name(store.log_base));
        w.newline();
        w.text("corpus_fingerprint\t");
        w.text(store.fingerprint);
        w.newline();
        ConfigEcho sorted = echo;
        std::sort(sorted.begin(), sorted.end());
        for (const auto& [k, v] : sorted) {
            w.text("config.");
            w.text(k);
            w.tab();
            w.text(v);
            w.newline();
        }
    }

    {
        std::vector<uint32_t> order(store.words.size());
        for (uint32_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&store](uint32_t a, uint32_t b) { return store.words[a] < store.words[b]; });
        BufferedWriter w(dir / "unigram.tsv");
        w.text("word\tcount\n");
        for (uint32_t id : order) {
            w.text(store.words[id]);
            w.tab();
            w.number(store.unigram[id]);
            w.newline();
        }
    }

    {
        std::vector<std::pair<uint64_t, uint64_t>> rows(store.adjacent.begin(),
                                                        store.adjacent.end());
        auto surface = [&store](uint64_t key, bool high) -> const std::string& {
            return store.words[high ? static_cast<uint32_t>(key >> 32)
                                    : static_cast<uint32_t>(key)];
        };
        std::sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) {
            if (surface(a.first, true) != surface(b.first, true))
                return surface(a.first, true) < surface(b.first, true);
            return surface(a.first, false) < surface(b.first, false);
        });
        BufferedWriter w(dir / "adjacent.tsv");
        w.text("u\tv\tcount\n");
        for (const auto& [key, count] : rows) {
            w.text(surface(key, true));
            w.tab();
            w.text(surface(key, false));
            w.tab();
            w.number(count);
            w.newline();
        }
    }

    {
        std::vector<WindowRow> rows;
        for (const auto& [owner, counts] : store.word_context) {
            const std::string& ow = store.words[owner];
            for (const auto& [c, d] : counts) {
                const std::string& cw = store.words[c];
                if (c == owner) {
                    rows.push_back({ow, ow, d / 2});
                } else if (store.word_context.count(c)) {
                    // both ends tracked: the row appears in both context maps,
                    // emit it from the lexicographically smaller owner only
                    if (ow < cw) rows.push_back({ow, cw, d});
                } else {
                    if (ow < cw)
                        rows.push_back({ow, cw, d});
                    else
                        rows.push_back({cw, ow, d});
                }
            }
        }
        std::sort(rows.begin(), rows.end(), [](const WindowRow& a, const WindowRow& b) {
            if (a.x != b.x) return a.x < b.x;
            return a.y < b.y;
        });
        BufferedWriter w(dir / "window.tsv");
        w.text("x\ty\tcount\n");
        for (const auto& r : rows) {
            w.text(r.x);
            w.tab();
            w.text(r.y);
            w.tab();
            w.number(r.count);
            w.newline();
        }
    }

    {
        std::vector<PhraseRow> rows;
        for (size_t k = 0; k < store.candidates.size(); ++k) {
            const CandidatePair& pair = store.candidates[k];
            for (const auto& [c, d] : store.phrase_context[k])
                rows.push_back({store.words[c], pair.u, pair.v, d});
        }
        std::sort(rows.begin(), rows.end(), [](const PhraseRow& a, const PhraseRow& b) {
            if (a.w != b.w) return a.w < b.w;
            if (a.u != b.u) return a.u < b.u;
            return a.v < b.v;
        });
        BufferedWriter w(dir / "phrase_context.tsv");
        w.text("w\tu\tv\tcount\n");
        for (const auto& r : rows) {
            w.text(r.w);
            w.tab();
            w.text(r.u);
            w.tab();
            w.text(r.v);
            w.tab();
            w.number(r.count);
            w.newline();
        }
    }

    {
        BufferedWriter w(dir / "candidates.tsv");
        w.text("u\tv\tpair_freq\n");
        for (const auto& c : store.candidates) {
            w.text(c.u);
            w.tab();
            w.text(c.v);
            w.tab();
            w.number(c.pair_freq);
            w.newline();
        }
    }
}

FrequencyStore load_snapshot(const fs::path& dir) {
    static const char* kTables[] = {"meta.tsv",   "unigram.tsv",        "adjacent.tsv",
                                    "window.tsv", "phrase_context.tsv", "candidates.tsv"};
    std::string missing;
    for (const char* name : kTables)
        if (!fs::is_regular_file(dir / name)) missing += std::string(missing.empty() ? "" : ", ") + name;
    if (!missing.empty())
        throw DataError("incomplete snapshot at " + dir.string() + "; missing: " + missing);

    FrequencyStore store;

    {
        auto lines = read_lines(dir / "meta.tsv");
        bool have_total = false, have_window = false, have_base = false, have_fp = false;
        for (size_t i = 0; i < lines.size(); ++i) {
            if (lines[i].empty()) continue;
            auto f = fields_of(lines[i], 2, "meta.tsv", i + 1);
            std::string key(f[0]);
            if (key == "total_tokens") {
                store.total_tokens = parse_uint(f[1], "meta.tsv total_tokens");
                have_total = true;
            } else if (key == "window_size") {
                store.window_size = static_cast<int>(parse_int(f[1], "meta.tsv window_size"));
                have_window = true;
            } else if (key == "log_base") {
                store.log_base = log_base_from_string(std::string(f[1]));
                have_base = true;
            } else if (key == "corpus_fingerprint") {
                store.fingerprint = std::string(f[1]);
                have_fp = true;
            }  // config.* rows are informational
        }
        if (!have_total || !have_window || !have_base || !have_fp)
            throw DataError("meta.tsv lacks a required field");
        if (store.window_size < 2 || store.window_size % 2 != 0)
            throw DataError("meta.tsv window_size must be even and >= 2");
    }

    auto id_or_throw = [&store](std::string_view w, const std::string& where,
                                size_t lineno) -> uint32_t {
        auto it = store.word_ids.find(std::string(w));
        if (it == store.word_ids.end())
            throw DataError(where + ":" + std::to_string(lineno) + ": word '" + std::string(w) +
                            "' is not in unigram.tsv");
        return it->second;
    };

    {
        auto lines = read_lines(dir / "unigram.tsv");
        if (lines.empty() || lines[0] != "word\tcount")
            throw DataError("unigram.tsv: missing 'word\tcount' header");
        uint64_t sum = 0;
        for (size_t i = 1; i < lines.size(); ++i) {
            if (lines[i].empty()) continue;
            auto f = fields_of(lines[i], 2, "unigram.tsv", i + 1);
            auto [it, inserted] = store.word_ids.try_emplace(
                std::string(f[0]), static_cast<uint32_t>(store.words.size()));
            if (!inserted)
                throw DataError("unigram.tsv:" + std::to_string(i + 1) + ": duplicate word");
            store.words.emplace_back(f[0]);
            store.unigram.push_back(parse_uint(f[1], "unigram.tsv"));
            sum += store.unigram.back();
        }
        if (sum != store.total_tokens)
            throw DataError("unigram.tsv counts sum to " + std::to_string(sum) +
                            " but meta.tsv says total_tokens " +
                            std::to_string(store.total_tokens));
    }

    {
        auto lines = read_lines(dir / "candidates.tsv");
        if (lines.empty() || lines[0] != "u\tv\tpair_freq")
            throw DataError("candidates.tsv: missing 'u\tv\tpair_freq' header");
        for (size_t i = 1; i < lines.size(); ++i) {
            if (lines[i].empty()) continue;
            auto f = fields_of(lines[i], 3, "candidates.tsv", i + 1);
            uint32_t ui = id_or_throw(f[0], "candidates.tsv", i + 1);
            uint32_t vi = id_or_throw(f[1], "candidates.tsv", i + 1);
            store.candidate_slots.emplace(pack_pair(ui, vi), store.candidates.size());
            store.candidates.push_back(
                {std::string(f[0]), std::string(f[1]), parse_uint(f[2], "candidates.tsv")});
        }
        store.phrase_context.assign(store.candidates.size(), {});
        for (const auto& c : store.candidates) {
            store.word_context.try_emplace(*store.id_of(c.u));
            store.word_context.try_emplace(*store.id_of(c.v));
        }
    }

    {
        auto lines = read_lines(dir / "adjacent.tsv");
        if (lines.empty() || lines[0] != "u\tv\tcount")
            throw DataError("adjacent.tsv: missing 'u\tv\tcount' header");
        store.adjacent.reserve(lines.size());
        for (size_t i = 1; i < lines.size(); ++i) {
            if (lines[i].empty()) continue;
            auto f = fields_of(lines[i], 3, "adjacent.tsv", i + 1);
            uint32_t ui = id_or_throw(f[0], "adjacent.tsv", i + 1);
            uint32_t vi = id_or_throw(f[1], "adjacent.tsv", i + 1);
            store.adjacent[pack_pair(ui, vi)] = parse_uint(f[2], "adjacent.tsv");
        }
    }

    {
        auto lines = read_lines(dir / "window.tsv");
        if (lines.empty() || lines[0] != "x\ty\tcount")
            throw DataError("window.tsv: missing 'x\ty\tcount' header");
        for (size_t i = 1; i < lines.size(); ++i) {
            if (lines[i].empty()) continue;
            auto f = fields_of(lines[i], 3, "window.tsv", i + 1);
            uint32_t xi = id_or_throw(f[0], "window.tsv", i + 1);
            uint32_t yi = id_or_throw(f[1], "window.tsv", i + 1);
            uint64_t count = parse_uint(f[2], "window.tsv");
            auto x_it = store.word_context.find(xi);
            auto y_it = store.word_context.find(yi);
            if (xi == yi) {
                if (x_it == store.word_context.end())
                    throw DataError("window.tsv:" + std::to_string(i + 1) +
                                    ": row does not touch a candidate constituent");
                x_it->second.emplace_back(xi, 2 * count);
                continue;
            }
            if (x_it == store.word_context.end() && y_it == store.word_context.end())
                throw DataError("window.tsv:" + std::to_string(i + 1) +
                                ": row does not touch a candidate constituent");
            if (x_it != store.word_context.end()) x_it->second.emplace_back(yi, count);
            if (y_it != store.word_context.end()) y_it->second.emplace_back(xi, count);
        }
        for (auto& [owner, counts] : store.word_context)
            std::sort(counts.begin(), counts.end());
    }

    {
        auto lines = read_lines(dir / "phrase_context.tsv");
        if (lines.empty() || lines[0] != "w\tu\tv\tcount")
            throw DataError("phrase_context.tsv: missing 'w\tu\tv\tcount' header");
        for (size_t i = 1; i < lines.size(); ++i) {
            if (lines[i].empty()) continue;
            auto f = fields_of(lines[i], 4, "phrase_context.tsv", i + 1);
            uint32_t wi = id_or_throw(f[0], "phrase_context.tsv", i + 1);
            auto slot = store.candidate_index(f[1], f[2]);
            if (!slot)
                throw DataError("phrase_context.tsv:" + std::to_string(i + 1) + ": pair [" +
                                std::string(f[1]) + "," + std::string(f[2]) +
                                "] is not in candidates.tsv");
            store.phrase_context[*slot].emplace_back(wi, parse_uint(f[3], "phrase_context.tsv"));
        }
        for (auto& counts : store.phrase_context) std::sort(counts.begin(), counts.end());
    }

    return store;
}

}  // namespace lexatom
