#include "lexatom/pipeline.hpp"

#include <algorithm>
#include <fstream>

#include "lexatom/errors.hpp"
#include "lexatom/snapshot.hpp"
#include "lexatom/text_format.hpp"

namespace lexatom {

namespace fs = std::filesystem;

namespace {

void write_sidecar(const fs::path& output, const ConfigEcho& run_facts,
                   const PipelineConfig& config) {
    fs::path path = output;
    path += ".meta";
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot write " + path.string());
    for (const auto& [k, v] : run_facts) f << k << '\t' << v << '\n';
    ConfigEcho echo = config.echo();
    std::sort(echo.begin(), echo.end());
    for (const auto& [k, v] : echo) f << "config." << k << '\t' << v << '\n';
    if (!f) throw IoError("write failed for " + path.string());
}

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

constexpr const char* kScoreHeader =
    "u\tv\tpair_freq\tpwc_u\tpwc_v\tpwc_comb\twa\tcs_u\tcs_v\tcs_comb\tmi\tflags";

}  // namespace

void write_scores(const fs::path& path, const std::vector<ScoreRecord>& records) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot write " + path.string());
    f << kScoreHeader << '\n';
    for (const auto& r : records) {
        f << r.pair.u << '\t' << r.pair.v << '\t' << r.pair.pair_freq << '\t'
          << format_fixed(r.pwc_u, 6) << '\t' << format_fixed(r.pwc_v, 6) << '\t'
          << format_fixed(r.pwc_combined, 6) << '\t' << format_fixed(r.wa, 6) << '\t'
          << format_fixed(r.cs_u, 6) << '\t' << format_fixed(r.cs_v, 6) << '\t'
          << format_fixed(r.cs_combined, 6) << '\t' << format_fixed(r.mi, 6) << '\t'
          << (r.degenerate ? "degenerate" : "-") << '\n';
    }
    if (!f) throw IoError("write failed for " + path.string());
}

std::vector<ScoreRecord> load_scores(const fs::path& path) {
    auto lines = read_lines(path);
    if (lines.empty() || lines[0] != kScoreHeader)
        throw DataError(path.string() + ": missing score header");
    std::vector<ScoreRecord> records;
    for (size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        auto f = split_tabs(lines[i]);
        std::string where = path.string() + ":" + std::to_string(i + 1);
        if (f.size() != 12) throw DataError(where + ": expected 12 fields");
        ScoreRecord r;
        r.pair.u = std::string(f[0]);
        r.pair.v = std::string(f[1]);
        r.pair.pair_freq = parse_uint(f[2], where);
        r.pwc_u = parse_double(f[3], where);
        r.pwc_v = parse_double(f[4], where);
        r.pwc_combined = parse_double(f[5], where);
        r.wa = parse_double(f[6], where);
        r.cs_u = parse_double(f[7], where);
        r.cs_v = parse_double(f[8], where);
        r.cs_combined = parse_double(f[9], where);
        r.mi = parse_double(f[10], where);
        if (f[11] == "degenerate") {
            r.degenerate = true;
        } else if (f[11] == "-") {
            r.degenerate = false;
        } else {
            throw DataError(where + ": unknown flags value '" + std::string(f[11]) + "'");
        }
        records.push_back(std::move(r));
    }
    return records;
}

void write_ranked(const fs::path& path, const RankedList& list) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot write " + path.string());
    f << "rank\tu\tv\tscore\n";
    for (size_t i = 0; i < list.entries.size(); ++i) {
        const auto& e = list.entries[i];
        f << (i + 1) << '\t' << e.u << '\t' << e.v << '\t' << format_fixed(e.score, 6) << '\n';
    }
    if (!f) throw IoError("write failed for " + path.string());
}

RankedList load_ranked(const fs::path& path) {
    auto lines = read_lines(path);
    if (lines.empty() || lines[0] != "rank\tu\tv\tscore")
        throw DataError(path.string() + ": missing 'rank u v score' header");
    RankedList list;
    for (size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        auto f = split_tabs(lines[i]);
        std::string where = path.string() + ":" + std::to_string(i + 1);
        if (f.size() != 4) throw DataError(where + ": expected 4 fields");
        if (parse_uint(f[0], where) != list.entries.size() + 1)
            throw DataError(where + ": ranks must run 1..n consecutively");
        list.entries.push_back(
            {std::string(f[1]), std::string(f[2]), parse_double(f[3], where)});
    }
    return list;
}

GoldJudgments load_gold(const fs::path& path) {
    auto lines = read_lines(path);
    GoldJudgments gold;
    for (size_t i = 0; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        auto f = split_tabs(lines[i]);
        std::string where = path.string() + ":" + std::to_string(i + 1);
        if (f.size() != 3) throw DataError(where + ": expected u<TAB>v<TAB>label");
        std::pair<std::string, std::string> key{std::string(f[0]), std::string(f[1])};
        if (!gold.universe.insert(key).second)
            throw DataError(where + ": duplicate pair [" + key.first + "," + key.second + "]");
        if (f[2] == "1") {
            gold.atoms.insert(key);
        } else if (f[2] != "0") {
            throw DataError(where + ": label must be 0 or 1, got '" + std::string(f[2]) + "'");
        }
    }
    return gold;
}

void write_precision_table(const fs::path& path, const PrecisionTable& table) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot write " + path.string());
    f << "cutoff\tprecision\n";
    for (size_t i = 0; i < table.cutoffs.size(); ++i)
        f << table.cutoffs[i] << '\t' << format_fixed(table.precisions[i], 3) << '\n';
    f << "average\t" << format_fixed(table.average_precision, 3) << '\n';
    if (!f) throw IoError("write failed for " + path.string());
}

void cmd_count(const PipelineConfig& config, const fs::path& out_dir) {
    config.validate();
    if (config.corpus_path.empty()) throw ArgumentError("count: corpus.path is not set");
    auto docs = load_corpus(config.corpus_path, config.corpus_format);
    Lexicon lexicon = load_lexicon(config.lexicon_path, config.stoplist_path);
    auto streams = build_streams(docs, &lexicon, config.corpus_format);

    CountOptions opts;
    opts.window_size = config.window_size;
    opts.candidates = {config.top_k, config.min_freq, config.max_freq};
    opts.log_base = config.log_base;
    opts.threads = config.threads;
    FrequencyStore store = count_corpus(streams, opts);
    write_snapshot(store, out_dir, config.echo());
}

std::vector<ScoreRecord> cmd_score(const PipelineConfig& config, const fs::path& snapshot_dir,
                                   const fs::path& out_scores) {
    config.validate();
    FrequencyStore store = load_snapshot(snapshot_dir);
    ScoreOptions opts{config.weighting, config.log_base, config.pwc_combine};
    auto records = score_all(store, opts);
    write_scores(out_scores, records);
    write_sidecar(out_scores,
                  {{"stage", "score"},
                   {"snapshot", snapshot_dir.string()},
                   {"corpus_fingerprint", store.fingerprint}},
                  config);
    return records;
}

RankedList cmd_rank(const PipelineConfig& config, const fs::path& scores_path, Measure measure,
                    const fs::path& out_ranked) {
    config.validate();
    auto records = load_scores(scores_path);
    RankedList list = rank(records, measure);
    write_ranked(out_ranked, list);
    write_sidecar(out_ranked,
                  {{"stage", "rank"},
                   {"scores", scores_path.string()},
                   {"measure", list.measure_name},
                   {"direction", list.ascending ? "ascending" : "descending"}},
                  config);
    return list;
}

void cmd_eval(const PipelineConfig& config, const fs::path& ranked_path,
              const fs::path& gold_path, const fs::path& out_table,
              const fs::path& out_curve) {
    config.validate();
    RankedList list = load_ranked(ranked_path);
    GoldJudgments gold = load_gold(gold_path);

    PairSet listed;
    for (const auto& e : list.entries) listed.insert({e.u, e.v});
    if (listed != gold.universe) {
        std::string msg = "gold universe differs from the ranked candidates;";
        for (const auto& p : gold.universe)
            if (!listed.count(p)) msg += " only-in-gold:[" + p.first + "," + p.second + "]";
        for (const auto& p : listed)
            if (!gold.universe.count(p)) msg += " only-in-ranking:[" + p.first + "," + p.second + "]";
        throw DataError(msg);
    }

    auto cutoffs = clip_cutoffs(config.cutoffs, list.entries.size());
    PrecisionTable table = precision_at(list, gold, cutoffs);
    table.average_precision = average_precision(list, gold);
    write_precision_table(out_table, table);
    write_sidecar(out_table,
                  {{"stage", "eval"}, {"ranked", ranked_path.string()}, {"gold", gold_path.string()}},
                  config);
    emit_curve(table, out_curve);
    write_sidecar(out_curve,
                  {{"stage", "eval"}, {"ranked", ranked_path.string()}, {"gold", gold_path.string()}},
                  config);
}

RankedList cmd_merge(const PipelineConfig& config, const fs::path& ranked_a,
                     const fs::path& ranked_b, const fs::path& out_merged) {
    config.validate();
    RankedList a = load_ranked(ranked_a);
    RankedList b = load_ranked(ranked_b);
    if (config.merge_first == 'b') std::swap(a, b);
    RankedList merged = merge_rankings(a, b, config.merge_common_depth);
    write_ranked(out_merged, merged);
    write_sidecar(out_merged,
                  {{"stage", "merge"},
                   {"ranked_a", ranked_a.string()},
                   {"ranked_b", ranked_b.string()},
                   {"common_depth", std::to_string(config.merge_common_depth)}},
                  config);
    return merged;
}

}  // namespace lexatom
