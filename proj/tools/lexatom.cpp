// lexatom: mine non-compositional two-word phrases out of a corpus and
// evaluate the rankings. Stages: count -> score -> rank -> eval / merge.

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lexatom/config.hpp"
#include "lexatom/errors.hpp"
#include "lexatom/pipeline.hpp"

using namespace lexatom;

namespace {

struct CliState {
    std::string config_path;
    std::vector<std::string> overrides;  // key=value

    std::string corpus, format, lexicon, stoplist;
    int threads = 0;
    std::string in, in_a, in_b, gold, measure;
    std::string out, out_table, out_curve;
    std::string depth, first;
};

void add_common(CLI::App* cmd, CliState& st) {
    cmd->add_option("--config", st.config_path, "flat key = value config file");
    cmd->add_option("--set", st.overrides, "override a config key (key=value), repeatable");
}

PipelineConfig effective_config(const CliState& st) {
    PipelineConfig config;
    if (!st.config_path.empty()) config = load_config(st.config_path);
    for (const std::string& kv : st.overrides) {
        size_t eq = kv.find('=');
        if (eq == std::string::npos)
            throw ArgumentError("--set expects key=value, got '" + kv + "'");
        apply_setting(config, kv.substr(0, eq), kv.substr(eq + 1), "--set " + kv);
    }
    if (!st.corpus.empty()) config.corpus_path = st.corpus;
    if (!st.format.empty()) config.corpus_format = corpus_format_from_string(st.format);
    if (!st.lexicon.empty()) config.lexicon_path = st.lexicon;
    if (!st.stoplist.empty()) config.stoplist_path = st.stoplist;
    if (st.threads > 0) config.threads = st.threads;
    if (!st.depth.empty())
        apply_setting(config, "merge.common_depth", st.depth, "--depth");
    if (!st.first.empty()) apply_setting(config, "merge.first", st.first, "--first");
    return config;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lexical atom mining pipeline"};
    app.require_subcommand(1);
    CliState st;

    CLI::App* count = app.add_subcommand("count", "tokenize, condense and count a corpus");
    add_common(count, st);
    count->add_option("--corpus", st.corpus, "corpus directory or %%DOC-separated file");
    count->add_option("--format", st.format, "plain | pretagged");
    count->add_option("--lexicon", st.lexicon, "word<TAB>tag lexicon file");
    count->add_option("--stoplist", st.stoplist, "one function word per line");
    count->add_option("--threads", st.threads, "counting threads (default 1)");
    count->add_option("--out", st.out, "snapshot directory")->required();

    CLI::App* score = app.add_subcommand("score", "compute PWC/WA/CS/MI from a snapshot");
    add_common(score, st);
    score->add_option("--in", st.in, "snapshot directory")->required();
    score->add_option("--out", st.out, "score TSV")->required();

    CLI::App* rankc = app.add_subcommand("rank", "rank scored candidates by one measure");
    add_common(rankc, st);
    rankc->add_option("--in", st.in, "score TSV")->required();
    rankc->add_option("--measure", st.measure, "pwc_comb | wa | cs_comb | mi")->required();
    rankc->add_option("--out", st.out, "ranked list TSV")->required();

    CLI::App* evalc = app.add_subcommand("eval", "precision table and curve against gold");
    add_common(evalc, st);
    evalc->add_option("--in", st.in, "ranked list TSV")->required();
    evalc->add_option("--gold", st.gold, "gold judgments TSV")->required();
    evalc->add_option("--out-table", st.out_table, "precision table TSV")->required();
    evalc->add_option("--out-curve", st.out_curve, "precision curve CSV")->required();

    CLI::App* mergec = app.add_subcommand("merge", "interleave two ranked lists");
    add_common(mergec, st);
    mergec->add_option("--in-a", st.in_a, "first ranked list")->required();
    mergec->add_option("--in-b", st.in_b, "second ranked list")->required();
    mergec->add_option("--depth", st.depth, "common-prefix depth (default 50)");
    mergec->add_option("--first", st.first, "which list leads, a | b");
    mergec->add_option("--out", st.out, "merged ranked list TSV")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : ArgumentError::exit_code;
    }

    try {
        PipelineConfig config = effective_config(st);
        if (count->parsed()) {
            cmd_count(config, st.out);
        } else if (score->parsed()) {
            cmd_score(config, st.in, st.out);
        } else if (rankc->parsed()) {
            cmd_rank(config, st.in, measure_from_string(st.measure), st.out);
        } else if (evalc->parsed()) {
            cmd_eval(config, st.in, st.gold, st.out_table, st.out_curve);
        } else if (mergec->parsed()) {
            cmd_merge(config, st.in_a, st.in_b, st.out);
        }
    } catch (const ArgumentError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return ArgumentError::exit_code;
    } catch (const DataError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return DataError::exit_code;
    } catch (const IoError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return IoError::exit_code;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
