#include "lexatom/config.hpp"

#include <fstream>

#include "lexatom/errors.hpp"
#include "lexatom/text_format.hpp"

namespace lexatom {

void PipelineConfig::validate() const {
    if (window_size < 2 || window_size % 2 != 0)
        throw ArgumentError("window_size must be even and >= 2, got " +
                            std::to_string(window_size));
    if (top_k < 1) throw ArgumentError("top_k must be >= 1, got " + std::to_string(top_k));
    if (min_freq < 1 || min_freq > max_freq)
        throw ArgumentError("need 1 <= min_freq <= max_freq, got " + std::to_string(min_freq) +
                            ".." + std::to_string(max_freq));
    if (threads < 1) throw ArgumentError("threads must be >= 1");
    if (merge_first != 'a' && merge_first != 'b')
        throw ArgumentError("merge.first must be a or b");
    if (cutoffs.empty()) throw ArgumentError("cutoffs must not be empty");
    for (size_t c : cutoffs)
        if (c == 0) throw ArgumentError("cutoffs must be positive");
}

ConfigEcho PipelineConfig::echo() const {
    std::string cuts;
    for (size_t i = 0; i < cutoffs.size(); ++i) {
        if (i) cuts += ',';
        cuts += std::to_string(cutoffs[i]);
    }
    return {
        {"window_size", std::to_string(window_size)},
        {"top_k", std::to_string(top_k)},
        {"min_freq", std::to_string(min_freq)},
        {"max_freq", std::to_string(max_freq)},
        {"weighting", weighting_name(weighting)},
        {"log_base", log_base_name(log_base)},
        {"pwc_combine", pwc_combine_name(pwc_combine)},
        {"merge.common_depth", std::to_string(merge_common_depth)},
        {"merge.first", std::string(1, merge_first)},
        {"cutoffs", cuts},
        {"corpus.format", corpus_format == CorpusFormat::Plain ? "plain" : "pretagged"},
        {"threads", std::to_string(threads)},
        {"corpus.path", corpus_path},
        {"lexicon.path", lexicon_path},
        {"stoplist.path", stoplist_path},
    };
}

namespace {

std::string trim(std::string_view s) {
    size_t b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) return "";
    size_t e = s.find_last_not_of(" \t");
    return std::string(s.substr(b, e - b + 1));
}

int parse_positive_int(const std::string& value, const std::string& where) {
    int64_t v = parse_int(value, where);
    if (v < 1 || v > 1 << 30) throw ArgumentError(where + ": out of range: " + value);
    return static_cast<int>(v);
}

}  // namespace

void apply_setting(PipelineConfig& config, const std::string& key, const std::string& value,
                   const std::string& where) {
    try {
        if (key == "window_size") {
            config.window_size = parse_positive_int(value, where);
        } else if (key == "top_k") {
            config.top_k = parse_positive_int(value, where);
        } else if (key == "min_freq") {
            config.min_freq = parse_uint(value, where);
        } else if (key == "max_freq") {
            config.max_freq = parse_uint(value, where);
        } else if (key == "weighting") {
            config.weighting = weighting_from_string(value);
        } else if (key == "log_base") {
            config.log_base = log_base_from_string(value);
        } else if (key == "pwc_combine") {
            config.pwc_combine = pwc_combine_from_string(value);
        } else if (key == "merge.common_depth") {
            config.merge_common_depth = parse_uint(value, where);
        } else if (key == "merge.first") {
            if (value != "a" && value != "b")
                throw ArgumentError(where + ": merge.first must be a or b");
            config.merge_first = value[0];
        } else if (key == "cutoffs") {
            std::vector<size_t> cuts;
            size_t start = 0;
            while (start <= value.size()) {
                size_t comma = value.find(',', start);
                std::string item = trim(std::string_view(value).substr(
                    start, comma == std::string::npos ? std::string::npos : comma - start));
                if (!item.empty()) cuts.push_back(parse_uint(item, where));
                if (comma == std::string::npos) break;
                start = comma + 1;
            }
            config.cutoffs = std::move(cuts);
        } else if (key == "corpus.format") {
            config.corpus_format = corpus_format_from_string(value);
        } else if (key == "threads") {
            config.threads = parse_positive_int(value, where);
        } else if (key == "corpus.path") {
            config.corpus_path = value;
        } else if (key == "lexicon.path") {
            config.lexicon_path = value;
        } else if (key == "stoplist.path") {
            config.stoplist_path = value;
        } else {
            throw ArgumentError(where + ": unknown config key '" + key + "'");
        }
    } catch (const DataError& e) {
        throw ArgumentError(e.what());  // config values are an argument concern
    }
}

PipelineConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read config " + path.string());
    PipelineConfig config;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        chomp(line);
        std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ArgumentError(path.string() + ":" + std::to_string(lineno) +
                                ": expected key = value");
        std::string key = trim(std::string_view(stripped).substr(0, eq));
        std::string value = trim(std::string_view(stripped).substr(eq + 1));
        apply_setting(config, key, value, path.string() + ":" + std::to_string(lineno));
    }
    return config;
}

}  // namespace lexatom
