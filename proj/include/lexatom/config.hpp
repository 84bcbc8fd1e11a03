#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "lexatom/counting.hpp"
#include "lexatom/measures.hpp"
#include "lexatom/snapshot.hpp"

namespace lexatom {

// Flat "key = value" config; command-line flags override file values.
struct PipelineConfig {
    int window_size = 80;
    int top_k = 400;
    uint64_t min_freq = 11;
    uint64_t max_freq = 700;
    Weighting weighting = Weighting::IdfTf;
    LogBase log_base = LogBase::Natural;
    PwcCombine pwc_combine = PwcCombine::Product;
    size_t merge_common_depth = 50;
    char merge_first = 'a';
    std::vector<size_t> cutoffs = {10, 20, 30, 40, 50, 70, 100, 150, 200, 300, 400};
    CorpusFormat corpus_format = CorpusFormat::Plain;
    int threads = 1;
    std::string corpus_path;
    std::string lexicon_path;
    std::string stoplist_path;

    void validate() const;  // throws ArgumentError
    ConfigEcho echo() const;
};

PipelineConfig load_config(const std::filesystem::path& path);

// Applies one key=value setting; unknown keys or bad values throw.
void apply_setting(PipelineConfig& config, const std::string& key, const std::string& value,
                   const std::string& where);

}  // namespace lexatom
