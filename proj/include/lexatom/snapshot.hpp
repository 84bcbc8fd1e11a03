#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "lexatom/counting.hpp"

namespace lexatom {

// key = value pairs echoed into meta.tsv / sidecar files
using ConfigEcho = std::vector<std::pair<std::string, std::string>>;

// Writes meta.tsv, unigram.tsv, adjacent.tsv, window.tsv, phrase_context.tsv
// and candidates.tsv into dir. Tables are sorted lexicographically and
// bit-exact reproducible; candidates keep extraction order.
void write_snapshot(const FrequencyStore& store, const std::filesystem::path& dir,
                    const ConfigEcho& echo);

// Inverse of write_snapshot. Missing tables raise a data error naming them.
FrequencyStore load_snapshot(const std::filesystem::path& dir);

}  // namespace lexatom
