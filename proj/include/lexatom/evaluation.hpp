#pragma once

#include <cstdint>
#include <filesystem>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "lexatom/measures.hpp"

namespace lexatom {

enum class Measure : uint8_t { PwcComb, Wa, CsComb, Mi };

Measure measure_from_string(const std::string& s);  // pwc_comb | wa | cs_comb | mi
const char* measure_name(Measure m);

// Low compositionality ranks atoms first for pwc_comb/wa/cs_comb (ascending);
// mi ranks high association first (descending).
bool measure_ascending(Measure m);

struct RankedEntry {
    std::string u, v;
    double score = 0;

    bool operator==(const RankedEntry&) const = default;
};

// entries[i] has rank i+1
struct RankedList {
    std::string measure_name;
    bool ascending = true;
    std::vector<RankedEntry> entries;
};

using PairSet = std::set<std::pair<std::string, std::string>>;

struct GoldJudgments {
    PairSet atoms;     // label 1
    PairSet universe;  // every judged pair
};

struct PrecisionTable {
    std::vector<size_t> cutoffs;
    std::vector<uint64_t> hits;      // gold entries among top k; precision*k
    std::vector<double> precisions;  // hits/k
    double average_precision = 0;
};

// Ties break lexicographically by (u,v) in either direction; stable across runs.
RankedList rank(const std::vector<ScoreRecord>& records, Measure measure);

// Cutoffs must be positive and within the list; averages are not filled here.
PrecisionTable precision_at(const RankedList& list, const GoldJudgments& gold,
                            std::span<const size_t> cutoffs);

// Mean over gold atoms of i / rank_i where the i-th atom found sits at rank_i.
double average_precision(const RankedList& list, const GoldJudgments& gold);

// Pairs in both depth-prefixes first (ordered by their rank in a), then the
// rest alternately from a and b, skipping what was already emitted.
RankedList merge_rankings(const RankedList& a, const RankedList& b, size_t common_depth);

// CSV "cutoff,precision", 3-decimal values.
void emit_curve(const PrecisionTable& table, const std::filesystem::path& out);

// Clamp each cutoff to the list length, deduplicate preserving order.
std::vector<size_t> clip_cutoffs(std::span<const size_t> cutoffs, size_t list_len);

}  // namespace lexatom
