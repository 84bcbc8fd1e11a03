#pragma once

#include <filesystem>
#include <vector>

#include "lexatom/config.hpp"
#include "lexatom/evaluation.hpp"
#include "lexatom/measures.hpp"

namespace lexatom {

// Pipeline stages behind the CLI subcommands. Every output file gets a
// "<name>.meta" sidecar with the effective config, so a run can be
// reconstructed from its outputs.

void cmd_count(const PipelineConfig& config, const std::filesystem::path& out_dir);

std::vector<ScoreRecord> cmd_score(const PipelineConfig& config,
                                   const std::filesystem::path& snapshot_dir,
                                   const std::filesystem::path& out_scores);

RankedList cmd_rank(const PipelineConfig& config, const std::filesystem::path& scores_path,
                    Measure measure, const std::filesystem::path& out_ranked);

void cmd_eval(const PipelineConfig& config, const std::filesystem::path& ranked_path,
              const std::filesystem::path& gold_path, const std::filesystem::path& out_table,
              const std::filesystem::path& out_curve);

RankedList cmd_merge(const PipelineConfig& config, const std::filesystem::path& ranked_a,
                     const std::filesystem::path& ranked_b,
                     const std::filesystem::path& out_merged);

// Score file: TSV, 6-decimal reals, rows in candidate order.
void write_scores(const std::filesystem::path& path, const std::vector<ScoreRecord>& records);
std::vector<ScoreRecord> load_scores(const std::filesystem::path& path);

// Ranked list file: TSV "rank u v score".
void write_ranked(const std::filesystem::path& path, const RankedList& list);
RankedList load_ranked(const std::filesystem::path& path);

// Gold judgments: TSV "u<TAB>v<TAB>label", label 1 marks an atom, no header.
GoldJudgments load_gold(const std::filesystem::path& path);

// Precision table: TSV "cutoff precision" rows plus a final average row.
void write_precision_table(const std::filesystem::path& path, const PrecisionTable& table);

}  // namespace lexatom
