#pragma once

#include <string>
#include <vector>

#include "pih/gateway.hpp"
#include "pih/stats.hpp"

namespace pih::fixtures {

/// One model column of the bundled replication table.
struct ScoreColumn {
    std::string label;       // short column label, e.g. "4o"
    std::string model_name;  // full model name
    std::vector<int> scores; // row order: replicate-major, judge rep minor
};

struct ConditionBlock {
    std::string condition;   // "HIPc", "HIPn", "TIPcs"
    int replicates;          // 3 for HIPc, 2 otherwise
    int judge_reps;          // 5
    std::vector<ScoreColumn> columns;
};

/// The three condition blocks of the bundled score table. The HIPn/TIPcs
/// blocks omit Gemini2.0Flash, matching the source data.
const std::vector<ConditionBlock>& score_table();

/// A published comparison with its printed one-tailed p-value and the
/// number of decimal places it was printed with (scientific entries carry
/// 5 significant figures instead, flagged by decimals == -1).
struct PrintedComparison {
    GroupLabel a;
    GroupLabel b;
    double printed_p;
    int decimals;  // 5 for fixed-point entries, -1 for scientific ones
};

/// The 19 published pairwise tests: 9 HIPc model pairs, 5 HIPc/HIPn,
/// 5 HIPn/TIPcs.
const std::vector<PrintedComparison>& printed_comparisons();

/// The 16 published per-group means, 2-decimal rounded.
struct PrintedMean {
    GroupLabel label;
    double mean;
};
const std::vector<PrintedMean>& printed_means();

struct SubjectFixture {
    std::string model_label;
    std::string model_name;
    std::string text;  // verbatim logged response to the fused trigger prompt
};
const std::vector<SubjectFixture>& subject_responses();  // 6 entries

struct JudgeFixture {
    std::string subject_label;  // model whose response was scored
    std::string trial_label;    // e.g. "HIPc1-3"
    int expected_score;
    std::string text;  // verbatim judge output
};
const std::vector<JudgeFixture>& judge_texts();  // 7 entries, document order

GroupLabel label_for(const std::string& model_label, const std::string& condition);
std::string model_name_for(const std::string& model_label);

/// ScoreMatrix built directly from the bundled table.
ScoreMatrix table_matrix();

/// Synthesizes an archive of judge records whose raw texts embed the bundled
/// scores, so the collection path can be exercised offline. Timestamps are
/// fixed so repeated syntheses are byte-identical.
void write_fixture_archive(Archive& archive);

/// Replay fixtures for the appendix transcripts: 6 subject records keyed for
/// (model, fused trigger prompt, replicate 1) plus judge records for each
/// appendix judge text.
void write_appendix_archive(Archive& archive);

}  // namespace pih::fixtures
