#pragma once

#include <string>
#include <vector>

#include "pih/stats.hpp"

namespace pih {

struct ScoreTable {
    std::string csv;
    std::string markdown;
};

/// Per-condition blocks with one row per (replicate, judge rep) labeled like
/// "HIPc1-1" and a final "Ave" row with 2-decimal means. CSV and Markdown
/// carry identical values.
ScoreTable emit_score_table(const ScoreMatrix& matrix);

/// Markdown table: pair, t, df, p (5 significant figures), stars; rows in
/// input order.
std::string emit_significance_table(const std::vector<WelchResult>& results);

struct FigureGroup {
    std::string label;
    SampleSet samples;
    DescriptiveStats stats;
};

struct FigureSpec {
    std::vector<FigureGroup> groups;
    std::vector<WelchResult> comparisons;  // annotated as star brackets
    unsigned jitter_seed = 42;
    double width = 640;
    double height = 420;
    std::string title;
};

/// Deterministic beeswarm: one dot per score with seeded collision-avoiding
/// jitter; per group a median bar, a mean cross and a Tukey whisker line;
/// star brackets for the listed comparisons. Equal inputs and seed give
/// byte-identical output.
std::string emit_beeswarm_svg(const FigureSpec& spec);

/// Markdown report embedding the score and significance tables and figure
/// references; groups whose mean is at or below `baseline` are annotated as
/// grounded-baseline groups.
std::string emit_full_report(const ScoreMatrix& matrix,
                             const std::vector<WelchResult>& results,
                             const std::vector<std::string>& figure_files,
                             double baseline = 2.0);

/// Formats with 5 significant figures, matching the significance table.
std::string format_p(double p);

}  // namespace pih
