#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "pih/gateway.hpp"
#include "pih/judge.hpp"
#include "pih/prompt_registry.hpp"
#include "pih/stats.hpp"

namespace pih {

struct InvalidConfig : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::vector<ModelTarget> subjects;
    ModelTarget judge;
    std::vector<PromptSpec> prompts;
    std::map<Condition, int> responses_per_prompt;  // defaults HIPc 3, HIPn 2, TIPcs 2
    int judge_reps = 5;
    GenerationConfig generation;
    std::filesystem::path archive_path;

    int replicates_for(Condition c) const;
};

/// Parses a JSON run configuration. Prompt entries may name a built-in
/// ("builtin": "HIPc") or spell out a custom prompt, which must declare its
/// concept pair explicitly.
RunConfig load_run_config(const std::filesystem::path& path);
RunConfig parse_run_config(const std::string& json_text);

struct TrialSpec {
    std::string prompt_id;
    ModelTarget subject;
    int replicate_index = 1;
    std::string trial_key;
};

struct RunPlan {
    std::vector<TrialSpec> trials;  // ordered by (prompt, subject, replicate)
    ModelTarget judge;
    int judge_reps = 5;
    GenerationConfig generation;

    size_t judge_task_count() const { return trials.size() * static_cast<size_t>(judge_reps); }
};

/// Deterministic expansion of a config into trials.
RunPlan plan(const RunConfig& config);

struct ExecStats {
    size_t subject_calls = 0;
    size_t judge_calls = 0;
    size_t skipped = 0;  // trials answered from the archive
    size_t gaps = 0;     // trials abandoned after retries were exhausted
};

/// Runs a plan through the gateway. Trials already in the archive are
/// skipped; a trial whose subject call exhausts retries is recorded as a gap
/// and the remaining trials still run.
ExecStats execute(const RunPlan& run, const std::vector<PromptSpec>& prompts,
                  const JudgeTemplate& tmpl, Gateway& gateway,
                  const RetryPolicy& retry = {});

/// Groups extracted scores by (subject model, condition); within a cell the
/// order is (replicate_index, judge_rep_index). Parse failures are excluded
/// and counted, never imputed.
ScoreMatrix collect_scores(const Archive& archive);

/// Rows are trial-evaluation pairs labeled like "HIPc1-1"; columns are model
/// labels.
std::string export_matrix_csv(const ScoreMatrix& matrix);

/// Parses a pairs file: one comparison per line, four whitespace-separated
/// tokens `model_a condition_a model_b condition_b`; '#' starts a comment.
std::vector<std::pair<GroupLabel, GroupLabel>> load_pairs_file(
    const std::filesystem::path& path);

}  // namespace pih
