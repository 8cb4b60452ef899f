#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pih/gateway.hpp"
#include "pih/prompt_registry.hpp"

namespace pih {

struct SubjectResponse {
    std::string response_id;
    std::string prompt_id;
    ModelTarget subject;
    int replicate_index = 1;
    std::string text;
};

struct ScoreExtraction {
    int score = 0;
    size_t span_begin = 0;  // character range of the matched "N / 10" in the judge text
    size_t span_end = 0;
    std::string pattern_id;  // "score_line" or "early_line"
};

struct JudgeEvaluation {
    std::string evaluation_id;
    std::string response_id;
    ModelTarget judge;
    int judge_rep_index = 1;
    std::string raw_text;
    std::optional<ScoreExtraction> extraction;
    std::string failure_reason;  // set when extraction is empty

    std::string to_json_line() const;
};

struct MarkerMissing : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ScoreError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NoScoreFound : ScoreError {
    using ScoreError::ScoreError;
};
struct AmbiguousScore : ScoreError {
    using ScoreError::ScoreError;
};
struct OutOfRange : ScoreError {
    using ScoreError::ScoreError;
};

/// Replaces the template's marker line with the response text, exactly once,
/// altering nothing else.
std::string render_hqp(const JudgeTemplate& tmpl, const std::string& response_text);

/// Scans judge prose for a score declaration. Priority tier 1: a line
/// mentioning "score" with an "N / 10" or "N/10" value. Tier 2: any such
/// value within the first five lines. First match wins within a tier;
/// conflicting values at the same tier are ambiguous. A decimal like
/// "7.5/10" is out of range by format.
ScoreExtraction extract_score(const std::string& judge_text, int scale_min = 0,
                              int scale_max = 10);

/// Runs `reps` fresh judge sessions over one response. Parse failures are
/// kept as evaluations with a failure reason, never dropped.
std::vector<JudgeEvaluation> evaluate_response(const SubjectResponse& response,
                                               const ModelTarget& judge,
                                               const JudgeTemplate& tmpl, int reps,
                                               Gateway& gateway,
                                               Condition condition = Condition::Custom,
                                               const GenerationConfig& config = {});

}  // namespace pih
