#include "pih/judge.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <sstream>

#include <json.hpp>

namespace pih {

using nlohmann::json;

std::string JudgeEvaluation::to_json_line() const {
    json j{{"evaluation_id", evaluation_id},
           {"response_id", response_id},
           {"judge",
            {{"provider_id", judge.provider_id},
             {"model_name", judge.model_name},
             {"model_class", to_string(judge.model_class)},
             {"role", to_string(judge.role)}}},
           {"judge_rep_index", judge_rep_index},
           {"raw_text", raw_text}};
    if (extraction)
        j["score"] = extraction->score;
    else
        j["failure_reason"] = failure_reason;
    return j.dump();
}

std::string render_hqp(const JudgeTemplate& tmpl, const std::string& response_text) {
    const size_t pos = tmpl.template_text.find(tmpl.insertion_marker);
    if (pos == std::string::npos)
        throw MarkerMissing("template " + tmpl.id + " lacks insertion marker");
    std::string out = tmpl.template_text;
    out.replace(pos, tmpl.insertion_marker.size(), response_text);
    return out;
}

namespace {

struct ScoreMatch {
    std::string token;  // the numeric text before "/10"
    size_t begin;       // offsets into the full judge text
    size_t end;
};

// Standalone "N / 10" or "N/10"; N may not adjoin a preceding digit or '.'
// and the 10 may not be followed by another digit.
std::vector<ScoreMatch> matches_in_line(const std::string& text, size_t line_begin,
                                        const std::string& line) {
    static const std::regex pattern(R"((\d+(?:\.\d+)?)\s*/\s*10(?!\d))");
    std::vector<ScoreMatch> out;
    auto begin = std::sregex_iterator(line.begin(), line.end(), pattern);
    for (auto it = begin; it != std::sregex_iterator(); ++it) {
        const auto& m = *it;
        const size_t pos = static_cast<size_t>(m.position(0));
        if (pos > 0) {
            const char prev = line[pos - 1];
            if (std::isdigit(static_cast<unsigned char>(prev)) || prev == '.') continue;
        }
        out.push_back({m.str(1), line_begin + pos,
                       line_begin + pos + static_cast<size_t>(m.length(0))});
    }
    return out;
}

int parse_score_token(const ScoreMatch& m, int scale_min, int scale_max) {
    if (m.token.find('.') != std::string::npos)
        throw OutOfRange("decimal score \"" + m.token + "/10\" is out of range by format");
    const long value = std::stol(m.token);
    if (value < scale_min || value > scale_max)
        throw OutOfRange("score " + m.token + " outside [" + std::to_string(scale_min) +
                         ", " + std::to_string(scale_max) + "]");
    return static_cast<int>(value);
}

bool mentions_score(const std::string& line) {
    auto lower = line;
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return lower.find("score") != std::string::npos;
}

ScoreExtraction pick(const std::vector<ScoreMatch>& candidates, const char* pattern_id,
                     int scale_min, int scale_max) {
    ScoreExtraction first{parse_score_token(candidates.front(), scale_min, scale_max),
                          candidates.front().begin, candidates.front().end, pattern_id};
    for (size_t i = 1; i < candidates.size(); ++i) {
        const int value = parse_score_token(candidates[i], scale_min, scale_max);
        if (value != first.score)
            throw AmbiguousScore("conflicting scores " + std::to_string(first.score) +
                                 " and " + std::to_string(value) + " at tier " + pattern_id);
    }
    return first;
}

}  // namespace

ScoreExtraction extract_score(const std::string& judge_text, int scale_min, int scale_max) {
    if (judge_text.empty()) throw NoScoreFound("empty judge text");

    std::vector<std::pair<size_t, std::string>> lines;  // (offset, line)
    size_t offset = 0;
    std::istringstream in(judge_text);
    std::string line;
    while (std::getline(in, line)) {
        lines.emplace_back(offset, line);
        offset += line.size() + 1;
    }

    // Tier 1: lines that talk about a score.
    std::vector<ScoreMatch> tier1;
    for (const auto& [pos, l] : lines) {
        if (!mentions_score(l)) continue;
        auto found = matches_in_line(judge_text, pos, l);
        tier1.insert(tier1.end(), found.begin(), found.end());
    }
    if (!tier1.empty()) return pick(tier1, "score_line", scale_min, scale_max);

    // Tier 2: any value in the first five lines.
    std::vector<ScoreMatch> tier2;
    for (size_t i = 0; i < lines.size() && i < 5; ++i) {
        auto found = matches_in_line(judge_text, lines[i].first, lines[i].second);
        tier2.insert(tier2.end(), found.begin(), found.end());
    }
    if (!tier2.empty()) return pick(tier2, "early_line", scale_min, scale_max);

    throw NoScoreFound("no score declaration found");
}

std::vector<JudgeEvaluation> evaluate_response(const SubjectResponse& response,
                                               const ModelTarget& judge,
                                               const JudgeTemplate& tmpl, int reps,
                                               Gateway& gateway, Condition condition,
                                               const GenerationConfig& config) {
    if (reps < 1) throw std::invalid_argument("reps must be >= 1");

    std::vector<JudgeEvaluation> evaluations;
    evaluations.reserve(static_cast<size_t>(reps));
    for (int rep = 1; rep <= reps; ++rep) {
        CompletionRequest request;
        request.target = judge;
        request.prompt_text = render_hqp(tmpl, response.text);  // fresh render per session
        request.config = config;
        request.trial_key = make_trial_key(judge, tmpl.id + ":" + response.response_id,
                                           request.prompt_text, rep, config);

        Gateway::TrialMeta meta;
        meta.kind = RecordKind::Judge;
        meta.prompt_id = response.prompt_id;
        meta.condition = condition;
        meta.replicate = response.replicate_index;
        meta.judge_rep = rep;
        meta.response_id = response.response_id;

        const CompletionResult result = gateway.complete(request, meta);

        JudgeEvaluation ev;
        ev.evaluation_id = response.response_id + "-j" + std::to_string(rep);
        ev.response_id = response.response_id;
        ev.judge = judge;
        ev.judge_rep_index = rep;
        ev.raw_text = result.text;
        try {
            ev.extraction = extract_score(result.text, tmpl.scale_min, tmpl.scale_max);
        } catch (const ScoreError& e) {
            ev.failure_reason = e.what();
        }
        evaluations.push_back(std::move(ev));
    }
    return evaluations;
}

}  // namespace pih
