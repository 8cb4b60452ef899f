#include "pih/orchestrator.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "pih/report.hpp"

namespace pih {

using nlohmann::json;

int RunConfig::replicates_for(Condition c) const {
    auto it = responses_per_prompt.find(c);
    if (it != responses_per_prompt.end()) return it->second;
    switch (c) {
        case Condition::HIPc: return 3;
        case Condition::HIPn:
        case Condition::TIPcs: return 2;
        case Condition::Custom: return 2;
    }
    return 2;
}

namespace {

ModelTarget target_from_config(const json& j, ModelRole default_role) {
    ModelTarget t;
    t.provider_id = j.at("provider_id").get<std::string>();
    t.model_name = j.at("model_name").get<std::string>();
    t.model_class = model_class_from_string(j.value("model_class", "general_purpose"));
    t.role = j.contains("role") ? model_role_from_string(j["role"].get<std::string>())
                                : default_role;
    if (t.provider_id.empty() || t.model_name.empty())
        throw InvalidConfig("model target needs non-empty provider_id and model_name");
    return t;
}

PromptSpec prompt_from_config(const json& j) {
    if (j.contains("builtin")) {
        const std::string name = j["builtin"].get<std::string>();
        const BuiltinCorpus& corpus = builtin_corpus();
        for (const PromptSpec* p : corpus.triggers())
            if (p->id == name) return *p;
        throw InvalidConfig("unknown builtin prompt: " + name);
    }
    PromptSpec p;
    p.id = j.at("id").get<std::string>();
    p.condition = condition_from_string(j.value("condition", "custom"));
    p.text = j.at("text").get<std::string>();
    if (p.text.empty()) throw InvalidConfig("prompt " + p.id + " has empty text");
    if (!j.contains("concept_pair"))
        throw InvalidConfig("custom prompt " + p.id + " must declare concept_pair");
    const auto& pair = j["concept_pair"];
    p.concept_pair = {pair.at(0).get<std::string>(), pair.at(1).get<std::string>()};
    if (j.contains("fusion_mode")) {
        const std::string m = j["fusion_mode"].get<std::string>();
        if (m == "fused_incoherent") p.fusion_mode = FusionMode::FusedIncoherent;
        else if (m == "non_fused") p.fusion_mode = FusionMode::NonFused;
        else if (m == "fused_coherent") p.fusion_mode = FusionMode::FusedCoherent;
        else throw InvalidConfig("unknown fusion_mode: " + m);
    }
    p.declared_token_count = j.value("declared_token_count", 0);
    p.sentence_count = j.value("sentence_count", count_sentences(p.text));
    return p;
}

}  // namespace

RunConfig parse_run_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw InvalidConfig(std::string("config parse error: ") + e.what());
    }

    static const std::set<std::string> kKnown = {
        "subjects", "judge", "prompts", "responses_per_prompt",
        "judge_reps", "generation", "archive_path"};
    for (const auto& [key, value] : j.items())
        if (!kKnown.count(key)) throw InvalidConfig("unknown config key: " + key);

    RunConfig config;
    for (const auto& s : j.at("subjects"))
        config.subjects.push_back(target_from_config(s, ModelRole::Subject));
    if (config.subjects.empty()) throw InvalidConfig("subjects must be non-empty");
    config.judge = target_from_config(j.at("judge"), ModelRole::Judge);
    for (const auto& p : j.at("prompts")) config.prompts.push_back(prompt_from_config(p));
    if (config.prompts.empty()) throw InvalidConfig("prompts must be non-empty");

    if (j.contains("responses_per_prompt"))
        for (const auto& [key, value] : j["responses_per_prompt"].items()) {
            const int n = value.get<int>();
            if (n < 1) throw InvalidConfig("responses_per_prompt must be >= 1");
            config.responses_per_prompt[condition_from_string(key)] = n;
        }
    config.judge_reps = j.value("judge_reps", 5);
    if (config.judge_reps < 1) throw InvalidConfig("judge_reps must be >= 1");
    if (j.contains("generation")) {
        const auto& g = j["generation"];
        if (g.contains("temperature")) {
            config.generation.temperature = g["temperature"].get<double>();
            if (*config.generation.temperature < 0)
                throw InvalidConfig("temperature must be >= 0");
        }
        if (g.contains("max_output_tokens"))
            config.generation.max_output_tokens = g["max_output_tokens"].get<int>();
        if (g.contains("provider_seed"))
            config.generation.provider_seed = g["provider_seed"].get<int>();
    }
    config.archive_path = j.value("archive_path", std::string("archive.jsonl"));
    return config;
}

RunConfig load_run_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidConfig("config not found: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_run_config(buffer.str());
}

RunPlan plan(const RunConfig& config) {
    RunPlan run;
    run.judge = config.judge;
    run.judge_reps = config.judge_reps;
    run.generation = config.generation;

    std::set<std::string> seen;
    for (const auto& prompt : config.prompts) {
        const int replicates = config.replicates_for(prompt.condition);
        for (const auto& subject : config.subjects) {
            for (int rep = 1; rep <= replicates; ++rep) {
                TrialSpec trial;
                trial.prompt_id = prompt.id;
                trial.subject = subject;
                trial.replicate_index = rep;
                trial.trial_key = make_trial_key(subject, prompt.id, prompt.text, rep,
                                                 config.generation);
                if (!seen.insert(trial.trial_key).second)
                    throw InvalidConfig("duplicate trial: " + prompt.id + "/" +
                                        subject.model_name + "/" + std::to_string(rep));
                run.trials.push_back(std::move(trial));
            }
        }
    }
    return run;
}

ExecStats execute(const RunPlan& run, const std::vector<PromptSpec>& prompts,
                  const JudgeTemplate& tmpl, Gateway& gateway, const RetryPolicy& retry) {
    ExecStats stats;
    Archive& archive = gateway.archive();

    for (const TrialSpec& trial : run.trials) {
        const PromptSpec* prompt = nullptr;
        for (const auto& p : prompts)
            if (p.id == trial.prompt_id) prompt = &p;
        if (!prompt) throw InvalidConfig("plan references unknown prompt: " + trial.prompt_id);

        const auto prior = archive.lookup(trial.trial_key);
        const bool had_subject = prior && !prior->gap && !prior->refused;

        CompletionRequest request;
        request.target = trial.subject;
        request.prompt_text = prompt->text;
        request.config = run.generation;
        request.trial_key = trial.trial_key;

        const std::string response_id = trial.subject.model_name + "-" + trial.prompt_id +
                                        "-r" + std::to_string(trial.replicate_index);
        Gateway::TrialMeta meta;
        meta.kind = RecordKind::Subject;
        meta.prompt_id = trial.prompt_id;
        meta.condition = prompt->condition;
        meta.replicate = trial.replicate_index;
        meta.response_id = response_id;

        CompletionResult subject_result;
        try {
            subject_result = gateway.complete_with_retry(request, meta, retry);
        } catch (const RetriesExhausted&) {
            ArchiveRecord gap;
            gap.trial_key = trial.trial_key;
            gap.kind = RecordKind::Subject;
            gap.target = trial.subject;
            gap.prompt_id = trial.prompt_id;
            gap.condition = prompt->condition;
            gap.replicate = trial.replicate_index;
            gap.response_id = response_id;
            gap.created_at = utc_timestamp_now();
            gap.attempt_count = retry.max_attempts;
            gap.gap = true;
            archive.record_fixture(gap);
            ++stats.gaps;
            continue;
        }
        if (had_subject)
            ++stats.skipped;
        else
            ++stats.subject_calls;

        SubjectResponse response;
        response.response_id = response_id;
        response.prompt_id = trial.prompt_id;
        response.subject = trial.subject;
        response.replicate_index = trial.replicate_index;
        response.text = subject_result.text;

        if (run.judge_reps < 1) continue;  // subject-only phase
        const size_t before = archive.size();
        evaluate_response(response, run.judge, tmpl, run.judge_reps, gateway,
                          prompt->condition, run.generation);
        stats.judge_calls += archive.size() - before;
    }
    return stats;
}

ScoreMatrix collect_scores(const Archive& archive) {
    struct SubjectInfo {
        std::string model;
        std::string condition;
    };
    std::map<std::string, SubjectInfo> subjects;  // response_id -> info
    const auto records = archive.records();
    for (const auto& r : records)
        if (r.kind == RecordKind::Subject && !r.gap && !r.refused)
            subjects[r.response_id] = {r.target.model_name, to_string(r.condition)};

    struct Entry {
        int replicate;
        int judge_rep;
        int score;
    };
    std::map<GroupLabel, std::vector<Entry>> entries;
    ScoreMatrix matrix;

    for (const auto& r : records) {
        if (r.kind != RecordKind::Judge || r.gap || r.refused) continue;
        auto subject = subjects.find(r.response_id);
        if (subject == subjects.end()) continue;
        const GroupLabel label{subject->second.model, subject->second.condition};
        matrix.cell(label);  // establish insertion order even if all parses fail
        try {
            const ScoreExtraction extraction = extract_score(r.text);
            entries[label].push_back({r.replicate, r.judge_rep, extraction.score});
        } catch (const ScoreError&) {
            ++matrix.parse_failures[label];
        }
    }

    for (auto& [label, list] : entries) {
        std::stable_sort(list.begin(), list.end(), [](const Entry& a, const Entry& b) {
            return a.replicate < b.replicate ||
                   (a.replicate == b.replicate && a.judge_rep < b.judge_rep);
        });
        SampleSet& cell = matrix.cell(label);
        cell.scores.reserve(list.size());
        for (const Entry& e : list) {
            cell.scores.push_back(e.score);
            matrix.row_keys[label].push_back({e.replicate, e.judge_rep});
        }
    }
    return matrix;
}

std::string export_matrix_csv(const ScoreMatrix& matrix) {
    return emit_score_table(matrix).csv;
}

std::vector<std::pair<GroupLabel, GroupLabel>> load_pairs_file(
    const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidConfig("pairs file not found: " + path.string());
    std::vector<std::pair<GroupLabel, GroupLabel>> pairs;
    std::string line;
    while (std::getline(in, line)) {
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream tokens(line);
        std::string ma, ca, mb, cb;
        if (!(tokens >> ma >> ca >> mb >> cb)) {
            if (!ma.empty()) throw InvalidConfig("malformed pairs line: " + line);
            continue;  // blank line
        }
        pairs.push_back({{ma, ca}, {mb, cb}});
    }
    return pairs;
}

}  // namespace pih
