#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "pih/fixtures.hpp"
#include "pih/orchestrator.hpp"

using namespace pih;

namespace {

std::string subject_json(const std::string& name) {
    return R"({"provider_id": "prov", "model_name": ")" + name + R"("})";
}

std::string config_json(int subjects, const std::string& extra = "") {
    std::string list;
    for (int i = 1; i <= subjects; ++i) {
        if (!list.empty()) list += ", ";
        list += subject_json("model" + std::to_string(i));
    }
    return R"({"subjects": [)" + list + R"(],
               "judge": {"provider_id": "prov", "model_name": "judge", "role": "judge"},
               "prompts": [{"builtin": "HIPc"}],
               "archive_path": "unused.jsonl")" +
           extra + "}";
}

/// Answers subject prompts with fixed prose and judge prompts with a fixed
/// score line; roles are told apart by the request target.
class DualProvider : public Provider {
public:
    CompletionResult complete(const CompletionRequest& request) override {
        if (request.target.role == ModelRole::Judge) {
            ++judge_calls;
            return {"Hallucination Score: 6 / 10\nrationale", 1, "2025-05-01T00:00:00Z",
                    std::nullopt, 1};
        }
        ++subject_calls;
        return {"A speculative framework emerges.", 1, "2025-05-01T00:00:00Z", std::nullopt,
                1};
    }
    int subject_calls = 0;
    int judge_calls = 0;
};

/// Like DualProvider, but subject calls for one model always fail.
class PartialOutageProvider : public DualProvider {
public:
    explicit PartialOutageProvider(std::string broken_model)
        : broken_model_(std::move(broken_model)) {}
    CompletionResult complete(const CompletionRequest& request) override {
        if (request.target.role == ModelRole::Subject &&
            request.target.model_name == broken_model_)
            throw TransportError("model down");
        return DualProvider::complete(request);
    }

private:
    std::string broken_model_;
};

}  // namespace

TEST_CASE("config parsing rejects structural problems") {
    CHECK_THROWS_AS(parse_run_config("not json"), InvalidConfig);
    CHECK_THROWS_AS(parse_run_config(R"({"unknown_key": 1})"), InvalidConfig);
    CHECK_THROWS_AS(parse_run_config(config_json(0)), InvalidConfig);
    CHECK_THROWS_AS(load_run_config("/nonexistent/config.json"), InvalidConfig);

    // Custom prompts must spell out text and concept pair.
    const std::string empty_text =
        R"({"subjects": [{"provider_id": "p", "model_name": "m"}],
            "judge": {"provider_id": "p", "model_name": "j"},
            "prompts": [{"id": "X", "text": "", "concept_pair": ["a", "b"]}]})";
    CHECK_THROWS_AS(parse_run_config(empty_text), InvalidConfig);
    const std::string no_pair =
        R"({"subjects": [{"provider_id": "p", "model_name": "m"}],
            "judge": {"provider_id": "p", "model_name": "j"},
            "prompts": [{"id": "X", "text": "Fine text."}]})";
    CHECK_THROWS_AS(parse_run_config(no_pair), InvalidConfig);
}

TEST_CASE("replicate defaults follow the three-condition design") {
    const RunConfig config = parse_run_config(config_json(1));
    CHECK(config.replicates_for(Condition::HIPc) == 3);
    CHECK(config.replicates_for(Condition::HIPn) == 2);
    CHECK(config.replicates_for(Condition::TIPcs) == 2);
    CHECK(config.judge_reps == 5);
}

TEST_CASE("plan expands six subjects into 18 trials and 90 judge tasks") {
    const RunConfig config = parse_run_config(config_json(6));
    const RunPlan run = plan(config);
    CHECK(run.trials.size() == 18);
    CHECK(run.judge_task_count() == 90);

    // Deterministic: equal configs yield equal plans.
    const RunPlan again = plan(parse_run_config(config_json(6)));
    REQUIRE(again.trials.size() == run.trials.size());
    for (size_t i = 0; i < run.trials.size(); ++i)
        CHECK(run.trials[i].trial_key == again.trials[i].trial_key);

    // Ordered by (prompt, subject, replicate).
    CHECK(run.trials[0].subject.model_name == "model1");
    CHECK(run.trials[0].replicate_index == 1);
    CHECK(run.trials[2].replicate_index == 3);
    CHECK(run.trials[3].subject.model_name == "model2");
}

TEST_CASE("execute is idempotent over a fixed archive") {
    const RunConfig config =
        parse_run_config(config_json(2, R"(, "judge_reps": 2)"));
    const RunPlan run = plan(config);
    DualProvider provider;
    Archive archive;
    Gateway gateway(provider, archive);

    const ExecStats first = execute(run, config.prompts, builtin_corpus().hqp1, gateway);
    CHECK(first.subject_calls == 6);
    CHECK(first.judge_calls == 12);
    CHECK(first.gaps == 0);
    CHECK(archive.size() == 18);

    const ExecStats second = execute(run, config.prompts, builtin_corpus().hqp1, gateway);
    CHECK(second.subject_calls == 0);
    CHECK(second.judge_calls == 0);
    CHECK(second.skipped == 6);
    CHECK(provider.subject_calls == 6);  // unchanged: zero new provider traffic
    CHECK(provider.judge_calls == 12);
    CHECK(archive.size() == 18);
    CHECK(archive.audit_stateless());
}

TEST_CASE("an exhausted trial is recorded as a gap and the run continues") {
    const RunConfig config =
        parse_run_config(config_json(2, R"(, "judge_reps": 1)"));
    const RunPlan run = plan(config);
    Archive archive;

    {
        PartialOutageProvider provider("model1");
        Gateway gateway(provider, archive);
        const ExecStats stats =
            execute(run, config.prompts, builtin_corpus().hqp1, gateway, {2, 1});
        CHECK(stats.gaps == 3);          // all three model1 replicates
        CHECK(stats.subject_calls == 3); // model2 completed
        CHECK(stats.judge_calls == 3);
    }
    int gap_records = 0;
    for (const auto& rec : archive.records())
        if (rec.gap) ++gap_records;
    CHECK(gap_records == 3);

    // Resume with a healthy provider: gaps are filled, nothing else re-runs.
    DualProvider healthy;
    Gateway gateway(healthy, archive);
    const ExecStats resumed =
        execute(run, config.prompts, builtin_corpus().hqp1, gateway, {2, 1});
    CHECK(resumed.gaps == 0);
    CHECK(resumed.subject_calls == 3);
    CHECK(resumed.skipped == 3);
    CHECK(healthy.subject_calls == 3);
    // The archive is append-only: old gap lines remain, but every trial key
    // now resolves to a successful record.
    for (const auto& trial : run.trials) {
        const auto rec = archive.lookup(trial.trial_key);
        REQUIRE(rec.has_value());
        CHECK_FALSE(rec->gap);
    }
}

TEST_CASE("collect_scores rebuilds the published matrix from the fixture archive") {
    Archive archive;
    fixtures::write_fixture_archive(archive);
    const ScoreMatrix matrix = collect_scores(archive);
    CHECK(matrix.at({"4o", "HIPc"}).n() == 15);
    CHECK(matrix.at({"DSR", "TIPcs"}).n() == 10);
    CHECK(descriptive(matrix.at({"4o", "HIPc"})).mean == doctest::Approx(5.5333).epsilon(1e-4));

    // Insensitive to record order: a reversed archive yields the same cells.
    Archive reversed;
    auto records = archive.records();
    for (auto it = records.rbegin(); it != records.rend(); ++it) reversed.record_fixture(*it);
    const ScoreMatrix again = collect_scores(reversed);
    for (const auto& label : matrix.order)
        CHECK(again.at(label).scores == matrix.at(label).scores);
}

TEST_CASE("a parse failure shrinks the cell and is counted") {
    Archive archive;
    fixtures::write_fixture_archive(archive);
    // Append one unparseable judge evaluation for a fresh (replicate, rep) slot.
    ArchiveRecord bad;
    bad.trial_key = "bad-judge-record";
    bad.kind = RecordKind::Judge;
    bad.target = {"openai", "GPT-o3", ModelClass::Reasoning, ModelRole::Judge};
    bad.prompt_id = "HIPc";
    bad.condition = Condition::HIPc;
    bad.replicate = 3;
    bad.judge_rep = 6;
    bad.response_id = archive.records().front().response_id;  // a subject record
    bad.text = "no verdict given";
    bad.created_at = "2025-05-01T00:00:00Z";
    archive.record_fixture(bad);

    const ScoreMatrix matrix = collect_scores(archive);
    const GroupLabel label{"4o", "HIPc"};
    CHECK(matrix.at(label).n() == 15);
    CHECK(matrix.parse_failures.at(label) == 1);
}

TEST_CASE("pairs files parse with comments and fail loudly when malformed") {
    const auto path = std::filesystem::temp_directory_path() / "pih_pairs_test.txt";
    {
        std::ofstream out(path);
        out << "# headline comparisons\n"
            << "4o HIPc o3 HIPc\n"
            << "\n"
            << "DS HIPc DSR HIPc # trailing comment\n";
    }
    const auto pairs = load_pairs_file(path);
    REQUIRE(pairs.size() == 2);
    CHECK(pairs[0].first.model == "4o");
    CHECK(pairs[1].second.condition == "HIPc");

    {
        std::ofstream out(path);
        out << "only three tokens\n";
    }
    CHECK_THROWS_AS(load_pairs_file(path), InvalidConfig);
    std::filesystem::remove(path);
}
