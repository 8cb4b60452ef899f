// Command-line entry point: validate / run / judge / stats / report / demo.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pih/fixtures.hpp"
#include "pih/gateway.hpp"
#include "pih/judge.hpp"
#include "pih/orchestrator.hpp"
#include "pih/prompt_registry.hpp"
#include "pih/report.hpp"
#include "pih/stats.hpp"

namespace fs = std::filesystem;
using namespace pih;

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << content;
    out.flush();
    if (!out) throw IoError("write failed: " + path.string());
}

void ensure_out_dir(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec && !fs::is_directory(dir))
        throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
}

/// Loads every *.jsonl file under `dir` (or the file itself) into one
/// in-memory fixture archive.
void load_replay_fixtures(const fs::path& dir, Archive& fixtures) {
    std::vector<fs::path> files;
    if (fs::is_directory(dir)) {
        for (const auto& entry : fs::directory_iterator(dir))
            if (entry.is_regular_file() && entry.path().extension() == ".jsonl")
                files.push_back(entry.path());
        std::sort(files.begin(), files.end());
    } else if (fs::is_regular_file(dir)) {
        files.push_back(dir);
    } else {
        throw InvalidConfig("replay path not found: " + dir.string());
    }
    for (const auto& file : files) {
        std::ifstream in(file);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            fixtures.record_fixture(ArchiveRecord::from_json_line(line));
        }
    }
}

struct CommonFlags {
    std::string config_path;
    std::string archive_path;
    std::string out_dir = ".";
    std::string pairs_path;
    std::string replay_path;
    unsigned seed = 42;
};

fs::path resolve_archive(const CommonFlags& flags, const RunConfig* config) {
    if (!flags.archive_path.empty()) return flags.archive_path;
    if (config && !config->archive_path.empty()) return config->archive_path;
    throw InvalidConfig("no archive path: pass --archive or set archive_path in the config");
}

int cmd_validate(const CommonFlags& flags) {
    const RunConfig config = load_run_config(flags.config_path);
    const ValidationPolicy policy;
    bool any_warn = false;
    for (const PromptSpec& prompt : config.prompts) {
        const ValidationReport report = validate_prompt(prompt, policy);
        for (const Finding& f : report.findings) {
            if (!f.pass) any_warn = true;
            std::cout << prompt.id << ": " << (f.pass ? "pass" : "warn") << " " << f.check
                      << (f.detail.empty() ? "" : " — " + f.detail) << "\n";
        }
    }
    std::cout << (any_warn ? "validation finished with warnings\n" : "all checks passed\n");
    return 0;  // warnings are not structural errors
}

std::unique_ptr<Provider> make_provider(const CommonFlags& flags, Archive& replay_store) {
    if (!flags.replay_path.empty()) {
        load_replay_fixtures(flags.replay_path, replay_store);
        return std::make_unique<ReplayProvider>(replay_store);
    }
    return std::make_unique<HttpChatProvider>();
}

int cmd_run(const CommonFlags& flags) {
    const RunConfig config = load_run_config(flags.config_path);
    Archive archive(resolve_archive(flags, &config));
    Archive replay_store;
    auto provider = make_provider(flags, replay_store);
    Gateway gateway(*provider, archive);

    RunPlan run = plan(config);
    run.judge_reps = 0;  // subject phase only; judging is a separate command
    const ExecStats stats = execute(run, config.prompts, builtin_corpus().hqp1, gateway);
    std::cout << "subject calls: " << stats.subject_calls << ", skipped: " << stats.skipped
              << ", gaps: " << stats.gaps << "\n";
    std::cout << "archive: " << archive.path().string() << " (" << archive.size()
              << " records)\n";
    return stats.gaps == 0 ? 0 : 2;
}

int cmd_judge(const CommonFlags& flags) {
    const RunConfig config = load_run_config(flags.config_path);
    Archive archive(resolve_archive(flags, &config));
    Archive replay_store;
    auto provider = make_provider(flags, replay_store);
    Gateway gateway(*provider, archive);

    const RunPlan run = plan(config);
    size_t judged = 0, missing = 0;
    bool any_subject = false;
    const size_t before = archive.size();
    for (const TrialSpec& trial : run.trials) {
        const auto record = archive.lookup(trial.trial_key);
        if (!record || record->gap || record->refused) {
            ++missing;
            continue;
        }
        any_subject = true;
        const PromptSpec* prompt = nullptr;
        for (const auto& p : config.prompts)
            if (p.id == trial.prompt_id) prompt = &p;

        SubjectResponse response;
        response.response_id = record->response_id;
        response.prompt_id = trial.prompt_id;
        response.subject = trial.subject;
        response.replicate_index = trial.replicate_index;
        response.text = record->text;
        evaluate_response(response, config.judge, builtin_corpus().hqp1, config.judge_reps,
                          gateway, prompt ? prompt->condition : Condition::Custom,
                          config.generation);
        ++judged;
    }
    if (!any_subject) {
        std::cerr << "no subject archive: run the run phase before judging\n";
        return 2;
    }
    std::cout << "responses judged: " << judged << ", missing subjects: " << missing
              << ", new judge records: " << archive.size() - before << "\n";
    return 0;
}

struct StatsArtifacts {
    ScoreMatrix matrix;
    std::vector<WelchResult> results;
};

StatsArtifacts compute_stats(const Archive& archive, const std::string& pairs_path) {
    StatsArtifacts artifacts;
    artifacts.matrix = collect_scores(archive);
    if (artifacts.matrix.empty())
        throw InvalidConfig("archive holds no judged scores: run the judge phase first");
    if (!pairs_path.empty())
        artifacts.results = pairwise_compare(artifacts.matrix, load_pairs_file(pairs_path));
    return artifacts;
}

void write_tables(const fs::path& out, const StatsArtifacts& artifacts) {
    const ScoreTable table = emit_score_table(artifacts.matrix);
    write_file(out / "scores.csv", table.csv);
    write_file(out / "scores.md", table.markdown);
    if (!artifacts.results.empty())
        write_file(out / "significance.md", emit_significance_table(artifacts.results));
}

/// One beeswarm per condition, in first-appearance order; brackets carry the
/// same-condition comparisons.
std::vector<std::string> write_figures(const fs::path& out, const StatsArtifacts& artifacts,
                                       unsigned seed) {
    std::vector<std::string> conditions;
    for (const GroupLabel& label : artifacts.matrix.order)
        if (std::find(conditions.begin(), conditions.end(), label.condition) ==
            conditions.end())
            conditions.push_back(label.condition);

    std::vector<std::string> files;
    for (const std::string& condition : conditions) {
        FigureSpec spec;
        spec.jitter_seed = seed;
        spec.title = condition + " hallucination scores";
        for (const GroupLabel& label : artifacts.matrix.order) {
            if (label.condition != condition) continue;
            const SampleSet& cell = artifacts.matrix.at(label);
            if (cell.scores.empty()) continue;
            spec.groups.push_back({label.model, cell, descriptive(cell)});
        }
        if (spec.groups.empty()) continue;
        for (const WelchResult& r : artifacts.results)
            if (r.label_a.condition == condition && r.label_b.condition == condition)
                spec.comparisons.push_back(r);
        const std::string name = "fig_" + condition + ".svg";
        write_file(out / name, emit_beeswarm_svg(spec));
        files.push_back(name);
    }
    return files;
}

int cmd_stats(const CommonFlags& flags) {
    const RunConfig config = flags.config_path.empty() ? RunConfig{}
                                                       : load_run_config(flags.config_path);
    const Archive archive(
        resolve_archive(flags, flags.config_path.empty() ? nullptr : &config));
    const StatsArtifacts artifacts = compute_stats(archive, flags.pairs_path);
    ensure_out_dir(flags.out_dir);
    write_tables(flags.out_dir, artifacts);

    std::cout << "groups: " << artifacts.matrix.order.size()
              << ", comparisons: " << artifacts.results.size() << "\n";
    std::cout << "wrote scores.csv, scores.md"
              << (artifacts.results.empty() ? "" : ", significance.md") << " to "
              << flags.out_dir << "\n";
    return 0;
}

int cmd_report(const CommonFlags& flags) {
    const RunConfig config = flags.config_path.empty() ? RunConfig{}
                                                       : load_run_config(flags.config_path);
    const Archive archive(
        resolve_archive(flags, flags.config_path.empty() ? nullptr : &config));
    const StatsArtifacts artifacts = compute_stats(archive, flags.pairs_path);
    ensure_out_dir(flags.out_dir);
    write_tables(flags.out_dir, artifacts);
    const auto figures = write_figures(flags.out_dir, artifacts, flags.seed);
    write_file(fs::path(flags.out_dir) / "report.md",
               emit_full_report(artifacts.matrix, artifacts.results, figures));
    std::cout << "wrote report.md and " << figures.size() << " figure(s) to " << flags.out_dir
              << "\n";
    return 0;
}

int cmd_demo(const CommonFlags& flags) {
    ensure_out_dir(flags.out_dir);

    Archive archive;
    fixtures::write_fixture_archive(archive);
    StatsArtifacts artifacts;
    artifacts.matrix = collect_scores(archive);
    std::vector<std::pair<GroupLabel, GroupLabel>> pairs;
    for (const auto& c : fixtures::printed_comparisons()) pairs.push_back({c.a, c.b});
    artifacts.results = pairwise_compare(artifacts.matrix, pairs);

    std::cout << "HIPc means:";
    for (const GroupLabel& label : artifacts.matrix.order) {
        if (label.condition != "HIPc") continue;
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2f", descriptive(artifacts.matrix.at(label)).mean);
        std::cout << " " << label.model << "=" << buf;
    }
    std::cout << "\n";
    for (const WelchResult& r : artifacts.results)
        std::cout << r.label_a.str() << " vs " << r.label_b.str()
                  << ": p=" << format_p(r.p_one_tailed) << " " << stars_label(r.stars) << "\n";

    std::cout << "appendix judge scores:";
    for (const auto& judge : fixtures::judge_texts())
        std::cout << " " << extract_score(judge.text).score;
    std::cout << "\n";

    write_tables(flags.out_dir, artifacts);
    const auto figures = write_figures(flags.out_dir, artifacts, flags.seed);
    write_file(fs::path(flags.out_dir) / "report.md",
               emit_full_report(artifacts.matrix, artifacts.results, figures));
    std::cout << "artifacts written to " << flags.out_dir << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Prompt-induced hallucination measurement harness"};
    app.require_subcommand(1);

    CommonFlags flags;
    const auto add_common = [&](CLI::App* cmd, bool config_required) {
        auto* config = cmd->add_option("--config", flags.config_path, "run configuration file");
        if (config_required) config->required();
        cmd->add_option("--archive", flags.archive_path, "JSONL archive path");
        cmd->add_option("--out", flags.out_dir, "output directory");
        cmd->add_option("--pairs", flags.pairs_path, "pairwise comparison list");
        cmd->add_option("--seed", flags.seed, "figure jitter seed");
        cmd->add_option("--replay", flags.replay_path, "replay fixture file or directory");
    };

    auto* validate = app.add_subcommand("validate", "check prompt structure");
    add_common(validate, true);
    auto* run = app.add_subcommand("run", "collect subject responses");
    add_common(run, true);
    auto* judge = app.add_subcommand("judge", "score archived responses");
    add_common(judge, true);
    auto* stats = app.add_subcommand("stats", "score matrix and significance tests");
    add_common(stats, false);
    auto* report = app.add_subcommand("report", "tables, figures and report document");
    add_common(report, false);
    auto* demo = app.add_subcommand("demo", "offline walkthrough on bundled data");
    add_common(demo, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (validate->parsed()) return cmd_validate(flags);
        if (run->parsed()) return cmd_run(flags);
        if (judge->parsed()) return cmd_judge(flags);
        if (stats->parsed()) return cmd_stats(flags);
        if (report->parsed()) return cmd_report(flags);
        if (demo->parsed()) return cmd_demo(flags);
    } catch (const InvalidConfig& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
