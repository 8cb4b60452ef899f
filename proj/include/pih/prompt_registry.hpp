#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pih {

enum class Condition { HIPc, HIPn, TIPcs, Custom };
enum class FusionMode { FusedIncoherent, NonFused, FusedCoherent };

const char* to_string(Condition c);
const char* to_string(FusionMode m);
Condition condition_from_string(std::string_view s);

/// A trigger or judge prompt together with its condition label and the
/// structural metadata used for matching checks. Declared token counts are
/// trusted metadata (counted with an external BPE tokenizer); the validator
/// only applies a whitespace heuristic against a wide band.
struct PromptSpec {
    std::string id;
    Condition condition = Condition::Custom;
    FusionMode fusion_mode = FusionMode::FusedIncoherent;
    std::string text;
    std::pair<std::string, std::string> concept_pair;
    int declared_token_count = 0;
    int sentence_count = 0;
};

struct JudgeTemplate {
    std::string id;
    std::string template_text;
    std::string insertion_marker;
    int scale_min = 0;
    int scale_max = 10;
};

struct ValidationPolicy {
    int expected_sentence_count = 2;
    std::pair<int, int> approx_token_band{1, 60};  // inclusive
    bool require_both_concepts = true;
};

struct Finding {
    bool pass = true;
    std::string check;
    std::string detail;
};

struct ValidationReport {
    std::vector<Finding> findings;
    bool all_pass() const;
};

struct BuiltinCorpus {
    PromptSpec hipc;
    PromptSpec hipn;
    PromptSpec tipcs;
    JudgeTemplate hqp1;
    std::vector<const PromptSpec*> triggers() const;
};

/// The built-in trigger prompts and judge template, byte-identical across
/// calls.
const BuiltinCorpus& builtin_corpus();

/// Count of maximal whitespace-delimited segments. A heuristic stand-in for
/// BPE token counting, used only for band checks.
int approx_token_count(std::string_view text);

/// Sentences are delimited by '.', '?' or '!' followed by whitespace or end
/// of text. No abbreviation handling; prompts are short controlled English.
int count_sentences(std::string_view text);

/// Structural checks only. Problems come back as warn findings, never as
/// failures, and the prompt is not mutated.
ValidationReport validate_prompt(const PromptSpec& spec, const ValidationPolicy& policy);

/// One record per built-in prompt: id, condition, fusion_mode, text,
/// declared_token_count. For audit export.
std::string export_corpus_text();

}  // namespace pih
