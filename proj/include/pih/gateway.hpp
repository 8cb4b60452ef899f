#pragma once

#include <condition_variable>
#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pih/prompt_registry.hpp"

namespace pih {

enum class ModelClass { GeneralPurpose, Reasoning };
enum class ModelRole { Subject, Judge };

const char* to_string(ModelClass c);
const char* to_string(ModelRole r);
ModelClass model_class_from_string(std::string_view s);
ModelRole model_role_from_string(std::string_view s);

struct ModelTarget {
    std::string provider_id;
    std::string model_name;
    ModelClass model_class = ModelClass::GeneralPurpose;
    ModelRole role = ModelRole::Subject;
};

/// All fields default to unset so providers fall back to their own defaults;
/// whatever was sent is recorded verbatim in the archive.
struct GenerationConfig {
    std::optional<double> temperature;
    std::optional<int> max_output_tokens;
    std::optional<int> provider_seed;

    std::string canonical() const;
};

/// A single-turn request. There is deliberately no field for prior messages:
/// every request is a disposable session of exactly one user message.
struct CompletionRequest {
    ModelTarget target;
    std::string prompt_text;
    GenerationConfig config;
    std::string trial_key;
};

struct CompletionResult {
    std::string text;
    long latency_ms = 0;
    std::string created_at;
    std::optional<std::string> provider_message_id;
    int attempt_count = 1;
};

struct TransportError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ProviderRefusal : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ReplayMiss : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct FixtureConflict : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct RetriesExhausted : std::runtime_error {
    RetriesExhausted(const std::string& what, int attempts)
        : std::runtime_error(what), attempts(attempts) {}
    int attempts;
};

/// Stable content hash identifying one trial, independent of time or machine.
std::string make_trial_key(const ModelTarget& target, const std::string& prompt_id,
                           const std::string& prompt_text, int replicate_index,
                           const GenerationConfig& config);

enum class RecordKind { Subject, Judge };

/// One JSONL line in the archive.
struct ArchiveRecord {
    std::string trial_key;
    RecordKind kind = RecordKind::Subject;
    ModelTarget target;
    std::string prompt_id;
    Condition condition = Condition::Custom;
    int replicate = 1;
    int judge_rep = 0;              // 0 for subject records
    std::string response_id;        // judge records: the subject response scored
    GenerationConfig config;
    std::string text;
    long latency_ms = 0;
    std::string created_at;
    int attempt_count = 1;
    int message_count = 1;          // user messages sent; always 1 by construction
    bool refused = false;
    bool gap = false;               // trial aborted after retries were exhausted

    std::string to_json_line() const;
    static ArchiveRecord from_json_line(const std::string& line);
};

/// Append-only JSONL archive. Appends are serialized through one writer lock;
/// re-recording an existing trial_key with identical text is a no-op and
/// differing text is a conflict.
class Archive {
public:
    Archive() = default;  // in-memory only
    explicit Archive(std::filesystem::path path);  // loads existing records

    void record_fixture(const ArchiveRecord& record);
    bool contains(const std::string& trial_key) const;
    std::optional<ArchiveRecord> lookup(const std::string& trial_key) const;
    std::vector<ArchiveRecord> records() const;
    size_t size() const;

    /// True when every record carries exactly one user message.
    bool audit_stateless() const;

    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
    std::vector<ArchiveRecord> records_;
    std::map<std::string, size_t> by_key_;
    mutable std::mutex mutex_;
};

class Provider {
public:
    virtual ~Provider() = default;
    virtual CompletionResult complete(const CompletionRequest& request) = 0;
};

/// Serves completions from a fixture archive, keyed by trial_key. Unknown
/// keys are a ReplayMiss.
class ReplayProvider : public Provider {
public:
    explicit ReplayProvider(const Archive& fixtures);
    explicit ReplayProvider(const std::filesystem::path& archive_file);
    CompletionResult complete(const CompletionRequest& request) override;

private:
    std::map<std::string, std::string> texts_;
};

/// OpenAI-style chat completion endpoint over HTTPS. Credentials come from
/// the environment variable `<PROVIDER_ID>_API_KEY` (provider id uppercased);
/// the base URL can be overridden with `<PROVIDER_ID>_BASE_URL`. Operators
/// must disable vendor-side memory features; the client never transmits user
/// identifiers.
class HttpChatProvider : public Provider {
public:
    CompletionResult complete(const CompletionRequest& request) override;
};

struct RetryPolicy {
    int max_attempts = 3;
    long base_backoff_ms = 250;
};

/// Binds a provider to an archive. Results are persisted before being
/// returned; trials already present in the archive are answered from it
/// without a provider call. In-flight provider calls are bounded.
class Gateway {
public:
    Gateway(Provider& provider, Archive& archive, int max_in_flight = 4);

    /// Issues (or replays) exactly one single-turn call. `meta` supplies the
    /// archive bookkeeping fields that are not part of the wire request.
    struct TrialMeta {
        RecordKind kind = RecordKind::Subject;
        std::string prompt_id;
        Condition condition = Condition::Custom;
        int replicate = 1;
        int judge_rep = 0;
        std::string response_id;
    };

    CompletionResult complete(const CompletionRequest& request, const TrialMeta& meta);
    CompletionResult complete_with_retry(const CompletionRequest& request,
                                         const TrialMeta& meta, const RetryPolicy& policy);

    Archive& archive() { return archive_; }

private:
    CompletionResult complete_attempt(const CompletionRequest& request, const TrialMeta& meta,
                                      int attempt_count);
    CompletionResult call_provider(const CompletionRequest& request);

    Provider& provider_;
    Archive& archive_;
    int max_in_flight_;
    int in_flight_ = 0;
    std::mutex mutex_;
    std::condition_variable slot_free_;
};

/// RFC 3339 UTC timestamp of now.
std::string utc_timestamp_now();

}  // namespace pih
