#include "pih/gateway.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#ifndef PIH_NO_HTTP
#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>
#endif

namespace pih {

using nlohmann::json;

const char* to_string(ModelClass c) {
    return c == ModelClass::GeneralPurpose ? "general_purpose" : "reasoning";
}

const char* to_string(ModelRole r) { return r == ModelRole::Subject ? "subject" : "judge"; }

ModelClass model_class_from_string(std::string_view s) {
    if (s == "general_purpose") return ModelClass::GeneralPurpose;
    if (s == "reasoning") return ModelClass::Reasoning;
    throw std::invalid_argument("unknown model_class: " + std::string(s));
}

ModelRole model_role_from_string(std::string_view s) {
    if (s == "subject") return ModelRole::Subject;
    if (s == "judge") return ModelRole::Judge;
    throw std::invalid_argument("unknown role: " + std::string(s));
}

std::string GenerationConfig::canonical() const {
    std::ostringstream os;
    os << "t=";
    if (temperature) os << *temperature;
    os << ";m=";
    if (max_output_tokens) os << *max_output_tokens;
    os << ";s=";
    if (provider_seed) os << *provider_seed;
    return os.str();
}

namespace {

// FNV-1a, 64 bit.
uint64_t fnv1a(std::string_view data, uint64_t h = 1469598103934665603ull) {
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

json target_to_json(const ModelTarget& t) {
    return json{{"provider_id", t.provider_id},
                {"model_name", t.model_name},
                {"model_class", to_string(t.model_class)},
                {"role", to_string(t.role)}};
}

ModelTarget target_from_json(const json& j) {
    ModelTarget t;
    t.provider_id = j.at("provider_id").get<std::string>();
    t.model_name = j.at("model_name").get<std::string>();
    t.model_class = model_class_from_string(j.at("model_class").get<std::string>());
    t.role = model_role_from_string(j.at("role").get<std::string>());
    return t;
}

json config_to_json(const GenerationConfig& c) {
    json j = json::object();
    if (c.temperature) j["temperature"] = *c.temperature;
    if (c.max_output_tokens) j["max_output_tokens"] = *c.max_output_tokens;
    if (c.provider_seed) j["provider_seed"] = *c.provider_seed;
    return j;
}

GenerationConfig config_from_json(const json& j) {
    GenerationConfig c;
    if (j.contains("temperature")) c.temperature = j["temperature"].get<double>();
    if (j.contains("max_output_tokens")) c.max_output_tokens = j["max_output_tokens"].get<int>();
    if (j.contains("provider_seed")) c.provider_seed = j["provider_seed"].get<int>();
    return c;
}

}  // namespace

std::string make_trial_key(const ModelTarget& target, const std::string& prompt_id,
                           const std::string& prompt_text, int replicate_index,
                           const GenerationConfig& config) {
    uint64_t h = fnv1a(target.provider_id);
    h = fnv1a("\x1f", h);
    h = fnv1a(target.model_name, h);
    h = fnv1a("\x1f", h);
    h = fnv1a(prompt_id, h);
    h = fnv1a("\x1f", h);
    h = fnv1a(prompt_text, h);
    h = fnv1a("\x1f", h);
    h = fnv1a(std::to_string(replicate_index), h);
    h = fnv1a("\x1f", h);
    h = fnv1a(config.canonical(), h);
    return hex64(h);
}

std::string ArchiveRecord::to_json_line() const {
    json j{{"trial_key", trial_key},
           {"kind", kind == RecordKind::Subject ? "subject" : "judge"},
           {"target", target_to_json(target)},
           {"prompt_id", prompt_id},
           {"condition", to_string(condition)},
           {"replicate", replicate},
           {"config", config_to_json(config)},
           {"text", text},
           {"latency_ms", latency_ms},
           {"created_at", created_at},
           {"attempt_count", attempt_count},
           {"message_count", message_count}};
    j["response_id"] = response_id;
    if (kind == RecordKind::Judge) j["judge_rep"] = judge_rep;
    if (refused) j["refused"] = true;
    if (gap) j["gap"] = true;
    return j.dump();
}

ArchiveRecord ArchiveRecord::from_json_line(const std::string& line) {
    json j = json::parse(line);
    ArchiveRecord r;
    r.trial_key = j.at("trial_key").get<std::string>();
    r.kind = j.at("kind") == "judge" ? RecordKind::Judge : RecordKind::Subject;
    r.target = target_from_json(j.at("target"));
    r.prompt_id = j.at("prompt_id").get<std::string>();
    r.condition = condition_from_string(j.at("condition").get<std::string>());
    r.replicate = j.at("replicate").get<int>();
    r.judge_rep = j.value("judge_rep", 0);
    r.response_id = j.value("response_id", std::string{});
    r.config = config_from_json(j.at("config"));
    r.text = j.at("text").get<std::string>();
    r.latency_ms = j.at("latency_ms").get<long>();
    r.created_at = j.at("created_at").get<std::string>();
    r.attempt_count = j.at("attempt_count").get<int>();
    r.message_count = j.value("message_count", 1);
    r.refused = j.value("refused", false);
    r.gap = j.value("gap", false);
    return r;
}

Archive::Archive(std::filesystem::path path) : path_(std::move(path)) {
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ArchiveRecord r = ArchiveRecord::from_json_line(line);
        by_key_[r.trial_key] = records_.size();
        records_.push_back(std::move(r));
    }
}

void Archive::record_fixture(const ArchiveRecord& record) {
    std::lock_guard lock(mutex_);
    auto it = by_key_.find(record.trial_key);
    if (it != by_key_.end()) {
        const ArchiveRecord& existing = records_[it->second];
        if (!(existing.gap && !record.gap)) {  // a later success may supersede a gap
            if (existing.text != record.text)
                throw FixtureConflict("trial_key " + record.trial_key +
                                      " already recorded with different content");
            return;  // idempotent
        }
    }
    if (!path_.empty()) {
        std::ofstream out(path_, std::ios::app);
        if (!out) throw std::runtime_error("cannot append to archive: " + path_.string());
        out << record.to_json_line() << "\n";
        out.flush();
        if (!out) throw std::runtime_error("archive write failed: " + path_.string());
    }
    by_key_[record.trial_key] = records_.size();
    records_.push_back(record);
}

bool Archive::contains(const std::string& trial_key) const {
    std::lock_guard lock(mutex_);
    return by_key_.count(trial_key) != 0;
}

std::optional<ArchiveRecord> Archive::lookup(const std::string& trial_key) const {
    std::lock_guard lock(mutex_);
    auto it = by_key_.find(trial_key);
    if (it == by_key_.end()) return std::nullopt;
    return records_[it->second];
}

std::vector<ArchiveRecord> Archive::records() const {
    std::lock_guard lock(mutex_);
    return records_;
}

size_t Archive::size() const {
    std::lock_guard lock(mutex_);
    return records_.size();
}

bool Archive::audit_stateless() const {
    std::lock_guard lock(mutex_);
    return std::all_of(records_.begin(), records_.end(),
                       [](const ArchiveRecord& r) { return r.message_count == 1; });
}

ReplayProvider::ReplayProvider(const Archive& fixtures) {
    for (const auto& r : fixtures.records())
        if (!r.gap) texts_[r.trial_key] = r.text;
}

ReplayProvider::ReplayProvider(const std::filesystem::path& archive_file)
    : ReplayProvider(Archive(archive_file)) {}

CompletionResult ReplayProvider::complete(const CompletionRequest& request) {
    auto it = texts_.find(request.trial_key);
    if (it == texts_.end())
        throw ReplayMiss("no fixture for trial_key " + request.trial_key);
    CompletionResult result;
    result.text = it->second;
    result.latency_ms = 0;
    result.created_at = "1970-01-01T00:00:00Z";
    result.attempt_count = 1;
    return result;
}

CompletionResult HttpChatProvider::complete(const CompletionRequest& request) {
#ifdef PIH_NO_HTTP
    throw TransportError("HTTP support disabled in this build");
#else
    std::string id_upper = request.target.provider_id;
    std::transform(id_upper.begin(), id_upper.end(), id_upper.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    const char* key = std::getenv((id_upper + "_API_KEY").c_str());
    if (!key) throw TransportError("missing credential " + id_upper + "_API_KEY");
    const char* base = std::getenv((id_upper + "_BASE_URL").c_str());
    std::string base_url = base ? base : "https://api.openai.com";

    json body{{"model", request.target.model_name},
              {"messages", json::array({json{{"role", "user"}, {"content", request.prompt_text}}})}};
    if (request.config.temperature) body["temperature"] = *request.config.temperature;
    if (request.config.max_output_tokens) body["max_tokens"] = *request.config.max_output_tokens;
    if (request.config.provider_seed) body["seed"] = *request.config.provider_seed;

    const auto start = std::chrono::steady_clock::now();
    httplib::Client client(base_url);
    client.set_default_headers({{"Authorization", std::string("Bearer ") + key}});
    auto res = client.Post("/v1/chat/completions", body.dump(), "application/json");
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();

    if (!res) throw TransportError("no response from " + base_url);
    if (res->status == 400 || res->status == 403)
        throw ProviderRefusal("provider refused request: HTTP " + std::to_string(res->status));
    if (res->status != 200)
        throw TransportError("HTTP " + std::to_string(res->status) + " from " + base_url);

    json reply = json::parse(res->body);
    CompletionResult result;
    result.text = reply.at("choices").at(0).at("message").at("content").get<std::string>();
    result.latency_ms = static_cast<long>(elapsed);
    result.created_at = utc_timestamp_now();
    if (reply.contains("id")) result.provider_message_id = reply["id"].get<std::string>();
    if (result.text.empty()) throw ProviderRefusal("provider returned empty completion");
    return result;
#endif
}

Gateway::Gateway(Provider& provider, Archive& archive, int max_in_flight)
    : provider_(provider), archive_(archive), max_in_flight_(max_in_flight) {}

CompletionResult Gateway::call_provider(const CompletionRequest& request) {
    {
        std::unique_lock lock(mutex_);
        slot_free_.wait(lock, [this] { return in_flight_ < max_in_flight_; });
        ++in_flight_;
    }
    try {
        CompletionResult result = provider_.complete(request);
        std::lock_guard lock(mutex_);
        --in_flight_;
        slot_free_.notify_one();
        return result;
    } catch (...) {
        std::lock_guard lock(mutex_);
        --in_flight_;
        slot_free_.notify_one();
        throw;
    }
}

CompletionResult Gateway::complete(const CompletionRequest& request, const TrialMeta& meta) {
    return complete_attempt(request, meta, 1);
}

CompletionResult Gateway::complete_attempt(const CompletionRequest& request,
                                           const TrialMeta& meta, int attempt_count) {
    const auto existing = archive_.lookup(request.trial_key);
    if (existing && !existing->gap && !existing->refused) {
        CompletionResult result;
        result.text = existing->text;
        result.latency_ms = existing->latency_ms;
        result.created_at = existing->created_at;
        result.attempt_count = existing->attempt_count;
        return result;
    }

    CompletionResult result;
    try {
        result = call_provider(request);
    } catch (const ProviderRefusal&) {
        ArchiveRecord rec;
        rec.trial_key = request.trial_key;
        rec.kind = meta.kind;
        rec.target = request.target;
        rec.prompt_id = meta.prompt_id;
        rec.condition = meta.condition;
        rec.replicate = meta.replicate;
        rec.judge_rep = meta.judge_rep;
        rec.response_id = meta.response_id;
        rec.config = request.config;
        rec.text = "";
        rec.created_at = utc_timestamp_now();
        rec.refused = true;
        archive_.record_fixture(rec);
        throw;
    }

    ArchiveRecord rec;
    rec.trial_key = request.trial_key;
    rec.kind = meta.kind;
    rec.target = request.target;
    rec.prompt_id = meta.prompt_id;
    rec.condition = meta.condition;
    rec.replicate = meta.replicate;
    rec.judge_rep = meta.judge_rep;
    rec.response_id = meta.response_id;
    rec.config = request.config;
    rec.text = result.text;
    rec.latency_ms = result.latency_ms;
    rec.created_at = result.created_at.empty() ? utc_timestamp_now() : result.created_at;
    result.attempt_count = attempt_count;
    rec.attempt_count = attempt_count;
    archive_.record_fixture(rec);  // persisted before return
    return result;
}

CompletionResult Gateway::complete_with_retry(const CompletionRequest& request,
                                              const TrialMeta& meta,
                                              const RetryPolicy& policy) {
    if (policy.max_attempts < 1)
        throw std::invalid_argument("max_attempts must be >= 1");
    std::string last_error;
    for (int attempt = 1; attempt <= policy.max_attempts; ++attempt) {
        try {
            return complete_attempt(request, meta, attempt);
        } catch (const TransportError& e) {
            last_error = e.what();
            if (attempt < policy.max_attempts) {
                const long delay = policy.base_backoff_ms << (attempt - 1);
                if (delay > 0)
                    std::this_thread::sleep_for(std::chrono::milliseconds(delay));
            }
        }
        // ProviderRefusal and ReplayMiss propagate immediately.
    }
    throw RetriesExhausted("retries exhausted: " + last_error, policy.max_attempts);
}

std::string utc_timestamp_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace pih
