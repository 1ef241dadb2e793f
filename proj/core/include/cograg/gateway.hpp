#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "cograg/errors.hpp"
#include "cograg/records.hpp"

namespace cograg {

struct ChatRequest {
    std::string model_id;
    std::string system;
    std::string user;  // must be non-empty
    double temperature = 0.0;
    int max_tokens = 4096;
    std::optional<int> seed;
};

/// Pure function of the request content; doubles as the on-disk cache file
/// name (hex digest).
std::string cache_key(const ChatRequest& req);

class TransportError : public Error {
public:
    TransportError(std::string message, bool transient)
        : Error(ErrorKind::transport, std::move(message)), transient_(transient) {}
    bool transient() const noexcept { return transient_; }

private:
    bool transient_;
};

class Transport {
public:
    virtual ~Transport() = default;
    /// Returns the model's message content. Throws TransportError (transient
    /// failures are retried by the gateway) or Error(credential).
    virtual std::string send(const ChatRequest& req) = 0;
    /// Network/backend invocations actually performed.
    virtual std::uint64_t calls() const = 0;
};

struct HttpTransportConfig {
    std::string base_url = "https://api.openai.com";
    std::string chat_path = "/v1/chat/completions";
    std::string api_key_env = "COGRAG_API_KEY";
    int connect_timeout_ms = 10000;
    int read_timeout_ms = 120000;
};

/// Chat-completion wire protocol: POST {model, messages, temperature,
/// max_tokens[, seed]} with bearer-token auth from the environment.
class HttpTransport final : public Transport {
public:
    explicit HttpTransport(HttpTransportConfig cfg);
    std::string send(const ChatRequest& req) override;
    std::uint64_t calls() const override { return calls_.load(); }

private:
    HttpTransportConfig cfg_;
    std::atomic<std::uint64_t> calls_{0};
};

/// Deterministic offline model: a pure function of the rendered prompt.
/// Exact and substring script rules take precedence; anything unscripted
/// falls through to a built-in synthesizer that fabricates well-formed
/// records from the prompt's own input sections.
class MockTransport final : public Transport {
public:
    MockTransport() = default;

    void add_exact(std::string user_prompt, std::string response);
    void add_contains(std::string needle, std::string response);

    std::string send(const ChatRequest& req) override;
    std::uint64_t calls() const override { return calls_.load(); }

private:
    std::vector<std::pair<std::string, std::string>> exact_;
    std::vector<std::pair<std::string, std::string>> contains_;
    std::atomic<std::uint64_t> calls_{0};
};

/// Test double that replays a fixed response sequence (not a pure function
/// of the prompt; use only where call order is the point).
class SequenceTransport final : public Transport {
public:
    explicit SequenceTransport(std::vector<std::string> responses)
        : responses_(std::move(responses)) {}
    std::string send(const ChatRequest&) override;
    std::uint64_t calls() const override { return calls_.load(); }

private:
    std::vector<std::string> responses_;
    std::atomic<std::size_t> next_{0};
    std::atomic<std::uint64_t> calls_{0};
};

/// Adapter for ad-hoc scripted behavior in tests.
class CallbackTransport final : public Transport {
public:
    explicit CallbackTransport(std::function<std::string(const ChatRequest&)> fn)
        : fn_(std::move(fn)) {}
    std::string send(const ChatRequest& req) override {
        calls_.fetch_add(1);
        return fn_(req);
    }
    std::uint64_t calls() const override { return calls_.load(); }

private:
    std::function<std::string(const ChatRequest&)> fn_;
    std::atomic<std::uint64_t> calls_{0};
};

/// One file per entry, file name = hex digest of the request. Concurrent
/// reads, serialized writes; writes go through a temp file + rename.
class DiskCache {
public:
    explicit DiskCache(std::filesystem::path dir);

    std::optional<std::string> get(const std::string& key) const;
    void put(const std::string& key, std::string_view value);
    const std::filesystem::path& dir() const { return dir_; }

private:
    std::filesystem::path dir_;
    mutable std::shared_mutex mutex_;
};

struct RetryPolicy {
    int max_attempts = 3;
    std::chrono::milliseconds base_backoff{100};
};

struct GatewayStats {
    std::uint64_t completion_requests = 0;  // complete() invocations
    std::uint64_t cache_hits = 0;
    std::uint64_t network_calls = 0;  // transport attempts actually made
    std::uint64_t dedup_joins = 0;    // callers that piggybacked on an in-flight request
};

/// All model traffic funnels through here: caching, retry with bounded
/// exponential backoff, and in-flight deduplication (two identical
/// concurrent requests produce a single transport call).
class LlmGateway {
public:
    LlmGateway(std::shared_ptr<Transport> transport,
               std::shared_ptr<DiskCache> cache = nullptr,
               RetryPolicy retry = {});

    std::string complete(const ChatRequest& req);

    /// Re-prompts with a continuation instruction while parsing yields zero
    /// valid records, up to `max_gleans` extra rounds. Returns the union of
    /// valid records; empty means extraction-empty (caller decides severity).
    std::vector<ExtractionRecord> extract_with_gleaning(const ChatRequest& req, RecordKind kind,
                                                        int max_gleans);

    GatewayStats stats() const;
    Transport& transport() { return *transport_; }

private:
    std::string send_with_retry(const ChatRequest& req);

    std::shared_ptr<Transport> transport_;
    std::shared_ptr<DiskCache> cache_;
    RetryPolicy retry_;

    std::mutex inflight_mutex_;
    std::map<std::string, std::shared_future<std::string>> inflight_;

    std::atomic<std::uint64_t> completion_requests_{0};
    std::atomic<std::uint64_t> cache_hits_{0};
    std::atomic<std::uint64_t> dedup_joins_{0};
};

}  // namespace cograg
