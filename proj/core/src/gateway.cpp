#include "cograg/gateway.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>
#include <nlohmann/json.hpp>
#include <spdlog/spdlog.h>

#include "cograg/digest.hpp"
#include "cograg/mock_llm.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace cograg {

std::string cache_key(const ChatRequest& req) {
    std::ostringstream material;
    material << req.model_id << '\x1f' << req.system << '\x1f' << req.user << '\x1f'
             << req.temperature << '\x1f' << req.max_tokens << '\x1f'
             << (req.seed ? std::to_string(*req.seed) : "-");
    return sha256_hex(material.str());
}

// ---------------------------------------------------------------------------
// HttpTransport
// ---------------------------------------------------------------------------

HttpTransport::HttpTransport(HttpTransportConfig cfg) : cfg_(std::move(cfg)) {}

std::string HttpTransport::send(const ChatRequest& req) {
    calls_.fetch_add(1);

    json body = {
        {"model", req.model_id},
        {"messages", json::array()},
        {"temperature", req.temperature},
        {"max_tokens", req.max_tokens},
    };
    if (!req.system.empty()) {
        body["messages"].push_back({{"role", "system"}, {"content", req.system}});
    }
    body["messages"].push_back({{"role", "user"}, {"content", req.user}});
    if (req.seed) body["seed"] = *req.seed;

    httplib::Client client(cfg_.base_url);
    client.set_connection_timeout(cfg_.connect_timeout_ms / 1000,
                                  (cfg_.connect_timeout_ms % 1000) * 1000);
    client.set_read_timeout(cfg_.read_timeout_ms / 1000, (cfg_.read_timeout_ms % 1000) * 1000);

    httplib::Headers headers;
    if (const char* key = std::getenv(cfg_.api_key_env.c_str()); key && *key) {
        headers.emplace("Authorization", std::string("Bearer ") + key);
    }

    auto res = client.Post(cfg_.chat_path, headers, body.dump(), "application/json");
    if (!res) {
        throw TransportError("endpoint unreachable: " + cfg_.base_url + " (" +
                                 httplib::to_string(res.error()) + ")",
                             /*transient=*/true);
    }
    if (res->status == 401 || res->status == 403) {
        throw Error(ErrorKind::credential,
                    "authentication rejected (" + std::to_string(res->status) + "); check $" +
                        cfg_.api_key_env);
    }
    if (res->status == 429 || res->status >= 500) {
        throw TransportError("endpoint returned status " + std::to_string(res->status),
                             /*transient=*/true);
    }
    if (res->status != 200) {
        throw TransportError("endpoint returned status " + std::to_string(res->status) + ": " +
                                 res->body,
                             /*transient=*/false);
    }

    try {
        json parsed = json::parse(res->body);
        return parsed.at("choices").at(0).at("message").at("content").get<std::string>();
    } catch (const json::exception& e) {
        throw TransportError(std::string("malformed completion response: ") + e.what(),
                             /*transient=*/false);
    }
}

// ---------------------------------------------------------------------------
// MockTransport
// ---------------------------------------------------------------------------

void MockTransport::add_exact(std::string user_prompt, std::string response) {
    exact_.emplace_back(std::move(user_prompt), std::move(response));
}

void MockTransport::add_contains(std::string needle, std::string response) {
    contains_.emplace_back(std::move(needle), std::move(response));
}

std::string MockTransport::send(const ChatRequest& req) {
    calls_.fetch_add(1);
    for (const auto& [prompt, response] : exact_) {
        if (req.user == prompt) return response;
    }
    for (const auto& [needle, response] : contains_) {
        if (req.user.find(needle) != std::string::npos) return response;
    }
    return mock::synthesize_response(req.user);
}

std::string SequenceTransport::send(const ChatRequest&) {
    calls_.fetch_add(1);
    const std::size_t i = next_.fetch_add(1);
    if (i >= responses_.size()) {
        throw TransportError("scripted response sequence exhausted", /*transient=*/false);
    }
    return responses_[i];
}

// ---------------------------------------------------------------------------
// DiskCache
// ---------------------------------------------------------------------------

DiskCache::DiskCache(fs::path dir) : dir_(std::move(dir)) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) {
        throw Error(ErrorKind::io, "cannot create cache directory: " + dir_.string());
    }
}

std::optional<std::string> DiskCache::get(const std::string& key) const {
    std::shared_lock lock(mutex_);
    std::ifstream in(dir_ / key, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void DiskCache::put(const std::string& key, std::string_view value) {
    std::unique_lock lock(mutex_);
    const fs::path tmp = dir_ / (key + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out.write(value.data(), static_cast<std::streamsize>(value.size()));
        if (!out) {
            throw Error(ErrorKind::io, "cache write failed: " + tmp.string());
        }
    }
    fs::rename(tmp, dir_ / key);
}

// ---------------------------------------------------------------------------
// LlmGateway
// ---------------------------------------------------------------------------

LlmGateway::LlmGateway(std::shared_ptr<Transport> transport, std::shared_ptr<DiskCache> cache,
                       RetryPolicy retry)
    : transport_(std::move(transport)), cache_(std::move(cache)), retry_(retry) {}

std::string LlmGateway::send_with_retry(const ChatRequest& req) {
    for (int attempt = 1;; ++attempt) {
        try {
            return transport_->send(req);
        } catch (const TransportError& e) {
            if (!e.transient() || attempt >= retry_.max_attempts) {
                throw TransportError(std::string(e.what()) + " (after " +
                                         std::to_string(attempt) + " attempts)",
                                     e.transient());
            }
            const auto delay = retry_.base_backoff * (1 << (attempt - 1));
            spdlog::warn("transient transport failure (attempt {}/{}): {}", attempt,
                         retry_.max_attempts, e.what());
            std::this_thread::sleep_for(delay);
        }
    }
}

std::string LlmGateway::complete(const ChatRequest& req) {
    if (req.user.empty()) {
        throw Error(ErrorKind::empty_input, "chat request has an empty user message");
    }
    completion_requests_.fetch_add(1);
    const std::string key = cache_key(req);

    std::shared_future<std::string> shared;
    std::promise<std::string> promise;
    bool owner = false;
    {
        std::lock_guard lock(inflight_mutex_);
        if (cache_) {
            if (auto hit = cache_->get(key)) {
                cache_hits_.fetch_add(1);
                return *hit;
            }
        }
        auto it = inflight_.find(key);
        if (it != inflight_.end()) {
            shared = it->second;
        } else {
            shared = promise.get_future().share();
            inflight_.emplace(key, shared);
            owner = true;
        }
    }

    if (!owner) {
        dedup_joins_.fetch_add(1);
        return shared.get();  // rethrows the owner's failure
    }

    try {
        std::string response = send_with_retry(req);
        if (cache_) cache_->put(key, response);
        promise.set_value(response);
        {
            std::lock_guard lock(inflight_mutex_);
            inflight_.erase(key);
        }
        return response;
    } catch (...) {
        promise.set_exception(std::current_exception());
        {
            std::lock_guard lock(inflight_mutex_);
            inflight_.erase(key);
        }
        throw;
    }
}

std::vector<ExtractionRecord> LlmGateway::extract_with_gleaning(const ChatRequest& req,
                                                                RecordKind kind, int max_gleans) {
    if (max_gleans < 0) {
        throw Error(ErrorKind::usage, "max_gleans must be non-negative");
    }
    static const std::string kContinuation =
        "\n\nThe previous output could not be used. Re-extract, strictly following the output "
        "format specified above, and output records only.";

    std::vector<ExtractionRecord> collected;
    ChatRequest attempt = req;
    for (int round = 0; round <= max_gleans; ++round) {
        if (round > 0) attempt.user += kContinuation;
        std::string raw = complete(attempt);
        try {
            ParsedRecords parsed = parse_records(raw, kind);
            for (const auto& frag : parsed.malformed) {
                spdlog::warn("dropping malformed {} record: {}", to_string(kind), frag);
            }
            for (auto& rec : parsed.records) {
                if (std::find(collected.begin(), collected.end(), rec) == collected.end()) {
                    collected.push_back(std::move(rec));
                }
            }
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::parse) throw;
            spdlog::warn("unparseable {} response (round {}): {}", to_string(kind), round,
                         e.what());
        }
        if (!collected.empty()) break;
    }
    return collected;
}

GatewayStats LlmGateway::stats() const {
    GatewayStats s;
    s.completion_requests = completion_requests_.load();
    s.cache_hits = cache_hits_.load();
    s.network_calls = transport_->calls();
    s.dedup_joins = dedup_joins_.load();
    return s;
}

}  // namespace cograg
