#pragma once

#include <stdexcept>
#include <string>

namespace cograg {

/// Failure categories; the CLI maps each to a distinct exit code.
enum class ErrorKind {
    usage,       // bad arguments or invalid configuration
    io,          // filesystem problems
    format,      // corrupt persisted data
    transport,   // network / endpoint failures
    credential,  // authentication rejected (never retried)
    parse,       // model output did not match the record grammar
    lookup,      // unknown vertex / edge / key
    invariant,   // domain invariant violated
    empty_input, // operation fed an empty input it cannot accept
    judge,       // judge response unusable after retry
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

inline const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::usage: return "usage";
        case ErrorKind::io: return "io";
        case ErrorKind::format: return "format";
        case ErrorKind::transport: return "transport";
        case ErrorKind::credential: return "credential";
        case ErrorKind::parse: return "parse";
        case ErrorKind::lookup: return "lookup";
        case ErrorKind::invariant: return "invariant";
        case ErrorKind::empty_input: return "empty-input";
        case ErrorKind::judge: return "judge";
    }
    return "unknown";
}

}  // namespace cograg
