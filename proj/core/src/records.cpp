#include "cograg/records.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "cograg/errors.hpp"

namespace cograg {

const RecordGrammar& default_grammar() {
    static const RecordGrammar grammar;
    return grammar;
}

std::size_t field_arity(RecordKind kind) {
    switch (kind) {
        case RecordKind::theme: return 1;
        case RecordKind::key_entity: return 4;
        case RecordKind::entity: return 4;
        case RecordKind::low_relation: return 4;
        case RecordKind::high_relation: return 5;
    }
    return 0;
}

const char* to_string(RecordKind kind) {
    switch (kind) {
        case RecordKind::theme: return "theme";
        case RecordKind::key_entity: return "key_entity";
        case RecordKind::entity: return "entity";
        case RecordKind::low_relation: return "low_relation";
        case RecordKind::high_relation: return "high_relation";
    }
    return "unknown";
}

std::string trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

namespace {

std::vector<std::string> split(std::string_view text, std::string_view sep) {
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = text.find(sep, pos);
        if (next == std::string_view::npos) {
            parts.emplace_back(text.substr(pos));
            break;
        }
        parts.emplace_back(text.substr(pos, next - pos));
        pos = next + sep.size();
    }
    return parts;
}

std::string strip_marker(std::string_view raw, const RecordGrammar& grammar) {
    std::string text(raw);
    std::size_t pos;
    while ((pos = text.find(grammar.completion_marker)) != std::string::npos) {
        text.erase(pos, grammar.completion_marker.size());
    }
    return text;
}

}  // namespace

ParsedRecords parse_records(std::string_view raw, RecordKind kind, const RecordGrammar& grammar) {
    ParsedRecords out;
    const std::string text = strip_marker(raw, grammar);
    const std::size_t arity = field_arity(kind);

    std::size_t fragments_seen = 0;
    for (const auto& fragment : split(text, grammar.record_delimiter)) {
        const std::string body = trim(fragment);
        if (body.empty()) continue;
        ++fragments_seen;

        auto raw_fields = split(body, grammar.field_delimiter);
        ExtractionRecord rec;
        rec.record_kind = kind;
        rec.fields.reserve(raw_fields.size());
        for (auto& f : raw_fields) rec.fields.push_back(trim(f));

        if (rec.fields.size() != arity) {
            out.malformed.push_back(body);
            continue;
        }
        out.records.push_back(std::move(rec));
    }

    if (out.records.empty() && fragments_seen > 0) {
        throw Error(ErrorKind::parse,
                    std::string("no parseable ") + to_string(kind) +
                        " record (arity " + std::to_string(arity) +
                        "); first malformed fragment: " + out.malformed.front());
    }
    return out;
}

std::string serialize_records(const std::vector<ExtractionRecord>& records,
                              const RecordGrammar& grammar) {
    std::string out;
    for (const auto& rec : records) {
        for (std::size_t i = 0; i < rec.fields.size(); ++i) {
            if (i) out += grammar.field_delimiter;
            out += rec.fields[i];
        }
        out += grammar.record_delimiter;
    }
    out += grammar.completion_marker;
    return out;
}

std::vector<std::string> parse_keyword_list(std::string_view raw, const RecordGrammar& grammar) {
    std::string text = strip_marker(raw, grammar);
    // Record delimiters occasionally leak into keyword responses; treat them
    // as separators too.
    for (std::size_t pos; (pos = text.find(grammar.record_delimiter)) != std::string::npos;) {
        text.replace(pos, grammar.record_delimiter.size(), ",");
    }
    std::replace(text.begin(), text.end(), '\n', ',');

    std::vector<std::string> keywords;
    std::unordered_set<std::string> seen;
    for (const auto& part : split(text, ",")) {
        std::string kw = trim(part);
        if (kw.empty()) continue;
        if (seen.insert(kw).second) keywords.push_back(std::move(kw));
    }
    return keywords;
}

}  // namespace cograg
