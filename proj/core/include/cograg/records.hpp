#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace cograg {

/// Output grammar shared by every extraction prompt. Records are separated
/// by `record_delimiter`, fields by `field_delimiter`; the model terminates
/// its output with `completion_marker`.
struct RecordGrammar {
    std::string record_delimiter = "##";
    std::string field_delimiter = "<|>";
    std::string completion_marker = "<|COMPLETE|>";
};

const RecordGrammar& default_grammar();

enum class RecordKind {
    theme,         // 1 field : description
    key_entity,    // 4 fields: name, type, description, key_score
    entity,        // 4 fields: name, type, description, additional_properties
    low_relation,  // 4 fields: entities_pair, description, keywords, strength
    high_relation, // 5 fields: entities_set, description, generalization, keywords, strength
};

std::size_t field_arity(RecordKind kind);
const char* to_string(RecordKind kind);

struct ExtractionRecord {
    RecordKind record_kind = RecordKind::theme;
    std::vector<std::string> fields;  // arity matches record_kind

    bool operator==(const ExtractionRecord&) const = default;
};

struct ParsedRecords {
    std::vector<ExtractionRecord> records;
    std::vector<std::string> malformed;  // fragments that failed arity validation
};

/// Splits `raw` on the record delimiter, then on the field delimiter, trims
/// whitespace and validates arity. Fragments failing validation land in
/// `malformed` rather than being dropped. Throws a parse Error carrying the
/// first malformed fragment when at least one fragment is present but none
/// parses.
ParsedRecords parse_records(std::string_view raw, RecordKind kind,
                            const RecordGrammar& grammar = default_grammar());

/// Inverse of parse_records for well-formed records; used by round-trip
/// property tests and the scripted mocks.
std::string serialize_records(const std::vector<ExtractionRecord>& records,
                              const RecordGrammar& grammar = default_grammar());

/// Parses a keyword-list response: strips the completion marker and splits
/// on commas and newlines. Deduplicated, order-preserving.
std::vector<std::string> parse_keyword_list(std::string_view raw,
                                            const RecordGrammar& grammar = default_grammar());

std::string trim(std::string_view s);

}  // namespace cograg
