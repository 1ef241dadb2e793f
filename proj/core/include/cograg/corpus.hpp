#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace cograg {

struct Document {
    std::string id;  // unique within a corpus, derived from the relative path
    std::string title;
    std::string body;
    std::string source_path;
};

/// Fixed-length overlapping text unit; the atom everything downstream
/// (extraction, hypergraph construction) operates on.
struct Chunk {
    std::string id;  // "<doc_id>#<ordinal>"
    std::string doc_id;
    std::size_t ordinal = 0;     // 0-based, contiguous per document
    std::string text;            // original byte span covering [start_token, end_token)
    std::size_t token_count = 0; // == end_token - start_token
    std::size_t start_token = 0;
    std::size_t end_token = 0;   // exclusive
};

struct ChunkingConfig {
    std::size_t chunk_size_tokens = 1200;
    std::size_t overlap_tokens = 100;
    std::string tokenizer_id = "whitespace";

    void validate() const;  // throws usage Error unless 0 <= overlap < size
};

/// Sliding-window segmentation. Window i covers tokens
/// [i*stride, i*stride + chunk_size) with stride = chunk_size - overlap,
/// clipped to the document end; iteration stops once a window reaches the
/// end. Stripping the trailing `overlap_tokens` of every non-final chunk
/// and concatenating reproduces the document token stream exactly.
///
/// Throws an empty-input Error for an empty body. A body that tokenizes
/// to zero tokens (e.g. whitespace only) yields an empty list.
std::vector<Chunk> segment_document(const Document& doc, const ChunkingConfig& cfg);

struct CorpusStats {
    std::size_t documents = 0;
    std::size_t chunks = 0;
    std::size_t tokens = 0;
};

/// Loads plain-text documents under `path`. With a manifest (one relative
/// path per line) the listed files are loaded in that order; otherwise all
/// regular files are discovered recursively and sorted by relative path.
/// Whitespace-only files are skipped with a warning. An empty result is an
/// empty-corpus error.
std::vector<Document> load_corpus(const std::filesystem::path& path,
                                  const std::optional<std::filesystem::path>& manifest = std::nullopt);

CorpusStats corpus_stats(const std::vector<Document>& corpus, const ChunkingConfig& cfg);

}  // namespace cograg
