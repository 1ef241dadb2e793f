#include "cograg/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <spdlog/spdlog.h>

#include "cograg/errors.hpp"
#include "cograg/tokenizer.hpp"

namespace fs = std::filesystem;

namespace cograg {

void ChunkingConfig::validate() const {
    if (chunk_size_tokens == 0) {
        throw Error(ErrorKind::usage, "chunk_size_tokens must be positive");
    }
    if (overlap_tokens >= chunk_size_tokens) {
        throw Error(ErrorKind::usage, "overlap_tokens must be smaller than chunk_size_tokens");
    }
    tokenizer_for(tokenizer_id);  // rejects unknown ids
}

std::vector<Chunk> segment_document(const Document& doc, const ChunkingConfig& cfg) {
    cfg.validate();
    if (doc.body.empty()) {
        throw Error(ErrorKind::empty_input, "document '" + doc.id + "' has an empty body");
    }

    const Tokenizer& tok = tokenizer_for(cfg.tokenizer_id);
    const std::vector<TokenSpan> spans = tok.tokenize(doc.body);
    std::vector<Chunk> chunks;
    if (spans.empty()) {
        return chunks;
    }

    const std::size_t total = spans.size();
    const std::size_t stride = cfg.chunk_size_tokens - cfg.overlap_tokens;
    for (std::size_t ordinal = 0;; ++ordinal) {
        const std::size_t start = ordinal * stride;
        if (start >= total) break;
        const std::size_t end = std::min(start + cfg.chunk_size_tokens, total);

        Chunk c;
        c.doc_id = doc.id;
        c.ordinal = ordinal;
        c.id = doc.id + "#" + std::to_string(ordinal);
        c.start_token = start;
        c.end_token = end;
        c.token_count = end - start;
        const std::size_t byte_begin = spans[start].begin;
        const std::size_t byte_end = spans[end - 1].end;
        c.text = doc.body.substr(byte_begin, byte_end - byte_begin);
        chunks.push_back(std::move(c));

        if (end == total) break;  // final window reached the end
    }
    return chunks;
}

namespace {

bool whitespace_only(const std::string& text) {
    return std::all_of(text.begin(), text.end(),
                       [](unsigned char c) { return std::isspace(c) != 0; });
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) {
        throw Error(ErrorKind::io, "cannot read file: " + p.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw Error(ErrorKind::io, "read failed: " + p.string());
    }
    return buf.str();
}

std::string relative_id(const fs::path& root, const fs::path& file) {
    std::error_code ec;
    fs::path rel = fs::relative(file, root, ec);
    if (ec || rel.empty()) rel = file.filename();
    return rel.generic_string();
}

}  // namespace

std::vector<Document> load_corpus(const fs::path& path,
                                  const std::optional<fs::path>& manifest) {
    if (!fs::exists(path)) {
        throw Error(ErrorKind::io, "corpus path does not exist: " + path.string());
    }

    std::vector<fs::path> files;
    if (manifest) {
        std::ifstream m(*manifest);
        if (!m) {
            throw Error(ErrorKind::io, "cannot read manifest: " + manifest->string());
        }
        std::string line;
        while (std::getline(m, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
            if (line.empty()) continue;
            files.push_back(path / line);
        }
    } else if (fs::is_directory(path)) {
        for (const auto& entry : fs::recursive_directory_iterator(path)) {
            if (entry.is_regular_file()) files.push_back(entry.path());
        }
        std::sort(files.begin(), files.end(), [&](const fs::path& a, const fs::path& b) {
            return relative_id(path, a) < relative_id(path, b);
        });
    } else {
        files.push_back(path);
    }

    std::vector<Document> docs;
    for (const auto& file : files) {
        std::string body = read_file(file);
        if (body.empty() || whitespace_only(body)) {
            spdlog::warn("skipping whitespace-only file: {}", file.string());
            continue;
        }
        Document d;
        d.id = fs::is_directory(path) ? relative_id(path, file) : file.filename().generic_string();
        d.title = file.stem().generic_string();
        d.body = std::move(body);
        d.source_path = file.string();
        docs.push_back(std::move(d));
    }

    if (docs.empty()) {
        throw Error(ErrorKind::empty_input, "no documents found under: " + path.string());
    }
    return docs;
}

CorpusStats corpus_stats(const std::vector<Document>& corpus, const ChunkingConfig& cfg) {
    CorpusStats stats;
    stats.documents = corpus.size();
    for (const auto& doc : corpus) {
        auto chunks = segment_document(doc, cfg);
        stats.chunks += chunks.size();
        stats.tokens += tokenizer_for(cfg.tokenizer_id).count(doc.body);
    }
    return stats;
}

}  // namespace cograg
