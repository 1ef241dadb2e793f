#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace cograg {

/// Byte range of one token inside the source text.
struct TokenSpan {
    std::size_t begin = 0;
    std::size_t end = 0;  // exclusive
};

/// Pluggable tokenizer, keyed by id in ChunkingConfig. Implementations must
/// be deterministic and context-free at token boundaries: tokenizing any
/// substring that starts and ends on token boundaries yields exactly the
/// tokens inside that range. Chunk reconstruction depends on this.
class Tokenizer {
public:
    virtual ~Tokenizer() = default;
    virtual const std::string& id() const = 0;
    virtual std::vector<TokenSpan> tokenize(std::string_view text) const = 0;

    std::size_t count(std::string_view text) const { return tokenize(text).size(); }
};

/// Default deterministic tokenizer: a token is either a maximal run of
/// word characters (alnum, underscore, any non-ASCII byte) or a single
/// punctuation character. Whitespace only separates.
class WhitespacePunctTokenizer final : public Tokenizer {
public:
    const std::string& id() const override;
    std::vector<TokenSpan> tokenize(std::string_view text) const override;
};

/// Registry lookup. Throws a usage Error for unknown ids.
const Tokenizer& tokenizer_for(const std::string& tokenizer_id);

}  // namespace cograg
