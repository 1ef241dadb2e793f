#include "cograg/tokenizer.hpp"

#include <cctype>

#include "cograg/errors.hpp"

namespace cograg {

namespace {

inline bool is_word_byte(unsigned char c) {
    return std::isalnum(c) || c == '_' || c >= 0x80;
}

inline bool is_space_byte(unsigned char c) {
    return std::isspace(c) != 0;
}

}  // namespace

const std::string& WhitespacePunctTokenizer::id() const {
    static const std::string kId = "whitespace";
    return kId;
}

std::vector<TokenSpan> WhitespacePunctTokenizer::tokenize(std::string_view text) const {
    std::vector<TokenSpan> out;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (is_space_byte(c)) {
            ++i;
            continue;
        }
        if (is_word_byte(c)) {
            std::size_t j = i + 1;
            while (j < n && is_word_byte(static_cast<unsigned char>(text[j]))) ++j;
            out.push_back({i, j});
            i = j;
        } else {
            out.push_back({i, i + 1});  // single punctuation token
            ++i;
        }
    }
    return out;
}

const Tokenizer& tokenizer_for(const std::string& tokenizer_id) {
    static const WhitespacePunctTokenizer whitespace;
    if (tokenizer_id == whitespace.id() || tokenizer_id.empty()) {
        return whitespace;
    }
    throw Error(ErrorKind::usage, "unknown tokenizer id: " + tokenizer_id);
}

}  // namespace cograg
