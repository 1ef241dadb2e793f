#include "cograg/digest.hpp"

#include <openssl/evp.h>

#include <array>
#include <stdexcept>

namespace cograg {

std::string sha256_hex(std::string_view data) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> buf{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), buf.data(), &len, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("sha256 digest failed");
    }
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(len * 2);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[buf[i] >> 4]);
        out.push_back(hex[buf[i] & 0x0f]);
    }
    return out;
}

std::string short_digest(std::initializer_list<std::string_view> parts) {
    std::string joined;
    for (auto part : parts) {
        joined.append(part);
        joined.push_back('\x1f');  // unit separator, cannot appear in normalized fields
    }
    return sha256_hex(joined).substr(0, 16);
}

std::uint64_t fnv1a64(std::string_view data, std::uint64_t seed) {
    std::uint64_t h = seed;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace cograg
