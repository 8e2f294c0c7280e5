#include "hcb/io.hpp"

#include <array>
#include <cstdint>
#include <cstring>
#include <sstream>

namespace hcb {

std::vector<Rational> parse_rational_vector(const std::string& text) {
    std::vector<Rational> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) out.push_back(parse_rational(token));
    if (out.empty()) throw std::invalid_argument("empty vector");
    return out;
}

PointQ parse_point(const std::string& text) {
    return PointQ(parse_rational_vector(text));
}

DirectionQ parse_direction(const std::string& text) {
    return DirectionQ::from_rationals(parse_rational_vector(text));
}

namespace {

std::uint32_t rol(std::uint32_t v, int s) { return (v << s) | (v >> (32 - s)); }

std::string sha1_hex(const std::string& data) {
    std::array<std::uint32_t, 5> h = {0x67452301u, 0xEFCDAB89u, 0x98BADCFEu, 0x10325476u,
                                      0xC3D2E1F0u};
    std::string msg = data;
    std::uint64_t bits = static_cast<std::uint64_t>(msg.size()) * 8;
    msg.push_back(static_cast<char>(0x80));
    while (msg.size() % 64 != 56) msg.push_back('\0');
    for (int i = 7; i >= 0; --i) msg.push_back(static_cast<char>((bits >> (i * 8)) & 0xff));

    for (std::size_t chunk = 0; chunk < msg.size(); chunk += 64) {
        std::uint32_t w[80];
        for (int i = 0; i < 16; ++i) {
            w[i] = 0;
            for (int b = 0; b < 4; ++b)
                w[i] = (w[i] << 8) |
                       static_cast<unsigned char>(msg[chunk + static_cast<std::size_t>(i * 4 + b)]);
        }
        for (int i = 16; i < 80; ++i) w[i] = rol(w[i - 3] ^ w[i - 8] ^ w[i - 14] ^ w[i - 16], 1);
        std::uint32_t a = h[0], b = h[1], c = h[2], d = h[3], e = h[4];
        for (int i = 0; i < 80; ++i) {
            std::uint32_t f, k;
            if (i < 20) {
                f = (b & c) | (~b & d);
                k = 0x5A827999u;
            } else if (i < 40) {
                f = b ^ c ^ d;
                k = 0x6ED9EBA1u;
            } else if (i < 60) {
                f = (b & c) | (b & d) | (c & d);
                k = 0x8F1BBCDCu;
            } else {
                f = b ^ c ^ d;
                k = 0xCA62C1D6u;
            }
            std::uint32_t t = rol(a, 5) + f + e + k + w[i];
            e = d;
            d = c;
            c = rol(b, 30);
            b = a;
            a = t;
        }
        h[0] += a;
        h[1] += b;
        h[2] += c;
        h[3] += d;
        h[4] += e;
    }
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (std::uint32_t v : h)
        for (int i = 7; i >= 0; --i) out.push_back(hex[(v >> (i * 4)) & 0xf]);
    return out;
}

}  // namespace

std::string git_blob_sha1(const std::string& content) {
    std::string blob = "blob " + std::to_string(content.size());
    blob.push_back('\0');
    blob += content;
    return sha1_hex(blob);
}

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) return value;
    std::string out = "\"";
    for (char c : value) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out.push_back('"');
    return out;
}

}  // namespace hcb
