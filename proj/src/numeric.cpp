#include "hcb/numeric.hpp"

#include <cctype>

namespace hcb {

namespace {

bool valid_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

std::optional<Rational> try_parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!valid_integer_token(text)) return std::nullopt;
        return Rational(BigInt(text));
    }
    std::string a = text.substr(0, slash), b = text.substr(slash + 1);
    if (!valid_integer_token(a) || !valid_integer_token(b)) return std::nullopt;
    BigInt denom(b);
    if (denom == 0) return std::nullopt;
    return Rational(BigInt(a), denom);
}

Rational parse_rational(const std::string& text) {
    auto q = try_parse_rational(text);
    if (!q) throw std::invalid_argument("not a rational: '" + text + "'");
    return *q;
}

std::string to_string(const Rational& q) {
    return q.str();
}

}  // namespace hcb
