#include "hombracket/rational.hpp"

#include "hombracket/errors.hpp"

#include <sstream>

namespace hombracket {

Rational parse_rational(std::string_view text) {
    std::string s;
    s.reserve(text.size());
    // Accept the typographic minus sign U+2212 as '-'.
    for (size_t i = 0; i < text.size();) {
        if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
            static_cast<unsigned char>(text[i + 1]) == 0x88 &&
            static_cast<unsigned char>(text[i + 2]) == 0x92) {
            s.push_back('-');
            i += 3;
        } else {
            s.push_back(text[i]);
            ++i;
        }
    }
    if (s.empty())
        throw ParseError("empty rational literal");
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && i == 0);
        if (!ok)
            throw ParseError("malformed rational literal: '" + std::string(text) + "'");
    }
    try {
        return Rational(s);
    } catch (const std::exception&) {
        throw ParseError("malformed rational literal: '" + std::string(text) + "'");
    }
}

std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

} // namespace hombracket
