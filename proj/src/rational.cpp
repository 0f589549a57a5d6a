#include "aybe/rational.hpp"

#include <cctype>
#include <sstream>

namespace aybe {

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0)
        throw Error(Error::Kind::ParseError, "rational with zero denominator");
    return Rational(num) / Rational(den);
}

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t start = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (start == s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

BigInt parse_integer(std::string_view s) {
    return BigInt(std::string(s));
}

} // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_integer_literal(text))
            throw Error(Error::Kind::ParseError,
                        "not a rational literal: '" + std::string(text) + "'");
        return Rational(parse_integer(text));
    }
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den))
        throw Error(Error::Kind::ParseError,
                    "not a rational literal: '" + std::string(text) + "'");
    return make_rational(parse_integer(num), parse_integer(den));
}

std::string to_string(const Rational& value) {
    std::ostringstream out;
    out << value;
    return out.str();
}

} // namespace aybe
