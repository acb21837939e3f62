#include "asmbly/rational.hpp"

#include "asmbly/errors.hpp"

namespace asmbly {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    auto slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            BigInt num(text.substr(0, slash));
            BigInt den(text.substr(slash + 1));
            if (den == 0) throw ParseError("zero denominator in '" + text + "'");
            return Rational(num, den);
        }
        auto dot = text.find('.');
        if (dot == std::string::npos) return Rational(BigInt(text));
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        std::size_t places = text.size() - dot - 1;
        if (places == 0 || digits.empty()) throw ParseError("malformed decimal '" + text + "'");
        BigInt den = 1;
        for (std::size_t i = 0; i < places; ++i) den *= 10;
        return Rational(BigInt(digits), den);
    } catch (const std::runtime_error& e) {
        throw ParseError("malformed rational '" + text + "'");
    }
}

std::string rational_to_string(const Rational& r) {
    BigInt num = numerator(r), den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace asmbly
