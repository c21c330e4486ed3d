#include "zuk/numeric.hpp"

#include <cctype>
#include <cstddef>

#include "zuk/errors.hpp"

namespace zuk {

Int pow10(unsigned k) {
    Int r = 1;
    for (unsigned i = 0; i < k; ++i) r *= 10;
    return r;
}

std::string to_string(const Int& x) { return x.str(); }

std::string to_string(const Rat& x) {
    Int num = numerator(x);
    Int den = denominator(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rat parse_rational(const std::string& text) {
    std::string s = text;
    if (s.empty()) throw input_error("empty number");

    bool negative = false;
    std::size_t pos = 0;
    if (s[pos] == '+' || s[pos] == '-') {
        negative = s[pos] == '-';
        ++pos;
    }
    std::string body = s.substr(pos);
    if (body.empty()) throw input_error("malformed number: '" + text + "'");

    auto slash = body.find('/');
    if (slash != std::string::npos) {
        std::string num = body.substr(0, slash);
        std::string den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw input_error("malformed rational: '" + text + "'");
        Int d(den);
        if (d == 0) throw input_error("zero denominator: '" + text + "'");
        Rat r(Int(num), d);
        return negative ? -r : r;
    }

    // decimal with optional fraction part and exponent
    std::string digits;
    long frac_digits = 0;
    long exponent = 0;
    std::size_t i = 0;
    while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i])))
        digits.push_back(body[i++]);
    if (i < body.size() && body[i] == '.') {
        ++i;
        while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) {
            digits.push_back(body[i++]);
            ++frac_digits;
        }
    }
    if (digits.empty()) throw input_error("malformed number: '" + text + "'");
    if (i < body.size() && (body[i] == 'e' || body[i] == 'E')) {
        ++i;
        bool eneg = false;
        if (i < body.size() && (body[i] == '+' || body[i] == '-')) {
            eneg = body[i] == '-';
            ++i;
        }
        std::string ed;
        while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i])))
            ed.push_back(body[i++]);
        if (ed.empty() || ed.size() > 6) throw input_error("malformed exponent: '" + text + "'");
        exponent = std::stol(ed);
        if (eneg) exponent = -exponent;
    }
    if (i != body.size()) throw input_error("malformed number: '" + text + "'");

    Rat r{Int(digits)};
    long net = exponent - frac_digits;
    if (net > 0)
        r *= Rat(pow10(static_cast<unsigned>(net)));
    else if (net < 0)
        r /= Rat(pow10(static_cast<unsigned>(-net)));
    return negative ? -r : r;
}

}  // namespace zuk
