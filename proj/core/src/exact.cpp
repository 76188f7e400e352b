#include "thompson/exact.hpp"

#include <cctype>
#include <cmath>

namespace thompson {

double Dyadic::to_double() const {
    return num_.convert_to<double>() * std::ldexp(1.0, -static_cast<int>(exp_));
}

unsigned Dyadic::digit_sum() const {
    BigInt n = num_ < 0 ? BigInt(-num_) : num_;
    unsigned s = 0;
    while (n != 0) {
        if (n & 1) ++s;
        n >>= 1;
    }
    return s;
}

std::string Dyadic::str() const {
    if (exp_ == 0) return num_.str();
    return num_.str() + "/2^" + std::to_string(exp_);
}

Dyadic Dyadic::parse(const std::string& text) {
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    bool neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        neg = text[i] == '-';
        ++i;
    }
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw parse_error("expected digit in dyadic literal", i);
    BigInt intpart = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        intpart = intpart * 10 + (text[i] - '0');
        ++i;
    }
    BigInt num = intpart;
    unsigned exp = 0;
    if (i < text.size() && text[i] == '.') {
        ++i;
        // decimal fraction; must be dyadic, i.e. terminate and reduce to /2^k
        BigInt frac_num = 0;
        BigInt frac_den = 1;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            frac_num = frac_num * 10 + (text[i] - '0');
            frac_den *= 10;
            ++i;
        }
        // value = intpart + frac_num/frac_den. frac_den = 2^a 5^a; multiply
        // by 5^a/5^a so denominator becomes 2^a 10^... : frac/10^a =
        // frac * 5^... easier: frac_num/10^a = frac_num*2^a/10^a / 2^a;
        // 10^a/2^a = 5^a, so value_frac = frac_num / (2^a 5^a).
        unsigned a = 0;
        BigInt d = frac_den;
        while (d % 10 == 0) { d /= 10; ++a; }
        BigInt five_a = 1;
        for (unsigned k = 0; k < a; ++k) five_a *= 5;
        if (frac_num % five_a != 0)
            throw parse_error("decimal literal is not a dyadic rational", i);
        num = intpart * (BigInt(1) << a) + frac_num / five_a;
        exp = a;
    } else if (i < text.size() && text[i] == '/') {
        ++i;
        if (i + 1 < text.size() && text[i] == '2' && text[i + 1] == '^') {
            i += 2;
            if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                throw parse_error("expected exponent digits", i);
            unsigned e = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                e = e * 10 + static_cast<unsigned>(text[i] - '0');
                ++i;
            }
            exp = e;
        } else {
            // plain power-of-two denominator, e.g. "3/8"
            if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                throw parse_error("expected denominator", i);
            BigInt den = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                den = den * 10 + (text[i] - '0');
                ++i;
            }
            if (den == 0) throw parse_error("zero denominator", i);
            unsigned e = 0;
            while ((den & 1) == 0) { den >>= 1; ++e; }
            if (den != 1) throw parse_error("denominator is not a power of two", i);
            exp = e;
        }
    }
    skip_ws();
    if (i != text.size()) throw parse_error("trailing characters in dyadic literal", i);
    if (neg) num = -num;
    return Dyadic(num, exp);
}

}  // namespace thompson
