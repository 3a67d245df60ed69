#include "gfl/rational.hpp"

#include <cctype>

namespace gfl {

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");

    auto slash = text.find('/');
    if (slash != std::string::npos) {
        const std::string ns = text.substr(0, slash);
        const std::string ds = text.substr(slash + 1);
        if (ns.empty() || ds.empty())
            throw std::invalid_argument("malformed rational literal: " + text);
        mpz_class num, den;
        if (num.set_str(ns, 10) != 0 || den.set_str(ds, 10) != 0)
            throw std::invalid_argument("malformed rational literal: " + text);
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    }

    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        const std::size_t frac_digits = text.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+")
            throw std::invalid_argument("malformed decimal literal: " + text);
        mpz_class num;
        if (num.set_str(digits, 10) != 0)
            throw std::invalid_argument("malformed decimal literal: " + text);
        mpz_class den = 1;
        for (std::size_t i = 0; i < frac_digits; ++i) den *= 10;
        return Rational(num, den);
    }

    mpz_class num;
    if (num.set_str(text, 10) != 0)
        throw std::invalid_argument("malformed integer literal: " + text);
    return Rational(num, mpz_class(1));
}

}  // namespace gfl
