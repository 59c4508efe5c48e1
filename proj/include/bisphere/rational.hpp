// Exact rational scalars on top of GMP.
#pragma once

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bisphere {

/// Arbitrary-precision rational; GMP keeps it canonical (gcd 1, den > 0).
using Rational = mpq_class;
using Integer = mpz_class;

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}
};

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::domain_error("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "p", "-p" or "p/q". Whitespace is not accepted.
inline Rational parse_rational(std::string_view text) {
    auto digits = [&](std::size_t from, std::size_t to) {
        if (from >= to) return false;
        for (std::size_t i = from; i < to; ++i)
            if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
        return true;
    };
    std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
    const auto slash = text.find('/');
    const std::size_t num_end = slash == std::string_view::npos ? text.size() : slash;
    if (!digits(start, num_end)) throw ParseError("malformed rational '" + std::string(text) + "'", 0);
    Integer num(std::string(text.substr(start, num_end - start)));
    if (start == 1 && text[0] == '-') num = -num;
    Integer den = 1;
    if (slash != std::string_view::npos) {
        if (!digits(slash + 1, text.size()))
            throw ParseError("malformed denominator in '" + std::string(text) + "'", slash + 1);
        den = Integer(std::string(text.substr(slash + 1)));
        if (den == 0) throw ParseError("zero denominator", slash + 1);
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Always "p/q" form, e.g. "3/1", "-1/2", "0/1".
inline std::string to_pq(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Shortest form: "3", "-1/2".
inline std::string to_short(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_str();
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

}  // namespace bisphere
