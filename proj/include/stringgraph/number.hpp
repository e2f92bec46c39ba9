#ifndef STRINGGRAPH_NUMBER_HPP
#define STRINGGRAPH_NUMBER_HPP

// Exact rational coordinates.
//
// Coordinates are stored as arbitrary precision rationals so that every
// geometric predicate is evaluated exactly. Decimal and "p/q" strings parse
// without loss; binary doubles convert exactly (every finite double is a
// dyadic rational).

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace stringgraph {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

namespace detail {

inline BigInt pow10(unsigned k) {
    BigInt r = 1;
    for (unsigned i = 0; i < k; ++i) r *= 10;
    return r;
}

inline std::optional<BigInt> parse_digits(std::string_view s) {
    if (s.empty()) return std::nullopt;
    BigInt r = 0;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
        r = r * 10 + (ch - '0');
    }
    return r;
}

} // namespace detail

/// Parses "[-+]digits[.digits][e[-+]digits]" or "[-]p/q". Returns nullopt on
/// malformed input or a zero denominator.
inline std::optional<Rational> parse_rational(std::string_view text) {
    if (text.empty()) return std::nullopt;

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto num = text.substr(0, slash);
        bool neg = false;
        if (!num.empty() && (num[0] == '-' || num[0] == '+')) {
            neg = num[0] == '-';
            num.remove_prefix(1);
        }
        auto p = detail::parse_digits(num);
        auto q = detail::parse_digits(text.substr(slash + 1));
        if (!p || !q || *q == 0) return std::nullopt;
        Rational r(*p, *q);
        return neg ? Rational(-r) : r;
    }

    bool neg = false;
    std::string_view rest = text;
    if (rest[0] == '-' || rest[0] == '+') {
        neg = rest[0] == '-';
        rest.remove_prefix(1);
    }
    long long exponent = 0;
    if (auto e = rest.find_first_of("eE"); e != std::string_view::npos) {
        auto exp_text = rest.substr(e + 1);
        rest = rest.substr(0, e);
        bool eneg = false;
        if (!exp_text.empty() && (exp_text[0] == '-' || exp_text[0] == '+')) {
            eneg = exp_text[0] == '-';
            exp_text.remove_prefix(1);
        }
        if (exp_text.empty() || exp_text.size() > 6) return std::nullopt;
        for (char ch : exp_text)
            if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
        exponent = std::stoll(std::string(exp_text));
        if (eneg) exponent = -exponent;
    }
    std::string_view int_part = rest;
    std::string_view frac_part;
    if (auto dot = rest.find('.'); dot != std::string_view::npos) {
        int_part = rest.substr(0, dot);
        frac_part = rest.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) return std::nullopt;
    std::string digits(int_part);
    digits += frac_part;
    auto mant = detail::parse_digits(digits);
    if (!mant) return std::nullopt;
    exponent -= static_cast<long long>(frac_part.size());
    Rational r = exponent >= 0 ? Rational(*mant * detail::pow10(static_cast<unsigned>(exponent)))
                               : Rational(*mant, detail::pow10(static_cast<unsigned>(-exponent)));
    return neg ? Rational(-r) : r;
}

/// Exact value of a finite double. Returns nullopt for NaN and infinities.
inline std::optional<Rational> rational_from_double(double v) {
    if (!std::isfinite(v)) return std::nullopt;
    if (v == 0.0) return Rational(0);
    int exp = 0;
    double mant = std::frexp(v, &exp); // v = mant * 2^exp, 0.5 <= |mant| < 1
    auto scaled = static_cast<std::int64_t>(std::ldexp(mant, 53));
    exp -= 53;
    BigInt num = scaled;
    if (exp >= 0) return Rational(num << exp);
    BigInt den = 1;
    den <<= -exp;
    return Rational(num, den);
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline bool is_integer(const Rational& r) {
    return boost::multiprecision::denominator(r) == 1;
}

/// Canonical text of a rational: plain integer, terminating decimal when the
/// denominator has only factors 2 and 5, otherwise "p/q".
inline std::string format_rational(const Rational& r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();

    BigInt d = den;
    unsigned twos = 0, fives = 0;
    while (d % 2 == 0) { d /= 2; ++twos; }
    while (d % 5 == 0) { d /= 5; ++fives; }
    if (d != 1) return num.str() + "/" + den.str();

    unsigned places = twos > fives ? twos : fives;
    BigInt scaled = num * detail::pow10(places) / den;
    bool neg = scaled < 0;
    if (neg) scaled = -scaled;
    std::string digits = scaled.str();
    if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
    digits.insert(digits.size() - places, ".");
    return neg ? "-" + digits : digits;
}

} // namespace stringgraph

#endif // STRINGGRAPH_NUMBER_HPP
