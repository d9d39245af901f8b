#ifndef JFRIEZE_RATIONAL_HPP
#define JFRIEZE_RATIONAL_HPP

// Exact scalars.  Rational is always kept in lowest terms with a positive
// denominator, so equality is structural.

#include <boost/multiprecision/cpp_int.hpp>

#include <regex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace jfrieze {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// "p" or "p/q" in lowest terms.
inline std::string to_string(const Rational& r) { return r.str(); }

// Accepts "p", "-p", "p/q"; the denominator must be a positive integer.
inline Rational parse_rational(std::string_view text) {
    static const std::regex pattern(R"(\s*([+-]?[0-9]+)(?:\s*/\s*([0-9]+))?\s*)");
    std::string s(text);
    std::smatch m;
    if (!std::regex_match(s, m, pattern)) {
        throw std::invalid_argument("not a rational number: '" + s + "'");
    }
    std::string num = m[1].str();
    if (!num.empty() && num[0] == '+') num.erase(0, 1);
    Integer p(num);
    Integer q = 1;
    if (m[2].matched) {
        q = Integer(m[2].str());
        if (q == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    }
    return Rational(p, q);
}

// (-1)^e for any integer e.
inline int sign_power(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace jfrieze

#endif
