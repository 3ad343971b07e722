#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// boost 1.74 mixed rational/integer equality recurses forever under C++20
// rewritten comparisons; these exact-match overloads take precedence.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, int b) { return a.denominator() == 1 && a.numerator() == b; }
inline bool operator==(int b, const rational<std::int64_t>& a) { return a == b; }
inline bool operator==(const rational<std::int64_t>& a, std::int64_t b)
{
    return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(std::int64_t b, const rational<std::int64_t>& a) { return a == b; }
} // namespace boost

namespace sgit {

using Rational = boost::rational<std::int64_t>;
using RatVec = std::vector<Rational>;

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an enumeration would exceed its configured size guard.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// Raised when a computed object contradicts a proved statement (for
/// instance a uniqueness claim). These are never silently recovered from.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

inline bool is_integer(const Rational& q) { return q.denominator() == 1; }

inline std::int64_t floor_of(const Rational& q)
{
    std::int64_t n = q.numerator(), d = q.denominator();
    std::int64_t f = n / d;
    if (n % d != 0 && n < 0) --f;
    return f;
}

inline std::int64_t ceil_of(const Rational& q) { return -floor_of(-q); }

/// Exact "num/den" form used in every machine-readable report.
inline std::string to_string(const Rational& q)
{
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

/// Human-oriented form: integers print without a denominator.
inline std::string to_pretty(const Rational& q)
{
    if (q.denominator() == 1) return std::to_string(q.numerator());
    return to_string(q);
}

/// Accepts "p", "p/q" (q > 0).
inline Rational parse_rational(std::string_view text)
{
    auto to_i64 = [&](std::string_view s) {
        if (s.empty()) throw Error("malformed rational: '" + std::string(text) + "'");
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(std::string(s), &used);
        } catch (const std::exception&) {
            throw Error("malformed rational: '" + std::string(text) + "'");
        }
        if (used != s.size()) throw Error("malformed rational: '" + std::string(text) + "'");
        return static_cast<std::int64_t>(v);
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(to_i64(text));
    auto den = to_i64(text.substr(slash + 1));
    if (den <= 0) throw Error("rational denominator must be positive: '" + std::string(text) + "'");
    return Rational(to_i64(text.substr(0, slash)), den);
}

} // namespace sgit
