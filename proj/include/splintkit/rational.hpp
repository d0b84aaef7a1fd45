#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace boost {

// Boost 1.74 compares rational<long> with int through a template that C++20 operator
// rewriting turns into infinite recursion; exact-type overloads win overload resolution.
inline bool operator==(const rational<std::int64_t>& a, int b) { return a == rational<std::int64_t>(b); }
inline bool operator<(const rational<std::int64_t>& a, int b) { return a < rational<std::int64_t>(b); }
inline bool operator>(const rational<std::int64_t>& a, int b) { return a > rational<std::int64_t>(b); }
inline bool operator<=(const rational<std::int64_t>& a, int b) { return !(a > b); }
inline bool operator>=(const rational<std::int64_t>& a, int b) { return !(a < b); }

} // namespace boost

namespace splintkit {

using Rational = boost::rational<std::int64_t>;

/// Canonical "p/q" text with q > 0 and gcd(p,q) = 1; "p" alone when q = 1.
std::string to_string(const Rational& r);

/// Inverse of to_string. Accepts "p", "-p", "p/q"; returns nullopt on malformed input
/// or a zero denominator.
std::optional<Rational> parse_rational(std::string_view text);

inline bool is_integer(const Rational& r) { return r.denominator() == 1; }

/// Coefficient of a bilinear form: const_part + alpha_part * alpha, with alpha a
/// formal parameter (only D(2,1;alpha) has alpha_part != 0).
struct FormValue {
    Rational const_part{0};
    Rational alpha_part{0};

    bool is_zero() const { return const_part == 0 && alpha_part == 0; }
    bool depends_on_alpha() const { return alpha_part != 0; }

    FormValue& operator+=(const FormValue& o)
    {
        const_part += o.const_part;
        alpha_part += o.alpha_part;
        return *this;
    }
    friend FormValue operator+(FormValue a, const FormValue& b) { return a += b; }
    friend FormValue operator-(const FormValue& a, const FormValue& b)
    {
        return {a.const_part - b.const_part, a.alpha_part - b.alpha_part};
    }
    friend FormValue operator*(const Rational& s, const FormValue& v)
    {
        return {s * v.const_part, s * v.alpha_part};
    }
    friend bool operator==(const FormValue&, const FormValue&) = default;

    Rational evaluate(const Rational& alpha) const { return const_part + alpha_part * alpha; }
};

/// a / b when the quotient is an alpha-free rational (the two values are
/// proportional as polynomials in alpha); nullopt otherwise or when b = 0.
std::optional<Rational> exact_ratio(const FormValue& a, const FormValue& b);

std::string to_string(const FormValue& v);

} // namespace splintkit
