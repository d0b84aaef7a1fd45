#include "splintkit/rational.hpp"

#include <charconv>

namespace splintkit {

std::string to_string(const Rational& r)
{
    if (r.denominator() == 1)
        return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

std::optional<std::int64_t> parse_int(std::string_view s)
{
    if (s.empty())
        return std::nullopt;
    std::int64_t v = 0;
    const char* first = s.data();
    if (*first == '+')
        ++first;
    auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        return std::nullopt;
    return v;
}

} // namespace

std::optional<Rational> parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        auto v = parse_int(text);
        if (!v)
            return std::nullopt;
        return Rational(*v);
    }
    auto num = parse_int(text.substr(0, slash));
    auto den = parse_int(text.substr(slash + 1));
    if (!num || !den || *den == 0)
        return std::nullopt;
    return Rational(*num, *den);
}

std::optional<Rational> exact_ratio(const FormValue& a, const FormValue& b)
{
    if (b.is_zero())
        return std::nullopt;
    // proportional iff the 2x2 determinant vanishes
    if (a.const_part * b.alpha_part != a.alpha_part * b.const_part)
        return std::nullopt;
    if (b.const_part != 0)
        return a.const_part / b.const_part;
    return a.alpha_part / b.alpha_part;
}

std::string to_string(const FormValue& v)
{
    if (!v.depends_on_alpha())
        return to_string(v.const_part);
    std::string out;
    if (v.const_part != 0)
        out = to_string(v.const_part) + (v.alpha_part > 0 ? "+" : "");
    if (v.alpha_part == -1)
        out += "-";
    else if (v.alpha_part != 1)
        out += to_string(v.alpha_part) + "*";
    return out + "a";
}

} // namespace splintkit
