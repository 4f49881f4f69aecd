#include "pathfree/rational.hpp"

#include "pathfree/errors.hpp"

#include <cmath>
#include <limits>

namespace pathfree {

namespace mp = boost::multiprecision;

Rational make_rational(std::int64_t num, std::int64_t den)
{
    if (den == 0)
        throw DomainError("zero denominator");
    return Rational(BigInt(num), BigInt(den));
}

namespace {
    bool all_digits(std::string_view s)
    {
        if (s.empty())
            return false;
        for (char c : s)
            if (c < '0' || c > '9')
                return false;
        return true;
    }

    BigInt parse_integer(std::string_view s)
    {
        bool negative = false;
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
            negative = s.front() == '-';
            s.remove_prefix(1);
        }
        if (!all_digits(s))
            throw ParseError(0, "not a number: '" + std::string(s) + "'");
        BigInt value{std::string(s)};
        return negative ? BigInt(-value) : value;
    }
}

Rational parse_rational(std::string_view text)
{
    while (!text.empty() && text.front() == ' ')
        text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ')
        text.remove_suffix(1);
    if (text.empty())
        throw ParseError(0, "empty rational");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        BigInt num = parse_integer(text.substr(0, slash));
        BigInt den = parse_integer(text.substr(slash + 1));
        if (den == 0)
            throw ParseError(0, "zero denominator in '" + std::string(text) + "'");
        return Rational(num, den);
    }

    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        bool negative = !whole.empty() && whole.front() == '-';
        if (!whole.empty() && (whole.front() == '-' || whole.front() == '+'))
            whole.remove_prefix(1);
        if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac))
            throw ParseError(0, "not a number: '" + std::string(text) + "'");
        BigInt scale = mp::pow(BigInt(10), static_cast<unsigned>(frac.size()));
        BigInt num = (whole.empty() ? BigInt(0) : BigInt(std::string(whole))) * scale + BigInt(std::string(frac));
        Rational value(num, scale);
        return negative ? Rational(-value) : value;
    }

    return Rational(parse_integer(text));
}

std::string to_string(const Rational & q)
{
    if (mp::denominator(q) == 1)
        return mp::numerator(q).str();
    return mp::numerator(q).str() + "/" + mp::denominator(q).str();
}

Rational rational_from_double(double value)
{
    if (!std::isfinite(value))
        throw DomainError("non-finite value has no rational form");
    if (value == 0.0)
        return Rational(0);
    int exponent = 0;
    double mantissa = std::frexp(value, &exponent);
    // 53 significant bits make the scaled mantissa an exact integer.
    auto scaled = static_cast<std::int64_t>(std::ldexp(mantissa, 53));
    exponent -= 53;
    Rational result{BigInt(scaled)};
    if (exponent >= 0)
        result *= Rational(BigInt(1) << exponent);
    else
        result /= Rational(BigInt(1) << -exponent);
    return result;
}

double to_double(const Rational & q)
{
    return q.convert_to<double>();
}

BigInt floor(const Rational & q)
{
    BigInt num = mp::numerator(q), den = mp::denominator(q);
    BigInt quotient = num / den;
    if (num < 0 && quotient * den != num)
        quotient -= 1;
    return quotient;
}

BigInt ceil(const Rational & q)
{
    BigInt f = floor(q);
    return Rational(f) == q ? f : BigInt(f + 1);
}

namespace {
    std::int64_t clamp64(const BigInt & v)
    {
        static const BigInt lo(std::numeric_limits<std::int64_t>::min());
        static const BigInt hi(std::numeric_limits<std::int64_t>::max());
        if (v < lo)
            return std::numeric_limits<std::int64_t>::min();
        if (v > hi)
            return std::numeric_limits<std::int64_t>::max();
        return v.convert_to<std::int64_t>();
    }
}

std::int64_t floor_mul(const Rational & q, std::int64_t m)
{
    return clamp64(floor(q * Rational(BigInt(m))));
}

std::int64_t ceil_mul(const Rational & q, std::int64_t m)
{
    return clamp64(ceil(q * Rational(BigInt(m))));
}

Rational pow(const Rational & q, unsigned exponent)
{
    Rational result(1), base = q;
    while (exponent) {
        if (exponent & 1u)
            result *= base;
        exponent >>= 1;
        if (exponent)
            base *= base;
    }
    return result;
}

bool at_most(std::int64_t count, const Rational & q, std::int64_t m)
{
    return BigInt(count) * mp::denominator(q) <= mp::numerator(q) * BigInt(m);
}

bool at_least(std::int64_t count, const Rational & q, std::int64_t m)
{
    return BigInt(count) * mp::denominator(q) >= mp::numerator(q) * BigInt(m);
}

} // namespace pathfree
