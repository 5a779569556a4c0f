#include "coquecigrue/rational.hpp"

#include "coquecigrue/errors.hpp"

#include <cctype>

namespace coquecigrue {

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
    if (text.empty())
        throw ValidationError("empty integer in rational '" + std::string(whole) + "'");
    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
        negative = text[pos] == '-';
        ++pos;
    }
    if (pos == text.size())
        throw ValidationError("missing digits in rational '" + std::string(whole) + "'");
    BigInt value = 0;
    for (; pos < text.size(); ++pos) {
        if (!std::isdigit(static_cast<unsigned char>(text[pos])))
            throw ValidationError("malformed rational '" + std::string(whole) + "'");
        value = value * 10 + (text[pos] - '0');
    }
    return negative ? BigInt(-value) : value;
}

} // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text, text));
    BigInt num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (den_text.find('/') != std::string_view::npos)
        throw ValidationError("malformed rational '" + std::string(text) + "'");
    BigInt den = parse_integer(den_text, text);
    if (den < 0)
        throw ValidationError("negative denominator in '" + std::string(text) + "'");
    if (den == 0)
        throw ValidationError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string rational_to_string(const Rational& q) {
    return q.str();
}

BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i)
        r *= i;
    return r;
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i; // always exact at this point
    }
    return r;
}

} // namespace coquecigrue
