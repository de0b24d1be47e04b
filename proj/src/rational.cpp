#include "steiner/rational.hpp"

#include <cstdlib>
#include <numeric>

namespace steiner {

rational::rational(long long n, long long d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    num = n;
    den = d;
}

std::optional<rational> rational::parse(std::string_view text) {
    if (text.empty()) return std::nullopt;
    bool negative = false;
    std::size_t pos = 0;
    if (text[0] == '-') {
        negative = true;
        pos = 1;
    }
    long long digits = 0;
    int digit_count = 0;
    int frac_digits = 0;
    bool seen_dot = false;
    bool seen_digit = false;
    bool digits_after_dot = false;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (c == '.') {
            if (seen_dot || !seen_digit) return std::nullopt;
            seen_dot = true;
            continue;
        }
        if (c < '0' || c > '9') return std::nullopt;
        seen_digit = true;
        if (seen_dot) {
            ++frac_digits;
            digits_after_dot = true;
        }
        if (++digit_count > 18) return std::nullopt;
        digits = digits * 10 + (c - '0');
    }
    if (!seen_digit || (seen_dot && !digits_after_dot)) return std::nullopt;
    long long den = 1;
    for (int i = 0; i < frac_digits; ++i) den *= 10;
    return rational(negative ? -digits : digits, den);
}

std::string rational::to_string() const {
    if (den == 1) return std::to_string(num);
    // den is 2^a * 5^b for every parseable literal; scale to 10^k and place
    // the point. Lowest terms guarantee no trailing zeros in the fraction.
    long long d = den;
    int twos = 0;
    int fives = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++twos;
    }
    while (d % 5 == 0) {
        d /= 5;
        ++fives;
    }
    int k = twos > fives ? twos : fives;
    if (d != 1 || k > 18) return std::to_string(num) + "/" + std::to_string(den);
    __int128 scale = 1;
    for (int i = 0; i < k; ++i) scale *= 10;
    __int128 scaled = static_cast<__int128>(num) * scale / den;
    bool negative = scaled < 0;
    if (negative) scaled = -scaled;
    std::string body;
    while (scaled > 0 || static_cast<int>(body.size()) <= k) {
        body.push_back(static_cast<char>('0' + static_cast<int>(scaled % 10)));
        scaled /= 10;
    }
    std::string out;
    if (negative) out.push_back('-');
    for (int i = static_cast<int>(body.size()) - 1; i >= 0; --i) {
        out.push_back(body[static_cast<std::size_t>(i)]);
        if (i == k) out.push_back('.');
    }
    return out;
}

}  // namespace steiner
