#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace steiner {

// Exact rational endpoint. Always normalized: den > 0, gcd(|num|, den) = 1.
// Values come from decimal literals with at most 18 digits, so every
// denominator divides 10^18 and all comparisons fit in 128-bit products.
struct rational {
    long long num = 0;
    long long den = 1;

    rational() = default;
    rational(long long n) : num(n), den(1) {}
    rational(long long n, long long d);

    // Accepts [-]digits[.digits] with at least one digit and at most 18
    // digit characters total. Returns nullopt on any other shape.
    static std::optional<rational> parse(std::string_view text);

    // Canonical decimal form; parse(to_string(x)) == x for every value
    // this library constructs.
    std::string to_string() const;
};

inline int cmp(const rational& a, const rational& b) {
    __int128 lhs = static_cast<__int128>(a.num) * b.den;
    __int128 rhs = static_cast<__int128>(b.num) * a.den;
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
}

inline bool operator==(const rational& a, const rational& b) { return a.num == b.num && a.den == b.den; }
inline bool operator!=(const rational& a, const rational& b) { return !(a == b); }
inline bool operator<(const rational& a, const rational& b) { return cmp(a, b) < 0; }
inline bool operator<=(const rational& a, const rational& b) { return cmp(a, b) <= 0; }
inline bool operator>(const rational& a, const rational& b) { return cmp(a, b) > 0; }
inline bool operator>=(const rational& a, const rational& b) { return cmp(a, b) >= 0; }

}  // namespace steiner
