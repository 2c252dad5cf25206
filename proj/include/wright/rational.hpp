// Small exact rationals: closed-form dispatch is keyed on exact fractions so
// that "2/3" from the command line cannot drift past the registry.
#ifndef WRIGHT_RATIONAL_HPP
#define WRIGHT_RATIONAL_HPP

#include <cstdlib>
#include <numeric>
#include <optional>
#include <string>

namespace wright {

struct Rational {
    long long num = 0;
    long long den = 1;

    constexpr Rational() = default;
    constexpr Rational(long long n, long long d) : num(n), den(d) { normalize(); }

    constexpr void normalize() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
    friend constexpr bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
};

// Parses "p/q" or a decimal that is exactly a small fraction (denominator up
// to 64). Returns nothing when the text is not exactly representable.
inline std::optional<Rational> parse_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    const auto slash = text.find('/');
    char* end = nullptr;
    if (slash != std::string::npos) {
        const long long n = std::strtoll(text.c_str(), &end, 10);
        if (end != text.c_str() + slash) return std::nullopt;
        const char* dstart = text.c_str() + slash + 1;
        const long long d = std::strtoll(dstart, &end, 10);
        if (*end != '\0' || d == 0) return std::nullopt;
        return Rational(n, d);
    }
    const double v = std::strtod(text.c_str(), &end);
    if (end == text.c_str() || *end != '\0') return std::nullopt;
    for (long long q = 1; q <= 64; ++q) {
        const double pn = v * static_cast<double>(q);
        const long long p = static_cast<long long>(pn < 0 ? pn - 0.5 : pn + 0.5);
        if (static_cast<double>(p) / static_cast<double>(q) == v) return Rational(p, q);
    }
    return std::nullopt;
}

} // namespace wright

#endif
