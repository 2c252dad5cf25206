// Real-argument gamma kernel: Gamma, 1/Gamma and Pochhammer symbols, with
// pole bookkeeping. Internally evaluated in long double via a shifted
// Stirling series; negative arguments go through the reflection formula.
#ifndef WRIGHT_GAMMA_HPP
#define WRIGHT_GAMMA_HPP

#include <cmath>
#include <stdexcept>

#include "wright/common.hpp"

namespace wright {

struct GammaValue {
    double value = 0.0;   // NaN when is_pole
    bool is_pole = false;
};

namespace detail {

// log Gamma(y) for y >= 32 by the Stirling/Bernoulli series; the last kept
// term at y = 32 is ~7e-27, below long-double roundoff of the result.
inline long double log_gamma_stirling(long double y) {
    static const long double c[] = {
        1.0L / 12.0L,          -1.0L / 360.0L,        1.0L / 1260.0L,
        -1.0L / 1680.0L,       1.0L / 1188.0L,        -691.0L / 360360.0L,
        1.0L / 156.0L,         -3617.0L / 122400.0L,  43867.0L / 244188.0L,
        -174611.0L / 125400.0L,
    };
    const long double ln2pi_half = 0.91893853320467274178032973640561763986L;
    const long double w = 1.0L / y, w2 = w * w;
    long double corr = 0.0L, p = w;
    for (long double ck : c) {
        corr += ck * p;
        p *= w2;
    }
    return (y - 0.5L) * std::log(y) - y + ln2pi_half + corr;
}

// Gamma(x) for x > 0, away from overflow.
inline long double gamma_pos_ld(long double x) {
    if (x >= 32.0L) return std::exp(log_gamma_stirling(x));
    int m = static_cast<int>(32.0L - x) + 1;
    long double p = x;
    for (int i = 1; i < m; ++i) p *= (x + i);
    return std::exp(log_gamma_stirling(x + m)) / p;
}

// log Gamma(x) for x > 0.
inline long double log_gamma_pos_ld(long double x) {
    if (x >= 32.0L) return log_gamma_stirling(x);
    int m = static_cast<int>(32.0L - x) + 1;
    long double p = x;
    for (int i = 1; i < m; ++i) p *= (x + i);
    return log_gamma_stirling(x + m) - std::log(p);
}

// Gamma(x) for any non-pole real x (reflection below 0.5).
inline long double gamma_ld(long double x) {
    if (x >= 0.5L) return gamma_pos_ld(x);
    const long double s = sin_pi(x);
    return kPiL / (s * gamma_pos_ld(1.0L - x));
}

// Signed log of 1/Gamma(a): 1/Gamma(a) = sign * exp(log_abs); sign = 0 at the
// poles a = 0, -1, -2, ...
struct SignedLog {
    long double log_abs = 0.0L;
    int sign = 0;
};

inline SignedLog rgamma_signed_log(long double a) {
    if (a >= 0.5L) return {-log_gamma_pos_ld(a), 1};
    const double r = std::nearbyint(static_cast<double>(a));
    if (r <= 0.0 && std::fabs(static_cast<double>(a) - r) <= 1e-13) return {0.0L, 0};
    const long double s = sin_pi(a);
    const long double la = std::log(std::fabs(s)) + log_gamma_pos_ld(1.0L - a) -
                           1.14472988584940017414342735135305871165L; // log pi
    return {la, s > 0 ? 1 : -1};
}

} // namespace detail

// Gamma(x). Poles are flagged, not thrown; overflow of the result is thrown
// (distinct condition from a pole).
inline GammaValue gamma(double x) {
    if (!std::isfinite(x)) throw std::domain_error("gamma: argument must be finite");
    if (detail::is_nonpositive_integer(x))
        return {std::numeric_limits<double>::quiet_NaN(), true};
    if (x > 171.7) throw std::overflow_error("gamma: overflow for x > ~171.6");
    if (x >= 0.5) return {static_cast<double>(detail::gamma_pos_ld(x)), false};
    const auto sl = detail::rgamma_signed_log(x);
    const long double v = static_cast<long double>(sl.sign) * std::exp(-sl.log_abs);
    return {static_cast<double>(v), false};
}

// 1/Gamma(x): entire, exactly 0 at the poles, never throws.
inline double rgamma(double x) {
    if (!std::isfinite(x)) throw std::domain_error("rgamma: argument must be finite");
    const auto sl = detail::rgamma_signed_log(x);
    if (sl.sign == 0) return 0.0;
    return static_cast<double>(sl.sign * std::exp(sl.log_abs));
}

// Pochhammer symbol (a)_k = a (a+1) ... (a+k-1).
inline double pochhammer(double a, int k) {
    if (k < 0) throw std::domain_error("pochhammer: k must be >= 0");
    long double p = 1.0L;
    for (int i = 0; i < k; ++i) p *= (a + i);
    if (std::fabs(p) > static_cast<long double>(std::numeric_limits<double>::max()))
        throw std::overflow_error("pochhammer: overflow");
    return static_cast<double>(p);
}

} // namespace wright

#endif
