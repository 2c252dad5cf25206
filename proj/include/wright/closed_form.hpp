// Registry of the tabulated closed forms of W_{-nu,mu}(+-x) for rational
// nu in {1/2, 1/3, 2/3}: Whittaker / Bessel / Airy / erf / pFq compositions,
// with the substitution variable X fixed per nu:
//   nu = 1/2 : X = x^2/4
//   nu = 1/3 : X = 2 (x/3)^{3/2}
//   nu = 2/3 : X = 4 x^3/27
#ifndef WRIGHT_CLOSED_FORM_HPP
#define WRIGHT_CLOSED_FORM_HPP

#include <cmath>
#include <stdexcept>
#include <string>

#include "wright/classical.hpp"
#include "wright/common.hpp"
#include "wright/gamma.hpp"
#include "wright/hypergeometric.hpp"
#include "wright/rational.hpp"

namespace wright {

enum class Sign { plus, minus };

namespace detail {

inline void guard_pos_exp(double half_x) {
    // e^{+X/2} prefactors of the (+x) rows overflow double past X ~ 1400
    if (half_x > 700.0)
        throw std::overflow_error("closed_form: e^{X/2} prefactor overflows double");
}

inline double pfq_val(std::initializer_list<double> up, std::initializer_list<double> lo,
                      double z, int* terms) {
    const auto r = pfq({std::vector<double>(up), std::vector<double>(lo), z}, 1e-14);
    if (terms) *terms += r.terms_used;
    return r.value;
}

} // namespace detail

inline std::string closed_form_entries() {
    return "nu=1/2: mu in {0, 1/4, 1/2, 3/4, 1}; "
           "nu=1/3: mu in {0, 1/3, 2/3, 1}; "
           "nu=2/3: mu in {0, 1/3, 2/3, 1}; signs + and - each";
}

// Tabulated closed form of W_{-nu,mu}(sign * x), x > 0.
inline EvalResult closed_form(const Rational& nu, const Rational& mu, Sign sign, double x) {
    if (!(x > 0.0)) throw std::domain_error("closed_form: requires x > 0");
    const bool plus = sign == Sign::plus;
    const double sq3pi = std::sqrt(3.0 * kPi);
    int terms = 0;

    if (nu == Rational(1, 2)) {
        const double X = x * x / 4.0;
        if (mu == Rational(0, 1))
            return {(plus ? -1.0 : 1.0) * std::sqrt(X) * std::exp(-X) / kSqrtPi, 0, 0.0};
        if (mu == Rational(1, 4)) {
            const double pre = std::pow(X, -0.25) * std::exp(-X / 2) / kSqrtPi;
            const double w = whittaker_w({0.5, 0.25, X});
            if (!plus) return {pre * w, 0, 0.0};
            const double m = whittaker_m({0.5, 0.25, X});
            return {pre * (w - kSqrtPi / gamma(0.75).value * m), 0, 0.0};
        }
        if (mu == Rational(1, 2)) return {std::exp(-X) / kSqrtPi, 0, 0.0};
        if (mu == Rational(3, 4)) {
            const double pre = std::pow(X, -0.25) * std::exp(-X / 2) / kSqrtPi;
            const double w = whittaker_w({0.0, 0.25, X});
            if (!plus) return {pre * w, 0, 0.0};
            const double m = whittaker_m({0.0, 0.25, X});
            return {pre * (w + kSqrtPi / gamma(1.25).value * m), 0, 0.0};
        }
        if (mu == Rational(1, 1))
            return {1.0 + (plus ? 1.0 : -1.0) * erf(std::sqrt(X)), 0, 0.0};
    } else if (nu == Rational(1, 3)) {
        const double X = 2.0 * std::pow(x / 3.0, 1.5);
        const double s3 = std::sqrt(3.0);
        if (mu == Rational(0, 1)) {
            if (plus)
                return {-X / 2.0 * (bessel_j(-1.0 / 3.0, X) + bessel_j(1.0 / 3.0, X)), 0, 0.0};
            return {s3 / (2.0 * kPi) * X * bessel_k(1.0 / 3.0, X), 0, 0.0};
        }
        if (mu == Rational(1, 3)) {
            if (plus)
                return {std::pow(X / 2.0, 2.0 / 3.0) *
                            (bessel_j(-2.0 / 3.0, X) - bessel_j(2.0 / 3.0, X)),
                        0, 0.0};
            return {s3 / kPi * std::pow(X / 2.0, 2.0 / 3.0) * bessel_k(2.0 / 3.0, X), 0, 0.0};
        }
        if (mu == Rational(2, 3)) {
            // the (+x) row's printed Bessel orders/exponent are a typo; the
            // form below matches both the series and the row's Airy form
            if (plus)
                return {std::pow(X / 2.0, 1.0 / 3.0) *
                            (bessel_j(-1.0 / 3.0, X) + bessel_j(1.0 / 3.0, X)),
                        0, 0.0};
            return {s3 / kPi * std::pow(X / 2.0, 1.0 / 3.0) * bessel_k(1.0 / 3.0, X), 0, 0.0};
        }
        if (mu == Rational(1, 1)) {
            const double Y = X * X / 4.0;    // = x^3/27
            const double arg = plus ? -Y : Y;
            const double f1 = detail::pfq_val({1.0 / 3.0}, {2.0 / 3.0, 4.0 / 3.0}, arg, &terms);
            const double f2 = detail::pfq_val({2.0 / 3.0}, {4.0 / 3.0, 5.0 / 3.0}, arg, &terms);
            return {1.0 + (plus ? 1.0 : -1.0) * x * rgamma(2.0 / 3.0) * f1 +
                        x * x / 2.0 * rgamma(1.0 / 3.0) * f2,
                    terms, 0.0};
        }
    } else if (nu == Rational(2, 3)) {
        const double X = 4.0 * x * x * x / 27.0;
        if (mu == Rational(0, 1)) {
            if (plus) {
                detail::guard_pos_exp(X / 2);
                return {-1.0 / (2.0 * sq3pi) * std::exp(X / 2) *
                            whittaker_w({-0.5, 1.0 / 6.0, X}),
                        0, 0.0};
            }
            return {std::sqrt(3.0 / kPi) * std::exp(-X / 2) * whittaker_w({0.5, 1.0 / 6.0, X}),
                    0, 0.0};
        }
        if (mu == Rational(1, 3)) {
            if (plus) {
                detail::guard_pos_exp(X / 2);
                return {std::pow(2.0, -4.0 / 3.0) / sq3pi * std::exp(X / 2) *
                            std::pow(X, -1.0 / 3.0) * whittaker_w({-0.5, 1.0 / 6.0, X}),
                        0, 0.0};
            }
            return {std::pow(2.0, -1.0 / 3.0) * std::sqrt(3.0 / kPi) * std::exp(-X / 2) *
                        std::pow(X, -1.0 / 3.0) * whittaker_w({0.5, 1.0 / 6.0, X}),
                    0, 0.0};
        }
        if (mu == Rational(2, 3)) {
            const double pre = std::pow(2.0, -2.0 / 3.0) * std::sqrt(3.0 / kPi) *
                               std::pow(X, -1.0 / 6.0) * whittaker_w({0.0, 1.0 / 3.0, X});
            if (plus) {
                detail::guard_pos_exp(X / 2);
                return {pre * std::exp(X / 2), 0, 0.0};
            }
            return {pre * std::exp(-X / 2), 0, 0.0};
        }
        if (mu == Rational(1, 1)) {
            // the 2F2 pieces reach e^X while the row value can sit near
            // machine zero, so the brace is combined in long double
            const long double arg = plus ? X : -X;
            detail::guard_pos_exp(plus ? X : 0.0);
            const auto f1 = detail::pfq_sum<long double>(
                {1.0L / 3.0L, 5.0L / 6.0L}, {2.0L / 3.0L, 4.0L / 3.0L}, arg, 0.0,
                default_term_cap(), detail::kEpsLd);
            const auto f2 = detail::pfq_sum<long double>(
                {2.0L / 3.0L, 7.0L / 6.0L}, {4.0L / 3.0L, 5.0L / 3.0L}, arg, 0.0,
                default_term_cap(), detail::kEpsLd);
            terms = f1.terms + f2.terms;
            const long double g56 = detail::gamma_ld(5.0L / 6.0L);
            const long double g16 = detail::gamma_ld(1.0L / 6.0L);
            const long double brace =
                (plus ? 1.0L : -1.0L) * g56 * detail::rgamma_ld(2.0L / 3.0L) * f1.value -
                std::pow(static_cast<long double>(X), 1.0L / 3.0L) * g16 / 4.0L *
                    detail::rgamma_ld(1.0L / 3.0L) * f2.value;
            const long double v =
                1.0L + std::pow(2.0L, -1.0L / 3.0L) * x / 1.77245385090551602730L * brace;
            return {static_cast<double>(v), terms, 0.0};
        }
    }
    throw std::domain_error("closed_form: no entry for nu=" + nu.str() + ", mu=" + mu.str() +
                            ", sign " + (plus ? "+" : "-") +
                            "; registered: " + closed_form_entries());
}

} // namespace wright

#endif
