// Classical special functions forming the closed-form sides of the identity
// registry: Whittaker W and M assembled from 1F1, Bessel J/K from ascending
// series, Airy Ai/Ai' from the Maclaurin pair, and erf/erfc.
//
// The Whittaker W bracket and the Bessel K difference are ill-conditioned for
// large argument; both escalate to MPFR when the long-double rounding bound
// would not give a fully accurate double result.
#ifndef WRIGHT_CLASSICAL_HPP
#define WRIGHT_CLASSICAL_HPP

#include <cmath>
#include <stdexcept>
#include <string>

#include "wright/common.hpp"
#include "wright/gamma.hpp"
#include "wright/hypergeometric.hpp"
#include "wright/multiprec.hpp"

namespace wright {

struct WhittakerParams {
    double kappa = 0.0;
    double mu = 0.0;
    double argument = 0.0;   // z > 0 (principal real-valued branch)
};

struct AiryPair {
    double ai = 0.0;
    double ai_prime = 0.0;
};

namespace detail {

inline long double rgamma_ld(long double x) {
    const auto sl = rgamma_signed_log(x);
    if (sl.sign == 0) return 0.0L;
    return static_cast<long double>(sl.sign) * std::exp(sl.log_abs);
}

inline big_float rgamma_mp(const big_float& x) {
    if (is_nonpositive_integer(x.convert_to<double>())) return big_float(0);
    return 1 / tgamma(x);
}

template <typename T>
struct WhittakerEval {
    T value;
    T cond;    // (|term1| + |term2|) / |term1 + term2|
};

// Whittaker W bracket: Gamma(-2mu)/Gamma(1/2-mu-kappa) 1F1(1/2+mu-kappa;1+2mu;z)
// + z^{-2mu} Gamma(2mu)/Gamma(1/2+mu-kappa) 1F1(1/2-mu-kappa;1-2mu;z), a pole
// of a denominator gamma removing that term.
inline WhittakerEval<long double> whittaker_w_ld(double kappa, double mu, long double z,
                                                 int term_cap) {
    const long double mu_l = mu, ka_l = kappa;
    const long double rg1 = rgamma_ld(0.5L - mu_l - ka_l);
    const long double rg2 = rgamma_ld(0.5L + mu_l - ka_l);
    long double t1 = 0.0L, t2 = 0.0L;
    if (rg1 != 0.0L)
        t1 = gamma_ld(-2.0L * mu_l) * rg1 *
             pfq_sum<long double>({0.5L + mu_l - ka_l}, {1.0L + 2.0L * mu_l}, z, 0.0,
                                  term_cap, kEpsLd)
                 .value;
    if (rg2 != 0.0L)
        t2 = std::pow(z, -2.0L * mu_l) * gamma_ld(2.0L * mu_l) * rg2 *
             pfq_sum<long double>({0.5L - mu_l - ka_l}, {1.0L - 2.0L * mu_l}, z, 0.0,
                                  term_cap, kEpsLd)
                 .value;
    const long double bracket = t1 + t2;
    const long double denom =
        std::fabs(bracket) > 0.0L ? std::fabs(bracket) : LDBL_TRUE_MIN;
    const long double value = std::exp(-z / 2) * std::pow(z, 0.5L + mu) * bracket;
    return {value, (std::fabs(t1) + std::fabs(t2)) / denom};
}

inline WhittakerEval<big_float> whittaker_w_mp(double kappa, double mu, const big_float& z,
                                               int term_cap, const big_float& eps) {
    // all parameters derived in working precision; double pre-rounding here
    // would feed the bracket mutually inconsistent 1F1/gamma inputs
    const big_float mu_b(mu), ka_b(kappa), half = big_float(1) / 2;
    const big_float rg1 = rgamma_mp(half - mu_b - ka_b);
    const big_float rg2 = rgamma_mp(half + mu_b - ka_b);
    big_float t1(0), t2(0);
    if (rg1 != 0)
        t1 = tgamma(-2 * mu_b) * rg1 *
             pfq_sum<big_float>({half + mu_b - ka_b}, {1 + 2 * mu_b}, z, 0.0,
                                term_cap, eps)
                 .value;
    if (rg2 != 0)
        t2 = pow(z, -2 * mu_b) * tgamma(2 * mu_b) * rg2 *
             pfq_sum<big_float>({half - mu_b - ka_b}, {1 - 2 * mu_b}, z, 0.0,
                                term_cap, eps)
                 .value;
    const big_float bracket = t1 + t2;
    big_float denom = abs(bracket);
    if (denom == 0) denom = eps * (abs(t1) + abs(t2) + 1);
    const big_float value = exp(-z / 2) * pow(z, big_float(0.5 + mu)) * bracket;
    return {value, (abs(t1) + abs(t2)) / denom};
}

inline void validate_whittaker(const WhittakerParams& p, const char* who) {
    const double two_mu = 2.0 * p.mu;
    if (std::fabs(two_mu - std::nearbyint(two_mu)) <= 1e-13)
        throw std::domain_error(std::string(who) +
                                ": 2*mu integer (degenerate logarithmic case)");
    if (!(p.argument > 0.0))
        throw std::domain_error(std::string(who) + ": argument must be > 0");
}

} // namespace detail

// Whittaker W_{kappa,mu}(z), z > 0, 2*mu not an integer.
inline double whittaker_w(const WhittakerParams& p) {
    detail::validate_whittaker(p, "whittaker_w");
    const double z = p.argument;
    const int cap = std::max(default_term_cap(), static_cast<int>(2.0 * z) + 1000);

    const auto ld = detail::whittaker_w_ld(p.kappa, p.mu, z, cap);
    if (std::isfinite(static_cast<double>(ld.value)) && ld.cond < 300.0L)
        return static_cast<double>(ld.value);

    unsigned bits = std::isfinite(static_cast<double>(ld.cond))
                        ? static_cast<unsigned>(std::log2(static_cast<double>(ld.cond))) + 96
                        : static_cast<unsigned>(2.17 * z) + 160;
    bits = std::max(bits, 128u);
    for (; bits <= 65536u; bits *= 2) {
        detail::PrecisionGuard guard(bits);
        const detail::big_float eps = ldexp(detail::big_float(1), -static_cast<int>(bits) + 1);
        const auto mp = detail::whittaker_w_mp(p.kappa, p.mu, detail::big_float(z), cap, eps);
        if (mp.cond * eps < 1e-19) return mp.value.convert_to<double>();
    }
    throw std::overflow_error("whittaker_w: cancellation exceeds precision guard");
}

// Whittaker M_{kappa,mu}(z) = e^{-z/2} z^{1/2+mu} 1F1(1/2+mu-kappa; 1+2mu; z).
inline double whittaker_m(const WhittakerParams& p) {
    detail::validate_whittaker(p, "whittaker_m");
    if (detail::is_nonpositive_integer(1.0 + 2.0 * p.mu))
        throw std::domain_error("whittaker_m: 1+2mu must not be a non-positive integer");
    const long double z = p.argument;
    const int cap = std::max(default_term_cap(), static_cast<int>(2.0 * p.argument) + 1000);
    const long double mu_l = p.mu, ka_l = p.kappa;
    const auto f = detail::pfq_sum<long double>({0.5L + mu_l - ka_l}, {1.0L + 2.0L * mu_l},
                                                z, 0.0, cap, detail::kEpsLd);
    return static_cast<double>(std::exp(-z / 2) * std::pow(z, 0.5L + mu_l) * f.value);
}

namespace detail {

// Maclaurin pair f, g of the Airy equation and their derivatives:
//   f = sum u_k,  u_0 = 1,       u_{k+1} = u_k x^3 / ((3k+2)(3k+3))
//   g = x sum w_k, w_0 = 1,      w_{k+1} = w_k x^3 / ((3k+3)(3k+4))
struct AirySums {
    long double f, g_over_x, fp_times_x, gp;
};

inline AiryPair airy_ld(double x) {
    const long double c1 = rgamma_ld(2.0L / 3.0L) / std::cbrt(9.0L);
    const long double c2 = rgamma_ld(1.0L / 3.0L) / std::cbrt(3.0L);
    const long double xt = x, y = xt * xt * xt;
    long double u = 1.0L, w = 1.0L;
    long double f = u, gx = w, fpx = 0.0L, gp = w;
    for (int k = 0; k < 400; ++k) {
        u *= y / ((3 * k + 2) * (3 * k + 3));
        w *= y / ((3 * k + 3) * (3 * k + 4));
        f += u;
        gx += w;
        fpx += u * (3 * (k + 1));
        gp += w * (3 * (k + 1) + 1);
        if (std::fabs(u) < 1e-26L && std::fabs(w) < 1e-26L && k > 3) break;
    }
    return {static_cast<double>(c1 * f - c2 * xt * gx),
            static_cast<double>(c1 * fpx / xt - c2 * gp)};
}

inline AiryPair airy_mp(double x, unsigned bits) {
    PrecisionGuard guard(bits);
    const big_float tiny = ldexp(big_float(1), -static_cast<int>(bits) - 16);
    const big_float c1 = rgamma_mp(big_float(2) / 3) / cbrt(big_float(9));
    const big_float c2 = rgamma_mp(big_float(1) / 3) / cbrt(big_float(3));
    const big_float xt(x), y = xt * xt * xt;
    big_float u(1), w(1);
    big_float f = u, gx = w, fpx(0), gp = w;
    for (int k = 0; k < 4000; ++k) {
        u *= y / ((3 * k + 2) * (3 * k + 3));
        w *= y / ((3 * k + 3) * (3 * k + 4));
        f += u;
        gx += w;
        fpx += u * (3 * (k + 1));
        gp += w * (3 * (k + 1) + 1);
        if (abs(u) < tiny && abs(w) < tiny && k > 3) break;
    }
    const big_float ai = c1 * f - c2 * xt * gx;
    const big_float aip = c1 * fpx / xt - c2 * gp;
    return {ai.convert_to<double>(), aip.convert_to<double>()};
}

} // namespace detail

// Airy Ai and Ai', validated for |x| <= 8. The Maclaurin pair cancels like
// e^{(4/3)x^{3/2}}; larger arguments run at escalated precision.
inline AiryPair airy(double x) {
    if (!std::isfinite(x)) throw std::domain_error("airy: argument must be finite");
    if (std::fabs(x) < 1e-4) {
        const double c1 = rgamma(2.0 / 3.0) / std::cbrt(9.0);
        const double c2 = rgamma(1.0 / 3.0) / std::cbrt(3.0);
        return {c1 - c2 * x + c1 * x * x * x / 6.0,
                -c2 + c1 * x * x / 2.0 - c2 * x * x * x / 6.0};
    }
    if (std::fabs(x) <= 4.5) return detail::airy_ld(x);
    const double zeta = 2.0 / 3.0 * std::pow(std::fabs(x), 1.5);
    return detail::airy_mp(x, std::max(192u, static_cast<unsigned>(2.9 * zeta) + 96));
}

namespace detail {

// Ascending series of J_nu (sign -1) or I_nu (sign +1).
inline long double bessel_series_ld(double nu, long double x, int sign,
                                    long double* cond_out) {
    CompensatedSum<long double> acc;
    const long double x2 = x * x / 4;
    long double term = std::pow(x / 2, static_cast<long double>(nu)) * rgamma_ld(nu + 1.0L);
    acc.add(term);
    for (int k = 0; k < 2000; ++k) {
        term *= sign * x2 / ((k + 1) * (nu + k + 1.0L));
        acc.add(term);
        if (std::fabs(term) < kEpsLd * std::fabs(acc.value()) && k > 2) break;
    }
    if (cond_out)
        *cond_out = acc.abs_sum / std::fmax(std::fabs(acc.value()), LDBL_TRUE_MIN);
    return acc.value();
}

inline big_float bessel_series_mp(const big_float& nu, const big_float& x, int sign,
                                  const big_float& eps) {
    big_float acc(0), x2 = x * x / 4;
    big_float term = pow(x / 2, nu) * rgamma_mp(nu + 1);
    acc += term;
    for (int k = 0; k < 20000; ++k) {
        term *= sign * x2 / ((k + 1) * (nu + (k + 1)));
        acc += term;
        if (abs(term) < eps * abs(acc) && k > 2) break;
    }
    return acc;
}

inline void check_bessel_order(double order, const char* who) {
    const double a = std::fabs(order);
    if (std::fabs(a - 1.0 / 3.0) > 1e-12 && std::fabs(a - 2.0 / 3.0) > 1e-12)
        throw std::domain_error(std::string(who) + ": order must be one of +-1/3, +-2/3");
}

} // namespace detail

// Bessel J of order +-1/3, +-2/3 for x >= 0.
inline double bessel_j(double order, double x) {
    detail::check_bessel_order(order, "bessel_j");
    if (!(x >= 0.0)) throw std::domain_error("bessel_j: requires x >= 0");
    if (x == 0.0) return order > 0 ? 0.0 : std::numeric_limits<double>::infinity();
    long double cond = 0.0L;
    const long double v = detail::bessel_series_ld(order, x, -1, &cond);
    if (cond < 1e6L) return static_cast<double>(v);
    detail::PrecisionGuard guard(192);
    const detail::big_float eps = ldexp(detail::big_float(1), -191);
    return detail::bessel_series_mp(detail::big_float(order), detail::big_float(x), -1, eps)
        .convert_to<double>();
}

// Modified Bessel K of order +-1/3, +-2/3 for x > 0, via
// K_nu = pi (I_{-nu} - I_nu) / (2 sin nu pi).
inline double bessel_k(double order, double x) {
    detail::check_bessel_order(order, "bessel_k");
    if (!(x > 0.0)) throw std::domain_error("bessel_k: requires x > 0");
    const double nu = std::fabs(order);   // K is even in its order
    if (x <= 6.0) {
        const long double im = detail::bessel_series_ld(-nu, x, +1, nullptr);
        const long double ip = detail::bessel_series_ld(nu, x, +1, nullptr);
        return static_cast<double>(kPiL * (im - ip) /
                                   (2.0L * detail::sin_pi(static_cast<long double>(nu))));
    }
    // I_{-nu} and I_nu agree to ~e^{2x}; the difference needs escalation.
    const unsigned bits = std::max(160u, static_cast<unsigned>(2.9 * x) + 96);
    detail::PrecisionGuard guard(bits);
    const detail::big_float eps = ldexp(detail::big_float(1), -static_cast<int>(bits) + 1);
    const detail::big_float bx(x), bnu(nu);
    const detail::big_float im = detail::bessel_series_mp(-bnu, bx, +1, eps);
    const detail::big_float ip = detail::bessel_series_mp(bnu, bx, +1, eps);
    const detail::big_float pi_b = detail::pi_mp();
    return (pi_b * (im - ip) / (2 * sin(pi_b * bnu))).convert_to<double>();
}

inline double erf(double x) {
    if (!std::isfinite(x)) throw std::domain_error("erf: argument must be finite");
    return std::erf(x);
}

inline double erfc(double x) {
    if (!std::isfinite(x)) throw std::domain_error("erfc: argument must be finite");
    return std::erfc(x);
}

} // namespace wright

#endif
