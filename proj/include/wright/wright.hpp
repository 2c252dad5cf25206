// Wright function W_{lambda,mu}(z) = sum_n z^n / (n! Gamma(lambda n + mu))
// and the auxiliary kernels F_nu, M_nu of the second kind (lambda = -nu).
//
// For lambda < 0 and z < 0 the series alternates with unbounded condition
// number (peak term over sum reaches e^{2X}, X = 4x^3/27 at nu = 2/3), so a
// compensated long-double pass runs first and an MPFR pass at a precision
// sized from the observed term peak takes over whenever the long-double
// rounding bound misses the requested tolerance. For rational lambda = -p/q
// the MPFR pass generates terms by exact integer-shift gamma recurrences on
// the q residue classes; otherwise it falls back to per-term gamma calls.
#ifndef WRIGHT_WRIGHT_HPP
#define WRIGHT_WRIGHT_HPP

#include <cfloat>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "wright/common.hpp"
#include "wright/gamma.hpp"
#include "wright/multiprec.hpp"

namespace wright {

struct WrightParams {
    double lambda = 0.0;   // > -1
    double mu = 0.0;

    bool second_kind() const { return lambda < 0.0; }
    double nu() const { return -lambda; }
};

namespace detail {

struct Pass1Result {
    bool converged = false;
    bool overflowed = false;        // terms exceeded long-double range
    long double value = 0.0L;
    long double round_err = 0.0L;   // absolute rounding/cancellation bound
    long double trunc_err = 0.0L;   // tail bound from the stopping rule
    long double abs_sum = 0.0L;
    long double log_peak = -1e30L;  // natural log of the largest |term|
    int terms = 0;
};

// Long-double pass: per-term signed-log evaluation with Neumaier summation.
// If a term exceeds the long-double range the pass degrades to a log-space
// scan that only locates the peak (for precision sizing of the MPFR pass).
inline Pass1Result wright_pass1(double lambda, double mu, double z, double rel_tol,
                                int cap) {
    Pass1Result r;
    const long double lz = std::log(std::fabs(static_cast<long double>(z)));
    const bool z_neg = z < 0;
    CompensatedSum<long double> acc;
    long double err_terms = 0.0L;
    long double lfact = 0.0L;       // log n!
    long double peak = 0.0L;
    long double last3[3] = {0.0L, 0.0L, 0.0L};
    int small_streak = 0;
    bool past_peak = false;

    for (int n = 0; n < cap; ++n) {
        if (n > 0) lfact += std::log(static_cast<long double>(n));
        const long double a = static_cast<long double>(lambda) * n + mu;
        const auto sl = rgamma_signed_log(a);
        const long double L = sl.sign != 0 ? n * lz - lfact + sl.log_abs : -1e30L;
        if (L > r.log_peak) r.log_peak = L;
        r.terms = n + 1;
        if (L > 11000.0L) r.overflowed = true;
        if (r.overflowed) {
            // scan mode: stop once terms have decayed far below the peak
            if (sl.sign != 0 && L < r.log_peak - 300.0L && n > 16) break;
            continue;
        }
        long double t = 0.0L;
        if (sl.sign != 0) {
            t = sl.sign * std::exp(L);
            if (z_neg && (n & 1)) t = -t;
            err_terms += std::fabs(t) *
                         (std::fabs(n * lz) + lfact + std::fabs(sl.log_abs) + 4.0L);
        }
        acc.add(t);
        const long double at = std::fabs(t);
        last3[n % 3] = at;
        if (at > peak) {
            peak = at;
            past_peak = false;
        } else if (at < peak) {
            past_peak = true;
        }
        if (past_peak && at < rel_tol * std::fabs(acc.value())) {
            if (++small_streak >= 3) {
                r.converged = true;
                break;
            }
        } else {
            small_streak = 0;
        }
    }
    if (!r.overflowed) {
        // every gamma argument at a pole (e.g. lambda = 0 with mu a
        // non-positive integer): the function is identically zero
        if (!r.converged && acc.abs_sum == 0.0L) r.converged = true;
        r.value = acc.value();
        r.abs_sum = acc.abs_sum;
        r.round_err = err_terms * kEpsLd;
        r.trunc_err = 2.0L * (last3[0] + last3[1] + last3[2]);
    }
    return r;
}

struct MpResult {
    bool ok = false;
    double value = 0.0;
    double err = 0.0;
    int terms = 0;
};

struct RationalMatch {
    bool found = false;
    long long p = 0, q = 1;
};

// Rationalization of a double with small denominator, within the same 1e-13
// tolerance that declares gamma poles. On the positive axis dW/dlambda and
// dW/dmu are peak-sized, not function-sized, so identities against
// exact-rational closed forms only hold at 1e-8 when the escalated series
// runs at the exact rational parameters, not at their double roundings
// (which also differ between, say, 2.0/3.0 and 1.0 - 1.0/3.0).
inline RationalMatch detect_rational(double v) {
    const double a = std::fabs(v);
    for (long long q = 1; q <= 128; ++q) {
        const double pn = a * static_cast<double>(q);
        if (pn > 9e15) break;
        const long long p = std::llround(pn);
        if (p < 0) continue;
        if (p > 0 && std::gcd(p, q) != 1) continue;
        if (std::fabs(static_cast<double>(p) / static_cast<double>(q) - a) <= 1e-13)
            return {true, v < 0 ? -p : p, q};
    }
    return {false, 0, 1};
}

inline big_float factorial_mp(long long n) {
    big_float f(1);
    for (long long i = 2; i <= n; ++i) f *= i;
    return f;
}

// MPFR pass at `bits` of working precision.
inline MpResult wright_mp(double lambda, double mu, double z, double rel_tol, int cap,
                          unsigned bits) {
    PrecisionGuard guard(bits);
    const big_float eps = ldexp(big_float(1), -static_cast<int>(bits) + 1);
    const big_float bz(z);
    const auto rat = detect_rational(lambda);
    const auto rat_mu = detect_rational(mu);
    const bool stream = lambda < 0.0 && rat.found;
    const big_float bmu = rat_mu.found ? big_float(rat_mu.p) / rat_mu.q : big_float(mu);

    const long long q = stream ? rat.q : 1;
    const long long p = stream ? -rat.p : 0;
    std::vector<int> kind;                  // 0 pole class, 1 integer class, 2 generic
    std::vector<long long> cint;
    std::vector<big_float> G, sinc, cval, rfact;
    big_float pi_b = pi_mp();
    if (stream) {
        kind.resize(q);
        cint.resize(q);
        G.resize(q);
        sinc.resize(q);
        cval.resize(q);
        rfact.resize(q);
        for (long long j = 0; j < q; ++j) {
            cval[j] = bmu - big_float(p) * j / q;
            const double cd = cval[j].convert_to<double>();
            if (std::fabs(cd - std::nearbyint(cd)) <= 1e-13) {
                const long long ci = std::llround(cd);
                kind[j] = ci <= 0 ? 0 : 1;
                cint[j] = ci;
                if (kind[j] == 1) rfact[j] = 1 / factorial_mp(ci - 1);   // 1/(c_j - 1)!
            } else {
                kind[j] = 2;
                G[j] = tgamma(1 - cval[j]);
                sinc[j] = sin(pi_b * cval[j]) / pi_b;
            }
        }
    }
    const big_float blambda = rat.found ? big_float(rat.p) / rat.q : big_float(lambda);

    big_float S(0), abs_sum(0), F(1), peak(0);
    big_float last3[3] = {big_float(0), big_float(0), big_float(0)};
    int small_streak = 0;
    bool past_peak = false;
    int terms = 0;
    bool done = false;

    for (int n = 0; n < cap; ++n) {
        big_float t(0);
        if (stream) {
            const long long j = n % q, m = n / q;
            switch (kind[j]) {
                case 0: break;
                case 1: {
                    const long long a = cint[j] - p * m;
                    if (a >= 1) {
                        t = F * rfact[j];
                        // advance 1/(a-1)! to the next m (argument drops by p)
                        for (long long i = a - p; i < a; ++i)
                            if (i >= 1) rfact[j] *= i;
                    }
                    break;
                }
                default:
                    t = F * G[j] * sinc[j];
                    if ((p & 1) && (m & 1)) t = -t;
                    // advance Gamma(1 - c_j + p m) to m+1
                    for (long long i = 0; i < p; ++i) G[j] *= (1 - cval[j] + p * m + i);
                    break;
            }
        } else {
            const big_float a = bmu + blambda * n;
            const double ad = a.convert_to<double>();
            if (!(std::fabs(ad - std::nearbyint(ad)) <= 1e-13 && std::nearbyint(ad) <= 0.0))
                t = F / tgamma(a);
        }
        S += t;
        const big_float at = abs(t);
        abs_sum += at;
        last3[n % 3] = at;
        if (at > peak) {
            peak = at;
            past_peak = false;
        } else if (at < peak) {
            past_peak = true;
        }
        terms = n + 1;
        F *= bz / (n + 1);
        if (past_peak && at < rel_tol * abs(S)) {
            if (++small_streak >= 3) {
                done = true;
                break;
            }
        } else {
            small_streak = 0;
        }
    }
    if (!done) throw convergence_error("wright_series: term cap exceeded");

    // truncation is governed by the stopping rule; the precision check is on
    // the rounding/cancellation part only
    const big_float round_err = abs_sum * eps * 32;
    const big_float err = round_err + 2 * (last3[0] + last3[1] + last3[2]);
    MpResult r;
    r.terms = terms;
    r.ok = round_err <= rel_tol * abs(S) || err < big_float("1e-324");
    const double v = S.convert_to<double>();
    if (std::isinf(v)) throw std::overflow_error("wright_series: result overflows double");
    r.value = v;
    r.err = err.convert_to<double>();
    if (std::isnan(r.err)) r.err = 0.0;
    return r;
}

} // namespace detail

// Series evaluation of W_{lambda,mu}(z), Eq-style stopping: three consecutive
// terms below rel_tol * |sum| once past the term-magnitude peak.
inline EvalResult wright_series(const WrightParams& p, double z, double rel_tol = 1e-12,
                                int term_cap = default_term_cap()) {
    if (!(p.lambda > -1.0))
        throw std::domain_error("wright_series: requires lambda > -1");
    if (!std::isfinite(z) || !std::isfinite(p.mu) || !std::isfinite(p.lambda))
        throw std::domain_error("wright_series: arguments must be finite");
    if (!(rel_tol > 0.0 && rel_tol <= 1e-3))
        throw std::domain_error("wright_series: rel_tol must be in (0, 1e-3]");
    if (term_cap < 8) throw std::domain_error("wright_series: term cap too small");

    if (z == 0.0) return {rgamma(p.mu), 1, 0.0};

    const auto p1 = detail::wright_pass1(p.lambda, p.mu, z, rel_tol, term_cap);
    if (!p1.overflowed && !p1.converged)
        throw convergence_error("wright_series: term cap exceeded");
    if (p1.overflowed && p1.terms >= term_cap)
        throw convergence_error(
            "wright_series: term cap exceeded while terms still grow "
            "(cancellation/overflow guard)");
    if (p1.converged && !p1.overflowed &&
        p1.round_err <= rel_tol * std::fabs(p1.value)) {
        const double v = static_cast<double>(p1.value);
        if (std::isinf(v))
            throw std::overflow_error("wright_series: result overflows double");
        double err = static_cast<double>(p1.round_err + p1.trunc_err) +
                     std::fabs(v) * std::numeric_limits<double>::epsilon();
        return {v, p1.terms, err};
    }

    // Escalate: size the precision from the observed peak (assume full
    // cancellation when the long-double value is untrustworthy).
    double bits_guess;
    const double log_peak = static_cast<double>(p1.log_peak);
    if (!p1.overflowed && p1.converged && p1.round_err < 0.25L * std::fabs(p1.value) &&
        p1.value != 0.0L) {
        bits_guess = 1.4427 * (static_cast<double>(std::log(p1.abs_sum)) -
                               std::log(std::fabs(static_cast<double>(p1.value)))) +
                     1.4427 * std::log(1.0 / rel_tol) + 64.0;
    } else {
        bits_guess = 2.8854 * std::max(log_peak, 0.0) + 1.4427 * std::log(1.0 / rel_tol) +
                     64.0;
    }
    unsigned bits = static_cast<unsigned>(std::max(128.0, bits_guess));
    for (; bits <= 65536u; bits *= 2) {
        const auto mp = detail::wright_mp(p.lambda, p.mu, z, rel_tol, term_cap, bits);
        if (mp.ok) {
            double err = mp.err + std::fabs(mp.value) * std::numeric_limits<double>::epsilon();
            return {mp.value, mp.terms, err};
        }
    }
    throw std::overflow_error(
        "wright_series: cancellation exceeds precision guard (terms not representable)");
}

// Mainardi M_nu(x) = W_{-nu,1-nu}(-x), 0 < nu < 1, x >= 0.
inline EvalResult mainardi_m(double nu, double x, double rel_tol = 1e-12,
                             int term_cap = default_term_cap()) {
    if (!(nu > 0.0 && nu < 1.0)) throw std::domain_error("mainardi_m: requires 0 < nu < 1");
    if (!(x >= 0.0)) throw std::domain_error("mainardi_m: requires x >= 0");
    return wright_series({-nu, 1.0 - nu}, -x, rel_tol, term_cap);
}

// Auxiliary F_nu(x) = W_{-nu,0}(-x) = nu x M_nu(x).
inline EvalResult auxiliary_f(double nu, double x, double rel_tol = 1e-12,
                              int term_cap = default_term_cap()) {
    if (!(nu > 0.0 && nu < 1.0)) throw std::domain_error("auxiliary_f: requires 0 < nu < 1");
    if (!(x >= 0.0)) throw std::domain_error("auxiliary_f: requires x >= 0");
    return wright_series({-nu, 0.0}, -x, rel_tol, term_cap);
}

} // namespace wright

#endif
