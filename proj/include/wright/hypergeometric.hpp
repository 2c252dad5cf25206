// Generalized hypergeometric series pFq by compensated forward summation,
// plus the Kummer transformation for 1F1.
#ifndef WRIGHT_HYPERGEOMETRIC_HPP
#define WRIGHT_HYPERGEOMETRIC_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

#include "wright/common.hpp"
#include "wright/gamma.hpp"

namespace wright {

struct PfqSpec {
    std::vector<double> upper;   // a_1 ... a_p
    std::vector<double> lower;   // b_1 ... b_q
    double argument = 0.0;
};

struct KummerTransform {
    double a = 0.0, b = 0.0, z = 0.0;
    double prefactor = 1.0;
};

namespace detail {

template <typename T>
struct SeriesValue {
    T value;
    T abs_err;       // rounding + truncation bound
    int terms;
};

// Forward summation of pFq with term-ratio recurrences. Parameters are taken
// in the working type T: deriving them through double would break the mutual
// consistency that the ill-conditioned Whittaker combinations rely on. `eps`
// is the unit roundoff of T, used for the cancellation bound. Stops after
// three consecutive terms below rel_tol * |sum|; rel_tol = 0 sums down to
// working precision (callers whose outer combination cancels need that).
template <typename T>
SeriesValue<T> pfq_sum(const std::vector<T>& upper, const std::vector<T>& lower,
                       const T& z, double rel_tol, int term_cap, const T& eps) {
    using std::fabs;
    CompensatedSum<T> acc;
    T term(1);
    acc.add(term);
    int small_streak = 0;
    T last_mag[3] = {T(0), T(0), T(0)};
    const T thr = rel_tol > 0.0 ? T(rel_tol) : eps * T(4);
    for (int k = 0; k < term_cap; ++k) {
        T ratio = z / T(k + 1);
        for (const T& a : upper) ratio *= (a + T(k));
        for (const T& b : lower) ratio /= (b + T(k));
        term *= ratio;
        acc.add(term);
        last_mag[k % 3] = fabs(term);
        if (fabs(term) < thr * fabs(acc.value())) {
            if (++small_streak >= 3) {
                const T trunc = T(2) * (last_mag[0] + last_mag[1] + last_mag[2]);
                return {acc.value(), trunc + acc.abs_sum * eps * T(4), k + 2};
            }
        } else {
            small_streak = 0;
        }
    }
    throw convergence_error("pfq: term cap exceeded");
}

inline void validate_pfq(const std::vector<double>& upper, const std::vector<double>& lower,
                         double z) {
    for (double b : lower)
        if (is_nonpositive_integer(b))
            throw std::domain_error("pfq: lower parameter is a non-positive integer");
    if (upper.size() > lower.size() + 1)
        throw std::domain_error("pfq: requires p <= q+1");
    if (upper.size() == lower.size() + 1 && std::fabs(z) >= 1.0)
        throw std::domain_error("pfq: p = q+1 series restricted to |z| < 1");
}

} // namespace detail

// 1F1(a;b;z) = e^z 1F1(b-a;b;-z).
inline KummerTransform kummer_transform(double a, double b, double z) {
    if (detail::is_nonpositive_integer(b))
        throw std::domain_error("kummer_transform: b must not be a non-positive integer");
    return {b - a, b, -z, std::exp(z)};
}

inline EvalResult pfq(const PfqSpec& spec, double rel_tol = 1e-12,
                      int term_cap = default_term_cap()) {
    if (!(rel_tol > 0.0 && rel_tol <= 1e-3))
        throw std::domain_error("pfq: rel_tol must be in (0, 1e-3]");
    detail::validate_pfq(spec.upper, spec.lower, spec.argument);
    constexpr long double eps_ld = 1.0842021724855044340e-19L;

    // Negative-argument 1F1 alternates; route through Kummer to a same-sign
    // series.
    if (spec.upper.size() == 1 && spec.lower.size() == 1 && spec.argument < 0.0) {
        const auto kt = kummer_transform(spec.upper[0], spec.lower[0], spec.argument);
        const auto r = detail::pfq_sum<long double>(
            {static_cast<long double>(kt.a)}, {static_cast<long double>(kt.b)},
            static_cast<long double>(kt.z), rel_tol, term_cap, eps_ld);
        const long double pre = std::exp(static_cast<long double>(spec.argument));
        return {static_cast<double>(pre * r.value), r.terms,
                static_cast<double>(pre * r.abs_err)};
    }
    std::vector<long double> up(spec.upper.begin(), spec.upper.end());
    std::vector<long double> lo(spec.lower.begin(), spec.lower.end());
    const auto r = detail::pfq_sum<long double>(up, lo,
                                                static_cast<long double>(spec.argument),
                                                rel_tol, term_cap, eps_ld);
    return {static_cast<double>(r.value), r.terms, static_cast<double>(r.abs_err)};
}

} // namespace wright

#endif
