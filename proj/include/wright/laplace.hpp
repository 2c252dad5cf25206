// Numerical Laplace inversion of s^{-mu} e^{-x s^nu} on a deformed Bromwich
// contour: the hyperbolic path s(u) = (scale/t)(1 + sin(iu - alpha)), which
// wraps the negative-axis branch cut, crosses the positive real axis once at
// u = 0 and has Re s -> -infinity in both tails. Midpoint quadrature over
// u in [-half_width, half_width]; nodes are summed as conjugate pairs in a
// fixed order. Also exposes the same quadrature applied to e^tau tau^{-z},
// the reciprocal-gamma contour integral, as an end-to-end contour check.
#ifndef WRIGHT_LAPLACE_HPP
#define WRIGHT_LAPLACE_HPP

#include <cmath>
#include <complex>
#include <stdexcept>

#include "wright/common.hpp"

namespace wright {

struct ContourSpec {
    int node_count = 96;
    double scale = 12.0;       // (contour scale) * t at the real-axis crossing
    double angle = 1.0;        // asymptotic-angle parameter, radians
    double half_width = 3.0;   // parameter window |u| <= half_width
};

namespace detail {

inline void validate_contour(const ContourSpec& c) {
    if (c.node_count < 16) throw std::domain_error("contour: node_count must be >= 16");
    if (!(c.scale > 0.0)) throw std::domain_error("contour: scale must be > 0");
    if (!(c.angle > 0.0 && c.angle < kPi / 2))
        throw std::domain_error("contour: angle must lie in (0, pi/2)");
    if (!(c.half_width > 0.0)) throw std::domain_error("contour: half_width must be > 0");
}

// (1/2 pi i) * h * sum_k F(s(u_k)) s'(u_k) with conjugate-pair ordering.
template <typename F>
std::complex<long double> contour_sum(const ContourSpec& c, double t_scale, F&& integrand) {
    using C = std::complex<long double>;
    const long double lam = static_cast<long double>(c.scale) / t_scale;
    const long double alpha = c.angle;
    const long double sa = std::sin(alpha), ca = std::cos(alpha);
    const int n = c.node_count;
    const long double h = 2.0L * c.half_width / n;

    const auto node = [&](long double u) -> C {
        const long double ch = std::cosh(u), sh = std::sinh(u);
        const C s(lam * (1.0L - sa * ch), lam * ca * sh);
        const C ds(-lam * sa * sh, lam * ca * ch);
        return integrand(s) * ds;
    };

    C acc(0.0L, 0.0L);
    if (n & 1) acc += node(0.0L);
    const int pairs = n / 2;
    for (int j = 0; j < pairs; ++j) {
        const long double u = (n & 1) ? (j + 1) * h : (j + 0.5L) * h;
        acc += node(u) + node(-u);   // exact conjugates: imaginary parts cancel
    }
    const C inv_2pii(0.0L, -1.0L / (2.0L * kPiL));
    return acc * h * inv_2pii;
}

inline double take_real_checked(const std::complex<long double>& v, const char* who) {
    const double re = static_cast<double>(v.real());
    const double im = static_cast<double>(v.imag());
    if (!(std::fabs(im) <= 1e-8 * (std::fabs(re) + 1e-30)))
        throw std::runtime_error(std::string(who) +
                                 ": contour symmetry check failed (imaginary residue " +
                                 std::to_string(im) + ")");
    return re;
}

} // namespace detail

// L^{-1}[s^{-mu} e^{-x s^nu}](t) by contour quadrature; independent of the
// series representation it is checked against.
inline double invert(double nu, double mu, double x, double t,
                     const ContourSpec& c = ContourSpec{}) {
    detail::validate_contour(c);
    if (!(nu > 0.0 && nu < 1.0)) throw std::domain_error("invert: requires 0 < nu < 1");
    if (!(mu >= 0.0)) throw std::domain_error("invert: requires mu >= 0");
    if (!(x > 0.0)) throw std::domain_error("invert: requires x > 0");
    if (!(t > 0.0)) throw std::domain_error("invert: requires t > 0");

    using C = std::complex<long double>;
    const long double lt = t, lx = x, lnu = nu, lmu = mu;
    const auto integrand = [&](const C& s) -> C {
        return std::exp(s * lt - lx * std::pow(s, C(lnu))) * std::pow(s, C(-lmu));
    };
    return detail::take_real_checked(detail::contour_sum(c, t, integrand), "invert");
}

// Same quadrature applied to e^tau tau^{-z}: reproduces 1/Gamma(z).
inline double hankel_rgamma(double z, const ContourSpec& c = ContourSpec{}) {
    detail::validate_contour(c);
    if (!std::isfinite(z)) throw std::domain_error("hankel_rgamma: z must be finite");
    using C = std::complex<long double>;
    const long double lz = z;
    const auto integrand = [&](const C& tau) -> C {
        return std::exp(tau) * std::pow(tau, C(-lz));
    };
    return detail::take_real_checked(detail::contour_sum(c, 1.0, integrand),
                                     "hankel_rgamma");
}

} // namespace wright

#endif
