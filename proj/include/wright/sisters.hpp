// The "four sisters" kernels t^{mu-1} W_{-nu,mu}(-x/t^nu) for
// mu in {0, 1-nu, nu, 1}, and the erfc/Gaussian closed forms of the three
// sisters at nu = 1/2.
#ifndef WRIGHT_SISTERS_HPP
#define WRIGHT_SISTERS_HPP

#include <cmath>
#include <stdexcept>

#include "wright/classical.hpp"
#include "wright/common.hpp"
#include "wright/wright.hpp"

namespace wright {

enum class SisterRole { mu_zero, mu_one_minus_nu, mu_nu, mu_one };

struct SisterSpec {
    double nu = 0.5;
    SisterRole role = SisterRole::mu_one;
};

inline double sister_mu(const SisterSpec& s) {
    switch (s.role) {
        case SisterRole::mu_zero: return 0.0;
        case SisterRole::mu_one_minus_nu: return 1.0 - s.nu;
        case SisterRole::mu_nu: return s.nu;
        case SisterRole::mu_one: return 1.0;
    }
    throw std::logic_error("sister_mu: bad role");
}

inline double sister(const SisterSpec& s, double x, double t, double rel_tol = 1e-12,
                     int term_cap = default_term_cap()) {
    if (!(s.nu > 0.0 && s.nu < 1.0)) throw std::domain_error("sister: requires 0 < nu < 1");
    if (!(x > 0.0)) throw std::domain_error("sister: requires x > 0");
    if (!(t > 0.0)) throw std::domain_error("sister: requires t > 0");
    const double mu = sister_mu(s);
    const double w = wright_series({-s.nu, mu}, -x / std::pow(t, s.nu), rel_tol, term_cap).value;
    return std::pow(t, mu - 1.0) * w;
}

enum class ThreeSister { phi, psi, chi };

// Fundamental-solution kernels of the classical diffusion equation.
inline double three_sisters_closed(ThreeSister which, double x, double t) {
    if (!(x > 0.0)) throw std::domain_error("three_sisters_closed: requires x > 0");
    if (!(t > 0.0)) throw std::domain_error("three_sisters_closed: requires t > 0");
    switch (which) {
        case ThreeSister::phi: return erfc(x / (2.0 * std::sqrt(t)));
        case ThreeSister::psi:
            return x / (2.0 * kSqrtPi) * std::pow(t, -1.5) * std::exp(-x * x / (4.0 * t));
        case ThreeSister::chi:
            return 1.0 / (kSqrtPi * std::sqrt(t)) * std::exp(-x * x / (4.0 * t));
    }
    throw std::logic_error("three_sisters_closed: bad selector");
}

} // namespace wright

#endif
