// Shared scalar utilities: evaluation results, compensated accumulation,
// argument-reduced sin(pi x), pole detection.
#ifndef WRIGHT_COMMON_HPP
#define WRIGHT_COMMON_HPP

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>

namespace wright {

// Value of a truncated series together with the work done and a bound on the
// numerical error (truncation + rounding/cancellation), absolute.
struct EvalResult {
    double value = 0.0;
    int terms_used = 0;
    double err_estimate = 0.0;
};

// Series did not meet its stopping rule within the term cap.
class convergence_error : public std::runtime_error {
  public:
    explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr long double kPiL = 3.14159265358979323846264338327950288420L;
constexpr double kSqrtPi = 1.772453850905516027298167483341145183;

// Series term caps. WRIGHT_TERM_CAP in the environment overrides the default.
inline int default_term_cap() {
    static const int cap = [] {
        if (const char* env = std::getenv("WRIGHT_TERM_CAP")) {
            const long v = std::strtol(env, nullptr, 10);
            if (v > 0 && v < 100000000L) return static_cast<int>(v);
        }
        return 10000;
    }();
    return cap;
}

namespace detail {

// unit roundoff of x86 long double
constexpr long double kEpsLd = 1.0842021724855044340e-19L;

// Neumaier-compensated accumulator. Also tracks the running sum of |x| needed
// for cancellation error bounds.
template <typename T>
struct CompensatedSum {
    T sum = T(0);
    T comp = T(0);
    T abs_sum = T(0);

    void add(const T& x) {
        using std::fabs;
        const T t = sum + x;
        if (fabs(sum) >= fabs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
        abs_sum += fabs(x);
    }
    T value() const { return sum + comp; }
};

inline bool is_nonpositive_integer(double x, double tol = 1e-13) {
    const double r = std::nearbyint(x);
    return r <= 0.0 && std::fabs(x - r) <= tol;
}

// sin(pi x) with the argument reduced on the integer lattice, so accuracy is
// uniform in |x| (plain sinl(pi*x) loses digits once pi*x is rounded).
inline long double sin_pi(long double x) {
    long double r = std::fmod(x, 2.0L);           // r in (-2, 2), exact
    if (r > 1.0L) r -= 2.0L;
    else if (r < -1.0L) r += 2.0L;                // r in [-1, 1]
    if (r > 0.5L) r = 1.0L - r;
    else if (r < -0.5L) r = -1.0L - r;            // r in [-1/2, 1/2]
    return std::sin(kPiL * r);
}

inline long double cos_pi(long double x) { return sin_pi(x + 0.5L); }

} // namespace detail
} // namespace wright

#endif
