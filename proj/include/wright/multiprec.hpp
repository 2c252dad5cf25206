// Arbitrary-precision escalation layer. The alternating series in this
// library have unbounded condition numbers (peak term / sum can exceed
// 1e100 on valid inputs), so the fast long-double paths hand off to MPFR
// when their rounding-error bound misses the requested tolerance.
#ifndef WRIGHT_MULTIPREC_HPP
#define WRIGHT_MULTIPREC_HPP

#include <boost/multiprecision/mpfr.hpp>

namespace wright {
namespace detail {

using big_float =
    boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                  boost::multiprecision::et_off>;

// Scoped thread-default precision, in bits. big_float variables constructed
// while the guard is alive pick up this precision.
class PrecisionGuard {
  public:
    explicit PrecisionGuard(unsigned bits)
        : saved_(big_float::default_precision()) {
        const unsigned digits10 = static_cast<unsigned>(bits * 0.30103) + 4;
        big_float::default_precision(digits10);
    }
    ~PrecisionGuard() { big_float::default_precision(saved_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

  private:
    unsigned saved_;
};

inline big_float pi_mp() { return 4 * atan(big_float(1)); }

} // namespace detail
} // namespace wright

#endif
