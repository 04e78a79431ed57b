#pragma once

#include "hookparity/hpreal.hpp"

namespace hookparity {

// Modified Bessel function I_{3/2}(z) for z >= 0.
//
// Above z = 1/4 the closed form sqrt(2/(pi z)) * (cosh z - sinh z / z) is
// used; below it the ascending series, since the closed form cancels to
// O(z^2) near zero.  I_{3/2}(0) = 0.  Absolute/relative error stays within
// 10^(-precision+5).
HPReal bessel_I_3_2(const HPReal& z, long precision);

// Leading circle-method approximation of the partition function:
//   p(n) ~ 2*pi / (24n-1)^{3/4} * I_{3/2}(pi*sqrt(24n-1)/6)
HPReal p_leading_asymptotic(long n, long precision);

}  // namespace hookparity
