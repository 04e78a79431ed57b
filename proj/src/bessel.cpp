#include "hookparity/bessel.hpp"

#include <stdexcept>

namespace hookparity {

namespace {

// ascending series: sum_m (z/2)^{3/2 + 2m} / (m! * Gamma(m + 5/2))
HPReal bessel_series(const HPReal& z, mpfr_prec_t bits) {
    const HPReal half_z = z / HPReal(2L, bits);
    const HPReal x2 = half_z * half_z;
    const HPReal pi = HPReal::pi(bits);
    // Gamma(5/2) = 3 sqrt(pi) / 4
    HPReal gamma = HPReal(3L, bits) * sqrt(pi) / HPReal(4L, bits);
    HPReal factorial(1L, bits);
    HPReal power = pow(half_z, HPReal(mpq_class(3, 2), bits));
    HPReal sum(0L, bits);
    HPReal cutoff = pow_si(HPReal(2L, bits), -(long)bits - 8);
    for (long m = 0;; ++m) {
        const HPReal term = power / (factorial * gamma);
        sum += term;
        if (m > 0 && term < cutoff * sum) break;
        power *= x2;
        factorial *= HPReal(m + 1, bits);
        gamma *= HPReal(2L, bits) * HPReal(m, bits) + HPReal(mpq_class(5, 2), bits);
    }
    return sum;
}

}  // namespace

HPReal bessel_I_3_2(const HPReal& z, long precision) {
    if (z.sign() < 0) throw std::domain_error("bessel_I_3_2: negative argument");
    const mpfr_prec_t bits = bits_for_digits(precision);
    if (z.is_zero()) return HPReal(0L, bits);
    if (z < HPReal(mpq_class(1, 4), bits)) return bessel_series(z, bits);
    // sqrt(2/(pi z)) * (cosh z - sinh z / z)
    const HPReal pi = HPReal::pi(bits);
    HPReal zz(0L, bits);
    mpfr_set(zz.raw(), z.raw(), MPFR_RNDN);
    return sqrt(HPReal(2L, bits) / (pi * zz)) * (cosh(zz) - sinh(zz) / zz);
}

HPReal p_leading_asymptotic(long n, long precision) {
    if (n < 1) throw std::domain_error("p_leading_asymptotic: n must be positive");
    const mpfr_prec_t bits = bits_for_digits(precision);
    const HPReal pi = HPReal::pi(bits);
    const HPReal q(24 * n - 1, bits);
    return HPReal(2L, bits) * pi / pow34(q) * bessel_I_3_2(pi * sqrt(q) / HPReal(6L, bits), precision);
}

}  // namespace hookparity
