#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hookparity/hpreal.hpp"

namespace hookparity {

namespace congruence {

// All x in [0, M) with x^2 == a (mod M).  Direct residue scan for M <= 1e6,
// prime-power lifting + CRT above; force_lift pins the lifting path (used by
// the equivalence tests).
std::vector<std::uint64_t> sqrt_mod(const mpz_class& a, std::uint64_t M, bool force_lift = false);

// roots of x^2 == a (mod p^e)
std::vector<std::uint64_t> sqrt_mod_prime_power(std::uint64_t a, std::uint64_t p, unsigned e);

}  // namespace congruence

// Kloosterman-type sum
//   S_k(n) = (1/2) sqrt(k/12) * sum over x (mod 24k), x^2 == -24n+1 (mod 24k)
//            of chi_12(x) e(x /(12k))
// (chi_12 = Kronecker symbol mod 12). The sum is real; the vanishing
// imaginary part is checked and discarded.
HPReal kloosterman_S(long k, long n, long precision = kDefaultPrecision);

// Residual |sum_{h odd, 0<h<2^{s+1}} w(t,h,2^{s+1}) e^{-pi i n h/2^s}
//           - S_{2^{s+1}}(n)|  for t = 2^s * odd.
HPReal lemma32_check(long t, long n, long precision = kDefaultPrecision);

// The single k = 2^{s+1} term that controls sign and size of A_t(n):
//   pi/2^{s+t/2} ((1+3*4^s)/(24n-1))^{3/4}
//     * I_{3/2}(pi sqrt((1+3*4^s)(24n-1))/(6*2^{s+1})) * S_{2^{s+1}}(n)
HPReal dominant_term(long t, long n, long precision = kDefaultPrecision);

// closed form of the same quantity for odd t:
//   (-1)^n pi 2^{(3-t)/2} / (24n-1)^{3/4} * I_{3/2}(pi sqrt(24n-1)/6)
HPReal dominant_term_odd(long t, long n, long precision = kDefaultPrecision);

// Parity distribution statistics delta_t^e(n) = p_t^e(n)/p(n) etc., exact.
struct DeltaValue {
    long t = 0, n = 0;
    mpq_class delta_even;
    mpq_class delta_odd;

    std::string render_even(int digits) const;
    std::string render_odd(int digits) const;
};

DeltaValue delta(long t, long n);
// same, with the series coefficient A_t(n) already in hand
DeltaValue delta_from_coefficient(long t, long n, const mpz_class& a_t_n);

enum class Parity { EVEN, ODD };

// limits of (delta_e, delta_o) as n -> oo through the given parity class
std::pair<mpq_class, mpq_class> limit_delta(long t, Parity n_parity);

// Observed signs of A_t(n) over a window, and the minimal period of the sign
// sequence if one exists.  A zero value is a third symbol and blocks period
// detection.
struct SignPattern {
    long t = 0;
    long s = 0;  // 2-adic valuation of t
    long n_start = 0, n_end = 0;
    std::string signs;         // '+', '-', '0' per n in [n_start, n_end]
    long detected_period = 0;  // 0 = none
    bool has_zero = false;
};

SignPattern sign_pattern(long t, long n_start, long n_end);

// decimal rendering of v in [0,1], round-half-even at `digits` places
std::string render_decimal(const mpq_class& v, int digits);

}  // namespace hookparity
