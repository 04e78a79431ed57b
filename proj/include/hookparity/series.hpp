#pragma once

#include <gmpxx.h>

#include <vector>

#include "hookparity/hpreal.hpp"
#include "hookparity/modular.hpp"
#include "hookparity/rational_phase.hpp"

namespace hookparity {

// Truncated power series with exact integer coefficients; index = exponent,
// coefficients above the truncation order do not exist.
class IntSeries {
  public:
    explicit IntSeries(long order) : c_(static_cast<size_t>(order) + 1) {}
    static IntSeries one(long order) {
        IntSeries s(order);
        s[0] = 1;
        return s;
    }

    long order() const { return static_cast<long>(c_.size()) - 1; }
    mpz_class& operator[](long i) { return c_[static_cast<size_t>(i)]; }
    const mpz_class& operator[](long i) const { return c_[static_cast<size_t>(i)]; }

    // in-place multiply by (1 - x^j) / divide by (1 - x^j)
    void mul_binomial(long j);
    void div_binomial(long j);

  private:
    std::vector<mpz_class> c_;
};

IntSeries series_mul(const IntSeries& a, const IntSeries& b);
// requires constant term +-1
IntSeries series_inverse(const IntSeries& a);

// (prod_{k>=1} (1 - x^{a k}))^b truncated at N, b may be negative
IntSeries eta_factor(long a, long b, long N);

// coefficients of G_t(x) = prod (1-x^{4tk})^t (1-x^{tk})^{2t}
//                          / ((1-x^{2tk})^{3t} (1-x^k)),
// i.e. the hook-parity differences A_t(0..N)
IntSeries expand_G_t(long t, long N);

// Truncated power series with high-precision complex coefficients.
class ComplexSeries {
  public:
    ComplexSeries(long order, long precision);

    long order() const { return static_cast<long>(c_.size()) - 1; }
    long precision() const { return precision_; }
    HPComplex& operator[](long i) { return c_[static_cast<size_t>(i)]; }
    const HPComplex& operator[](long i) const { return c_[static_cast<size_t>(i)]; }

  private:
    std::vector<HPComplex> c_;
    long precision_;  // decimal digits
};

ComplexSeries series_mul(const ComplexSeries& a, const ComplexSeries& b);
// requires nonzero constant term
ComplexSeries series_inverse(const ComplexSeries& a);
ComplexSeries series_pow(const ComplexSeries& a, long e);

// F(sign * zeta * y^step) = sum_m p(m) (sign*zeta)^m y^{step*m}, truncated at
// `order`, with zeta = e^(2*pi*i*phase); each needed power of zeta is reduced
// exactly as a rational phase before the single complex exponential.
ComplexSeries F_series_in_y(long step, const RationalPhase& phase, int sign, long order,
                            long precision);

// Coefficients c_j(t,h,k;m) for m = 0..u_bound(ctx): the expansion of
//   J(x') = F(x') F(x2')^{3t} / (F(x1')^{2t} F(x3')^{t})
// in the case variable y_j, where the primed points are exact root-of-unity
// multiples of powers of y_j.  Requires gcd(h,k)=1 and h*H == -1 (mod k).
std::vector<HPComplex> compute_c_coeffs(const HookCaseContext& ctx, long h, long H,
                                        long precision);

}  // namespace hookparity
