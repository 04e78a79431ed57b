#pragma once

#include <gmpxx.h>

#include "hookparity/hpreal.hpp"

namespace hookparity {

// Exact rational q representing the root of unity e^(2*pi*i*q).
// Normalized so that den > 0, gcd(|num|, den) = 1 and 0 <= num < den;
// all phase bookkeeping stays exact until the final complex exponential.
class RationalPhase {
  public:
    RationalPhase() : q_(0) {}
    RationalPhase(const mpz_class& num, const mpz_class& den) : q_(num, den) { normalize(); }
    RationalPhase(long num, long den) : q_(num, den) { normalize(); }
    explicit RationalPhase(mpq_class q) : q_(std::move(q)) { normalize(); }

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }
    const mpq_class& value() const { return q_; }
    bool is_zero() const { return q_ == 0; }

    RationalPhase& operator+=(const RationalPhase& o) {
        q_ += o.q_;
        normalize();
        return *this;
    }
    friend RationalPhase operator+(RationalPhase a, const RationalPhase& b) { return a += b; }
    RationalPhase operator-() const { return RationalPhase(mpq_class(-q_)); }

    // phase of the m-th power of the represented root of unity
    RationalPhase times(const mpz_class& m) const { return RationalPhase(mpq_class(q_ * m)); }
    RationalPhase times(long m) const { return times(mpz_class(m)); }

    // e^(2*pi*i*q) at the given working precision
    HPComplex unit(mpfr_prec_t bits) const {
        if (is_zero()) return HPComplex(1, bits);
        HPReal theta = HPReal(2L, bits) * HPReal::pi(bits) * HPReal(q_, bits);
        HPReal c(0L, bits), s(0L, bits);
        mpfr_sin_cos(s.raw(), c.raw(), theta.raw(), MPFR_RNDN);
        return HPComplex(std::move(c), std::move(s));
    }

    friend bool operator==(const RationalPhase& a, const RationalPhase& b) { return a.q_ == b.q_; }

  private:
    void normalize() {
        q_.canonicalize();
        mpz_class fl;
        mpz_fdiv_q(fl.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
        if (fl != 0) q_ -= fl;
    }
    mpq_class q_;  // in [0, 1)
};

}  // namespace hookparity
