#pragma once

#include <mpfr.h>
#include <gmpxx.h>

#include <string>
#include <utility>

namespace hookparity {

// Precision is stated in decimal digits throughout the public API.  The
// conversion to mpfr bits adds guard bits so that composed operations stay
// within the documented 10^(-precision+5) error budget.
inline mpfr_prec_t bits_for_digits(long digits) {
    if (digits < 2) digits = 2;
    return static_cast<mpfr_prec_t>(digits * 3.3219280948873623 + 1) + 64;
}

constexpr long kDefaultPrecision = 50;  // decimal digits

// Arbitrary-precision real number. Thin RAII wrapper around mpfr_t with
// value semantics; binary operations promote to the larger operand precision.
class HPReal {
  public:
    HPReal() : HPReal(0L, bits_for_digits(kDefaultPrecision)) {}
    explicit HPReal(long v, mpfr_prec_t bits = bits_for_digits(kDefaultPrecision)) {
        mpfr_init2(v_, bits);
        mpfr_set_si(v_, v, MPFR_RNDN);
    }
    explicit HPReal(double v, mpfr_prec_t bits = bits_for_digits(kDefaultPrecision)) {
        mpfr_init2(v_, bits);
        mpfr_set_d(v_, v, MPFR_RNDN);
    }
    HPReal(const mpz_class& v, mpfr_prec_t bits) {
        mpfr_init2(v_, bits);
        mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN);
    }
    HPReal(const mpq_class& v, mpfr_prec_t bits) {
        mpfr_init2(v_, bits);
        mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN);
    }

    HPReal(const HPReal& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    HPReal(HPReal&& o) noexcept {
        mpfr_init2(v_, 2);
        mpfr_swap(v_, o.v_);
    }
    HPReal& operator=(const HPReal& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    HPReal& operator=(HPReal&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~HPReal() { mpfr_clear(v_); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }
    mpfr_prec_t bits() const { return mpfr_get_prec(v_); }

    static HPReal pi(mpfr_prec_t bits) {
        HPReal r(0L, bits);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }

    // nearest integer
    mpz_class round_to_mpz() const {
        mpz_class z;
        mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
        return z;
    }

    std::string str_fixed(int decimals) const {
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*Rf", decimals, v_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }
    std::string str_sig(int digits) const {
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*Rg", digits, v_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

    HPReal& operator+=(const HPReal& o) { return binop(o, mpfr_add); }
    HPReal& operator-=(const HPReal& o) { return binop(o, mpfr_sub); }
    HPReal& operator*=(const HPReal& o) { return binop(o, mpfr_mul); }
    HPReal& operator/=(const HPReal& o) { return binop(o, mpfr_div); }

    friend HPReal operator+(HPReal a, const HPReal& b) { return a += b; }
    friend HPReal operator-(HPReal a, const HPReal& b) { return a -= b; }
    friend HPReal operator*(HPReal a, const HPReal& b) { return a *= b; }
    friend HPReal operator/(HPReal a, const HPReal& b) { return a /= b; }
    friend HPReal operator-(const HPReal& a) {
        HPReal r(0L, a.bits());
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

    friend bool operator<(const HPReal& a, const HPReal& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const HPReal& a, const HPReal& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const HPReal& a, const HPReal& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const HPReal& a, const HPReal& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

  private:
    using MpfrBinop = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
    HPReal& binop(const HPReal& o, MpfrBinop op) {
        if (mpfr_get_prec(v_) < mpfr_get_prec(o.v_)) {
            HPReal tmp(0L, mpfr_get_prec(o.v_));
            op(tmp.v_, v_, o.v_, MPFR_RNDN);
            *this = std::move(tmp);
        } else {
            op(v_, v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    mpfr_t v_;
};

inline HPReal unary(const HPReal& x, int (*fn)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)) {
    HPReal r(0L, x.bits());
    fn(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

inline HPReal sqrt(const HPReal& x) { return unary(x, mpfr_sqrt); }
inline HPReal exp(const HPReal& x) { return unary(x, mpfr_exp); }
inline HPReal log(const HPReal& x) { return unary(x, mpfr_log); }
inline HPReal cosh(const HPReal& x) { return unary(x, mpfr_cosh); }
inline HPReal sinh(const HPReal& x) { return unary(x, mpfr_sinh); }
inline HPReal abs(const HPReal& x) { return unary(x, mpfr_abs); }

inline HPReal pow(const HPReal& x, const HPReal& y) {
    HPReal r(0L, std::max(x.bits(), y.bits()));
    mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return r;
}
inline HPReal pow_si(const HPReal& x, long e) {
    HPReal r(0L, x.bits());
    mpfr_pow_si(r.raw(), x.raw(), e, MPFR_RNDN);
    return r;
}
// x^(3/4), the radial weight of the circle-method terms (x >= 0)
inline HPReal pow34(const HPReal& x) {
    HPReal r(0L, x.bits());
    mpfr_rootn_ui(r.raw(), x.raw(), 4, MPFR_RNDN);
    mpfr_pow_ui(r.raw(), r.raw(), 3, MPFR_RNDN);
    return r;
}

// Complex value built from a pair of HPReal.
struct HPComplex {
    HPReal re, im;

    HPComplex() = default;
    explicit HPComplex(HPReal r) : re(std::move(r)), im(0L, re.bits()) {}
    HPComplex(HPReal r, HPReal i) : re(std::move(r)), im(std::move(i)) {}
    explicit HPComplex(long r, mpfr_prec_t bits = bits_for_digits(kDefaultPrecision))
        : re(r, bits), im(0L, bits) {}

    HPComplex& operator+=(const HPComplex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    HPComplex& operator-=(const HPComplex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    HPComplex& operator*=(const HPComplex& o) {
        HPReal r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    friend HPComplex operator+(HPComplex a, const HPComplex& b) { return a += b; }
    friend HPComplex operator-(HPComplex a, const HPComplex& b) { return a -= b; }
    friend HPComplex operator*(HPComplex a, const HPComplex& b) { return a *= b; }
    friend HPComplex operator*(const HPReal& s, HPComplex a) {
        a.re *= s;
        a.im *= s;
        return a;
    }
    friend HPComplex operator/(const HPComplex& a, const HPComplex& b) {
        HPReal n = b.re * b.re + b.im * b.im;
        return HPComplex((a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n);
    }
    friend HPComplex operator-(const HPComplex& a) { return HPComplex(-a.re, -a.im); }

    HPComplex conj() const { return HPComplex(re, -im); }
    HPReal abs() const { return hookparity::sqrt(re * re + im * im); }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

inline HPComplex exp(const HPComplex& z) {
    HPReal m = exp(z.re);
    HPReal c(0L, z.im.bits()), s(0L, z.im.bits());
    mpfr_sin_cos(s.raw(), c.raw(), z.im.raw(), MPFR_RNDN);
    return HPComplex(m * c, m * s);
}

inline HPComplex pow_si(HPComplex base, long e) {
    bool inv = e < 0;
    if (inv) e = -e;
    HPComplex r(1, base.re.bits());
    while (e) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return inv ? HPComplex(HPReal(1L, r.re.bits())) / r : r;
}

}  // namespace hookparity
