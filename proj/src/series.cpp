#include "hookparity/series.hpp"

#include <numeric>
#include <stdexcept>

#include "hookparity/partitions.hpp"

namespace hookparity {

void IntSeries::mul_binomial(long j) {
    for (long i = order(); i >= j; --i) c_[static_cast<size_t>(i)] -= c_[static_cast<size_t>(i - j)];
}

void IntSeries::div_binomial(long j) {
    for (long i = j; i <= order(); ++i) c_[static_cast<size_t>(i)] += c_[static_cast<size_t>(i - j)];
}

IntSeries series_mul(const IntSeries& a, const IntSeries& b) {
    if (a.order() != b.order()) throw std::invalid_argument("series_mul: order mismatch");
    const long N = a.order();
    IntSeries out(N);
    for (long i = 0; i <= N; ++i) {
        if (a[i] == 0) continue;
        for (long j = 0; i + j <= N; ++j) {
            if (b[j] == 0) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

IntSeries series_inverse(const IntSeries& a) {
    const long N = a.order();
    if (a[0] != 1 && a[0] != -1)
        throw std::invalid_argument("series_inverse: constant term must be a unit");
    IntSeries out(N);
    out[0] = a[0];  // 1/:+-1 = +-1
    for (long i = 1; i <= N; ++i) {
        mpz_class s = 0;
        for (long j = 1; j <= i; ++j) s += a[j] * out[i - j];
        out[i] = -s * a[0];
    }
    return out;
}

IntSeries eta_factor(long a, long b, long N) {
    if (a < 1) throw std::domain_error("eta_factor: a must be positive");
    IntSeries s = IntSeries::one(N);
    for (long k = 1; a * k <= N; ++k) {
        for (long r = 0; r < (b > 0 ? b : -b); ++r) {
            if (b > 0)
                s.mul_binomial(a * k);
            else
                s.div_binomial(a * k);
        }
    }
    return s;
}

IntSeries expand_G_t(long t, long N) {
    if (t < 2) throw std::domain_error("expand_G_t: t must be >= 2");
    IntSeries s = IntSeries::one(N);
    // (1 - x^{4tk})^t and (1 - x^{tk})^{2t} in the numerator,
    // (1 - x^{2tk})^{3t} and (1 - x^k) in the denominator
    for (long k = 1; 4 * t * k <= N; ++k)
        for (long r = 0; r < t; ++r) s.mul_binomial(4 * t * k);
    for (long k = 1; t * k <= N; ++k)
        for (long r = 0; r < 2 * t; ++r) s.mul_binomial(t * k);
    for (long k = 1; 2 * t * k <= N; ++k)
        for (long r = 0; r < 3 * t; ++r) s.div_binomial(2 * t * k);
    for (long k = 1; k <= N; ++k) s.div_binomial(k);
    return s;
}

ComplexSeries::ComplexSeries(long order, long precision) : precision_(precision) {
    const mpfr_prec_t bits = bits_for_digits(precision);
    c_.assign(static_cast<size_t>(order) + 1, HPComplex(0, bits));
}

ComplexSeries series_mul(const ComplexSeries& a, const ComplexSeries& b) {
    if (a.order() != b.order()) throw std::invalid_argument("series_mul: order mismatch");
    const long N = a.order();
    ComplexSeries out(N, std::max(a.precision(), b.precision()));
    for (long i = 0; i <= N; ++i) {
        if (a[i].is_zero()) continue;
        for (long j = 0; i + j <= N; ++j) {
            if (b[j].is_zero()) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

ComplexSeries series_inverse(const ComplexSeries& a) {
    const long N = a.order();
    if (a[0].is_zero()) throw std::invalid_argument("series_inverse: zero constant term");
    ComplexSeries out(N, a.precision());
    const HPComplex one(1, bits_for_digits(a.precision()));
    out[0] = one / a[0];
    for (long i = 1; i <= N; ++i) {
        HPComplex s(0, bits_for_digits(a.precision()));
        for (long j = 1; j <= i; ++j) s += a[j] * out[i - j];
        out[i] = -(s * out[0]);
    }
    return out;
}

ComplexSeries series_pow(const ComplexSeries& a, long e) {
    if (e < 0) return series_pow(series_inverse(a), -e);
    const long N = a.order();
    ComplexSeries r(N, a.precision());
    r[0] = HPComplex(1, bits_for_digits(a.precision()));
    ComplexSeries base = a;
    while (e) {
        if (e & 1) r = series_mul(r, base);
        e >>= 1;
        if (e) base = series_mul(base, base);
    }
    return r;
}

ComplexSeries F_series_in_y(long step, const RationalPhase& phase, int sign, long order,
                            long precision) {
    if (step < 1) throw std::domain_error("F_series_in_y: step must be positive");
    const mpfr_prec_t bits = bits_for_digits(precision);
    ComplexSeries out(order, precision);
    for (long m = 0; step * m <= order; ++m) {
        HPComplex c = phase.times(m).unit(bits);
        if (sign < 0 && m % 2 == 1) c = -c;
        out[step * m] = HPReal(partition_count(m), bits) * c;
    }
    return out;
}

std::vector<HPComplex> compute_c_coeffs(const HookCaseContext& ctx, long h, long H,
                                        long precision) {
    if (ctx.k > 1) {
        if (std::gcd(h, ctx.k) != 1)
            throw std::invalid_argument("compute_c_coeffs: h not coprime to k");
        if ((h * H + 1) % ctx.k != 0)
            throw std::invalid_argument("compute_c_coeffs: H is not a valid inverse");
    }
    const long U = u_bound(ctx);
    const mpfr_prec_t bits = bits_for_digits(precision);
    std::vector<HPComplex> out;
    out.reserve(static_cast<size_t>(U) + 1);
    if (U == 0) {
        // all four F-factors have constant term 1
        out.emplace_back(1, bits);
        return out;
    }

    const long t = ctx.t, g = ctx.g, t0 = ctx.t0;
    ComplexSeries J(U, precision);
    switch (ctx.kcase) {
        case HookCase::K0_ODD: {
            // x'  = zeta0 * y^{4 t0},  x2' = y^{2g},  x1' = y^{4g},  x3' = y^{g}
            RationalPhase q0(mpz_class(-(mpz_class(4) * t0 * ctx.inv4_mod_k0 * ctx.inv_t0_mod_k0 - 1) * H),
                             mpz_class(ctx.k));
            J = F_series_in_y(4 * t0, q0, +1, U, precision);
            J = series_mul(J, series_pow(F_series_in_y(2 * g, {}, +1, U, precision), 3 * t));
            J = series_mul(J, series_pow(F_series_in_y(4 * g, {}, +1, U, precision), -2 * t));
            J = series_mul(J, series_pow(F_series_in_y(g, {}, +1, U, precision), -t));
            break;
        }
        case HookCase::K0_TWICE_ODD: {
            // x'  = zeta0 * y^{2 t0},  x2' = y^{4g},  x1' = -y^{2g},  x3' = y^{2g}
            RationalPhase q0(
                mpz_class(-(mpz_class(2) * ctx.inv2_mod_k0half * t0 * ctx.inv_t0_mod_k0 - 1) * H),
                mpz_class(ctx.k));
            J = F_series_in_y(2 * t0, q0, +1, U, precision);
            J = series_mul(J, series_pow(F_series_in_y(4 * g, {}, +1, U, precision), 3 * t));
            J = series_mul(J, series_pow(F_series_in_y(2 * g, {}, -1, U, precision), -2 * t));
            J = series_mul(J, series_pow(F_series_in_y(2 * g, {}, +1, U, precision), -t));
            break;
        }
        case HookCase::K0_DIV4: {
            // x'  = zeta0 * y^{t0},  x2' = y^{2g},  x1' = y^{g},  x3' = y^{4g}
            RationalPhase q0(mpz_class(-(mpz_class(t0) * ctx.inv_t0_mod_k0 - 1) * H),
                             mpz_class(ctx.k));
            J = F_series_in_y(t0, q0, +1, U, precision);
            J = series_mul(J, series_pow(F_series_in_y(2 * g, {}, +1, U, precision), 3 * t));
            J = series_mul(J, series_pow(F_series_in_y(g, {}, +1, U, precision), -2 * t));
            J = series_mul(J, series_pow(F_series_in_y(4 * g, {}, +1, U, precision), -t));
            break;
        }
    }
    for (long m = 0; m <= U; ++m) out.push_back(J[m]);
    return out;
}

}  // namespace hookparity
