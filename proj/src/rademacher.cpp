#include "hookparity/rademacher.hpp"

#include <cmath>
#include <numeric>

#include "hookparity/bessel.hpp"
#include "hookparity/modular.hpp"
#include "hookparity/parallel.hpp"
#include "hookparity/series.hpp"

namespace hookparity {

namespace {

// Case parameters of one series term.  The inner summand for index m is
//   e^{2 pi i P H m / k} c_j(m) rad(m)^{3/4} I_{3/2}((pi/(6k)) sqrt(rad(m)(24n-1)))
// with rad(m) = A - B m as exact rationals, and the term carries the weight
// W * 2 pi / k / (24n-1)^{3/4}.
struct CaseParams {
    mpq_class rad_a;   // A
    mpq_class rad_b;   // B
    int weight_pow2;   // W = 2^{weight_pow2 * t / 2}: +1, -1 or 0
};

CaseParams case_params(const HookCaseContext& ctx) {
    switch (ctx.kcase) {
        case HookCase::K0_ODD:
            // A - Bm = (t - 24m) / (4t)
            return {mpq_class(1, 4), mpq_class(6, ctx.t0), +1};
        case HookCase::K0_TWICE_ODD:
            // A - Bm = (t0 (1+3g^2) - 12m) / t0
            return {mpq_class(1 + 3 * ctx.g * ctx.g), mpq_class(12, ctx.t0), -1};
        case HookCase::K0_DIV4:
            // A - Bm = (t0 - 24m) / t0
            return {mpq_class(1), mpq_class(24, ctx.t0), 0};
    }
    return {};
}

// inner sum over m for one h, as a complex value (the h-phases are applied by
// the caller)
HPComplex inner_m_sum(const HookCaseContext& ctx, long n, long h, long H, long precision,
                      const CaseParams& cp) {
    const mpfr_prec_t bits = bits_for_digits(precision);
    const long U = u_bound(ctx);
    const std::vector<HPComplex> c = compute_c_coeffs(ctx, h, H, precision);
    const long P = ctx.phase_multiplier();
    const HPReal pi = HPReal::pi(bits);
    HPComplex sum(0, bits);
    for (long m = 0; m <= U; ++m) {
        const mpq_class rad = cp.rad_a - cp.rad_b * m;
        if (rad == 0) continue;  // I_{3/2}(0) = 0
        const mpq_class arg2 = rad * (24 * n - 1);
        const HPReal barg = pi / HPReal(6 * ctx.k, bits) * sqrt(HPReal(arg2, bits));
        const HPReal radial = pow34(HPReal(rad, bits)) * bessel_I_3_2(barg, precision);
        const RationalPhase ph(mpz_class(P) * H * m, mpz_class(ctx.k));
        sum += radial * (ph.unit(bits) * c[static_cast<size_t>(m)]);
    }
    return sum;
}

}  // namespace

HPReal term_for_k(long t, long n, long k, long precision) {
    if (t < 2 || n < 1 || k < 1) throw std::domain_error("term_for_k: need t>=2, n>=1, k>=1");
    const mpfr_prec_t bits = bits_for_digits(precision);
    const HookCaseContext ctx = build_context(t, k);
    // the first sum ranges only over gcd(k,2t) = 1
    if (ctx.kcase == HookCase::K0_ODD && std::gcd(k, 2 * t) != 1) return HPReal(0L, bits);
    const CaseParams cp = case_params(ctx);

    // sum h and k-h together (conjugate pair) and keep twice the real part;
    // h = 0 (k = 1) and h = k/2 (k = 2) are self-conjugate
    HPReal hsum(0L, bits);
    for (long h = (k == 1 ? 0 : 1); 2 * h <= k; ++h) {
        if (k > 1 && std::gcd(h, k) != 1) continue;
        const long H = ctx.H_for(h);
        const HPComplex inner = inner_m_sum(ctx, n, h, H, precision, cp);
        const RationalPhase hphase =
            RationalPhase(mpz_class(-n) * h, mpz_class(k)) + w_factor(t, h, k);
        const HPComplex hterm = hphase.unit(bits) * inner;
        hsum += (2 * h == k || h == 0) ? hterm.re : HPReal(2L, bits) * hterm.re;
    }

    const HPReal pi = HPReal::pi(bits);
    HPReal weight(1L, bits);
    if (cp.weight_pow2 != 0)
        weight = pow(HPReal(2L, bits), HPReal(cp.weight_pow2 * t, bits) / HPReal(2L, bits));
    return weight * (HPReal(2L, bits) * pi / HPReal(k, bits)) /
           pow34(HPReal(24 * n - 1, bits)) * hsum;
}

HPReal partial_sum(long t, long n, long d, long precision, long threads) {
    if (d < 1) throw std::domain_error("partial_sum: d must be >= 1");
    const mpfr_prec_t bits = bits_for_digits(precision);
    std::vector<HPReal> terms(static_cast<size_t>(d) + 1, HPReal(0L, bits));
    parallel_for(
        1, d + 1, [&](long k) { terms[static_cast<size_t>(k)] = term_for_k(t, n, k, precision); },
        threads);
    HPReal sum(0L, bits);
    for (long k = 1; k <= d; ++k) sum += terms[static_cast<size_t>(k)];
    return sum;
}

PartialSumTable partial_sum_table(long t, long n, std::span<const long> cutoffs, long precision,
                                  long threads) {
    PartialSumTable table;
    table.t = t;
    table.n = n;
    long dmax = 1;
    for (long d : cutoffs) dmax = std::max(dmax, d);
    const mpfr_prec_t bits = bits_for_digits(precision);
    std::vector<HPReal> terms(static_cast<size_t>(dmax) + 1, HPReal(0L, bits));
    parallel_for(
        1, dmax + 1,
        [&](long k) { terms[static_cast<size_t>(k)] = term_for_k(t, n, k, precision); }, threads);
    std::vector<long> ds(cutoffs.begin(), cutoffs.end());
    std::sort(ds.begin(), ds.end());
    HPReal sum(0L, bits);
    long k = 1;
    for (long d : ds) {
        for (; k <= d; ++k) sum += terms[static_cast<size_t>(k)];
        table.rows.emplace_back(d, sum);
    }
    return table;
}

mpz_class evaluate_exact(long t, long n, std::optional<long> d, long precision, long threads) {
    long cutoff = d.value_or(std::max<long>(64, static_cast<long>(std::ceil(4.0 * std::sqrt(static_cast<double>(n))))));
    const bool adaptive = !d.has_value();
    const mpfr_prec_t bits = bits_for_digits(precision);
    const HPReal margin(mpq_class(1, 4), bits);
    for (int attempt = 0;; ++attempt) {
        const HPReal sum = partial_sum(t, n, cutoff, precision, threads);
        const mpz_class rounded = sum.round_to_mpz();
        if (abs(sum - HPReal(rounded, bits)) < margin) return rounded;
        if (!adaptive || attempt >= 6)
            throw NonConvergedError("evaluate_exact: no convergence at d=" + std::to_string(cutoff) +
                                    " (raise d or precision)");
        cutoff *= 2;
    }
}

namespace {

// F(x) = prod 1/(1 - x^m), truncated so the tail is below the working
// precision; throws when |x| is too close to 1 for that to be feasible.
HPComplex f_product(const HPComplex& x, mpfr_prec_t bits) {
    const double ax = x.abs().to_double();
    if (ax >= 1.0) throw std::domain_error("transformation_check: |x| >= 1");
    const double needed = (static_cast<double>(bits) + 20.0) * 0.6931471805599453;
    const long T = static_cast<long>(needed / -std::log(ax)) + 1;
    if (T > 2000000) throw std::domain_error("transformation_check: |x| too close to 1");
    HPComplex den(1, bits);
    HPComplex xm(1, bits);
    const HPComplex one(1, bits);
    for (long m = 1; m <= T; ++m) {
        xm *= x;
        den *= (one - xm);
    }
    return one / den;
}

// e^{(2 pi i / den)(a + w)} for an integer a and a complex summand w
HPComplex cexp_2pi_over(long den, long a, const HPComplex& w, mpfr_prec_t bits) {
    const HPReal scale = HPReal(2L, bits) * HPReal::pi(bits) / HPReal(den, bits);
    const HPComplex expo(-(scale * w.im), scale * (HPReal(a, bits) + w.re));
    return exp(expo);
}

// i * z
HPComplex imul(const HPComplex& z) { return HPComplex(-z.im, z.re); }

HPComplex complex_sqrt(const HPComplex& z) {
    // principal branch; fine for Re z > 0
    const mpfr_prec_t bits = z.re.bits();
    HPReal r = z.abs();
    HPReal theta(0L, bits);
    mpfr_atan2(theta.raw(), z.im.raw(), z.re.raw(), MPFR_RNDN);
    HPReal half(mpq_class(1, 2), bits);
    HPReal c(0L, bits), s(0L, bits);
    HPReal ht = theta * half;
    mpfr_sin_cos(s.raw(), c.raw(), ht.raw(), MPFR_RNDN);
    HPReal m = sqrt(r);
    return HPComplex(m * c, m * s);
}

}  // namespace

HPReal transformation_check(long t, long h, long k, const HPComplex& z, long precision) {
    if (k < 1 || (k > 1 && std::gcd(h, k) != 1))
        throw std::domain_error("transformation_check: need gcd(h,k)=1");
    if (z.re.sign() <= 0) throw std::domain_error("transformation_check: need Re z > 0");
    const mpfr_prec_t bits = bits_for_digits(precision);
    const HookCaseContext ctx = build_context(t, k);
    const long H = ctx.H_for(h);
    const long g = ctx.g, k0 = ctx.k0, t0 = ctx.t0;

    const HPComplex one(1, bits);

    // left side: direct product evaluation of the eta quotient at x
    const HPComplex x = cexp_2pi_over(k, h, imul(z), bits);
    const HPComplex lhs = f_product(x, bits) * pow_si(f_product(pow_si(x, 2 * t), bits), 3 * t) /
                          (pow_si(f_product(pow_si(x, t), bits), 2 * t) *
                           pow_si(f_product(pow_si(x, 4 * t), bits), t));

    // right side: transformed points e^{(2 pi i/den)(a + i/(c z))}
    auto i_over_cz = [&](long c) { return imul(one / (HPReal(c, bits) * z)); };
    const HPComplex xp = cexp_2pi_over(k, H, i_over_cz(1), bits);
    HPComplex x1p, x2p, x3p;
    HPReal pref_exp_num(0L, bits);  // the 1/z coefficient of the prefactor exponent
    int weight_pow2 = 0;
    switch (ctx.kcase) {
        case HookCase::K0_ODD:
            x1p = cexp_2pi_over(k0, ctx.inv_t0_mod_k0 * H % k0, i_over_cz(t0), bits);
            x2p = cexp_2pi_over(k0, mod_inverse(2 * t0 % k0, k0) * H % k0, i_over_cz(2 * t0), bits);
            x3p = cexp_2pi_over(k0, ctx.inv4_mod_k0 * ctx.inv_t0_mod_k0 % k0 * H % k0,
                                i_over_cz(4 * t0), bits);
            pref_exp_num = HPReal(4 - 3 * g * g, bits) / HPReal(4L, bits);
            weight_pow2 = +1;
            break;
        case HookCase::K0_TWICE_ODD:
            x1p = cexp_2pi_over(k0, ctx.inv_t0_mod_k0 * H % k0, i_over_cz(t0), bits);
            x2p = cexp_2pi_over(k0 / 2, ctx.inv_t0_mod_k0 * H % (k0 / 2), i_over_cz(t0), bits);
            x3p = cexp_2pi_over(k0 / 2,
                                ctx.inv2_mod_k0half * ctx.inv_t0_mod_k0 % (k0 / 2) * H % (k0 / 2),
                                i_over_cz(2 * t0), bits);
            pref_exp_num = HPReal(1 + 3 * g * g, bits);
            weight_pow2 = -1;
            break;
        case HookCase::K0_DIV4:
            x1p = cexp_2pi_over(k0, ctx.inv_t0_mod_k0 * H % k0, i_over_cz(t0), bits);
            x2p = cexp_2pi_over(k0, 2 * ctx.inv_t0_mod_k0 % k0 * H % k0,
                                HPReal(2L, bits) * i_over_cz(t0), bits);
            x3p = cexp_2pi_over(k0, 4 * ctx.inv_t0_mod_k0 % k0 * H % k0,
                                HPReal(4L, bits) * i_over_cz(t0), bits);
            pref_exp_num = HPReal(1L, bits);
            weight_pow2 = 0;
            break;
    }

    const HPReal pi = HPReal::pi(bits);
    const HPComplex exp_arg =
        (pi / HPReal(12 * k, bits)) * (HPComplex(pref_exp_num) / z - z);
    HPComplex factor = complex_sqrt(z) * exp(exp_arg);
    if (weight_pow2 != 0)
        factor = pow(HPReal(2L, bits), HPReal(weight_pow2 * t, bits) / HPReal(2L, bits)) * factor;

    const HPComplex J = f_product(xp, bits) * pow_si(f_product(x2p, bits), 3 * t) /
                        (pow_si(f_product(x1p, bits), 2 * t) * pow_si(f_product(x3p, bits), t));
    const HPComplex rhs = factor * (w_factor(t, h, k).unit(bits) * J);
    return (lhs - rhs).abs() / lhs.abs();
}

}  // namespace hookparity
