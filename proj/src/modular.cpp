#include "hookparity/modular.hpp"

#include <numeric>
#include <stdexcept>

namespace hookparity {

mpq_class dedekind_sum_direct(long u, long v) {
    if (v < 1) throw std::domain_error("dedekind_sum: v must be positive");
    auto sawtooth = [](const mpq_class& x) -> mpq_class {
        if (x.get_den() == 1) return 0;
        mpz_class fl;
        mpz_fdiv_q(fl.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
        return x - fl - mpq_class(1, 2);
    };
    mpq_class s = 0;
    for (long m = 1; m <= v; ++m) s += sawtooth(mpq_class(m, v)) * sawtooth(mpq_class(u * m, v));
    return s;
}

mpq_class dedekind_sum(long u, long v) {
    if (v < 1) throw std::domain_error("dedekind_sum: v must be positive");
    u %= v;
    if (u < 0) u += v;
    if (u == 0 || v == 1) return 0;
    const long g = std::gcd(u, v);
    u /= g;
    v /= g;
    // s(u,v) + s(v,u) = -1/4 + (u/v + v/u + 1/(uv))/12
    mpq_class rec = mpq_class(-1, 4) +
                    (mpq_class(u, v) + mpq_class(v, u) + mpq_class(1, u) / v) / 12;
    return rec - dedekind_sum(v % u, u);
}

RationalPhase omega(long u, long v) {
    return RationalPhase(mpq_class(dedekind_sum(u, v) / 2));
}

long mod_inverse(long a, long m) {
    if (m < 1) throw std::domain_error("mod_inverse: modulus must be positive");
    if (m == 1) return 0;
    a %= m;
    if (a < 0) a += m;
    // extended Euclid
    long r0 = m, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        const long q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        s0 -= q * s1;
        std::swap(s0, s1);
    }
    if (r0 != 1) throw std::invalid_argument("mod_inverse: arguments not coprime");
    s0 %= m;
    if (s0 < 0) s0 += m;
    return s0;
}

long HookCaseContext::H_for(long h) const {
    if (k == 1) return 0;
    return (k - mod_inverse(h, k)) % k;
}

long HookCaseContext::phase_multiplier() const {
    switch (kcase) {
        case HookCase::K0_ODD:
            return inv4_mod_k0 * inv_t0_mod_k0;
        case HookCase::K0_TWICE_ODD:
            return inv2_mod_k0half * inv_t0_mod_k0;
        case HookCase::K0_DIV4:
            return inv_t0_mod_k0;
    }
    return 0;
}

HookCaseContext build_context(long t, long k) {
    if (t < 2) throw std::domain_error("build_context: t must be >= 2");
    if (k < 1) throw std::domain_error("build_context: k must be positive");
    HookCaseContext ctx;
    ctx.t = t;
    ctx.k = k;
    ctx.g = std::gcd(k, t);
    ctx.k0 = k / ctx.g;
    ctx.t0 = t / ctx.g;
    if (ctx.k0 % 2 == 1)
        ctx.kcase = HookCase::K0_ODD;
    else if (ctx.k0 % 4 == 2)
        ctx.kcase = HookCase::K0_TWICE_ODD;
    else
        ctx.kcase = HookCase::K0_DIV4;
    ctx.inv_t0_mod_k0 = mod_inverse(ctx.t0, ctx.k0);
    if (ctx.kcase == HookCase::K0_ODD) ctx.inv4_mod_k0 = mod_inverse(4, ctx.k0);
    if (ctx.kcase == HookCase::K0_TWICE_ODD) ctx.inv2_mod_k0half = mod_inverse(2, ctx.k0 / 2);
    return ctx;
}

long u_bound(const HookCaseContext& ctx) {
    switch (ctx.kcase) {
        case HookCase::K0_ODD:
            return ctx.t / 24;
        case HookCase::K0_TWICE_ODD:
            return ctx.t0 * (1 + 3 * ctx.g * ctx.g) / 12;
        case HookCase::K0_DIV4:
            return ctx.t0 / 24;
    }
    return 0;
}

RationalPhase w_factor(long t, long h, long k) {
    const long g = std::gcd(k, t);
    const long k0 = k / g;
    const long t0 = t / g;
    mpq_class ph = dedekind_sum(h, k) / 2;
    ph += mpq_class(3 * t) * dedekind_sum(2 * t0 * h % k0, k0) / 2;
    ph -= mpq_class(2 * t) * dedekind_sum(t0 * h % k0, k0) / 2;
    ph -= mpq_class(t) * dedekind_sum(4 * t0 * h % k0, k0) / 2;
    return RationalPhase(ph);
}

}  // namespace hookparity
