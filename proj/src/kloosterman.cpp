#include "hookparity/kloosterman.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "hookparity/bessel.hpp"
#include "hookparity/modular.hpp"
#include "hookparity/partitions.hpp"
#include "hookparity/rational_phase.hpp"
#include "hookparity/series.hpp"

namespace hookparity {

namespace congruence {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// Tonelli-Shanks, p an odd prime, a a quadratic residue mod p
u64 sqrt_mod_prime(u64 a, u64 p) {
    a %= p;
    if (a == 0) return 0;
    if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
    u64 q = p - 1;
    unsigned s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    u64 z = 2;
    while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
    u64 m = s, c = powmod(z, q, p), t = powmod(a, q, p), r = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
        u64 t2 = t;
        unsigned i = 0;
        while (t2 != 1) {
            t2 = mulmod(t2, t2, p);
            ++i;
        }
        u64 b = powmod(c, u64(1) << (m - i - 1), p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    return r;
}

u64 inv_mod_u64(u64 a, u64 m) {
    long long r0 = static_cast<long long>(m), r1 = static_cast<long long>(a % m);
    long long s0 = 0, s1 = 1;
    while (r1 != 0) {
        long long q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        s0 -= q * s1;
        std::swap(s0, s1);
    }
    s0 %= static_cast<long long>(m);
    if (s0 < 0) s0 += static_cast<long long>(m);
    return static_cast<u64>(s0);
}

// roots of y^2 == u (mod p^e) with p odd prime, p not dividing u
std::vector<u64> unit_roots_odd(u64 u, u64 p, unsigned e, u64 q /* = p^e */) {
    if (powmod(u % p, (p - 1) / 2, p) != 1) return {};
    u64 y = sqrt_mod_prime(u % p, p);
    u64 mod = p;
    while (mod < q) {
        // Hensel step: y <- y - (y^2 - u) / (2y) modulo mod^2 (capped at q)
        u64 next = (q / mod < mod) ? q : mod * mod;
        u64 diff = (u % next + next - mulmod(y, y, next)) % next;
        u64 corr = mulmod(diff, inv_mod_u64(2 * y % next, next), next);
        y = (y + corr) % next;
        mod = next;
    }
    u64 y2 = (q - y) % q;
    if (y == y2) return {y};
    return {std::min(y, y2), std::max(y, y2)};
}

// roots of y^2 == u (mod 2^e) with u odd
std::vector<u64> unit_roots_two(u64 u, unsigned e, u64 q) {
    u %= q;
    if (e == 1) return {1};
    if (e == 2) return (u % 4 == 1) ? std::vector<u64>{1, 3} : std::vector<u64>{};
    if (u % 8 != 1) return {};
    u64 y = 1;
    for (unsigned bit = 3; bit < e; ++bit) {
        u64 mod_next = u64(1) << (bit + 1);
        if ((mulmod(y, y, mod_next) + mod_next - u % mod_next) % mod_next != 0)
            y += u64(1) << (bit - 1);
    }
    u64 half = u64(1) << (e - 1);
    std::vector<u64> out{y % q, (q - y) % q, (y + half) % q, (q - y + half) % q};
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

std::vector<u64> sqrt_mod_prime_power(u64 a, u64 p, unsigned e) {
    u64 q = 1;
    for (unsigned i = 0; i < e; ++i) q *= p;
    a %= q;
    if (a == 0) {
        // x must be divisible by p^ceil(e/2)
        u64 step = 1;
        for (unsigned i = 0; i < (e + 1) / 2; ++i) step *= p;
        std::vector<u64> out;
        for (u64 x = 0; x < q; x += step) out.push_back(x);
        return out;
    }
    unsigned v = 0;
    u64 u = a;
    while (u % p == 0) {
        u /= p;
        ++v;
    }
    if (v % 2 == 1) return {};
    const unsigned m = e - v;
    u64 qm = 1;
    for (unsigned i = 0; i < m; ++i) qm *= p;
    std::vector<u64> ys = (p == 2) ? unit_roots_two(u, m, qm) : unit_roots_odd(u, p, m, qm);
    if (ys.empty()) return {};
    u64 pv2 = 1;
    for (unsigned i = 0; i < v / 2; ++i) pv2 *= p;
    std::vector<u64> out;
    for (u64 y : ys)
        for (u64 j = 0; j < pv2; ++j) out.push_back(pv2 * (y + j * qm) % q);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<u64> sqrt_mod(const mpz_class& a, u64 M, bool force_lift) {
    mpz_class ar = a % mpz_class(static_cast<unsigned long>(M));
    if (ar < 0) ar += static_cast<unsigned long>(M);
    const u64 target = ar.get_ui();
    if (M <= 1000000 && !force_lift) {
        std::vector<u64> out;
        for (u64 x = 0; x < M; ++x)
            if (mulmod(x, x, M) == target) out.push_back(x);
        return out;
    }
    // factor M, solve per prime power, combine by CRT
    std::vector<std::pair<u64, unsigned>> fac;
    u64 rem = M;
    for (u64 p = 2; p * p <= rem; p += (p == 2 ? 1 : 2)) {
        if (rem % p) continue;
        unsigned e = 0;
        while (rem % p == 0) {
            rem /= p;
            ++e;
        }
        fac.emplace_back(p, e);
    }
    if (rem > 1) fac.emplace_back(rem, 1);

    std::vector<u64> xs{0};
    u64 mod = 1;
    for (auto [p, e] : fac) {
        u64 q = 1;
        for (unsigned i = 0; i < e; ++i) q *= p;
        const std::vector<u64> rs = sqrt_mod_prime_power(target % q, p, e);
        if (rs.empty()) return {};
        std::vector<u64> next;
        next.reserve(xs.size() * rs.size());
        const u64 minv = inv_mod_u64(mod % q, q);
        for (u64 x0 : xs)
            for (u64 r : rs) {
                const u64 diff = (r + q - x0 % q) % q;
                next.push_back(x0 + mod * mulmod(diff, minv, q));
            }
        xs = std::move(next);
        mod *= q;
    }
    std::sort(xs.begin(), xs.end());
    return xs;
}

}  // namespace congruence

namespace {

int chi12(std::uint64_t x) {
    switch (x % 12) {
        case 1:
        case 11:
            return 1;
        case 5:
        case 7:
            return -1;
        default:
            return 0;
    }
}

long val2(long t) {
    long s = 0;
    while (t % 2 == 0) {
        t /= 2;
        ++s;
    }
    return s;
}

}  // namespace

HPReal kloosterman_S(long k, long n, long precision) {
    if (k < 1 || n < 1) throw std::domain_error("kloosterman_S: need k>=1, n>=1");
    const mpfr_prec_t bits = bits_for_digits(precision);
    const std::uint64_t M = 24 * static_cast<std::uint64_t>(k);
    const auto xs = congruence::sqrt_mod(mpz_class(1) - mpz_class(24) * n, M);
    HPComplex sum(0, bits);
    for (std::uint64_t x : xs) {
        const int chi = chi12(x);
        if (chi == 0) continue;
        HPComplex term = RationalPhase(static_cast<long>(x), 12 * k).unit(bits);
        sum += (chi > 0) ? term : -term;
    }
    // conjugate solutions x and 24k-x cancel the imaginary part
    if (!(abs(sum.im) < pow_si(HPReal(10L, bits), -precision + 5)))
        throw std::logic_error("kloosterman_S: nonzero imaginary part");
    return HPReal(mpq_class(1, 2), bits) * sqrt(HPReal(mpq_class(k, 12), bits)) * sum.re;
}

HPReal lemma32_check(long t, long n, long precision) {
    if (t < 2) throw std::domain_error("lemma32_check: t must be >= 2");
    const mpfr_prec_t bits = bits_for_digits(precision);
    const long s = val2(t);
    const long k = 1L << (s + 1);
    HPComplex sum(0, bits);
    for (long h = 1; h < k; h += 2) {
        const RationalPhase ph = w_factor(t, h, k) + RationalPhase(mpz_class(-n) * h, mpz_class(k));
        sum += ph.unit(bits);
    }
    const HPComplex diff = sum - HPComplex(kloosterman_S(k, n, precision));
    return diff.abs();
}

HPReal dominant_term(long t, long n, long precision) {
    if (t < 2 || n < 1) throw std::domain_error("dominant_term: need t>=2, n>=1");
    const mpfr_prec_t bits = bits_for_digits(precision);
    const long s = val2(t);
    const HPReal pi = HPReal::pi(bits);
    const mpz_class four_s = mpz_class(1) << (2 * s);
    const mpz_class alpha = 1 + 3 * four_s;  // 1 + 3*4^s
    const mpz_class q24 = mpz_class(24) * n - 1;
    const mpz_class prod = alpha * q24;
    const HPReal ratio(mpq_class(alpha, q24), bits);
    const HPReal barg = pi * sqrt(HPReal(prod, bits)) / HPReal(6 * (1L << (s + 1)), bits);
    const HPReal weight =
        pi / pow(HPReal(2L, bits), HPReal(s, bits) + HPReal(t, bits) / HPReal(2L, bits));
    return weight * pow34(ratio) * bessel_I_3_2(barg, precision) *
           kloosterman_S(1L << (s + 1), n, precision);
}

HPReal dominant_term_odd(long t, long n, long precision) {
    if (t < 2 || t % 2 == 0) throw std::domain_error("dominant_term_odd: t must be odd >= 3");
    const mpfr_prec_t bits = bits_for_digits(precision);
    const HPReal pi = HPReal::pi(bits);
    const HPReal q(24 * n - 1, bits);
    HPReal v = pi * pow(HPReal(2L, bits), HPReal(3 - t, bits) / HPReal(2L, bits)) / pow34(q) *
               bessel_I_3_2(pi * sqrt(q) / HPReal(6L, bits), precision);
    return (n % 2 == 0) ? v : -v;
}

std::string render_decimal(const mpq_class& v, int digits) {
    if (v < 0 || v > 1) throw std::domain_error("render_decimal: value outside [0,1]");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    const mpz_class num = v.get_num() * scale;
    const mpz_class& den = v.get_den();
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    const mpz_class twice = 2 * r;
    if (twice > den || (twice == den && mpz_odd_p(q.get_mpz_t())))
        q += 1;
    std::string frac = q.get_str();
    if (static_cast<int>(frac.size()) < digits)
        frac.insert(frac.begin(), static_cast<size_t>(digits) - frac.size(), '0');
    if (static_cast<int>(frac.size()) > digits) {  // rounded up to 1.000...
        return "1." + std::string(static_cast<size_t>(digits), '0');
    }
    return "0." + frac;
}

std::string DeltaValue::render_even(int digits) const { return render_decimal(delta_even, digits); }
std::string DeltaValue::render_odd(int digits) const { return render_decimal(delta_odd, digits); }

DeltaValue delta_from_coefficient(long t, long n, const mpz_class& a_t_n) {
    DeltaValue d;
    d.t = t;
    d.n = n;
    const mpz_class p = partition_count(n);
    d.delta_even = mpq_class(p + a_t_n, 2 * p);
    d.delta_even.canonicalize();
    d.delta_odd = mpq_class(p - a_t_n, 2 * p);
    d.delta_odd.canonicalize();
    return d;
}

DeltaValue delta(long t, long n) {
    if (t < 2 || n < 1) throw std::domain_error("delta: need t>=2, n>=1");
    const IntSeries g = expand_G_t(t, n);
    return delta_from_coefficient(t, n, g[n]);
}

std::pair<mpq_class, mpq_class> limit_delta(long t, Parity n_parity) {
    if (t < 2) throw std::domain_error("limit_delta: t must be >= 2");
    if (t % 2 == 0) return {mpq_class(1, 2), mpq_class(1, 2)};
    mpz_class two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>((t + 1) / 2));
    const mpq_class half(1, 2);
    const mpq_class dev(1, two_pow);
    if (n_parity == Parity::EVEN) return {half + dev, half - dev};
    return {half - dev, half + dev};
}

SignPattern sign_pattern(long t, long n_start, long n_end) {
    if (t < 2 || n_start < 0 || n_end < n_start)
        throw std::domain_error("sign_pattern: bad window");
    SignPattern sp;
    sp.t = t;
    sp.s = val2(t);
    sp.n_start = n_start;
    sp.n_end = n_end;
    const long period_bound = 1L << (sp.s + 1);
    if (n_end - n_start < 4 * period_bound)
        throw std::domain_error("sign_pattern: window shorter than 4 * 2^(s+1)");
    const IntSeries g = expand_G_t(t, n_end);
    for (long n = n_start; n <= n_end; ++n) {
        const int sgn = mpz_sgn(g[n].get_mpz_t());
        sp.signs += (sgn > 0 ? '+' : (sgn < 0 ? '-' : '0'));
        if (sgn == 0) sp.has_zero = true;
    }
    if (sp.has_zero) return sp;  // zero blocks period detection
    const long len = static_cast<long>(sp.signs.size());
    for (long p = 1; 2 * p <= len; ++p) {
        bool ok = true;
        for (long i = 0; i + p < len; ++i)
            if (sp.signs[static_cast<size_t>(i)] != sp.signs[static_cast<size_t>(i + p)]) {
                ok = false;
                break;
            }
        if (ok) {
            sp.detected_period = p;
            break;
        }
    }
    return sp;
}

}  // namespace hookparity
