#pragma once

#include <gmpxx.h>

#include "hookparity/rational_phase.hpp"

namespace hookparity {

// Exact Dedekind sum s(u,v) via the Euclidean reciprocity recursion.
mpq_class dedekind_sum(long u, long v);

// O(v) definitional sawtooth sum; kept as the independent oracle for tests.
mpq_class dedekind_sum_direct(long u, long v);

// phase of omega_{u,v} = e^(pi*i*s(u,v)), i.e. s(u,v)/2 reduced mod 1
RationalPhase omega(long u, long v);

// a^{-1} mod m in [0, m); by convention 0 when m = 1.
long mod_inverse(long a, long m);

enum class HookCase { K0_ODD, K0_TWICE_ODD, K0_DIV4 };

// Per-(t,k) decomposition used by the exact-formula terms: k0 = k/gcd(k,t),
// t0 = t/gcd(k,t), the parity class of k0 and the modular inverses the phase
// factors need.
struct HookCaseContext {
    long t = 0, k = 0;
    long g = 0, k0 = 0, t0 = 0;
    HookCase kcase = HookCase::K0_ODD;
    long inv_t0_mod_k0 = 0;    // t0^{-1} (mod k0)
    long inv4_mod_k0 = 0;      // 4^{-1} (mod k0), K0_ODD only
    long inv2_mod_k0half = 0;  // 2^{-1} (mod k0/2), K0_TWICE_ODD only

    // H in [0,k) with h*H == -1 (mod k); H = 0 when k = 1
    long H_for(long h) const;

    // integer P such that the m-sum phase is e^(2*pi*i*P*H*m/k)
    long phase_multiplier() const;
};

HookCaseContext build_context(long t, long k);

// truncation bound of the inner m-sum, by k0 case
long u_bound(const HookCaseContext& ctx);

// phase of the eta-quotient multiplier
//   w(t,h,k) = omega_{h,k} * omega_{2*t0*h,k0}^{3t}
//            / (omega_{t0*h,k0}^{2t} * omega_{4*t0*h,k0}^{t})
RationalPhase w_factor(long t, long h, long k);

}  // namespace hookparity
