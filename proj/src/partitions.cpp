#include "hookparity/partitions.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hookparity {

long Partition::n() const {
    return std::accumulate(parts.begin(), parts.end(), 0L);
}

bool Partition::valid() const {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) return false;
        if (i + 1 < parts.size() && parts[i] < parts[i + 1]) return false;
    }
    return true;
}

Partition conjugate(const Partition& p) {
    Partition c;
    if (p.parts.empty()) return c;
    c.parts.resize(static_cast<size_t>(p.parts[0]));
    for (long j = 0; j < p.parts[0]; ++j) {
        long cnt = 0;
        for (long part : p.parts)
            if (part > j) ++cnt;
        c.parts[static_cast<size_t>(j)] = cnt;
    }
    return c;
}

long HookGrid::cell_count() const {
    long n = 0;
    for (const auto& r : rows) n += static_cast<long>(r.size());
    return n;
}

void enumerate_partitions(long n, const std::function<void(const Partition&)>& fn, long cap) {
    if (n < 0) throw std::domain_error("enumerate_partitions: n must be nonnegative");
    if (n > cap)
        throw std::domain_error("enumerate_partitions: n=" + std::to_string(n) +
                                " exceeds enumeration cap " + std::to_string(cap));
    Partition p;
    if (n == 0) {
        fn(p);
        return;
    }
    p.parts.assign(1, n);
    while (true) {
        fn(p);
        // next partition in reverse lexicographic order: absorb trailing 1s,
        // decrement the last part > 1, redistribute the remainder greedily
        long ones = 0;
        while (!p.parts.empty() && p.parts.back() == 1) {
            p.parts.pop_back();
            ++ones;
        }
        if (p.parts.empty()) return;  // came from (1,1,...,1)
        p.parts.back() -= 1;
        long rem = ones + 1;
        long unit = p.parts.back();
        while (rem > 0) {
            long take = std::min(unit, rem);
            p.parts.push_back(take);
            rem -= take;
        }
    }
}

HookGrid hook_grid(const Partition& p) {
    HookGrid g;
    const Partition conj = conjugate(p);
    g.rows.resize(p.parts.size());
    for (size_t i = 0; i < p.parts.size(); ++i) {
        g.rows[i].resize(static_cast<size_t>(p.parts[i]));
        for (long j = 0; j < p.parts[i]; ++j) {
            g.rows[i][static_cast<size_t>(j)] =
                (p.parts[i] - (j + 1)) + (conj.parts[static_cast<size_t>(j)] - static_cast<long>(i + 1)) + 1;
        }
    }
    return g;
}

long count_t_hooks(const Partition& p, long t) {
    if (t < 2) throw std::domain_error("count_t_hooks: t must be >= 2");
    const HookGrid g = hook_grid(p);
    long cnt = 0;
    for (const auto& row : g.rows)
        for (long h : row)
            if (h % t == 0) ++cnt;
    return cnt;
}

ParitySplit parity_split_bruteforce(long n, long t, long cap) {
    if (t < 2) throw std::domain_error("parity_split_bruteforce: t must be >= 2");
    ParitySplit split{0, 0};
    enumerate_partitions(
        n,
        [&](const Partition& p) {
            if (count_t_hooks(p, t) % 2 == 0)
                ++split.even_count;
            else
                ++split.odd_count;
        },
        cap);
    return split;
}

namespace {
std::mutex g_ptable_mutex;
std::vector<mpz_class> g_ptable{1};  // p(0) = 1
}  // namespace

mpz_class partition_count(long n) {
    if (n < 0) throw std::domain_error("partition_count: n must be nonnegative");
    std::lock_guard<std::mutex> lock(g_ptable_mutex);
    while (static_cast<long>(g_ptable.size()) <= n) {
        const long m = static_cast<long>(g_ptable.size());
        mpz_class s = 0;
        for (long j = 1;; ++j) {
            const long g1 = j * (3 * j - 1) / 2;
            if (g1 > m) break;
            const long g2 = j * (3 * j + 1) / 2;
            if (j % 2 == 1) {
                s += g_ptable[static_cast<size_t>(m - g1)];
                if (g2 <= m) s += g_ptable[static_cast<size_t>(m - g2)];
            } else {
                s -= g_ptable[static_cast<size_t>(m - g1)];
                if (g2 <= m) s -= g_ptable[static_cast<size_t>(m - g2)];
            }
        }
        g_ptable.push_back(std::move(s));
    }
    return g_ptable[static_cast<size_t>(n)];
}

mpz_class ftr_degree(const Partition& p) {
    const long n = p.n();
    mpz_class num;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(n));
    mpz_class den = 1;
    const HookGrid g = hook_grid(p);
    for (const auto& row : g.rows)
        for (long h : row) den *= h;
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw std::logic_error("ftr_degree: hook product does not divide n!");
    return q;
}

}  // namespace hookparity
