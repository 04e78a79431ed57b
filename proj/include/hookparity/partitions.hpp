#pragma once

#include <gmpxx.h>

#include <functional>
#include <vector>

namespace hookparity {

// Enumeration is the brute-force ground truth; it is only meant for small n
// (the series expansion covers large n). p(60) ~ 9.7e5 grids are cheap.
constexpr long kDefaultEnumerationCap = 60;

// Weakly decreasing sequence of positive integers.
struct Partition {
    std::vector<long> parts;

    long n() const;       // sum of parts
    bool valid() const;   // parts[i] >= parts[i+1] >= 1
};

Partition conjugate(const Partition& p);

// Hook numbers arranged in the shape of the Ferrers-Young diagram.
struct HookGrid {
    std::vector<std::vector<long>> rows;

    long cell_count() const;
};

// Streams every partition of n exactly once, in reverse lexicographic order:
// (n), (n-1,1), ..., (1,1,...,1). Throws std::domain_error above the cap.
void enumerate_partitions(long n, const std::function<void(const Partition&)>& fn,
                          long cap = kDefaultEnumerationCap);

// H(i,j) = (lambda_i - j) + (lambda'_j - i) + 1, one row per diagram row.
HookGrid hook_grid(const Partition& p);

// number of hook numbers divisible by t
long count_t_hooks(const Partition& p, long t);

struct ParitySplit {
    mpz_class even_count;  // partitions with an even number of t-hooks
    mpz_class odd_count;
};

ParitySplit parity_split_bruteforce(long n, long t, long cap = kDefaultEnumerationCap);

// p(n) by the Euler pentagonal recurrence; memoized, thread-safe.
mpz_class partition_count(long n);

// n! / prod of hook numbers. Throws std::logic_error if the division is not
// exact (would indicate a broken hook grid).
mpz_class ftr_degree(const Partition& p);

}  // namespace hookparity
