#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hookparity/hpreal.hpp"

namespace hookparity {

// One k-term of the convergent series for A_t(n): the full inner sum over h
// and m, including the k-dependent prefactor and the case weight.
struct RademacherTerm {
    long k = 0;
    HPReal value;
};

HPReal term_for_k(long t, long n, long k, long precision = kDefaultPrecision);

// A_t(d;n) = sum_{k<=d} term_k; k-terms are evaluated independently (in
// parallel) and reduced in ascending k order for reproducible digits.
HPReal partial_sum(long t, long n, long d, long precision = kDefaultPrecision,
                   long threads = 0);

struct PartialSumTable {
    long t = 0, n = 0;
    std::vector<std::pair<long, HPReal>> rows;  // (d, A_t(d;n)), d ascending
};

PartialSumTable partial_sum_table(long t, long n, std::span<const long> cutoffs,
                                  long precision = kDefaultPrecision, long threads = 0);

struct NonConvergedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Sums the series up to cutoff d (default max(64, ceil(4 sqrt n)), doubled on
// failure) and rounds to the nearest integer; requires the sum to be within
// 0.25 of an integer, else throws NonConvergedError.
mpz_class evaluate_exact(long t, long n, std::optional<long> d = std::nullopt,
                         long precision = kDefaultPrecision, long threads = 0);

// Numerical check of the modular transformation law at x = e^{(2pi i/k)(h+iz)}:
// evaluates the generating function directly as a truncated product and via
// the case-appropriate transformed product, returns |LHS-RHS|/|LHS|.
// Throws std::domain_error when |x| or a transformed point is too close to 1
// for the requested truncation.
HPReal transformation_check(long t, long h, long k, const HPComplex& z,
                            long precision = kDefaultPrecision);

}  // namespace hookparity
