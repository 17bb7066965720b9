#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>

namespace cqmv {

using Complex = std::complex<double>;

// Residue-symbol exponent meaning (a/n)_k = 0, i.e. gcd(a, n) != 1.
inline constexpr int kSymbolZero = -1;

// Ring elements keep |a|, |b| below this so norms stay below 2^63 and all
// intermediate products of two in-range elements are exact in 128 bits.
inline constexpr int64_t kCoordLimit = int64_t{1} << 31;

// Largest residue system a single Gauss-sum evaluation will enumerate.
// CQMV_NORM_CAP in the environment overrides it process-wide.
inline constexpr int64_t kDefaultResidueCap = 100000;
int64_t residue_cap();

// Default work budget for sum sweeps, in elementary steps; CQMV_BUDGET
// overrides it for the CLI.
inline constexpr int64_t kDefaultBudget = 10000000000LL;

// A computation was asked to enumerate more state than the configured cap.
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Estimated sweep work exceeds the configured budget.
struct budget_error : capacity_error {
    using capacity_error::capacity_error;
};

inline int64_t mod_nonneg(int64_t x, int64_t m) {
    int64_t r = x % m;
    return r < 0 ? r + m : r;
}

inline int64_t mod_nonneg(__int128 x, int64_t m) {
    __int128 r = x % m;
    return static_cast<int64_t>(r < 0 ? r + m : r);
}

}  // namespace cqmv
