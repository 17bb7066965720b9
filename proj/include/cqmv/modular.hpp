#pragma once

#include <cstdint>
#include <vector>

namespace cqmv {

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t n);
uint64_t pow_mod(uint64_t a, uint64_t e, uint64_t n);

// Deterministic Miller-Rabin over the full 64-bit range.
bool is_prime_u64(uint64_t n);

// Prime factorization of n, ascending, with multiplicity.
// Trial division plus Pollard rho for the large cofactors.
std::vector<uint64_t> factor_u64(uint64_t n);

struct PrimePower {
    uint64_t p;
    int e;
};
std::vector<PrimePower> factor_prime_powers(uint64_t n);

// spf[m] = smallest prime factor of m (spf[0] = spf[1] = 0).
std::vector<int32_t> smallest_prime_factor_sieve(int64_t limit);

std::vector<int64_t> primes_up_to(int64_t limit);

uint64_t least_primitive_root(uint64_t p);

}  // namespace cqmv
