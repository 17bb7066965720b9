#include <doctest.h>

#include "cqmv/modular.hpp"

using namespace cqmv;

TEST_CASE("deterministic primality") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(3));
    CHECK(is_prime_u64(7));
    CHECK(is_prime_u64(1000003));
    CHECK(is_prime_u64(2147483647ull));        // 2^31 - 1
    CHECK(is_prime_u64(18446744073709551557ull));
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(561));    // Carmichael
    CHECK_FALSE(is_prime_u64(3215031751ull));
}

TEST_CASE("factorization") {
    CHECK(factor_u64(360) == std::vector<uint64_t>{2, 2, 2, 3, 3, 5});
    CHECK(factor_u64(97) == std::vector<uint64_t>{97});
    CHECK(factor_u64(1) == std::vector<uint64_t>{});
    auto f = factor_u64(600851475143ull);
    CHECK(f == std::vector<uint64_t>{71, 839, 1471, 6857});
    auto pp = factor_prime_powers(49 * 13);
    REQUIRE(pp.size() == 2);
    CHECK(pp[0].p == 7);
    CHECK(pp[0].e == 2);
    CHECK(pp[1].p == 13);
    CHECK(pp[1].e == 1);
}

TEST_CASE("sieves") {
    auto spf = smallest_prime_factor_sieve(30);
    CHECK(spf[2] == 2);
    CHECK(spf[15] == 3);
    CHECK(spf[29] == 29);
    CHECK(spf[30] == 2);
    auto primes = primes_up_to(30);
    CHECK(primes == std::vector<int64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
}

TEST_CASE("least primitive root") {
    CHECK(least_primitive_root(7) == 3);
    CHECK(least_primitive_root(5) == 2);
    CHECK(least_primitive_root(13) == 2);
    CHECK(least_primitive_root(41) == 6);
    // g really generates: order of g mod p is p-1
    for (uint64_t p : {7ull, 13ull, 101ull}) {
        uint64_t g = least_primitive_root(p);
        uint64_t x = 1;
        int ord = 0;
        do {
            x = mul_mod(x, g, p);
            ++ord;
        } while (x != 1);
        CHECK(ord == static_cast<int>(p - 1));
    }
}
