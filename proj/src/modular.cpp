#include "cqmv/modular.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cqmv {

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t n) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % n);
}

uint64_t pow_mod(uint64_t a, uint64_t e, uint64_t n) {
    if (n == 1) return 0;
    uint64_t r = 1;
    a %= n;
    while (e) {
        if (e & 1) r = mul_mod(r, a, n);
        a = mul_mod(a, a, n);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // Sufficient witness set for all n < 2^64 (Sinclair).
    for (uint64_t a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
        uint64_t x = pow_mod(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

uint64_t pollard_rho(uint64_t n) {
    if ((n & 1) == 0) return 2;
    for (uint64_t c = 1;; ++c) {
        auto step = [n, c](uint64_t x) {
            return (mul_mod(x, x, n) + c) % n;
        };
        uint64_t x = 2, y = 2, d = 1;
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            uint64_t diff = x > y ? x - y : y - x;
            d = std::gcd(diff, n);
        }
        if (d != n) return d;
    }
}

void factor_rec(uint64_t n, std::vector<uint64_t>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out.push_back(n);
        return;
    }
    uint64_t d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

std::vector<uint64_t> factor_u64(uint64_t n) {
    std::vector<uint64_t> out;
    if (n == 0) throw std::domain_error("factor_u64: zero input");
    for (uint64_t p = 2; p < 10000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            out.push_back(p);
            n /= p;
        }
    }
    factor_rec(n, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PrimePower> factor_prime_powers(uint64_t n) {
    std::vector<PrimePower> out;
    for (uint64_t p : factor_u64(n)) {
        if (!out.empty() && out.back().p == p) {
            ++out.back().e;
        } else {
            out.push_back({p, 1});
        }
    }
    return out;
}

std::vector<int32_t> smallest_prime_factor_sieve(int64_t limit) {
    std::vector<int32_t> spf(static_cast<size_t>(limit) + 1, 0);
    for (int64_t i = 2; i <= limit; ++i) {
        if (spf[i] == 0) {
            for (int64_t j = i; j <= limit; j += i) {
                if (spf[j] == 0) spf[j] = static_cast<int32_t>(i);
            }
        }
    }
    return spf;
}

std::vector<int64_t> primes_up_to(int64_t limit) {
    std::vector<bool> composite(static_cast<size_t>(limit) + 1, false);
    std::vector<int64_t> out;
    for (int64_t i = 2; i <= limit; ++i) {
        if (!composite[i]) {
            out.push_back(i);
            for (int64_t j = i * i; j <= limit; j += i) composite[j] = true;
        }
    }
    return out;
}

uint64_t least_primitive_root(uint64_t p) {
    if (p == 2) return 1;
    std::vector<uint64_t> qs = factor_u64(p - 1);
    qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
    for (uint64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (uint64_t q : qs) {
            if (pow_mod(g, (p - 1) / q, p) == 1) { ok = false; break; }
        }
        if (ok) return g;
    }
    throw std::logic_error("least_primitive_root: none found");
}

}  // namespace cqmv
