#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "cqmv/types.hpp"

namespace cqmv {

// Element a + b*omega of Z[omega], omega = e(2*pi*i/3), omega^2 = -1 - omega.
// Coordinates stay below 2^31 in absolute value, so norms stay below 2^63 and
// products of in-range elements are exact in 128-bit intermediates.
struct EisInt {
    int64_t a = 0;
    int64_t b = 0;
    friend bool operator==(const EisInt&, const EisInt&) = default;
};

EisInt operator+(EisInt x, EisInt y);
EisInt operator-(EisInt x, EisInt y);
EisInt operator-(EisInt x);
EisInt operator*(EisInt x, EisInt y);  // throws std::overflow_error past kCoordLimit
std::ostream& operator<<(std::ostream& os, EisInt z);

inline bool is_zero(EisInt z) { return z.a == 0 && z.b == 0; }
inline EisInt conj_w(EisInt z) { return {z.a - z.b, -z.b}; }

int64_t norm_w(EisInt z);

// The six units 1, -1, omega, -omega, omega^2, -omega^2.
const std::array<EisInt, 6>& units_w();
bool is_unit_w(EisInt z);

// Primary means a == 1 (mod 3) and b == 0 (mod 3), i.e. z == 1 (mod 3).
bool is_primary_w(EisInt z);

struct UnitAndPrimaryW {
    EisInt unit;     // the multiplier
    EisInt primary;  // unit * input
};
UnitAndPrimaryW make_primary_w(EisInt z);

bool divides_w(EisInt d, EisInt z);
EisInt div_exact_w(EisInt z, EisInt d);

// Greatest common divisor by Euclidean division with nearest rounding.
// Output is the primary associate when its norm is coprime to 3, otherwise
// the canonical associate (a >= 0, then b >= 0, then lexicographic).
EisInt gcd_w(EisInt x, EisInt y);

// Primary primes above a rational prime p: two conjugates for p == 1 (mod 3),
// empty for inert p == 2 (mod 3) and for the ramified p = 3.
std::vector<EisInt> split_prime_w(int64_t p);

struct PrimaryFactorW {
    EisInt prime;
    int exponent = 0;
};

struct PrimaryFactorizationW {
    EisInt unit;
    std::vector<PrimaryFactorW> factors;  // ascending (norm, b, a)
};

PrimaryFactorizationW factor_primary_w(EisInt n);
bool has_rational_prime_divisor(const PrimaryFactorizationW& f);

// Cubic residue symbol (x/n)_3 as an exponent of omega, kSymbolZero for 0.
// Precomputes the per-prime embedding data of n once.
class CubicSymbol {
  public:
    explicit CubicSymbol(EisInt n);
    int exponent(EisInt x) const;
    int exponent(int64_t m) const { return exponent(EisInt{m, 0}); }
    const PrimaryFactorizationW& factorization() const { return fac_; }

  private:
    struct SplitData {
        int64_t p;
        int64_t r;     // image of omega in F_p
        int64_t r2;    // r^2 mod p
        uint64_t exp;  // (p - 1) / 3
        int mult;
    };
    struct InertData {
        int64_t p;
        uint64_t exp;  // (p^2 - 1) / 3
        int mult;
    };
    PrimaryFactorizationW fac_;
    std::vector<SplitData> split_;
    std::vector<InertData> inert_;
};

int cubic_symbol(EisInt x, EisInt n);

// phi_omega(n): reduced residue classes of Z[omega]/(n).
int64_t euler_phi_w(EisInt n);

}  // namespace cqmv
