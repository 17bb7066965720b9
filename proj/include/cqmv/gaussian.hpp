#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "cqmv/types.hpp"

namespace cqmv {

// Element a + b*i of Z[i], same coordinate bounds as EisInt.
struct GaussInt {
    int64_t a = 0;
    int64_t b = 0;
    friend bool operator==(const GaussInt&, const GaussInt&) = default;
};

GaussInt operator+(GaussInt x, GaussInt y);
GaussInt operator-(GaussInt x, GaussInt y);
GaussInt operator-(GaussInt x);
GaussInt operator*(GaussInt x, GaussInt y);
std::ostream& operator<<(std::ostream& os, GaussInt z);

inline bool is_zero(GaussInt z) { return z.a == 0 && z.b == 0; }
inline GaussInt conj_i(GaussInt z) { return {z.a, -z.b}; }

int64_t norm_i(GaussInt z);

const std::array<GaussInt, 4>& units_i();
bool is_unit_i(GaussInt z);

// Primary means z == 1 (mod (1+i)^3): a == 1 (4), b == 0 (4) or a == 3 (4), b == 2 (4).
bool is_primary_i(GaussInt z);

struct UnitAndPrimaryI {
    GaussInt unit;
    GaussInt primary;
};
UnitAndPrimaryI make_primary_i(GaussInt z);

bool divides_i(GaussInt d, GaussInt z);
GaussInt div_exact_i(GaussInt z, GaussInt d);

GaussInt gcd_i(GaussInt x, GaussInt y);

// Primary primes above p: two conjugates for p == 1 (mod 4), empty otherwise.
std::vector<GaussInt> split_prime_i(int64_t p);

struct PrimaryFactorI {
    GaussInt prime;
    int exponent = 0;
};

struct PrimaryFactorizationI {
    GaussInt unit;
    std::vector<PrimaryFactorI> factors;
};

PrimaryFactorizationI factor_primary_i(GaussInt n);
bool has_rational_prime_divisor(const PrimaryFactorizationI& f);

// Quartic residue symbol (x/n)_4 as an exponent of i, kSymbolZero for 0.
class QuarticSymbol {
  public:
    explicit QuarticSymbol(GaussInt n);
    int exponent(GaussInt x) const;
    int exponent(int64_t m) const { return exponent(GaussInt{m, 0}); }
    const PrimaryFactorizationI& factorization() const { return fac_; }

  private:
    struct SplitData {
        int64_t p;
        int64_t r;  // image of i in F_p
        uint64_t exp;
        int mult;
    };
    struct InertData {
        int64_t p;
        uint64_t exp;
        int mult;
    };
    PrimaryFactorizationI fac_;
    std::vector<SplitData> split_;
    std::vector<InertData> inert_;
};

int quartic_symbol(GaussInt x, GaussInt n);

// lambda0(q) = (-1)^((a^2-1)/8) for primary q = a + b*i.
int lambda0(GaussInt q);

}  // namespace cqmv
