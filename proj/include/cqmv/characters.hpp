#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "cqmv/eisenstein.hpp"
#include "cqmv/gaussian.hpp"
#include "cqmv/types.hpp"

namespace cqmv {

// A Dirichlet character of order 3 or 4, tabulated as root-of-unity exponents:
// values[m] = e, meaning chi(m) = e(e / order), or kNoValue when gcd(m, n) > 1.
inline constexpr int8_t kNoValue = -1;

struct CharacterTable {
    int order = 3;
    int64_t modulus = 1;
    // Generating primary element (q_a + q_b * omega or q_a + q_b * i);
    // (0, 0) for tables built by the discrete-log construction.
    int64_t q_a = 0;
    int64_t q_b = 0;
    std::vector<int8_t> values;

    int8_t at(int64_t m) const { return values[mod_nonneg(m, modulus)]; }
    Complex value_at(int64_t m) const;
    CharacterTable conjugate() const;
};

bool same_values(const CharacterTable& x, const CharacterTable& y);

// Ascending n <= Y with S_{order,n} nonempty: n = 1 plus every n all of whose
// prime factors are == 1 (mod order).
std::vector<int64_t> admissible_moduli(int64_t Y, int order);
bool is_admissible(int64_t n, int order);

// The 2^omega(n) primary generators of norm n with no rational prime divisor,
// ordered by the binary conjugate-choice vector over the canonical prime order.
std::vector<EisInt> enumerate_q_w(int64_t n);
std::vector<GaussInt> enumerate_q_i(int64_t n);

CharacterTable character_from_q(EisInt q, const std::vector<int32_t>* spf = nullptr);
CharacterTable character_from_q(GaussInt q, const std::vector<int32_t>* spf = nullptr);

// The family S_{order,n} as a list, one table per generator q.
std::vector<CharacterTable> set_S(int64_t n, int order, const std::vector<int32_t>* spf = nullptr);

// Independent oracle: the two characters of exact order `order` mod p built
// from the least primitive root. Conjugate pair, unordered semantics.
std::vector<CharacterTable> primitive_chars_dlog(int64_t p, int order);

// CSV export, columns: m, exponent-or-empty.
void write_table_csv(std::ostream& os, const CharacterTable& chi);

}  // namespace cqmv
