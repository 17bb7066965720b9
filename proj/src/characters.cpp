#include "cqmv/characters.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "cqmv/modular.hpp"

namespace cqmv {

Complex CharacterTable::value_at(int64_t m) const {
    int8_t e = at(m);
    if (e == kNoValue) return {0.0, 0.0};
    return std::polar(1.0, 2.0 * std::numbers::pi * e / order);
}

CharacterTable CharacterTable::conjugate() const {
    CharacterTable out = *this;
    for (int8_t& v : out.values) {
        if (v > 0) v = static_cast<int8_t>(order - v);
    }
    if (order == 3) {
        EisInt c = conj_w(EisInt{q_a, q_b});
        out.q_a = c.a;
        out.q_b = c.b;
    } else {
        GaussInt c = conj_i(GaussInt{q_a, q_b});
        out.q_a = c.a;
        out.q_b = c.b;
    }
    return out;
}

bool same_values(const CharacterTable& x, const CharacterTable& y) {
    return x.order == y.order && x.modulus == y.modulus && x.values == y.values;
}

bool is_admissible(int64_t n, int order) {
    if (n < 1) return false;
    if (n == 1) return true;
    for (const PrimePower& pp : factor_prime_powers(static_cast<uint64_t>(n))) {
        if (pp.p % static_cast<uint64_t>(order) != 1) return false;
    }
    return true;
}

std::vector<int64_t> admissible_moduli(int64_t Y, int order) {
    if (order != 3 && order != 4) throw std::domain_error("admissible_moduli: order must be 3 or 4");
    std::vector<int64_t> out;
    if (Y < 1) return out;
    out.push_back(1);
    std::vector<int32_t> spf = smallest_prime_factor_sieve(Y);
    for (int64_t n = 2; n <= Y; ++n) {
        int64_t m = n;
        bool ok = true;
        while (m > 1) {
            int64_t p = spf[m];
            if (p % order != 1) { ok = false; break; }
            while (m % p == 0) m /= p;
        }
        if (ok) out.push_back(n);
    }
    return out;
}

namespace {

// One generator per subset choice of conjugates, shared by both rings.
template <typename Ring, typename SplitFn>
std::vector<Ring> enumerate_q_impl(int64_t n, int order, SplitFn split) {
    std::vector<Ring> out;
    if (n < 1) return out;
    if (n == 1) {
        out.push_back(Ring{1, 0});
        return out;
    }
    std::vector<std::pair<std::vector<Ring>, int>> parts;  // ([pi, conj(pi)], alpha)
    for (const PrimePower& pp : factor_prime_powers(static_cast<uint64_t>(n))) {
        if (pp.p % static_cast<uint64_t>(order) != 1) return {};
        parts.emplace_back(split(static_cast<int64_t>(pp.p)), pp.e);
    }
    size_t k = parts.size();
    for (uint64_t mask = 0; mask < (uint64_t{1} << k); ++mask) {
        Ring q{1, 0};
        for (size_t i = 0; i < k; ++i) {
            Ring pi = parts[i].first[(mask >> i) & 1];
            for (int e = 0; e < parts[i].second; ++e) q = q * pi;
        }
        out.push_back(q);
    }
    return out;
}

}  // namespace

std::vector<EisInt> enumerate_q_w(int64_t n) {
    return enumerate_q_impl<EisInt>(n, 3, [](int64_t p) { return split_prime_w(p); });
}

std::vector<GaussInt> enumerate_q_i(int64_t n) {
    return enumerate_q_impl<GaussInt>(n, 4, [](int64_t p) { return split_prime_i(p); });
}

namespace {

// Fill values multiplicatively from the symbol exponents at primes.
template <typename Symbol>
void fill_table(CharacterTable& chi, const Symbol& sym, const std::vector<int32_t>* spf) {
    int64_t n = chi.modulus;
    chi.values.assign(static_cast<size_t>(n), kNoValue);
    if (n == 1) {
        chi.values[0] = 0;
        return;
    }
    chi.values[1] = 0;
    std::vector<int32_t> local;
    if (spf == nullptr) {
        local = smallest_prime_factor_sieve(n - 1);
        spf = &local;
    }
    for (int64_t m = 2; m < n; ++m) {
        int64_t p = (*spf)[m];
        if (p == m) {
            chi.values[m] = static_cast<int8_t>(sym.exponent(m));
        } else {
            int8_t v1 = chi.values[p];
            int8_t v2 = chi.values[m / p];
            chi.values[m] = (v1 == kNoValue || v2 == kNoValue)
                                ? kNoValue
                                : static_cast<int8_t>((v1 + v2) % chi.order);
        }
    }
}

}  // namespace

CharacterTable character_from_q(EisInt q, const std::vector<int32_t>* spf) {
    if (!is_primary_w(q)) throw std::domain_error("character_from_q: q not primary");
    CharacterTable chi;
    chi.order = 3;
    chi.modulus = norm_w(q);
    chi.q_a = q.a;
    chi.q_b = q.b;
    if (chi.modulus > 1) {
        CubicSymbol sym(q);
        if (has_rational_prime_divisor(sym.factorization())) {
            throw std::domain_error("character_from_q: q has a rational prime divisor");
        }
        fill_table(chi, sym, spf);
    } else {
        chi.values = {0};
    }
    return chi;
}

CharacterTable character_from_q(GaussInt q, const std::vector<int32_t>* spf) {
    if (!is_primary_i(q)) throw std::domain_error("character_from_q: q not primary");
    CharacterTable chi;
    chi.order = 4;
    chi.modulus = norm_i(q);
    chi.q_a = q.a;
    chi.q_b = q.b;
    if (chi.modulus > 1) {
        QuarticSymbol sym(q);
        if (has_rational_prime_divisor(sym.factorization())) {
            throw std::domain_error("character_from_q: q has a rational prime divisor");
        }
        fill_table(chi, sym, spf);
    } else {
        chi.values = {0};
    }
    return chi;
}

std::vector<CharacterTable> set_S(int64_t n, int order, const std::vector<int32_t>* spf) {
    std::vector<CharacterTable> out;
    if (order == 3) {
        for (EisInt q : enumerate_q_w(n)) out.push_back(character_from_q(q, spf));
    } else if (order == 4) {
        for (GaussInt q : enumerate_q_i(n)) out.push_back(character_from_q(q, spf));
    } else {
        throw std::domain_error("set_S: order must be 3 or 4");
    }
    return out;
}

std::vector<CharacterTable> primitive_chars_dlog(int64_t p, int order) {
    if (order != 3 && order != 4) throw std::domain_error("primitive_chars_dlog: order must be 3 or 4");
    if (p < 2 || !is_prime_u64(static_cast<uint64_t>(p)) || p % order != 1) {
        throw std::domain_error("primitive_chars_dlog: p must be prime, p == 1 (mod order)");
    }
    uint64_t g = least_primitive_root(static_cast<uint64_t>(p));
    std::vector<CharacterTable> out;
    for (int c : {1, order - 1}) {
        CharacterTable chi;
        chi.order = order;
        chi.modulus = p;
        chi.values.assign(static_cast<size_t>(p), kNoValue);
        uint64_t m = 1;
        for (int64_t t = 0; t < p - 1; ++t) {
            chi.values[m] = static_cast<int8_t>((c * t) % order);
            m = mul_mod(m, g, static_cast<uint64_t>(p));
        }
        out.push_back(std::move(chi));
    }
    return out;
}

void write_table_csv(std::ostream& os, const CharacterTable& chi) {
    os << "m,exponent\n";
    for (int64_t m = 0; m < chi.modulus; ++m) {
        os << m << ',';
        if (chi.values[m] != kNoValue) os << static_cast<int>(chi.values[m]);
        os << '\n';
    }
}

}  // namespace cqmv
