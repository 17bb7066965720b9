#include <doctest.h>

#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "cqmv/gaussian.hpp"
#include "cqmv/modular.hpp"
#include "cqmv/verify.hpp"

using namespace cqmv;

namespace {
const GaussInt kPi{-1, 2};    // primary prime of norm 5
const GaussInt kPiBar{-1, -2};
}  // namespace

TEST_CASE("norm and units") {
    CHECK(norm_i(kPi) == 5);
    CHECK(norm_i(GaussInt{0, 0}) == 0);
    CHECK(norm_i(kPi * kPiBar) == 25);
    CHECK(units_i().size() == 4);
    for (GaussInt u : units_i()) CHECK(norm_i(u) == 1);
    CHECK(GaussInt{0, 1} * GaussInt{0, 1} == GaussInt{-1, 0});
}

TEST_CASE("primary characterization") {
    CHECK(is_primary_i(GaussInt{1, 0}));
    CHECK(is_primary_i(GaussInt{-1, 2}));
    CHECK(is_primary_i(GaussInt{3, 2}));
    CHECK(is_primary_i(GaussInt{-3, 0}));
    CHECK_FALSE(is_primary_i(GaussInt{2, 1}));
    CHECK_FALSE(is_primary_i(GaussInt{1, 2}));

    auto [u, p] = make_primary_i(GaussInt{2, 1});
    CHECK(u == GaussInt{0, 1});
    CHECK(p == kPi);
    CHECK(make_primary_i(GaussInt{1, 0}).primary == GaussInt{1, 0});
    CHECK(make_primary_i(GaussInt{3, 2}).primary == GaussInt{3, 2});
    CHECK_THROWS_AS(make_primary_i(GaussInt{0, 0}), std::domain_error);
    CHECK_THROWS_AS(make_primary_i(GaussInt{1, 1}), std::domain_error);  // even norm

    for (GaussInt z : {GaussInt{2, 1}, GaussInt{4, 1}, GaussInt{-3, 8}}) {
        int count = 0;
        for (GaussInt u2 : units_i()) {
            if (is_primary_i(u2 * z)) ++count;
        }
        CHECK(count == 1);
    }
}

TEST_CASE("split_prime") {
    auto s5 = split_prime_i(5);
    CHECK(s5 == std::vector<GaussInt>{kPiBar, kPi});  // ascending b
    CHECK(std::set<std::pair<int64_t, int64_t>>{{-1, -2}, {-1, 2}} ==
          std::set<std::pair<int64_t, int64_t>>{{s5[0].a, s5[0].b}, {s5[1].a, s5[1].b}});
    CHECK(split_prime_i(3).empty());
    CHECK(split_prime_i(2).empty());
    auto s13 = split_prime_i(13);
    REQUIRE(s13.size() == 2);
    CHECK(norm_i(s13[0]) == 13);
    CHECK(is_primary_i(s13[0]));
    CHECK(conj_i(s13[0]) == s13[1]);
    CHECK_THROWS_AS(split_prime_i(9), std::domain_error);
}

TEST_CASE("gcd and factorization") {
    CHECK(gcd_i(GaussInt{5, 0}, kPi) == kPi);
    CHECK(gcd_i(GaussInt{9, 4}, GaussInt{1, 0}) == GaussInt{1, 0});
    CHECK_THROWS_AS(gcd_i(GaussInt{0, 0}, GaussInt{0, 0}), std::domain_error);

    auto f = factor_primary_i(kPi);
    CHECK(f.unit == GaussInt{1, 0});
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0].prime == kPi);

    auto f5 = factor_primary_i(GaussInt{5, 0});
    CHECK(f5.unit == GaussInt{1, 0});
    REQUIRE(f5.factors.size() == 2);
    CHECK(f5.factors[0].prime == kPiBar);
    CHECK(f5.factors[1].prime == kPi);
    CHECK(has_rational_prime_divisor(f5));
    CHECK_FALSE(has_rational_prime_divisor(factor_primary_i(kPi * kPi)));
    CHECK(has_rational_prime_divisor(factor_primary_i(GaussInt{-3, 0})));

    CHECK_THROWS_AS(factor_primary_i(GaussInt{2, 0}), std::domain_error);

    for (GaussInt n : primary_elements_i(200)) {
        auto fac = factor_primary_i(n);
        GaussInt prod = fac.unit;
        for (const auto& [prime, e] : fac.factors) {
            CHECK(is_primary_i(prime));
            for (int k = 0; k < e; ++k) prod = prod * prime;
        }
        CHECK(prod == n);
    }
}

TEST_CASE("quartic symbol examples") {
    CHECK(quartic_symbol(GaussInt{2, 0}, kPi) == 3);
    CHECK(quartic_symbol(GaussInt{1, 0}, kPi) == 0);
    CHECK(quartic_symbol(GaussInt{5, 0}, kPi) == kSymbolZero);
    CHECK(quartic_symbol(GaussInt{7, 0}, GaussInt{0, 1}) == 0);  // unit modulus
    CHECK_THROWS_AS(quartic_symbol(GaussInt{1, 0}, GaussInt{0, 0}), std::domain_error);
    CHECK_THROWS_AS(quartic_symbol(GaussInt{1, 0}, GaussInt{2, 0}), std::domain_error);
}

TEST_CASE("quartic symbol is completely multiplicative") {
    auto mul4 = [](int x, int y) {
        return (x == kSymbolZero || y == kSymbolZero) ? kSymbolZero : (x + y) % 4;
    };
    auto elems = primary_elements_i(80);
    for (GaussInt n : elems) {
        QuarticSymbol sym(n);
        for (int64_t xa = -3; xa <= 3; ++xa) {
            for (int64_t xb = -2; xb <= 2; ++xb) {
                GaussInt x{xa, xb}, y{xb + 2, xa - 1};
                if (is_zero(x) || is_zero(y)) continue;
                CHECK(sym.exponent(x * y) == mul4(sym.exponent(x), sym.exponent(y)));
            }
        }
    }
    for (size_t i = 0; i < elems.size(); ++i) {
        for (size_t j = i; j < elems.size(); ++j) {
            if (norm_i(elems[i]) * norm_i(elems[j]) > 3000) continue;
            GaussInt x{7, 2};
            CHECK(quartic_symbol(x, elems[i] * elems[j]) ==
                  mul4(quartic_symbol(x, elems[i]), quartic_symbol(x, elems[j])));
        }
    }
}

TEST_CASE("quartic power detection") {
    for (int64_t p : primes_up_to(200)) {
        if (p % 4 != 1) continue;
        GaussInt pi = split_prime_i(p)[1];
        QuarticSymbol sym(pi);
        std::set<int64_t> fourths;
        for (int64_t t = 1; t < p; ++t) fourths.insert(static_cast<int64_t>(pow_mod(t, 4, p)));
        for (int64_t a = 1; a < p; ++a) {
            CHECK((sym.exponent(GaussInt{a, 0}) == 0) == (fourths.count(a) > 0));
        }
    }
}

TEST_CASE("lambda0") {
    CHECK(lambda0(GaussInt{-1, 2}) == 1);
    CHECK(lambda0(GaussInt{3, 2}) == -1);
    CHECK(lambda0(GaussInt{-5, 2}) == -1);
    CHECK_THROWS_AS(lambda0(GaussInt{2, 1}), std::domain_error);

    // class function mod 16 on primary elements
    std::map<std::pair<int64_t, int64_t>, int> classes;
    for (GaussInt q : primary_elements_i(2000)) {
        auto key = std::make_pair(mod_nonneg(q.a, 16), mod_nonneg(q.b, 16));
        auto [it, inserted] = classes.emplace(key, lambda0(q));
        CHECK(it->second == lambda0(q));
    }
}

TEST_CASE("supplement law and primary congruences") {
    for (GaussInt n : primary_elements_i(500)) {
        if (is_unit_i(n)) continue;
        CHECK(quartic_symbol(GaussInt{0, 1}, n) == mod_nonneg((1 - n.a) / 2, 4));
        int64_t t = ((norm_i(n) - 1) / 4) % 2 == 0 ? 1 : -1;
        CHECK(mod_nonneg(n.a, 4) == mod_nonneg(t, 4));
        CHECK(mod_nonneg(n.b, 4) == mod_nonneg(1 - t, 4));
    }
}

TEST_CASE("rational entries give trivial symbol") {
    for (int64_t a = -21; a <= 21; a += 2) {
        for (int64_t b = -20; b <= 20; ++b) {
            if (std::gcd(std::abs(a), 2 * std::abs(b)) != 1) continue;
            CHECK(quartic_symbol(GaussInt{b, 0}, GaussInt{a, 0}) == 0);
        }
    }
}

TEST_CASE("conjugate decomposition via lambda0") {
    for (GaussInt q : primary_elements_i(500)) {
        if (is_unit_i(q)) continue;
        QuarticSymbol sym(q);
        if (has_rational_prime_divisor(sym.factorization())) continue;
        int s1 = sym.exponent(conj_i(q));
        int s2 = sym.exponent(GaussInt{-2, 0});
        REQUIRE(s1 != kSymbolZero);
        REQUIRE(s2 != kSymbolZero);
        CHECK(s1 == (s2 + (lambda0(q) < 0 ? 2 : 0)) % 4);
    }
}

TEST_CASE("quartic reciprocity smoke") {
    auto elems = primary_elements_i(200);
    for (size_t i = 0; i < elems.size(); ++i) {
        QuarticSymbol si(elems[i]);
        for (size_t j = i; j < elems.size(); ++j) {
            int smn = quartic_symbol(elems[i], elems[j]);
            int snm = si.exponent(elems[j]);
            if (smn == kSymbolZero || snm == kSymbolZero) {
                CHECK(smn == snm);
                continue;
            }
            int pm = ((norm_i(elems[i]) - 1) / 4) % 2;
            int pn = ((norm_i(elems[j]) - 1) / 4) % 2;
            CHECK(smn == (snm + 2 * pm * pn) % 4);
        }
    }
}
