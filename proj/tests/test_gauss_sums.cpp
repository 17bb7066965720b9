#include <doctest.h>

#include <cmath>
#include <set>

#include "cqmv/gauss_sums.hpp"
#include "cqmv/verify.hpp"

using namespace cqmv;
using doctest::Approx;

namespace {
const EisInt kQ7{-2, -3};
const EisInt kQ343 = kQ7 * kQ7 * kQ7;  // 19 + 18w, primary cube of norm 343
}  // namespace

TEST_CASE("residue systems") {
    auto r7 = residues_mod_w(kQ7);
    CHECK(r7.elements.size() == 7);
    auto r2 = residues_mod_i(GaussInt{1, 1});
    CHECK(r2.elements.size() == 2);

    auto r9 = residues_mod_w(EisInt{3, 0});
    REQUIRE(r9.elements.size() == 9);
    std::set<std::pair<int64_t, int64_t>> got;
    for (EisInt z : r9.elements) got.insert({z.a, z.b});
    std::set<std::pair<int64_t, int64_t>> want;
    for (int64_t a = 0; a < 3; ++a) {
        for (int64_t b = 0; b < 3; ++b) want.insert({a, b});
    }
    CHECK(got == want);

    // contains zero, all distinct mod n
    bool has_zero = false;
    for (EisInt z : r7.elements) {
        if (is_zero(z)) has_zero = true;
    }
    CHECK(has_zero);
    for (size_t i = 0; i < r7.elements.size(); ++i) {
        for (size_t j = i + 1; j < r7.elements.size(); ++j) {
            CHECK_FALSE(divides_w(kQ7, r7.elements[i] - r7.elements[j]));
        }
    }

    CHECK_THROWS_AS(residues_mod_w(EisInt{0, 0}), std::domain_error);
    CHECK_THROWS_AS(residues_mod_w(EisInt{1000, 0}, 100), capacity_error);
}

TEST_CASE("exponential phases") {
    CHECK(phase_etilde_w(EisInt{0, 1}, EisInt{1, 0}).real() == Approx(1.0));
    CHECK(phase_etilde_w(EisInt{0, 1}, EisInt{1, 0}).imag() == Approx(0.0));

    Complex e23 = phase_etilde_w(EisInt{1, 2}, EisInt{3, 0});
    CHECK(e23.real() == Approx(std::cos(4.0 * std::acos(-1.0) / 3.0)));
    CHECK(e23.imag() == Approx(std::sin(4.0 * std::acos(-1.0) / 3.0)));

    Complex m1 = phase_etilde_i(GaussInt{0, 1}, GaussInt{2, 0});
    CHECK(m1.real() == Approx(-1.0));
    CHECK(m1.imag() == Approx(0.0).epsilon(1e-12));

    CHECK_THROWS_AS(phase_etilde_w(EisInt{1, 0}, EisInt{0, 0}), std::domain_error);
}

TEST_CASE("g3 examples") {
    CHECK(std::abs(g3(EisInt{0, 0}, kQ7)) == Approx(0.0).epsilon(1e-12));
    CHECK(g3(EisInt{0, 0}, kQ343).real() == Approx(294.0));
    CHECK(g3(EisInt{0, 0}, kQ343).imag() == Approx(0.0).epsilon(1e-10));
    CHECK(std::abs(g3(EisInt{1, 0}, kQ7)) == Approx(std::sqrt(7.0)));
    CHECK(g3(EisInt{5, 2}, EisInt{1, 0}) == Complex{1.0, 0.0});

    CHECK_THROWS_AS(g3(EisInt{1, 0}, EisInt{3, 1}), std::domain_error);  // not primary
}

TEST_CASE("g4 examples") {
    CHECK(std::abs(g4(GaussInt{1, 0}, GaussInt{-1, 2})) == Approx(std::sqrt(5.0)));
    CHECK(g4(GaussInt{3, 1}, GaussInt{1, 0}) == Complex{1.0, 0.0});
    CHECK(std::abs(g4(GaussInt{0, 0}, GaussInt{-1, 2})) == Approx(0.0).epsilon(1e-12));
}

TEST_CASE("gmult identity spot checks") {
    GaussSumW ev(kQ7);
    Complex g1 = ev.eval(EisInt{1, 0});
    for (int64_t s = 1; s < 7; ++s) {
        int e = cubic_symbol(EisInt{s, 0}, kQ7);
        REQUIRE(e != kSymbolZero);
        Complex expected = std::conj(std::polar(1.0, 2.0 * std::acos(-1.0) * e / 3.0)) * g1;
        CHECK(std::abs(ev.eval(EisInt{s, 0}) - expected) < 1e-10);
    }
}

TEST_CASE("tau examples") {
    CharacterTable chi = character_from_q(kQ7);
    CHECK(std::abs(tau(0, chi)) < 1e-12);
    CHECK(std::abs(tau(1, chi)) == Approx(std::sqrt(7.0)));

    CharacterTable one = character_from_q(EisInt{1, 0});
    for (int64_t r = 0; r < 4; ++r) CHECK(tau(r, one) == Complex{1.0, 0.0});

    // tau(r, chi) = conj(chi(r)) tau(1, chi) for primitive chi and (r, n) = 1
    TauSum ts(chi);
    for (int64_t r = 1; r < 7; ++r) {
        Complex expected = std::conj(chi.value_at(r)) * ts.eval(1);
        CHECK(std::abs(ts.eval(r) - expected) < 1e-10);
    }
}

TEST_CASE("poisson summation") {
    CharacterTable chi7 = character_from_q(kQ7);
    CHECK(poisson_discrepancy(chi7, 5.0) <= 1e-8);

    CharacterTable one = character_from_q(EisInt{1, 0});
    CHECK(poisson_discrepancy(one, 3.0) <= 1e-10);

    CharacterTable chi5 = character_from_q(GaussInt{-1, 2});
    CHECK(poisson_discrepancy(chi5, 2.0) <= 1e-8);
}

TEST_CASE("tau relation against ring sums") {
    // cubic: tau(r, chi_q) = conj((sqrt(-3)/q)_3) g3(r, q)
    for (EisInt q : {kQ7, EisInt{1, 3}, kQ7 * kQ7}) {
        CharacterTable chi = character_from_q(q);
        TauSum ts(chi);
        GaussSumW ev(q);
        int e = CubicSymbol(q).exponent(EisInt{1, 2});
        Complex fac = std::conj(std::polar(1.0, 2.0 * std::acos(-1.0) * e / 3.0));
        for (int64_t r = 0; r <= 3; ++r) {
            CHECK(std::abs(ts.eval(r) - fac * ev.eval(r)) < 1e-8);
        }
    }
    // quartic: tau(r, chi_q) = conj((-i/q)_4) lambda0(q) g4(r, q)
    for (GaussInt q : {GaussInt{-1, 2}, GaussInt{3, 2}, GaussInt{-1, 2} * GaussInt{-1, 2}}) {
        CharacterTable chi = character_from_q(q);
        TauSum ts(chi);
        GaussSumI ev(q);
        int e = QuarticSymbol(q).exponent(GaussInt{0, -1});
        Complex fac = std::conj(std::polar(1.0, 2.0 * std::acos(-1.0) * e / 4.0)) *
                      static_cast<double>(lambda0(q));
        for (int64_t r = 0; r <= 3; ++r) {
            CHECK(std::abs(ts.eval(r) - fac * ev.eval(r)) < 1e-8);
        }
    }
}
