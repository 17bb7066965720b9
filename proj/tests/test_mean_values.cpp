#include <doctest.h>

#include <cmath>

#include "cqmv/mean_values.hpp"
#include "cqmv/modular.hpp"

using namespace cqmv;
using doctest::Approx;

TEST_CASE("char_sum_partial") {
    CharacterTable one = character_from_q(EisInt{1, 0});
    CHECK(char_sum_partial(one, 10.0) == Complex{10.0, 0.0});
    CHECK(char_sum_partial(one, 10.9) == Complex{10.0, 0.0});
    CHECK(char_sum_partial(one, 0.5) == Complex{0.0, 0.0});

    for (const CharacterTable& chi : set_S(7, 3)) {
        CHECK(std::abs(char_sum_partial(chi, 10.0)) < 1e-14);   // 1 + chi(2) + chi(3) = 0
        CHECK(std::abs(char_sum_partial(chi, 7.0)) < 1e-14);    // full period
        CHECK(std::abs(char_sum_partial(chi, 700.0)) < 1e-14);  // many full periods
    }
}

TEST_CASE("exact sums convert exactly") {
    ExactSum s3{3, {5, 2, 2, 0}};
    CHECK(s3.value() == Complex{3.0, 0.0});
    ExactSum s4{4, {7, 1, 3, 1}};
    CHECK(s4.value() == Complex{4.0, 0.0});
    ExactSum d = s4 - ExactSum{4, {1, 1, 1, 1}};
    CHECK(d.counts == std::array<int64_t, 4>{6, 0, 2, 0});
}

TEST_CASE("S_total examples") {
    CHECK(S_total(3, 10, 6).total == Complex{10.0, 0.0});
    CHECK(S_total(3, 10, 7).total == Complex{10.0, 0.0});
    CHECK_THROWS_AS(S_total(3, 0.5, 7), std::domain_error);
    CHECK_THROWS_AS(S_total(5, 10, 10), std::domain_error);

    SumOptions tiny;
    tiny.budget = 10;
    CHECK_THROWS_AS(S_total(3, 1000, 500, tiny), budget_error);
}

TEST_CASE("direct and period methods agree exactly") {
    for (int order : {3, 4}) {
        for (double X : {10.0, 250.0, 2000.0}) {
            for (double Y : {10.0, 120.0, 500.0}) {
                SumOptions direct;
                direct.method = SumMethod::direct;
                SumReport a = S_total(order, X, Y);
                SumReport b = S_total(order, X, Y, direct);
                CHECK(a.total_counts == b.total_counts);
                CHECK(a.total == b.total);
                CHECK(std::abs(a.total.imag()) <= 1e-9 * (1.0 + std::abs(a.total.real())));
            }
        }
    }
}

TEST_CASE("power part") {
    CHECK(power_part(3, 50, 342) == 50.0);
    // 343 = 7^3 joins: both characters reduce to the coprimality indicator
    CHECK(power_part(3, 100, 343) == 100.0 + 2 * 86.0);
    SumReport rep = S_total(3, 100, 343);
    CHECK(rep.total.real() == rep.power_part + rep.remainder.real());
    CHECK(rep.total.imag() == 0.0);
    CHECK(rep.power_counts.value().imag() == 0.0);
}

TEST_CASE("additivity over modulus ranges") {
    for (int order : {3, 4}) {
        SumReport a = S_total(order, 200, 60);
        SumReport b = S_total(order, 200, 120);
        ExactSum diff = b.total_counts - a.total_counts;
        ExactSum manual;
        manual.order = order;
        std::vector<int32_t> spf = smallest_prime_factor_sieve(120);
        for (int64_t n : admissible_moduli(120, order)) {
            if (n <= 60) continue;
            for (const CharacterTable& chi : set_S(n, order, &spf)) {
                manual += char_sum_counts(chi, 200);
            }
        }
        CHECK(diff == manual);
    }
}

TEST_CASE("euler factors") {
    CHECK(euler_factor(2, 1.0, 3) == Approx(1.0 - 0.25).epsilon(1e-14));
    CHECK(euler_factor(3, 1.0, 3) == Approx(1.0));
    CHECK(euler_factor(7, 1.0, 3) == Approx((1.0 - 1.0 / 49) * (1.0 - 1.0 / 49)).epsilon(1e-14));
    CHECK(euler_factor(2, 1.0, 4) == Approx(1.0));
    CHECK(euler_factor(5, 1.0, 4) == Approx((1.0 - 1.0 / 25) * (1.0 - 1.0 / 25)).epsilon(1e-14));
    CHECK(euler_factor(3, 1.0, 4) == Approx(1.0 - 1.0 / 9).epsilon(1e-14));
    CHECK_THROWS_AS(euler_factor(7, 0.4, 3), std::domain_error);

    for (int order : {3, 4}) {
        for (int64_t p : primes_up_to(3000)) {
            CHECK(std::abs(euler_factor(p, 1.0, order) - euler_factor_s1_closed(p, order)) <= 1e-12);
        }
    }
}

TEST_CASE("constants") {
    ConstantResult c1 = compute_constant(3, 100000);
    ConstantResult c2 = compute_constant(4, 100000);
    CHECK(c1.C > 0);
    CHECK(c2.C > 0);
    // frozen references from an independent evaluation of the same products
    CHECK(c1.C == Approx(0.5045601398).epsilon(1e-9));
    CHECK(c2.C == Approx(0.6194567336).epsilon(1e-9));
    CHECK(c1.product.value == Approx(0.661420670295).epsilon(1e-10));
    CHECK(c2.product.value == Approx(0.767453289609).epsilon(1e-10));
    CHECK(c1.product.tail_bound > 0);
    CHECK_THROWS_AS(compute_constant(3, 50), std::domain_error);

    CHECK(std::abs(L1_series(3) - L1_closed_form(3)) <= 1e-10);
    CHECK(std::abs(L1_series(4) - L1_closed_form(4)) <= 1e-10);
    CHECK(L1_closed_form(3) == Approx(0.604599788078073).epsilon(1e-14));
    CHECK(L1_closed_form(4) == Approx(0.785398163397448).epsilon(1e-14));
}

TEST_CASE("main term predictor") {
    double v = main_term_predict(3, 100, 50);
    CHECK(v > 0);
    CHECK(main_term_predict(3, 200, 50) == Approx(2 * v).epsilon(1e-12));
    CHECK(main_term_predict(3, 50, 50) ==
          Approx(main_term_predict(3, 1, 50) * 50).epsilon(1e-12));
    CHECK_THROWS_AS(main_term_predict(3, 100, 1.0), std::domain_error);
}

TEST_CASE("transition scan") {
    ScanResult res = transition_scan(3, 500, {50, 200, 400});
    REQUIRE(res.reports.size() == 3);
    CHECK_FALSE(res.truncated);
    int64_t prev_moduli = 0;
    for (const SumReport& rep : res.reports) {
        CHECK(rep.total.real() == rep.power_part + rep.remainder.real());
        CHECK(std::abs(rep.total.imag()) <= 1e-9 * (1.0 + std::abs(rep.total.real())));
        CHECK(rep.moduli_count >= prev_moduli);
        prev_moduli = rep.moduli_count;
    }
    // reports match standalone evaluation
    SumReport solo = S_total(3, 500, 200);
    CHECK(solo.total_counts == res.reports[1].total_counts);
    CHECK(solo.char_count == res.reports[1].char_count);

    SumOptions tiny;
    tiny.budget = 50;
    ScanResult cut = transition_scan(3, 500, {10, 200, 400}, tiny);
    CHECK(cut.truncated);
    CHECK(cut.reports.size() < 3);
}

TEST_CASE("thread count does not change results") {
    SumOptions seq;
    seq.threads = 1;
    SumOptions par;
    par.threads = 4;
    SumReport a = S_total(3, 2000, 400, seq);
    SumReport b = S_total(3, 2000, 400, par);
    CHECK(a.total_counts == b.total_counts);
    CHECK(a.power_counts == b.power_counts);
    CHECK(a.total == b.total);
    CHECK(a.char_count == b.char_count);
}

TEST_CASE("work estimate grows with Y") {
    int64_t w1 = estimate_work(3, 100, 100, SumMethod::period);
    int64_t w2 = estimate_work(3, 100, 1000, SumMethod::period);
    CHECK(w1 > 0);
    CHECK(w2 > w1);
    CHECK(estimate_work(3, 100, 100, SumMethod::direct) > w1);
}
