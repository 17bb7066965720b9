#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "cqmv/characters.hpp"
#include "cqmv/types.hpp"

namespace cqmv {

// Partial character sum held as exact exponent counts: counts[e] is the
// number of m in range with chi(m) = e(e / order). Conversion to a complex
// value happens once, with the real/imaginary parts formed directly from
// the counts so that conjugate-symmetric sums come out exactly real.
struct ExactSum {
    int order = 3;
    std::array<int64_t, 4> counts{};

    Complex value() const;
    ExactSum& operator+=(const ExactSum& o);
    ExactSum operator-(const ExactSum& o) const;
    friend bool operator==(const ExactSum&, const ExactSum&) = default;
};

enum class SumMethod { period, direct };

// Exact sum over 1 <= m <= limit of chi(m), as counts.
ExactSum char_sum_counts(const CharacterTable& chi, int64_t limit, SumMethod method = SumMethod::period);

// Exact sum over 1 <= m <= floor(X) of chi(m).
Complex char_sum_partial(const CharacterTable& chi, double X);

struct SumReport {
    int order = 3;
    double X = 0, Y = 0;
    Complex total{};
    double power_part = 0;  // contribution of n that are perfect order-th powers
    Complex remainder{};
    double predictor = 0;  // C_i X Y^(1/i) / sqrt(log Y), 0 when Y <= 1
    double ratio = 0;      // total.re / predictor
    int64_t moduli_count = 0;
    int64_t char_count = 0;
    double elapsed_ms = 0;
    ExactSum total_counts{};
    ExactSum power_counts{};
};

struct SumOptions {
    SumMethod method = SumMethod::period;
    int threads = 0;  // 0 = hardware concurrency
    int64_t budget = kDefaultBudget;
    int64_t constant_cutoff = 1000000;
};

SumReport S_total(int order, double X, double Y, const SumOptions& opt = {});
double power_part(int order, double X, double Y, const SumOptions& opt = {});

// Euler factor of f(s) (order 3) resp. h(s) (order 4) at the prime p.
double euler_factor(int64_t p, double s, int order);
// Same factor at s = 1 in simplified closed form; the independent route.
double euler_factor_s1_closed(int64_t p, int order);

struct EulerProductResult {
    double value = 0;
    int64_t prime_cutoff = 0;
    double tail_bound = 0;
};

// f(1) resp. h(1) over primes p <= P.
EulerProductResult euler_product(int order, int64_t P);

struct ConstantResult {
    double C = 0;
    EulerProductResult product;
};

// The main-term constants: C1 for order 3, C2 for order 4.
ConstantResult compute_constant(int order, int64_t P);

// Closed forms and direct-series evaluations of L(1, chi) for the
// non-principal character mod 3 resp. mod 4.
double L1_closed_form(int order);
double L1_series(int order);

// C_order * X * Y^(1/order) / sqrt(ln Y); Y > 1 required.
double main_term_predict(int order, double X, double Y);

struct ScanResult {
    std::vector<SumReport> reports;
    bool truncated = false;  // budget ran out before the full Y list
};

ScanResult transition_scan(int order, double X, std::vector<double> Ys, const SumOptions& opt = {});

// Estimated elementary steps for S_total at these parameters.
int64_t estimate_work(int order, double X, double Y, SumMethod method);

}  // namespace cqmv
