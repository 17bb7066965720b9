#include "cqmv/mean_values.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "cqmv/modular.hpp"

namespace cqmv {

namespace {

const double kSqrt3Half = std::sqrt(3.0) / 2.0;

int64_t floor_to_int(double x) { return static_cast<int64_t>(std::floor(x)); }

// Integer test for n == t^order.
bool is_perfect_power(int64_t n, int order) {
    if (n < 1) return false;
    int64_t t = static_cast<int64_t>(std::llround(std::pow(static_cast<double>(n), 1.0 / order)));
    for (int64_t c = std::max<int64_t>(1, t - 2); c <= t + 2; ++c) {
        __int128 v = 1;
        for (int i = 0; i < order; ++i) v *= c;
        if (v == n) return true;
    }
    return false;
}

void parallel_for(int64_t count, int threads, const std::function<void(int64_t)>& fn) {
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    if (threads == 1 || count < 2) {
        for (int64_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int64_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    std::vector<std::thread> pool;
    int nthreads = static_cast<int>(std::min<int64_t>(threads, count));
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                int64_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mu);
                    if (!err) err = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

int omega_of(int64_t n) {
    return static_cast<int>(factor_prime_powers(static_cast<uint64_t>(n)).size());
}

}  // namespace

Complex ExactSum::value() const {
    if (order == 3) {
        double re = static_cast<double>(counts[0]) - 0.5 * static_cast<double>(counts[1] + counts[2]);
        double im = kSqrt3Half * static_cast<double>(counts[1] - counts[2]);
        return {re, im};
    }
    return {static_cast<double>(counts[0] - counts[2]), static_cast<double>(counts[1] - counts[3])};
}

ExactSum& ExactSum::operator+=(const ExactSum& o) {
    for (int e = 0; e < 4; ++e) counts[e] += o.counts[e];
    return *this;
}

ExactSum ExactSum::operator-(const ExactSum& o) const {
    ExactSum r = *this;
    for (int e = 0; e < 4; ++e) r.counts[e] -= o.counts[e];
    return r;
}

ExactSum char_sum_counts(const CharacterTable& chi, int64_t limit, SumMethod method) {
    ExactSum out;
    out.order = chi.order;
    if (limit < 1) return out;
    int64_t n = chi.modulus;
    if (method == SumMethod::direct) {
        for (int64_t m = 1; m <= limit; ++m) {
            int8_t e = chi.values[m % n];
            if (e != kNoValue) ++out.counts[e];
        }
        return out;
    }
    std::array<int64_t, 4> period{};
    for (int64_t m = 0; m < n; ++m) {
        if (chi.values[m] != kNoValue) ++period[chi.values[m]];
    }
    int64_t full = limit / n, rest = limit % n;
    for (int e = 0; e < chi.order; ++e) out.counts[e] = full * period[e];
    for (int64_t m = 1; m <= rest; ++m) {
        int8_t e = chi.values[m];
        if (e != kNoValue) ++out.counts[e];
    }
    return out;
}

Complex char_sum_partial(const CharacterTable& chi, double X) {
    return char_sum_counts(chi, floor_to_int(X)).value();
}

int64_t estimate_work(int order, double X, double Y, SumMethod method) {
    int64_t Yf = floor_to_int(Y);
    __int128 work = 0;
    for (int64_t n : admissible_moduli(Yf, order)) {
        __int128 chars = __int128{1} << omega_of(n);
        work += chars * n;
        if (method == SumMethod::direct) work += chars * floor_to_int(X);
        if (work > kDefaultBudget * __int128{1000}) break;
    }
    return work > (__int128{1} << 62) ? (int64_t{1} << 62) : static_cast<int64_t>(work);
}

namespace {

struct PerModulus {
    int64_t n = 0;
    ExactSum sum;
    int64_t chars = 0;
    bool is_power = false;
};

// Shared machinery for S_total and transition_scan: per-modulus exact
// contributions, computed in parallel, reduced in ascending-n order.
std::vector<PerModulus> per_modulus_sums(int order, int64_t Xf, int64_t Yf, const SumOptions& opt) {
    std::vector<int64_t> moduli = admissible_moduli(Yf, order);
    std::vector<int32_t> spf = smallest_prime_factor_sieve(std::max<int64_t>(Yf, 2));
    std::vector<PerModulus> results(moduli.size());
    parallel_for(static_cast<int64_t>(moduli.size()), opt.threads, [&](int64_t idx) {
        int64_t n = moduli[idx];
        PerModulus& pm = results[idx];
        pm.n = n;
        pm.sum.order = order;
        pm.is_power = is_perfect_power(n, order);
        for (const CharacterTable& chi : set_S(n, order, &spf)) {
            pm.sum += char_sum_counts(chi, Xf, opt.method);
            ++pm.chars;
        }
    });
    return results;
}

SumReport assemble_report(int order, double X, double Y, const std::vector<PerModulus>& parts,
                          int64_t constant_cutoff) {
    SumReport rep;
    rep.order = order;
    rep.X = X;
    rep.Y = Y;
    rep.total_counts.order = order;
    rep.power_counts.order = order;
    for (const PerModulus& pm : parts) {
        rep.total_counts += pm.sum;
        if (pm.is_power) rep.power_counts += pm.sum;
        ++rep.moduli_count;
        rep.char_count += pm.chars;
    }
    rep.total = rep.total_counts.value();
    rep.power_part = rep.power_counts.value().real();
    rep.remainder = (rep.total_counts - rep.power_counts).value();
    if (Y > 1.0) {
        ConstantResult c = compute_constant(order, constant_cutoff);
        rep.predictor = c.C * X * std::pow(Y, 1.0 / order) / std::sqrt(std::log(Y));
        rep.ratio = rep.total.real() / rep.predictor;
    }
    return rep;
}

}  // namespace

SumReport S_total(int order, double X, double Y, const SumOptions& opt) {
    if (order != 3 && order != 4) throw std::domain_error("S_total: order must be 3 or 4");
    if (X < 1.0 || Y < 1.0) throw std::domain_error("S_total: X and Y must be >= 1");
    if (estimate_work(order, X, Y, opt.method) > opt.budget) {
        throw budget_error("S_total: estimated work exceeds budget");
    }
    auto t0 = std::chrono::steady_clock::now();
    std::vector<PerModulus> parts = per_modulus_sums(order, floor_to_int(X), floor_to_int(Y), opt);
    SumReport rep = assemble_report(order, X, Y, parts, opt.constant_cutoff);
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

double power_part(int order, double X, double Y, const SumOptions& opt) {
    return S_total(order, X, Y, opt).power_part;
}

double euler_factor(int64_t p, double s, int order) {
    if (order != 3 && order != 4) throw std::domain_error("euler_factor: order must be 3 or 4");
    if (!(s > 0.5)) throw std::domain_error("euler_factor: s must exceed 1/2");
    int chi0, chi1;
    if (order == 3) {
        chi0 = p % 3 == 0 ? 0 : 1;
        chi1 = p % 3 == 0 ? 0 : (p % 3 == 1 ? 1 : -1);
    } else {
        chi0 = p % 2 == 0 ? 0 : 1;
        chi1 = p % 2 == 0 ? 0 : (p % 4 == 1 ? 1 : -1);
    }
    double u = std::pow(static_cast<double>(p), -s);
    double lin = (1.0 - chi0 * u) * (1.0 - chi1 * u);
    double corr = 1.0 + 0.5 * (chi0 + chi1) * (1.0 - 1.0 / static_cast<double>(p)) * u / (1.0 - u);
    return lin * corr * corr;
}

double euler_factor_s1_closed(int64_t p, int order) {
    if (p % (order == 3 ? 3 : 2) == 0) return 1.0;
    double t = 1.0 - 1.0 / (static_cast<double>(p) * static_cast<double>(p));
    bool split = (order == 3) ? (p % 3 == 1) : (p % 4 == 1);
    return split ? t * t : t;
}

EulerProductResult euler_product(int order, int64_t P) {
    EulerProductResult out;
    out.prime_cutoff = P;
    double v = 1.0;
    for (int64_t p : primes_up_to(P)) v *= euler_factor(p, 1.0, order);
    out.value = v;
    out.tail_bound = 3.0 / (static_cast<double>(P) * std::log(static_cast<double>(P)));
    return out;
}

double L1_closed_form(int order) {
    if (order == 3) return std::numbers::pi / (3.0 * std::sqrt(3.0));
    if (order == 4) return std::numbers::pi / 4.0;
    throw std::domain_error("L1_closed_form: order must be 3 or 4");
}

namespace {

// sum_{k >= K} g(k) via Euler-Maclaurin: integral + g/2 - g'/12 + g'''/720.
double em_tail(double K, double m, double j1, double j2) {
    auto g = [&](double t) { return 1.0 / (m * t + j1) - 1.0 / (m * t + j2); };
    auto gp = [&](double t) {
        return -m / ((m * t + j1) * (m * t + j1)) + m / ((m * t + j2) * (m * t + j2));
    };
    auto gppp = [&](double t) {
        return -6.0 * m * m * m / std::pow(m * t + j1, 4) + 6.0 * m * m * m / std::pow(m * t + j2, 4);
    };
    double integral = (1.0 / m) * std::log((m * K + j2) / (m * K + j1));
    return integral + g(K) / 2.0 - gp(K) / 12.0 + gppp(K) / 720.0;
}

}  // namespace

double L1_series(int order) {
    const int64_t K = 100000;
    double m, j1, j2;
    if (order == 3) {
        m = 3; j1 = 1; j2 = 2;  // 1 - 1/2 + 1/4 - 1/5 + ...
    } else if (order == 4) {
        m = 4; j1 = 1; j2 = 3;  // 1 - 1/3 + 1/5 - 1/7 + ...
    } else {
        throw std::domain_error("L1_series: order must be 3 or 4");
    }
    double s = 0.0;
    for (int64_t k = 0; k < K; ++k) {
        double t = static_cast<double>(k);
        s += 1.0 / (m * t + j1) - 1.0 / (m * t + j2);
    }
    return s + em_tail(static_cast<double>(K), m, j1, j2);
}

ConstantResult compute_constant(int order, int64_t P) {
    if (order != 3 && order != 4) throw std::domain_error("compute_constant: order must be 3 or 4");
    if (P < 100) throw std::domain_error("compute_constant: cutoff must be at least 100");
    static std::once_flag l1_checked;
    std::call_once(l1_checked, [] {
        for (int ord : {3, 4}) {
            if (std::abs(L1_series(ord) - L1_closed_form(ord)) > 1e-10) {
                throw std::logic_error("compute_constant: L(1) closed form failed its series check");
            }
        }
    });
    ConstantResult out;
    out.product = euler_product(order, P);
    // lim_{s -> 1/order} (s - 1/order) L(order*s, chi0) = (1/order) * (local
    // factor of zeta removed at the conductor prime): (1/3)(1 - 1/3) = 2/9,
    // (1/4)(1 - 1/2) = 1/8.
    double limit = order == 3 ? 2.0 / 9.0 : 1.0 / 8.0;
    out.C = (static_cast<double>(order) / std::sqrt(std::numbers::pi)) *
            std::sqrt(limit * L1_closed_form(order) * out.product.value);
    return out;
}

double main_term_predict(int order, double X, double Y) {
    if (!(Y > 1.0)) throw std::domain_error("main_term_predict: Y must exceed 1");
    struct Cache {
        std::once_flag flag;
        double C = 0;
    };
    static Cache cache[2];
    Cache& c = cache[order == 3 ? 0 : 1];
    std::call_once(c.flag, [&] { c.C = compute_constant(order, 1000000).C; });
    return c.C * X * std::pow(Y, 1.0 / order) / std::sqrt(std::log(Y));
}

ScanResult transition_scan(int order, double X, std::vector<double> Ys, const SumOptions& opt) {
    std::sort(Ys.begin(), Ys.end());
    ScanResult out;
    if (Ys.empty()) return out;
    auto t0 = std::chrono::steady_clock::now();

    // Covered prefix of the Y list under the budget.
    size_t covered = Ys.size();
    while (covered > 0 && estimate_work(order, X, Ys[covered - 1], opt.method) > opt.budget) {
        --covered;
    }
    out.truncated = covered < Ys.size();
    if (covered == 0) return out;

    double Ymax = Ys[covered - 1];
    std::vector<PerModulus> parts = per_modulus_sums(order, floor_to_int(X), floor_to_int(Ymax), opt);
    size_t pos = 0;
    std::vector<PerModulus> prefix;
    prefix.reserve(parts.size());
    for (size_t yi = 0; yi < covered; ++yi) {
        while (pos < parts.size() && static_cast<double>(parts[pos].n) <= Ys[yi]) {
            prefix.push_back(parts[pos]);
            ++pos;
        }
        SumReport rep = assemble_report(order, X, Ys[yi], prefix, opt.constant_cutoff);
        rep.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        out.reports.push_back(rep);
    }
    return out;
}

}  // namespace cqmv
