#include "cqmv/gauss_sums.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>

namespace cqmv {

int64_t residue_cap() {
    static const int64_t cap = [] {
        const char* v = std::getenv("CQMV_NORM_CAP");
        if (v == nullptr || *v == '\0') return kDefaultResidueCap;
        int64_t parsed = static_cast<int64_t>(std::strtod(v, nullptr));
        return parsed > 0 ? parsed : kDefaultResidueCap;
    }();
    return cap;
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct ExtGcd {
    int64_t g, s, t;  // s*x + t*y = g
};

ExtGcd ext_gcd(int64_t x, int64_t y) {
    if (y == 0) return {x, 1, 0};
    ExtGcd r = ext_gcd(y, x % y);
    return {r.g, r.t, r.s - (x / y) * r.t};
}

// Column Hermite form of the rank-2 lattice spanned by v1, v2 in Z^2:
// basis (h11, 0), (w_x, h22) with h11 * h22 = |det|.
struct Hnf {
    int64_t h11, h22, wx;
};

Hnf lattice_hnf(int64_t v1x, int64_t v1y, int64_t v2x, int64_t v2y, int64_t det) {
    ExtGcd e = ext_gcd(v1y, v2y);
    int64_t g = e.g, s = e.s, t = e.t;
    if (g < 0) { g = -g; s = -s; t = -t; }
    if (g == 0) throw std::domain_error("lattice_hnf: degenerate lattice");
    int64_t wx = s * v1x + t * v2x;
    int64_t h11 = det / g;
    return {h11, g, mod_nonneg(wx, h11)};
}

std::vector<Complex> root_table(int64_t n) {
    std::vector<Complex> roots(static_cast<size_t>(n));
    for (int64_t k = 0; k < n; ++k) {
        roots[k] = std::polar(1.0, kTwoPi * static_cast<double>(k) / static_cast<double>(n));
    }
    return roots;
}

std::vector<Complex> order_roots(int order) {
    std::vector<Complex> r(static_cast<size_t>(order));
    for (int e = 0; e < order; ++e) r[e] = std::polar(1.0, kTwoPi * e / order);
    return r;
}

}  // namespace

ResidueSystemW residues_mod_w(EisInt n, int64_t cap) {
    if (is_zero(n)) throw std::domain_error("residues_mod_w: zero modulus");
    int64_t N = norm_w(n);
    if (N > cap) throw capacity_error("residues_mod_w: norm above residue cap");
    // columns n = (a, b) and n*omega = (-b, a-b)
    Hnf h = lattice_hnf(n.a, n.b, -n.b, n.a - n.b, N);
    ResidueSystemW out;
    out.modulus = n;
    out.elements.reserve(static_cast<size_t>(N));
    for (int64_t x = 0; x < h.h11; ++x) {
        for (int64_t y = 0; y < h.h22; ++y) {
            out.elements.push_back({x, y});
        }
    }
    return out;
}

ResidueSystemI residues_mod_i(GaussInt n, int64_t cap) {
    if (is_zero(n)) throw std::domain_error("residues_mod_i: zero modulus");
    int64_t N = norm_i(n);
    if (N > cap) throw capacity_error("residues_mod_i: norm above residue cap");
    // columns n = (a, b) and n*i = (-b, a)
    Hnf h = lattice_hnf(n.a, n.b, -n.b, n.a, N);
    ResidueSystemI out;
    out.modulus = n;
    out.elements.reserve(static_cast<size_t>(N));
    for (int64_t x = 0; x < h.h11; ++x) {
        for (int64_t y = 0; y < h.h22; ++y) {
            out.elements.push_back({x, y});
        }
    }
    return out;
}

Complex phase_etilde_w(EisInt num, EisInt den) {
    if (is_zero(den)) throw std::domain_error("phase_etilde_w: zero denominator");
    int64_t N = norm_w(den);
    EisInt dc = conj_w(den);
    // omega-coordinate of num * conj(den) / N
    __int128 B = static_cast<__int128>(num.a) * dc.b + static_cast<__int128>(num.b) * dc.a -
                 static_cast<__int128>(num.b) * dc.b;
    int64_t k = mod_nonneg(B, N);
    return std::polar(1.0, kTwoPi * static_cast<double>(k) / static_cast<double>(N));
}

Complex phase_etilde_i(GaussInt num, GaussInt den) {
    if (is_zero(den)) throw std::domain_error("phase_etilde_i: zero denominator");
    int64_t N = norm_i(den);
    // imaginary part of num * conj(den) / N
    __int128 B = static_cast<__int128>(num.b) * den.a - static_cast<__int128>(num.a) * den.b;
    int64_t k = mod_nonneg(B, N);
    return std::polar(1.0, kTwoPi * static_cast<double>(k) / static_cast<double>(N));
}

GaussSumW::GaussSumW(EisInt n, int64_t cap) : res_(residues_mod_w(n, cap)), N_(norm_w(n)) {
    if (!is_primary_w(n) && !is_unit_w(n)) {
        throw std::domain_error("GaussSumW: modulus must be primary or a unit");
    }
    size_t count = res_.elements.size();
    sym_.resize(count);
    u_.resize(count);
    v_.resize(count);
    if (is_unit_w(n)) {
        sym_[0] = 0;
        u_[0] = v_[0] = 0;
    } else {
        CubicSymbol sym(n);
        EisInt nc = conj_w(n);
        for (size_t j = 0; j < count; ++j) {
            EisInt x = res_.elements[j];
            sym_[j] = static_cast<int8_t>(sym.exponent(x));
            // x*conj(n) = c + d*omega; omega-coord of r*x*conj(n) is r.a*d + r.b*(c - d)
            __int128 c = static_cast<__int128>(x.a) * nc.a - static_cast<__int128>(x.b) * nc.b;
            __int128 d = static_cast<__int128>(x.a) * nc.b + static_cast<__int128>(x.b) * nc.a -
                         static_cast<__int128>(x.b) * nc.b;
            u_[j] = mod_nonneg(d, N_);
            v_[j] = mod_nonneg(c - d, N_);
        }
    }
    roots_ = root_table(N_);
    unit_roots_ = order_roots(3);
}

Complex GaussSumW::eval(EisInt r) const {
    int64_t ra = mod_nonneg(r.a, N_);
    int64_t rb = mod_nonneg(r.b, N_);
    Complex acc{0.0, 0.0};
    for (size_t j = 0; j < sym_.size(); ++j) {
        if (sym_[j] == kNoValue) continue;
        int64_t k = (ra * u_[j] + rb * v_[j]) % N_;
        acc += unit_roots_[sym_[j]] * roots_[k];
    }
    return acc;
}

GaussSumI::GaussSumI(GaussInt n, int64_t cap) : res_(residues_mod_i(n, cap)), N_(norm_i(n)) {
    if (!is_primary_i(n) && !is_unit_i(n)) {
        throw std::domain_error("GaussSumI: modulus must be primary or a unit");
    }
    size_t count = res_.elements.size();
    sym_.resize(count);
    u_.resize(count);
    v_.resize(count);
    if (is_unit_i(n)) {
        sym_[0] = 0;
        u_[0] = v_[0] = 0;
    } else {
        QuarticSymbol sym(n);
        for (size_t j = 0; j < count; ++j) {
            GaussInt x = res_.elements[j];
            sym_[j] = static_cast<int8_t>(sym.exponent(x));
            // x*conj(n) = c + d*i; Im(r*x*conj(n)) = r.a*d + r.b*c
            __int128 c = static_cast<__int128>(x.a) * n.a + static_cast<__int128>(x.b) * n.b;
            __int128 d = static_cast<__int128>(x.b) * n.a - static_cast<__int128>(x.a) * n.b;
            u_[j] = mod_nonneg(d, N_);
            v_[j] = mod_nonneg(c, N_);
        }
    }
    roots_ = root_table(N_);
    unit_roots_ = order_roots(4);
}

Complex GaussSumI::eval(GaussInt r) const {
    int64_t ra = mod_nonneg(r.a, N_);
    int64_t rb = mod_nonneg(r.b, N_);
    Complex acc{0.0, 0.0};
    for (size_t j = 0; j < sym_.size(); ++j) {
        if (sym_[j] == kNoValue) continue;
        int64_t k = (ra * u_[j] + rb * v_[j]) % N_;
        acc += unit_roots_[sym_[j]] * roots_[k];
    }
    return acc;
}

Complex g3(EisInt r, EisInt n) { return GaussSumW(n).eval(r); }
Complex g4(GaussInt r, GaussInt n) { return GaussSumI(n).eval(r); }

TauSum::TauSum(const CharacterTable& chi) : n_(chi.modulus), roots_(root_table(chi.modulus)) {
    std::vector<Complex> unit = order_roots(chi.order);
    chival_.resize(static_cast<size_t>(n_));
    for (int64_t x = 0; x < n_; ++x) {
        chival_[x] = chi.values[x] == kNoValue ? Complex{0.0, 0.0} : unit[chi.values[x]];
    }
}

Complex TauSum::eval(int64_t r) const {
    int64_t rm = mod_nonneg(r, n_);
    Complex acc{0.0, 0.0};
    for (int64_t x = 0; x < n_; ++x) {
        if (chival_[x] == Complex{0.0, 0.0}) continue;
        acc += chival_[x] * roots_[(rm * x) % n_];
    }
    return acc;
}

Complex tau(int64_t r, const CharacterTable& chi) { return TauSum(chi).eval(r); }

double poisson_discrepancy(const CharacterTable& chi, double M) {
    const int64_t q = chi.modulus;
    // exp(-pi t^2) < 1e-16 beyond this
    const double t0 = std::sqrt(16.0 * std::log(10.0) / std::numbers::pi);
    auto w = [](double t) { return std::exp(-std::numbers::pi * t * t); };

    Complex lhs{0.0, 0.0};
    int64_t mmax = static_cast<int64_t>(std::ceil(M * t0)) + 1;
    for (int64_t m = -mmax; m <= mmax; ++m) {
        int8_t e = chi.at(m);
        if (e == kNoValue) continue;
        lhs += std::polar(1.0, kTwoPi * e / chi.order) * w(static_cast<double>(m) / M);
    }

    TauSum ts(chi);
    Complex rhs{0.0, 0.0};
    int64_t kmax = static_cast<int64_t>(std::ceil(static_cast<double>(q) * t0 / M)) + 1;
    for (int64_t k = -kmax; k <= kmax; ++k) {
        rhs += ts.eval(k) * w(static_cast<double>(k) * M / static_cast<double>(q));
    }
    rhs *= M / static_cast<double>(q);

    return std::max(std::abs(lhs.real() - rhs.real()), std::abs(lhs.imag() - rhs.imag()));
}

}  // namespace cqmv
