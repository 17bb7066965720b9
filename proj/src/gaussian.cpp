#include "cqmv/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "cqmv/modular.hpp"

namespace cqmv {

namespace {

int64_t checked_coord(__int128 v, const char* what) {
    if (v >= kCoordLimit || v <= -kCoordLimit) throw std::overflow_error(what);
    return static_cast<int64_t>(v);
}

int64_t round_div(__int128 n, __int128 d) {
    __int128 q = n >= 0 ? (n + d / 2) / d : -((-n + d / 2) / d);
    return static_cast<int64_t>(q);
}

}  // namespace

GaussInt operator+(GaussInt x, GaussInt y) { return {x.a + y.a, x.b + y.b}; }
GaussInt operator-(GaussInt x, GaussInt y) { return {x.a - y.a, x.b - y.b}; }
GaussInt operator-(GaussInt x) { return {-x.a, -x.b}; }

GaussInt operator*(GaussInt x, GaussInt y) {
    __int128 a = x.a, b = x.b, c = y.a, d = y.b;
    return {checked_coord(a * c - b * d, "GaussInt multiply overflow"),
            checked_coord(a * d + b * c, "GaussInt multiply overflow")};
}

std::ostream& operator<<(std::ostream& os, GaussInt z) {
    return os << z.a << (z.b < 0 ? "" : "+") << z.b << "i";
}

int64_t norm_i(GaussInt z) {
    __int128 n = static_cast<__int128>(z.a) * z.a + static_cast<__int128>(z.b) * z.b;
    if (n > std::numeric_limits<int64_t>::max()) throw std::overflow_error("norm_i overflow");
    return static_cast<int64_t>(n);
}

const std::array<GaussInt, 4>& units_i() {
    static const std::array<GaussInt, 4> u = {{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};
    return u;
}

bool is_unit_i(GaussInt z) { return !is_zero(z) && norm_i(z) == 1; }

bool is_primary_i(GaussInt z) {
    int64_t a = mod_nonneg(z.a, 4), b = mod_nonneg(z.b, 4);
    return (a == 1 && b == 0) || (a == 3 && b == 2);
}

UnitAndPrimaryI make_primary_i(GaussInt z) {
    if (is_zero(z) || norm_i(z) % 2 == 0) {
        throw std::domain_error("make_primary_i: no primary associate");
    }
    for (GaussInt u : units_i()) {
        GaussInt w = u * z;
        if (is_primary_i(w)) return {u, w};
    }
    throw std::logic_error("make_primary_i: unreachable");
}

bool divides_i(GaussInt d, GaussInt z) {
    if (is_zero(d)) return is_zero(z);
    __int128 N = norm_i(d);
    __int128 na = static_cast<__int128>(z.a) * d.a + static_cast<__int128>(z.b) * d.b;
    __int128 nb = static_cast<__int128>(z.b) * d.a - static_cast<__int128>(z.a) * d.b;
    return na % N == 0 && nb % N == 0;
}

GaussInt div_exact_i(GaussInt z, GaussInt d) {
    __int128 N = norm_i(d);
    if (N == 0) throw std::domain_error("div_exact_i: zero divisor");
    __int128 na = static_cast<__int128>(z.a) * d.a + static_cast<__int128>(z.b) * d.b;
    __int128 nb = static_cast<__int128>(z.b) * d.a - static_cast<__int128>(z.a) * d.b;
    if (na % N != 0 || nb % N != 0) throw std::domain_error("div_exact_i: not divisible");
    return {static_cast<int64_t>(na / N), static_cast<int64_t>(nb / N)};
}

namespace {

GaussInt canonical_associate_i(GaussInt z) {
    GaussInt best{0, 0};
    bool have = false;
    for (GaussInt u : units_i()) {
        GaussInt w = u * z;
        if (w.a < 0 || w.b < 0) continue;
        if (!have || w.a < best.a || (w.a == best.a && w.b < best.b)) {
            best = w;
            have = true;
        }
    }
    if (!have) throw std::logic_error("canonical_associate_i: no candidate");
    return best;
}

}  // namespace

GaussInt gcd_i(GaussInt x, GaussInt y) {
    if (is_zero(x) && is_zero(y)) throw std::domain_error("gcd_i: both inputs zero");
    while (!is_zero(y)) {
        __int128 N = norm_i(y);
        __int128 na = static_cast<__int128>(x.a) * y.a + static_cast<__int128>(x.b) * y.b;
        __int128 nb = static_cast<__int128>(x.b) * y.a - static_cast<__int128>(x.a) * y.b;
        GaussInt q{round_div(na, N), round_div(nb, N)};
        GaussInt r = x - q * y;
        x = y;
        y = r;
    }
    if (norm_i(x) % 2 != 0) return make_primary_i(x).primary;
    return canonical_associate_i(x);
}

std::vector<GaussInt> split_prime_i(int64_t p) {
    if (p < 2 || !is_prime_u64(static_cast<uint64_t>(p))) {
        throw std::domain_error("split_prime_i: input not prime");
    }
    if (p == 2 || p % 4 == 3) return {};
    int64_t bmax = static_cast<int64_t>(std::sqrt(static_cast<double>(p))) + 1;
    for (int64_t b = 1; b <= bmax; ++b) {
        int64_t disc = p - b * b;
        if (disc < 0) break;
        int64_t s = static_cast<int64_t>(std::sqrt(static_cast<double>(disc)));
        while (s * s > disc) --s;
        while ((s + 1) * (s + 1) <= disc) ++s;
        if (s * s != disc) continue;
        GaussInt pi = make_primary_i({s, b}).primary;
        GaussInt pj = conj_i(pi);
        std::vector<GaussInt> out{pi, pj};
        std::sort(out.begin(), out.end(),
                  [](GaussInt u, GaussInt v) { return u.b != v.b ? u.b < v.b : u.a < v.a; });
        return out;
    }
    throw std::logic_error("split_prime_i: no representation found");
}

PrimaryFactorizationI factor_primary_i(GaussInt n) {
    if (is_zero(n)) throw std::domain_error("factor_primary_i: zero input");
    int64_t N = norm_i(n);
    if (N % 2 == 0) throw std::domain_error("factor_primary_i: even norm");
    PrimaryFactorizationI out;
    GaussInt cur = n;
    for (const PrimePower& pp : factor_prime_powers(static_cast<uint64_t>(N))) {
        int64_t p = static_cast<int64_t>(pp.p);
        if (p % 4 == 1) {
            for (GaussInt pi : split_prime_i(p)) {
                int e = 0;
                while (divides_i(pi, cur)) {
                    cur = div_exact_i(cur, pi);
                    ++e;
                }
                if (e > 0) out.factors.push_back({pi, e});
            }
        } else {
            GaussInt pi{-p, 0};
            int e = 0;
            while (divides_i(pi, cur)) {
                cur = div_exact_i(cur, pi);
                ++e;
            }
            if (e > 0) out.factors.push_back({pi, e});
        }
    }
    if (!is_unit_i(cur)) throw std::logic_error("factor_primary_i: leftover non-unit");
    out.unit = cur;
    std::sort(out.factors.begin(), out.factors.end(), [](const PrimaryFactorI& x, const PrimaryFactorI& y) {
        int64_t nx = norm_i(x.prime), ny = norm_i(y.prime);
        if (nx != ny) return nx < ny;
        if (x.prime.b != y.prime.b) return x.prime.b < y.prime.b;
        return x.prime.a < y.prime.a;
    });
    return out;
}

bool has_rational_prime_divisor(const PrimaryFactorizationI& f) {
    for (size_t i = 0; i < f.factors.size(); ++i) {
        if (f.factors[i].prime.b == 0) return true;
        if (i + 1 < f.factors.size() &&
            norm_i(f.factors[i].prime) == norm_i(f.factors[i + 1].prime)) {
            return true;
        }
    }
    return false;
}

QuarticSymbol::QuarticSymbol(GaussInt n) : fac_(factor_primary_i(n)) {
    for (const PrimaryFactorI& f : fac_.factors) {
        GaussInt pi = f.prime;
        if (pi.b != 0) {
            int64_t p = norm_i(pi);
            uint64_t up = static_cast<uint64_t>(p);
            int64_t binv = static_cast<int64_t>(pow_mod(static_cast<uint64_t>(mod_nonneg(pi.b, p)), up - 2, up));
            int64_t r = mod_nonneg(static_cast<__int128>(-pi.a) * binv, p);
            split_.push_back({p, r, (up - 1) / 4, f.exponent});
        } else {
            int64_t p = -pi.a;
            uint64_t up = static_cast<uint64_t>(p);
            inert_.push_back({p, (up * up - 1) / 4, f.exponent});
        }
    }
}

namespace {

// F_{p^2} = F_p[i], i^2 = -1.
struct Fp2I {
    int64_t u, v;
};

Fp2I fp2i_mul(Fp2I x, Fp2I y, int64_t p) {
    __int128 re = static_cast<__int128>(x.u) * y.u - static_cast<__int128>(x.v) * y.v;
    __int128 im = static_cast<__int128>(x.u) * y.v + static_cast<__int128>(x.v) * y.u;
    return {mod_nonneg(re, p), mod_nonneg(im, p)};
}

Fp2I fp2i_pow(Fp2I x, uint64_t e, int64_t p) {
    Fp2I acc{1, 0};
    while (e) {
        if (e & 1) acc = fp2i_mul(acc, x, p);
        x = fp2i_mul(x, x, p);
        e >>= 1;
    }
    return acc;
}

}  // namespace

int QuarticSymbol::exponent(GaussInt x) const {
    int total = 0;
    for (const SplitData& d : split_) {
        int64_t t = mod_nonneg(static_cast<__int128>(mod_nonneg(x.a, d.p)) +
                                   static_cast<__int128>(mod_nonneg(x.b, d.p)) * d.r,
                               d.p);
        if (t == 0) return kSymbolZero;
        int64_t s = static_cast<int64_t>(pow_mod(static_cast<uint64_t>(t), d.exp, static_cast<uint64_t>(d.p)));
        int e = -1;
        int64_t rv = 1;
        for (int k = 0; k < 4; ++k) {
            if (s == rv) { e = k; break; }
            rv = mod_nonneg(static_cast<__int128>(rv) * d.r, d.p);
        }
        if (e < 0) throw std::logic_error("quartic symbol: value not a fourth root of unity");
        total = (total + e * d.mult) % 4;
    }
    for (const InertData& d : inert_) {
        Fp2I z{mod_nonneg(x.a, d.p), mod_nonneg(x.b, d.p)};
        if (z.u == 0 && z.v == 0) return kSymbolZero;
        Fp2I s = fp2i_pow(z, d.exp, d.p);
        int e;
        if (s.u == 1 && s.v == 0) e = 0;
        else if (s.u == 0 && s.v == 1) e = 1;
        else if (s.u == d.p - 1 && s.v == 0) e = 2;
        else if (s.u == 0 && s.v == d.p - 1) e = 3;
        else throw std::logic_error("quartic symbol: inert value not a fourth root of unity");
        total = (total + e * d.mult) % 4;
    }
    return total;
}

int quartic_symbol(GaussInt x, GaussInt n) {
    if (is_zero(n)) throw std::domain_error("quartic_symbol: zero modulus");
    if (is_unit_i(n)) return 0;
    return QuarticSymbol(n).exponent(x);
}

int lambda0(GaussInt q) {
    if (!is_primary_i(q)) throw std::domain_error("lambda0: input not primary");
    int64_t t = (q.a * q.a - 1) / 8;
    return t % 2 == 0 ? 1 : -1;
}

}  // namespace cqmv
