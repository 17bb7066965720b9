#include "cqmv/eisenstein.hpp"

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

// Division rounded to the nearest integer, here with positive divisor.
int64_t round_div(__int128 n, __int128 d) {
    __int128 q = n >= 0 ? (n + d / 2) / d : -((-n + d / 2) / d);
    return static_cast<int64_t>(q);
}

}  // namespace

EisInt operator+(EisInt x, EisInt y) { return {x.a + y.a, x.b + y.b}; }
EisInt operator-(EisInt x, EisInt y) { return {x.a - y.a, x.b - y.b}; }
EisInt operator-(EisInt x) { return {-x.a, -x.b}; }

EisInt operator*(EisInt x, EisInt y) {
    // (a + b w)(c + d w) = ac - bd + (ad + bc - bd) w
    __int128 a = x.a, b = x.b, c = y.a, d = y.b;
    __int128 ra = a * c - b * d;
    __int128 rb = a * d + b * c - b * d;
    return {checked_coord(ra, "EisInt multiply overflow"),
            checked_coord(rb, "EisInt multiply overflow")};
}

std::ostream& operator<<(std::ostream& os, EisInt z) {
    return os << z.a << (z.b < 0 ? "" : "+") << z.b << "w";
}

int64_t norm_w(EisInt z) {
    __int128 a = z.a, b = z.b;
    __int128 n = a * a - a * b + b * b;
    if (n > std::numeric_limits<int64_t>::max()) throw std::overflow_error("norm_w overflow");
    return static_cast<int64_t>(n);
}

const std::array<EisInt, 6>& units_w() {
    static const std::array<EisInt, 6> u = {{{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {-1, -1}, {1, 1}}};
    return u;
}

bool is_unit_w(EisInt z) { return !is_zero(z) && norm_w(z) == 1; }

bool is_primary_w(EisInt z) {
    return mod_nonneg(z.a, 3) == 1 && mod_nonneg(z.b, 3) == 0;
}

UnitAndPrimaryW make_primary_w(EisInt z) {
    if (is_zero(z) || norm_w(z) % 3 == 0) {
        throw std::domain_error("make_primary_w: no primary associate");
    }
    for (EisInt u : units_w()) {
        EisInt w = u * z;
        if (is_primary_w(w)) return {u, w};
    }
    throw std::logic_error("make_primary_w: unreachable");
}

bool divides_w(EisInt d, EisInt z) {
    if (is_zero(d)) return is_zero(z);
    __int128 N = norm_w(d);
    EisInt dc = conj_w(d);
    __int128 na = static_cast<__int128>(z.a) * dc.a - static_cast<__int128>(z.b) * dc.b;
    __int128 nb = static_cast<__int128>(z.a) * dc.b + static_cast<__int128>(z.b) * dc.a -
                  static_cast<__int128>(z.b) * dc.b;
    return na % N == 0 && nb % N == 0;
}

EisInt div_exact_w(EisInt z, EisInt d) {
    __int128 N = norm_w(d);
    if (N == 0) throw std::domain_error("div_exact_w: zero divisor");
    EisInt dc = conj_w(d);
    __int128 na = static_cast<__int128>(z.a) * dc.a - static_cast<__int128>(z.b) * dc.b;
    __int128 nb = static_cast<__int128>(z.a) * dc.b + static_cast<__int128>(z.b) * dc.a -
                  static_cast<__int128>(z.b) * dc.b;
    if (na % N != 0 || nb % N != 0) throw std::domain_error("div_exact_w: not divisible");
    return {static_cast<int64_t>(na / N), static_cast<int64_t>(nb / N)};
}

namespace {

EisInt canonical_associate_w(EisInt z) {
    EisInt best{0, 0};
    bool have = false;
    for (EisInt u : units_w()) {
        EisInt w = u * z;
        if (w.a < 0 || w.b < 0) continue;
        if (!have || w.a < best.a || (w.a == best.a && w.b < best.b)) {
            best = w;
            have = true;
        }
    }
    if (!have) throw std::logic_error("canonical_associate_w: no candidate");
    return best;
}

}  // namespace

EisInt gcd_w(EisInt x, EisInt y) {
    if (is_zero(x) && is_zero(y)) throw std::domain_error("gcd_w: both inputs zero");
    while (!is_zero(y)) {
        __int128 N = norm_w(y);
        EisInt yc = conj_w(y);
        __int128 na = static_cast<__int128>(x.a) * yc.a - static_cast<__int128>(x.b) * yc.b;
        __int128 nb = static_cast<__int128>(x.a) * yc.b + static_cast<__int128>(x.b) * yc.a -
                      static_cast<__int128>(x.b) * yc.b;
        EisInt q{round_div(na, N), round_div(nb, N)};
        EisInt r = x - q * y;
        x = y;
        y = r;
    }
    if (norm_w(x) % 3 != 0) return make_primary_w(x).primary;
    return canonical_associate_w(x);
}

std::vector<EisInt> split_prime_w(int64_t p) {
    if (p < 2 || !is_prime_u64(static_cast<uint64_t>(p))) {
        throw std::domain_error("split_prime_w: input not prime");
    }
    if (p == 3 || p % 3 == 2) return {};
    int64_t bmax = static_cast<int64_t>(2.0 * std::sqrt(static_cast<double>(p) / 3.0)) + 2;
    for (int64_t b = 1; b <= bmax; ++b) {
        // a^2 - a b + b^2 = p  =>  a = (b +- sqrt(4p - 3 b^2)) / 2
        int64_t disc = 4 * p - 3 * b * b;
        if (disc < 0) break;
        int64_t s = static_cast<int64_t>(std::sqrt(static_cast<double>(disc)));
        while (s * s > disc) --s;
        while ((s + 1) * (s + 1) <= disc) ++s;
        if (s * s != disc || (b + s) % 2 != 0) continue;
        EisInt z{(b + s) / 2, b};
        if (norm_w(z) != p) continue;
        EisInt pi = make_primary_w(z).primary;
        EisInt pj = conj_w(pi);  // conjugate of a primary element is primary
        std::vector<EisInt> out{pi, pj};
        std::sort(out.begin(), out.end(),
                  [](EisInt u, EisInt v) { return u.b != v.b ? u.b < v.b : u.a < v.a; });
        return out;
    }
    throw std::logic_error("split_prime_w: no representation found");
}

PrimaryFactorizationW factor_primary_w(EisInt n) {
    if (is_zero(n)) throw std::domain_error("factor_primary_w: zero input");
    int64_t N = norm_w(n);
    if (N % 3 == 0) throw std::domain_error("factor_primary_w: norm divisible by 3");
    PrimaryFactorizationW out;
    EisInt cur = n;
    for (const PrimePower& pp : factor_prime_powers(static_cast<uint64_t>(N))) {
        int64_t p = static_cast<int64_t>(pp.p);
        if (p % 3 == 1) {
            for (EisInt pi : split_prime_w(p)) {
                int e = 0;
                while (divides_w(pi, cur)) {
                    cur = div_exact_w(cur, pi);
                    ++e;
                }
                if (e > 0) out.factors.push_back({pi, e});
            }
        } else {
            EisInt pi{-p, 0};  // inert prime, primary associate of p
            int e = 0;
            while (divides_w(pi, cur)) {
                cur = div_exact_w(cur, pi);
                ++e;
            }
            if (e > 0) out.factors.push_back({pi, e});
        }
    }
    if (!is_unit_w(cur)) throw std::logic_error("factor_primary_w: leftover non-unit");
    out.unit = cur;
    std::sort(out.factors.begin(), out.factors.end(), [](const PrimaryFactorW& x, const PrimaryFactorW& y) {
        int64_t nx = norm_w(x.prime), ny = norm_w(y.prime);
        if (nx != ny) return nx < ny;
        if (x.prime.b != y.prime.b) return x.prime.b < y.prime.b;
        return x.prime.a < y.prime.a;
    });
    return out;
}

bool has_rational_prime_divisor(const PrimaryFactorizationW& f) {
    for (size_t i = 0; i < f.factors.size(); ++i) {
        if (f.factors[i].prime.b == 0) return true;  // inert rational prime
        if (i + 1 < f.factors.size() &&
            norm_w(f.factors[i].prime) == norm_w(f.factors[i + 1].prime)) {
            return true;  // both conjugates present
        }
    }
    return false;
}

CubicSymbol::CubicSymbol(EisInt n) : fac_(factor_primary_w(n)) {
    for (const PrimaryFactorW& f : fac_.factors) {
        EisInt pi = f.prime;
        if (pi.b != 0) {
            int64_t p = norm_w(pi);
            uint64_t up = static_cast<uint64_t>(p);
            int64_t binv = static_cast<int64_t>(pow_mod(static_cast<uint64_t>(mod_nonneg(pi.b, p)), up - 2, up));
            int64_t r = mod_nonneg(static_cast<__int128>(-pi.a) * binv, p);
            split_.push_back({p, r, mod_nonneg(static_cast<__int128>(r) * r, p), (up - 1) / 3, f.exponent});
        } else {
            int64_t p = -pi.a;
            uint64_t up = static_cast<uint64_t>(p);
            inert_.push_back({p, (up * up - 1) / 3, f.exponent});
        }
    }
}

namespace {

// F_{p^2} = F_p[w] with w^2 = -1 - w; components reduced mod p.
struct Fp2W {
    int64_t u, v;
};

Fp2W fp2w_mul(Fp2W x, Fp2W y, int64_t p) {
    __int128 uu = static_cast<__int128>(x.u) * y.u;
    __int128 vv = static_cast<__int128>(x.v) * y.v;
    __int128 cross = static_cast<__int128>(x.u) * y.v + static_cast<__int128>(x.v) * y.u;
    return {mod_nonneg(uu - vv, p), mod_nonneg(cross - vv, p)};
}

Fp2W fp2w_pow(Fp2W x, uint64_t e, int64_t p) {
    Fp2W acc{1, 0};
    while (e) {
        if (e & 1) acc = fp2w_mul(acc, x, p);
        x = fp2w_mul(x, x, p);
        e >>= 1;
    }
    return acc;
}

}  // namespace

int CubicSymbol::exponent(EisInt x) const {
    int total = 0;
    for (const SplitData& d : split_) {
        int64_t t = mod_nonneg(static_cast<__int128>(mod_nonneg(x.a, d.p)) +
                                   static_cast<__int128>(mod_nonneg(x.b, d.p)) * d.r,
                               d.p);
        if (t == 0) return kSymbolZero;
        int64_t s = static_cast<int64_t>(pow_mod(static_cast<uint64_t>(t), d.exp, static_cast<uint64_t>(d.p)));
        int e;
        if (s == 1) e = 0;
        else if (s == d.r) e = 1;
        else if (s == d.r2) e = 2;
        else throw std::logic_error("cubic symbol: value not a cube root of unity");
        total = (total + e * d.mult) % 3;
    }
    for (const InertData& d : inert_) {
        Fp2W z{mod_nonneg(x.a, d.p), mod_nonneg(x.b, d.p)};
        if (z.u == 0 && z.v == 0) return kSymbolZero;
        Fp2W s = fp2w_pow(z, d.exp, d.p);
        int e;
        if (s.u == mod_nonneg(int64_t{1}, d.p) && s.v == 0) e = 0;
        else if (s.u == 0 && s.v == 1) e = 1;
        else if (s.u == mod_nonneg(int64_t{-1}, d.p) && s.v == mod_nonneg(int64_t{-1}, d.p)) e = 2;
        else throw std::logic_error("cubic symbol: inert value not a cube root of unity");
        total = (total + e * d.mult) % 3;
    }
    return total;
}

int cubic_symbol(EisInt x, EisInt n) {
    if (is_zero(n)) throw std::domain_error("cubic_symbol: zero modulus");
    if (is_unit_w(n)) return 0;
    return CubicSymbol(n).exponent(x);
}

int64_t euler_phi_w(EisInt n) {
    PrimaryFactorizationW f = factor_primary_w(n);
    __int128 phi = 1;
    for (const PrimaryFactorW& fac : f.factors) {
        __int128 q = norm_w(fac.prime);
        __int128 term = q - 1;
        for (int i = 1; i < fac.exponent; ++i) term *= q;
        phi *= term;
        if (phi > std::numeric_limits<int64_t>::max()) throw std::overflow_error("euler_phi_w overflow");
    }
    return static_cast<int64_t>(phi);
}

}  // namespace cqmv
