#include "cqmv/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cqmv/characters.hpp"
#include "cqmv/gauss_sums.hpp"
#include "cqmv/mean_values.hpp"
#include "cqmv/modular.hpp"

namespace cqmv {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Complex unit_root(int order, int e) { return std::polar(1.0, kTwoPi * e / order); }

struct Recorder {
    SuiteSummary& sum;
    const RowSink& sink;

    void row(const char* identity, std::string params, double discrepancy, bool pass) {
        ++sum.checked;
        if (!pass) ++sum.failed;
        sum.max_discrepancy = std::max(sum.max_discrepancy, discrepancy);
        if (sink) sink({identity, std::move(params), discrepancy, pass});
    }
};

std::string fmt_w(EisInt z) {
    std::ostringstream os;
    os << z.a << (z.b < 0 ? "" : "+") << z.b << "w";
    return os.str();
}

std::string fmt_i(GaussInt z) {
    std::ostringstream os;
    os << z.a << (z.b < 0 ? "" : "+") << z.b << "i";
    return os.str();
}

}  // namespace

std::vector<EisInt> primary_elements_w(int64_t max_norm) {
    std::vector<EisInt> out;
    int64_t M = static_cast<int64_t>(2.0 * std::sqrt(static_cast<double>(max_norm) / 3.0)) + 2;
    for (int64_t b = -M; b <= M; ++b) {
        for (int64_t a = -M; a <= M; ++a) {
            EisInt z{a, b};
            if (!is_primary_w(z)) continue;
            __int128 n = static_cast<__int128>(a) * a - static_cast<__int128>(a) * b +
                         static_cast<__int128>(b) * b;
            if (n >= 1 && n <= max_norm) out.push_back(z);
        }
    }
    std::sort(out.begin(), out.end(), [](EisInt x, EisInt y) {
        int64_t nx = norm_w(x), ny = norm_w(y);
        if (nx != ny) return nx < ny;
        if (x.b != y.b) return x.b < y.b;
        return x.a < y.a;
    });
    return out;
}

std::vector<GaussInt> primary_elements_i(int64_t max_norm) {
    std::vector<GaussInt> out;
    int64_t M = static_cast<int64_t>(std::sqrt(static_cast<double>(max_norm))) + 2;
    for (int64_t b = -M; b <= M; ++b) {
        for (int64_t a = -M; a <= M; ++a) {
            GaussInt z{a, b};
            if (!is_primary_i(z)) continue;
            __int128 n = static_cast<__int128>(a) * a + static_cast<__int128>(b) * b;
            if (n >= 1 && n <= max_norm) out.push_back(z);
        }
    }
    std::sort(out.begin(), out.end(), [](GaussInt x, GaussInt y) {
        int64_t nx = norm_i(x), ny = norm_i(y);
        if (nx != ny) return nx < ny;
        if (x.b != y.b) return x.b < y.b;
        return x.a < y.a;
    });
    return out;
}

namespace {

// ---------------------------------------------------------------------------
// reciprocity suite
// ---------------------------------------------------------------------------

void reciprocity_w(int64_t max_norm, Recorder& rec) {
    std::vector<EisInt> elems = primary_elements_w(max_norm);
    std::vector<CubicSymbol> syms;
    syms.reserve(elems.size());
    for (EisInt z : elems) syms.emplace_back(z);
    for (size_t i = 0; i < elems.size(); ++i) {
        for (size_t j = i; j < elems.size(); ++j) {
            int smn = syms[j].exponent(elems[i]);
            int snm = syms[i].exponent(elems[j]);
            if (smn == kSymbolZero && snm == kSymbolZero) continue;  // not coprime
            bool pass = smn == snm && smn != kSymbolZero && snm != kSymbolZero;
            rec.row("cubic_reciprocity", "m=" + fmt_w(elems[i]) + ";n=" + fmt_w(elems[j]),
                    pass ? 0.0 : 1.0, pass);
        }
    }
}

void reciprocity_i(int64_t max_norm, Recorder& rec) {
    std::vector<GaussInt> elems = primary_elements_i(max_norm);
    std::vector<QuarticSymbol> syms;
    syms.reserve(elems.size());
    for (GaussInt z : elems) syms.emplace_back(z);

    for (size_t i = 0; i < elems.size(); ++i) {
        for (size_t j = i; j < elems.size(); ++j) {
            int smn = syms[j].exponent(elems[i]);
            int snm = syms[i].exponent(elems[j]);
            if (smn == kSymbolZero && snm == kSymbolZero) continue;
            int pm = ((norm_i(elems[i]) - 1) / 4) % 2;
            int pn = ((norm_i(elems[j]) - 1) / 4) % 2;
            int expected = snm == kSymbolZero ? kSymbolZero : (snm + 2 * (pm * pn)) % 4;
            bool pass = smn == expected && smn != kSymbolZero;
            rec.row("quartic_reciprocity", "m=" + fmt_i(elems[i]) + ";n=" + fmt_i(elems[j]),
                    pass ? 0.0 : 1.0, pass);
        }
    }

    // supplement law (i/n)_4 = i^((1-a)/2) and the primary congruences
    for (size_t j = 0; j < elems.size(); ++j) {
        GaussInt n = elems[j];
        if (is_unit_i(n)) continue;
        int si = syms[j].exponent(GaussInt{0, 1});
        int expected = static_cast<int>(mod_nonneg((1 - n.a) / 2, 4));
        bool pass = si == expected;
        rec.row("supplement_i", "n=" + fmt_i(n), pass ? 0.0 : 1.0, pass);

        int64_t t = ((norm_i(n) - 1) / 4) % 2 == 0 ? 1 : -1;
        bool pass_ab = mod_nonneg(n.a, 4) == mod_nonneg(t, 4) &&
                       mod_nonneg(n.b, 4) == mod_nonneg(1 - t, 4);
        rec.row("primary_congruence", "n=" + fmt_i(n), pass_ab ? 0.0 : 1.0, pass_ab);
    }

    // (b/a)_4 = 1 for rational a, b with (a, 2b) = 1
    for (int64_t a = -49; a <= 49; a += 2) {
        for (int64_t b = -50; b <= 50; ++b) {
            if (std::gcd(std::abs(a), 2 * std::abs(b)) != 1) continue;
            int s = quartic_symbol(GaussInt{b, 0}, GaussInt{a, 0});
            bool pass = s == 0;
            rec.row("rational_symbol", "a=" + std::to_string(a) + ";b=" + std::to_string(b),
                    pass ? 0.0 : 1.0, pass);
        }
    }

    // lambda0 is a class function mod 16 on primary elements
    {
        std::map<std::pair<int64_t, int64_t>, int> classes;
        bool pass = true;
        for (GaussInt q : primary_elements_i(4000)) {
            auto key = std::make_pair(mod_nonneg(q.a, 16), mod_nonneg(q.b, 16));
            auto [it, inserted] = classes.emplace(key, lambda0(q));
            if (!inserted && it->second != lambda0(q)) pass = false;
        }
        rec.row("lambda0_mod16", "norms<=4000", pass ? 0.0 : 1.0, pass);
    }

    // (conj(q)/q)_4 = (-2/q)_4 lambda0(q) for q with no rational prime divisor
    for (GaussInt q : primary_elements_i(std::max<int64_t>(max_norm, 2000))) {
        if (is_unit_i(q)) continue;
        QuarticSymbol sym(q);
        if (has_rational_prime_divisor(sym.factorization())) continue;
        int s1 = sym.exponent(conj_i(q));
        int s2 = sym.exponent(GaussInt{-2, 0});
        int expected = (s2 + (lambda0(q) < 0 ? 2 : 0)) % 4;
        bool pass = s1 == expected;
        rec.row("conjugate_decomposition", "q=" + fmt_i(q), pass ? 0.0 : 1.0, pass);
    }
}

// ---------------------------------------------------------------------------
// gauss-identities suite
// ---------------------------------------------------------------------------

struct GaussRanges {
    int64_t gmult, gprod, grnbound, gmod, gzero;
};

GaussRanges ranges_for(int64_t max_norm) {
    if (max_norm <= 0) return {500, 2000, 2000, 2000, 1000};
    return {max_norm, max_norm, max_norm, max_norm, max_norm};
}

template <typename Elem, typename Evaluator, typename Fmt>
void gmult_sweep(const char* name, int order, const std::vector<Elem>& elems, Fmt fmt, Recorder& rec) {
    for (const Elem& n : elems) {
        Evaluator ev(n);
        int64_t N = ev.norm();
        double tol = 1e-8 * std::sqrt(static_cast<double>(N));
        for (int64_t r = 1; r <= 2; ++r) {
            Complex gr = ev.eval(r);
            const auto& sys = ev.residues();
            for (size_t j = 0; j < sys.elements.size(); ++j) {
                Elem s = sys.elements[j];
                int e = ev.symbol_at(j);
                if (e == kSymbolZero) continue;
                Complex lhs = ev.eval(Elem{r, 0} * s);
                Complex rhs = std::conj(unit_root(order, e)) * gr;
                double d = std::abs(lhs - rhs);
                rec.row(name, "n=" + fmt(n) + ";r=" + std::to_string(r) + ";s=" + fmt(s), d, d <= tol);
            }
        }
    }
}

void gauss_identities_w(int64_t max_norm, Recorder& rec) {
    GaussRanges R = ranges_for(max_norm);

    // eq. g(rs, n) = conj((s/n)) g(r, n)
    gmult_sweep<EisInt, GaussSumW>("gmult3", 3, primary_elements_w(R.gmult), fmt_w, rec);

    // modulus of g(1, prime), split and inert primes
    {
        std::vector<EisInt> primes;
        for (int64_t p : primes_up_to(R.gmod)) {
            if (p % 3 == 1) {
                for (EisInt pi : split_prime_w(p)) primes.push_back(pi);
            } else if (p != 3 && p * p <= R.gmod) {
                primes.push_back(EisInt{-p, 0});
            }
        }
        for (EisInt pi : primes) {
            double N = static_cast<double>(norm_w(pi));
            double d = std::abs(std::abs(g3(EisInt{1, 0}, pi)) - std::sqrt(N));
            rec.row("gmod3", "pi=" + fmt_w(pi), d, d <= 1e-8 * std::sqrt(N));
        }
    }

    // g3(k, n1 n2) = conj((n1/n2)_3) g3(k, n1) g3(k, n2)
    {
        std::vector<EisInt> elems = primary_elements_w(R.gprod);
        std::map<std::pair<int64_t, int64_t>, size_t> index;
        std::vector<GaussSumW> evs;
        std::vector<CubicSymbol> syms;
        evs.reserve(elems.size());
        syms.reserve(elems.size());
        for (size_t i = 0; i < elems.size(); ++i) {
            index[{elems[i].a, elems[i].b}] = i;
            evs.emplace_back(elems[i]);
            syms.emplace_back(elems[i]);
        }
        for (const EisInt& n1 : elems) {
            int64_t N1 = norm_w(n1);
            for (size_t j2 = 0; j2 < elems.size(); ++j2) {
                const EisInt& n2 = elems[j2];
                int64_t N2 = norm_w(n2);
                if (N1 * N2 > R.gprod) continue;
                int e = syms[j2].exponent(n1);
                if (e == kSymbolZero) continue;  // not coprime
                EisInt prod = n1 * n2;
                const GaussSumW& evp = evs[index.at({prod.a, prod.b})];
                const GaussSumW& ev1 = evs[index.at({n1.a, n1.b})];
                const GaussSumW& ev2 = evs[index.at({n2.a, n2.b})];
                double tol = 1e-8 * std::sqrt(static_cast<double>(N1 * N2));
                for (int64_t k = 0; k <= 2; ++k) {
                    Complex lhs = evp.eval(k);
                    Complex rhs = std::conj(unit_root(3, e)) * ev1.eval(k) * ev2.eval(k);
                    double d = std::abs(lhs - rhs);
                    rec.row("gprod3", "n1=" + fmt_w(n1) + ";n2=" + fmt_w(n2) + ";k=" + std::to_string(k),
                            d, d <= tol);
                }
            }
        }
    }

    // square-free n: g3(r, n) = 0 unless (r, n) = 1, then |g3| <= sqrt(N)
    for (const EisInt& n : primary_elements_w(R.grnbound)) {
        if (is_unit_w(n)) continue;
        CubicSymbol sym(n);
        bool squarefree = true;
        for (const PrimaryFactorW& f : sym.factorization().factors) {
            if (f.exponent > 1) squarefree = false;
        }
        if (!squarefree) continue;
        GaussSumW ev(n);
        int64_t N = ev.norm();
        double tol = 1e-8 * std::sqrt(static_cast<double>(N));
        const auto& sys = ev.residues();
        for (size_t j = 0; j < sys.elements.size(); ++j) {
            double g = std::abs(ev.eval(sys.elements[j]));
            bool coprime = ev.symbol_at(j) != kSymbolZero;
            double d = coprime ? std::max(0.0, g - std::sqrt(static_cast<double>(N))) : g;
            rec.row("grnbound3", "n=" + fmt_w(n) + ";r=" + fmt_w(sys.elements[j]), d, d <= tol);
        }
    }

    // g3(0, n) = phi_omega(n) on cubes, 0 otherwise
    for (const EisInt& n : primary_elements_w(R.gzero)) {
        if (is_unit_w(n)) continue;
        CubicSymbol sym(n);
        bool cube = true;
        for (const PrimaryFactorW& f : sym.factorization().factors) {
            if (f.exponent % 3 != 0) cube = false;
        }
        double expected = cube ? static_cast<double>(euler_phi_w(n)) : 0.0;
        double d = std::abs(g3(EisInt{0, 0}, n) - expected);
        rec.row("gzero3", "n=" + fmt_w(n), d, d <= 1e-9);
    }
}

void gauss_identities_i(int64_t max_norm, Recorder& rec) {
    GaussRanges R = ranges_for(max_norm);

    gmult_sweep<GaussInt, GaussSumI>("gmult4", 4, primary_elements_i(R.gmult), fmt_i, rec);

    {
        std::vector<GaussInt> primes;
        for (int64_t p : primes_up_to(R.gmod)) {
            if (p % 4 == 1) {
                for (GaussInt pi : split_prime_i(p)) primes.push_back(pi);
            } else if (p % 4 == 3 && p * p <= R.gmod) {
                primes.push_back(GaussInt{-p, 0});
            }
        }
        for (GaussInt pi : primes) {
            double N = static_cast<double>(norm_i(pi));
            double d = std::abs(std::abs(g4(GaussInt{1, 0}, pi)) - std::sqrt(N));
            rec.row("gmod4", "pi=" + fmt_i(pi), d, d <= 1e-8 * std::sqrt(N));
        }
    }

    // g4(r, n1 n2) = (n2/n1)_4 (n1/n2)_4 g4(r, n1) g4(r, n2), and the
    // reciprocity-transformed form of the same prefactor
    {
        std::vector<GaussInt> elems = primary_elements_i(R.gprod);
        std::map<std::pair<int64_t, int64_t>, size_t> index;
        std::vector<GaussSumI> evs;
        std::vector<QuarticSymbol> syms;
        evs.reserve(elems.size());
        syms.reserve(elems.size());
        for (size_t i = 0; i < elems.size(); ++i) {
            index[{elems[i].a, elems[i].b}] = i;
            evs.emplace_back(elems[i]);
            syms.emplace_back(elems[i]);
        }
        for (size_t j1 = 0; j1 < elems.size(); ++j1) {
            const GaussInt& n1 = elems[j1];
            int64_t N1 = norm_i(n1);
            for (size_t j2 = 0; j2 < elems.size(); ++j2) {
                const GaussInt& n2 = elems[j2];
                int64_t N2 = norm_i(n2);
                if (N1 * N2 > R.gprod) continue;
                int e12 = syms[j2].exponent(n1);
                if (e12 == kSymbolZero) continue;
                int e21 = syms[j1].exponent(n2);
                GaussInt prod = n1 * n2;
                const GaussSumI& evp = evs[index.at({prod.a, prod.b})];
                const GaussSumI& ev1 = evs[index.at({n1.a, n1.b})];
                const GaussSumI& ev2 = evs[index.at({n2.a, n2.b})];
                double tol = 1e-8 * std::sqrt(static_cast<double>(N1 * N2));
                for (int64_t k = 0; k <= 2; ++k) {
                    Complex lhs = evp.eval(k);
                    Complex rhs = unit_root(4, (e12 + e21) % 4) * ev1.eval(k) * ev2.eval(k);
                    double d = std::abs(lhs - rhs);
                    rec.row("g4prod", "n1=" + fmt_i(n1) + ";n2=" + fmt_i(n2) + ";k=" + std::to_string(k),
                            d, d <= tol);
                }
                int par = static_cast<int>((((norm_i(n1) - 1) / 4) % 2) * (((norm_i(n2) - 1) / 4) % 2));
                int alt = (2 * e12 + 2 * par) % 4;
                bool forms = (e12 + e21) % 4 == alt;
                rec.row("g4prod_forms", "n1=" + fmt_i(n1) + ";n2=" + fmt_i(n2), forms ? 0.0 : 1.0, forms);
            }
        }
    }

    for (const GaussInt& n : primary_elements_i(R.grnbound)) {
        if (is_unit_i(n)) continue;
        QuarticSymbol sym(n);
        bool squarefree = true;
        for (const PrimaryFactorI& f : sym.factorization().factors) {
            if (f.exponent > 1) squarefree = false;
        }
        if (!squarefree) continue;
        GaussSumI ev(n);
        int64_t N = ev.norm();
        double tol = 1e-8 * std::sqrt(static_cast<double>(N));
        const auto& sys = ev.residues();
        for (size_t j = 0; j < sys.elements.size(); ++j) {
            double g = std::abs(ev.eval(sys.elements[j]));
            bool coprime = ev.symbol_at(j) != kSymbolZero;
            double d = coprime ? std::max(0.0, g - std::sqrt(static_cast<double>(N))) : g;
            rec.row("grnbound4", "n=" + fmt_i(n) + ";r=" + fmt_i(sys.elements[j]), d, d <= tol);
        }
    }
}

// ---------------------------------------------------------------------------
// tau-relations suite
// ---------------------------------------------------------------------------

void tau_relations(int order, int64_t max_n, Recorder& rec) {
    if (max_n <= 0) max_n = 300;
    for (int64_t n : admissible_moduli(max_n, order)) {
        if (order == 3) {
            for (EisInt q : enumerate_q_w(n)) {
                CharacterTable chi = character_from_q(q);
                TauSum ts(chi);
                GaussSumW ev(q);
                int e = CubicSymbol(q).exponent(EisInt{1, 2});  // sqrt(-3) = 1 + 2w
                Complex fac = e == kSymbolZero ? Complex{0, 0} : std::conj(unit_root(3, e));
                for (int64_t r = 0; r <= 3; ++r) {
                    double d = std::abs(ts.eval(r) - fac * ev.eval(r));
                    rec.row("taug3", "q=" + fmt_w(q) + ";r=" + std::to_string(r), d, d <= 1e-8);
                }
            }
        } else {
            for (GaussInt q : enumerate_q_i(n)) {
                CharacterTable chi = character_from_q(q);
                TauSum ts(chi);
                GaussSumI ev(q);
                int e = QuarticSymbol(q).exponent(GaussInt{0, -1});
                Complex fac = std::conj(unit_root(4, e)) * static_cast<double>(lambda0(q));
                for (int64_t r = 0; r <= 3; ++r) {
                    double d = std::abs(ts.eval(r) - fac * ev.eval(r));
                    rec.row("taug4", "q=" + fmt_i(q) + ";r=" + std::to_string(r), d, d <= 1e-8);
                }
            }
        }
        // full-period sum vanishes for the non-principal members
        for (const CharacterTable& chi : set_S(n, order)) {
            if (n == 1) continue;
            bool principal = true;
            for (int64_t m = 0; m < n; ++m) {
                if (chi.values[m] > 0) principal = false;
            }
            if (principal) continue;
            double d = std::abs(tau(0, chi));
            rec.row("tau_zero", "n=" + std::to_string(n), d, d <= 1e-8);
        }
    }
}

// ---------------------------------------------------------------------------
// poisson suite
// ---------------------------------------------------------------------------

void poisson(int order, int64_t max_modulus, Recorder& rec) {
    if (max_modulus <= 0) max_modulus = 101;
    for (int64_t n : admissible_moduli(max_modulus, order)) {
        std::vector<CharacterTable> chis = set_S(n, order);
        for (size_t c = 0; c < chis.size(); ++c) {
            for (double M : {1.0, 2.5, 7.0}) {
                double d = poisson_discrepancy(chis[c], M);
                rec.row("poisson", "n=" + std::to_string(n) + ";chi=" + std::to_string(c) +
                                       ";M=" + std::to_string(M),
                        d, d <= 1e-8);
            }
        }
    }
}

// ---------------------------------------------------------------------------
// bijection suite
// ---------------------------------------------------------------------------

int64_t mod_inverse(int64_t a, int64_t m) {
    int64_t g = m, x = 0, x1 = 1, a1 = mod_nonneg(a, m);
    while (a1 != 0) {
        int64_t q = g / a1;
        g -= q * a1;
        std::swap(g, a1);
        x -= q * x1;
        std::swap(x, x1);
    }
    if (g != 1) throw std::domain_error("mod_inverse: not invertible");
    return mod_nonneg(x, m);
}

int64_t crt_lift(int64_t x, int64_t pk, int64_t rest, int64_t n) {
    // m == x (mod pk), m == 1 (mod rest)
    if (rest == 1) return mod_nonneg(x, n);
    int64_t t = mod_nonneg((1 - x) % rest * mod_inverse(pk % rest, rest), rest);
    return mod_nonneg(x + pk * t, n);
}

void bijection(int order, int64_t max_prime, int64_t max_count_n, Recorder& rec) {
    if (max_prime <= 0) max_prime = 500;
    if (max_count_n <= 0) max_count_n = 5000;

    // dlog oracle at primes
    for (int64_t p : primes_up_to(max_prime)) {
        if (p % order != 1) continue;
        std::vector<CharacterTable> S = set_S(p, order);
        std::vector<CharacterTable> D = primitive_chars_dlog(p, order);
        bool pass = S.size() == 2 && D.size() == 2 &&
                    ((same_values(S[0], D[0]) && same_values(S[1], D[1])) ||
                     (same_values(S[0], D[1]) && same_values(S[1], D[0])));
        rec.row("dlog_oracle", "p=" + std::to_string(p), pass ? 0.0 : 1.0, pass);
    }

    // |S_{order,n}| = 2^omega(n)
    for (int64_t n : admissible_moduli(max_count_n, order)) {
        size_t expected = n == 1 ? 1
                                 : size_t{1} << factor_prime_powers(static_cast<uint64_t>(n)).size();
        size_t got = order == 3 ? enumerate_q_w(n).size() : enumerate_q_i(n).size();
        rec.row("family_size", "n=" + std::to_string(n),
                static_cast<double>(got > expected ? got - expected : expected - got), got == expected);
    }

    int64_t table_range = std::min<int64_t>(max_count_n, 1000);
    for (int64_t n : admissible_moduli(table_range, order)) {
        std::vector<CharacterTable> S = set_S(n, order);

        // closed under conjugation
        bool closed = true;
        for (const CharacterTable& chi : S) {
            CharacterTable cc = chi.conjugate();
            bool found = false;
            for (const CharacterTable& other : S) {
                if (same_values(cc, other)) found = true;
            }
            if (!found) closed = false;
        }
        rec.row("conjugation_closure", "n=" + std::to_string(n), closed ? 0.0 : 1.0, closed);

        if (n == 1) continue;

        // exact full-period cancellation away from perfect powers
        bool power = true;
        for (const PrimePower& pp : factor_prime_powers(static_cast<uint64_t>(n))) {
            if (pp.e % order != 0) power = false;
        }
        if (!power) {
            for (const CharacterTable& chi : S) {
                std::array<int64_t, 4> c{};
                for (int64_t m = 0; m < n; ++m) {
                    if (chi.values[m] != kNoValue) ++c[chi.values[m]];
                }
                bool zero = order == 3 ? (c[0] == c[1] && c[1] == c[2])
                                       : (c[0] == c[2] && c[1] == c[3]);
                rec.row("period_sum_zero", "n=" + std::to_string(n), zero ? 0.0 : 1.0, zero);
            }
        }

        // CRT component structure against the dlog primitives
        for (const CharacterTable& chi : S) {
            for (const PrimePower& pp : factor_prime_powers(static_cast<uint64_t>(n))) {
                int64_t p = static_cast<int64_t>(pp.p);
                int64_t pk = 1;
                for (int e = 0; e < pp.e; ++e) pk *= p;
                int64_t rest = n / pk;
                std::vector<CharacterTable> prims = primitive_chars_dlog(p, order);
                bool matched = false;
                for (const CharacterTable& prim : prims) {
                    bool all_ok = true;
                    for (int64_t x = 0; x < pk && all_ok; ++x) {
                        int64_t m = crt_lift(x, pk, rest, n);
                        int8_t lhs = chi.values[m];
                        int8_t rhs = x % p == 0 ? kNoValue
                                                : static_cast<int8_t>((pp.e * prim.values[x % p]) % order);
                        if (lhs != rhs) all_ok = false;
                    }
                    if (all_ok) matched = true;
                }
                rec.row("crt_component", "n=" + std::to_string(n) + ";p=" + std::to_string(p),
                        matched ? 0.0 : 1.0, matched);
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Polya-Vinogradov suite
// ---------------------------------------------------------------------------

void polya_vinogradov(int order, int64_t max_n, Recorder& rec) {
    if (max_n <= 0) max_n = 2000;
    for (int64_t n : admissible_moduli(max_n, order)) {
        if (n == 1) continue;
        bool power = true;
        for (const PrimePower& pp : factor_prime_powers(static_cast<uint64_t>(n))) {
            if (pp.e % order != 0) power = false;
        }
        if (power) continue;  // principal member, bound does not apply
        double bound = std::sqrt(static_cast<double>(n)) * std::log(static_cast<double>(n)) + 1.0;
        double bound2 = bound * bound;
        for (const CharacterTable& chi : set_S(n, order)) {
            std::vector<Complex> prefix(static_cast<size_t>(2 * n + 1));
            prefix[0] = {0, 0};
            for (int64_t m = 1; m <= 2 * n; ++m) prefix[m] = prefix[m - 1] + chi.value_at(m);
            double worst = 0;
            for (int64_t M = 0; M < n; ++M) {
                for (int64_t len = 1; len <= n; ++len) {
                    worst = std::max(worst, std::norm(prefix[M + len] - prefix[M]));
                }
            }
            double d = std::sqrt(worst);
            rec.row("polya_vinogradov", "n=" + std::to_string(n), std::max(0.0, d - bound), d * d <= bound2);
        }
    }
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"reciprocity", "gauss-identities", "tau-relations",
                                                   "poisson", "bijection", "pv"};
    return names;
}

SuiteSummary run_suite(const std::string& suite, int order, int64_t max_norm, const RowSink& sink) {
    if (order != 3 && order != 4) throw std::domain_error("run_suite: order must be 3 or 4");
    SuiteSummary sum;
    sum.suite = suite;
    sum.order = order;
    Recorder rec{sum, sink};
    if (suite == "reciprocity") {
        if (order == 3) {
            reciprocity_w(max_norm <= 0 ? 1000 : max_norm, rec);
        } else {
            reciprocity_i(max_norm <= 0 ? 1000 : max_norm, rec);
        }
    } else if (suite == "gauss-identities") {
        if (order == 3) {
            gauss_identities_w(max_norm, rec);
        } else {
            gauss_identities_i(max_norm, rec);
        }
    } else if (suite == "tau-relations") {
        tau_relations(order, max_norm, rec);
    } else if (suite == "poisson") {
        poisson(order, max_norm, rec);
    } else if (suite == "bijection") {
        bijection(order, max_norm <= 0 ? 500 : std::min<int64_t>(max_norm, 500), max_norm, rec);
    } else if (suite == "pv") {
        polya_vinogradov(order, max_norm, rec);
    } else {
        throw std::domain_error("run_suite: unknown suite " + suite);
    }
    return sum;
}

}  // namespace cqmv
