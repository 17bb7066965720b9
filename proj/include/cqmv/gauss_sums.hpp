#pragma once

#include <cstdint>
#include <vector>

#include "cqmv/characters.hpp"
#include "cqmv/eisenstein.hpp"
#include "cqmv/gaussian.hpp"
#include "cqmv/types.hpp"

namespace cqmv {

// Complete residue system for Z[omega]/(n) resp. Z[i]/(n), enumerated from
// the column Hermite form of the lattice (n, n*omega) resp. (n, n*i).
// Exactly N(n) elements, lexicographic in the box coordinates, containing 0.
struct ResidueSystemW {
    EisInt modulus;
    std::vector<EisInt> elements;
};
struct ResidueSystemI {
    GaussInt modulus;
    std::vector<GaussInt> elements;
};

ResidueSystemW residues_mod_w(EisInt n, int64_t cap = residue_cap());
ResidueSystemI residues_mod_i(GaussInt n, int64_t cap = residue_cap());

// e(v mod 1) where v is the omega-coordinate (resp. the imaginary part)
// of num/den, computed as an exact reduced fraction.
Complex phase_etilde_w(EisInt num, EisInt den);
Complex phase_etilde_i(GaussInt num, GaussInt den);

// Evaluator for g_3(r, n): fixed primary (or unit) n, repeated r.
// Symbol exponents and phase pairs per residue are precomputed once;
// accumulation order over the residue system is fixed.
class GaussSumW {
  public:
    explicit GaussSumW(EisInt n, int64_t cap = residue_cap());
    Complex eval(EisInt r) const;
    Complex eval(int64_t r) const { return eval(EisInt{r, 0}); }
    const ResidueSystemW& residues() const { return res_; }
    int symbol_at(size_t j) const { return sym_[j]; }
    int64_t norm() const { return N_; }

  private:
    ResidueSystemW res_;
    int64_t N_;
    std::vector<int8_t> sym_;
    std::vector<int64_t> u_, v_;       // phase(r*x/n) = e(((r.a*u + r.b*v) mod N)/N)
    std::vector<Complex> roots_;       // e(k/N)
    std::vector<Complex> unit_roots_;  // e(e/3)
};

class GaussSumI {
  public:
    explicit GaussSumI(GaussInt n, int64_t cap = residue_cap());
    Complex eval(GaussInt r) const;
    Complex eval(int64_t r) const { return eval(GaussInt{r, 0}); }
    const ResidueSystemI& residues() const { return res_; }
    int symbol_at(size_t j) const { return sym_[j]; }
    int64_t norm() const { return N_; }

  private:
    ResidueSystemI res_;
    int64_t N_;
    std::vector<int8_t> sym_;
    std::vector<int64_t> u_, v_;
    std::vector<Complex> roots_;
    std::vector<Complex> unit_roots_;
};

Complex g3(EisInt r, EisInt n);
Complex g4(GaussInt r, GaussInt n);

// Classical Gauss sum tau(r, chi) = sum_x chi(x) e(r x / n).
class TauSum {
  public:
    explicit TauSum(const CharacterTable& chi);
    Complex eval(int64_t r) const;

  private:
    int64_t n_;
    std::vector<Complex> chival_;
    std::vector<Complex> roots_;
};

Complex tau(int64_t r, const CharacterTable& chi);

// Two-sided Poisson check with the self-dual weight exp(-pi t^2), both sides
// truncated where the Gaussian factor drops below 1e-16. Returns the larger
// componentwise difference.
double poisson_discrepancy(const CharacterTable& chi, double M);

}  // namespace cqmv
