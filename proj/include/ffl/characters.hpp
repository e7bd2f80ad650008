#pragma once

#include "ffl/numbers.hpp"
#include "ffl/poly.hpp"

namespace ffl {

// Quadratic residue symbol (f/P) for P monic irreducible, straight from the
// exponentiation definition f^((|P|-1)/2) mod P. Throws if the power fails
// to land in {0, +-1}, which means P was not irreducible.
int residue_symbol(const Poly& f, const Poly& P);

// Jacobi symbol (A/Q) for Q monic nonzero, computed by the reciprocity
// reduction with sign (-1)^((q-1) deg A deg B / 2); Q is never factored.
// Non-monic remainders are normalized via the constant symbol
// (lc/Q) = legendre(lc)^deg Q.
int jacobi_symbol(const Poly& A, const Poly& Q);

// chi_D(f) = (D/f).
int chi_quadratic(const Poly& D, const Poly& f);

bool is_perfect_square(const Poly& f);

// Exhaustive family averages over H_{2g+1}, exact rationals.
// avg of chi_D(f^2); the limit is prod_{P|f} (1+1/|P|)^{-1}.
Rat avg_chi_square(Fq field, int g, const Poly& f, std::int64_t family_cap);

// avg of chi_D(f) for f not a perfect square; decays like q^{-g}.
Rat avg_chi_nonsquare(Fq field, int g, const Poly& f, std::int64_t family_cap);

// The Lemma limit prod_{P|f} (1+1/|P|)^{-1} as an exact rational.
Rat coprime_density_factor(const Poly& f);

}  // namespace ffl
