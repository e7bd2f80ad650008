#pragma once

#include <vector>

#include "ffl/numbers.hpp"
#include "ffl/poly.hpp"

namespace ffl {

struct PrimePower {
    Poly prime;
    int exponent;
};

// Complete factorization of a monic polynomial into monic irreducibles,
// ordered by (degree, lex) so that reruns are bit-identical.
struct Factorization {
    std::vector<PrimePower> factors;

    Poly product(Fq field) const;
    int omega() const { return static_cast<int>(factors.size()); }
    int big_omega() const;
};

// Deterministic Rabin irreducibility test (Frobenius powers).
bool is_irreducible(const Poly& f);

// Distinct-degree splitting followed by a deterministic equal-degree
// refinement (candidates scanned in lex order). Input must be monic.
Factorization factorize(const Poly& f);

// The arithmetic functions the moment machinery needs, all exact:
// mu(f) = (-1)^omega for square-free f and 0 otherwise, nu multiplicative
// with nu(P^a) = 1/a!, and tau(f^2) = prod (2 e_i + 1).
struct ArithInfo {
    int mu;
    int omega;
    int big_omega;
    Rat nu;
    Int tau_of_square;
};

ArithInfo arith_info(const Factorization& fac);
ArithInfo arith_info(const Poly& f);

}  // namespace ffl
