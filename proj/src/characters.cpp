#include "ffl/characters.hpp"

#include <stdexcept>

#include "ffl/factor.hpp"
#include "ffl/families.hpp"
#include "ffl/guards.hpp"

namespace ffl {

int residue_symbol(const Poly& f, const Poly& P) {
    if (!P.is_monic() || P.deg() < 1)
        throw std::invalid_argument("residue symbol needs a monic irreducible modulus");
    Poly r = mod(f, P);
    if (r.is_zero()) return 0;
    Int e = (int_pow(P.q(), P.deg()) - 1) / 2;
    Poly s = pow_mod(r, e, P);
    if (s.is_one()) return 1;
    if (s.deg() == 0 && s.coeff(0) == P.q() - 1) return -1;
    throw std::invalid_argument("modulus is not irreducible");
}

int jacobi_symbol(const Poly& A, const Poly& Q) {
    if (!Q.is_monic()) throw std::invalid_argument("Jacobi symbol needs a monic modulus");
    const Fq fq = Q.field();
    const bool q3mod4 = (fq.q % 4 == 3);
    int sign = 1;
    Poly num = A;
    Poly den = Q;
    while (true) {
        if (den.deg() == 0) return sign;  // modulus 1: empty product
        num = mod(num, den);
        if (num.is_zero()) return 0;
        // Peel the leading coefficient: (lc/den) = legendre(lc)^deg(den).
        if (den.deg() % 2 == 1 && fq.legendre(num.lc()) == -1) sign = -sign;
        Poly nm = make_monic(num);
        if (nm.deg() == 0) return sign;
        // Reciprocity for the monic pair; the sign is -1 exactly when
        // (q-1)/2 and both degrees are odd.
        if (q3mod4 && nm.deg() % 2 == 1 && den.deg() % 2 == 1) sign = -sign;
        num = den;
        den = nm;
    }
}

int chi_quadratic(const Poly& D, const Poly& f) { return jacobi_symbol(D, f); }

bool is_perfect_square(const Poly& f) {
    if (f.is_one()) return true;
    if (!f.is_monic()) return false;
    if (f.deg() % 2 != 0) return false;
    auto fac = factorize(f);
    for (const auto& pp : fac.factors)
        if (pp.exponent % 2 != 0) return false;
    return true;
}

Rat coprime_density_factor(const Poly& f) {
    Rat prod = 1;
    for (const auto& pp : factorize(f).factors) {
        Int norm = int_pow(f.q(), pp.prime.deg());
        prod *= Rat(norm, norm + 1);
    }
    return prod;
}

namespace {

Rat family_average(Fq field, int g, std::int64_t family_cap, const Poly& top) {
    check_family_cap(field, g, family_cap);
    const int n = 2 * g + 1;
    Int sum = 0;
    Int count = 0;
    FamilySpec spec{field, n, FamilyKind::squarefree};
    family_for_each(spec, 0, monic_space_size(field, n), [&](const Poly& D) {
        sum += chi_quadratic(D, top);
        ++count;
    });
    return Rat(sum, count);
}

}  // namespace

Rat avg_chi_square(Fq field, int g, const Poly& f, std::int64_t family_cap) {
    if (!f.is_monic()) throw std::invalid_argument("avg_chi_square expects a monic polynomial");
    return family_average(field, g, family_cap, mul(f, f));
}

Rat avg_chi_nonsquare(Fq field, int g, const Poly& f, std::int64_t family_cap) {
    if (is_perfect_square(f))
        throw std::invalid_argument("f is a perfect square; use avg_chi_square");
    return family_average(field, g, family_cap, f);
}

}  // namespace ffl
