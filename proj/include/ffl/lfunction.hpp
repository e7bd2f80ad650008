#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ffl/numbers.hpp"
#include "ffl/poly.hpp"

namespace ffl {

// The L-polynomial of chi_D for D in H_{2g+1}: degree 2g, integer
// coefficients, c_0 = 1, and the symmetry c_{2g-n} = q^{g-n} c_n.
struct LPolynomial {
    std::int64_t q = 0;
    int g = 0;
    std::vector<Int> coeffs;  // c_0 .. c_{2g}

    const Int& c(int n) const { return coeffs[static_cast<size_t>(n)]; }
};

// Evaluation point 1/2 + beta + it and moment exponent k.
struct ShiftSpec {
    double beta = 0.0;
    double t = 0.0;
    double k = 0.0;
};

// Symmetry check c_{2g-n} = q^{g-n} c_n in exact integer arithmetic. Meant
// for validation-mode polynomials whose halves were summed independently.
bool check_functional_equation(const LPolynomial& L);

// |c_n| <= q^n, c_0 = 1, degree 2g.
bool check_coefficient_bounds(const LPolynomial& L);

// Horner evaluation at u = q^{-(1/2+beta+it)}.
std::complex<double> evaluate(const LPolynomial& L, const ShiftSpec& shift);

struct RhReport {
    bool solver_ok = true;
    double max_deviation = 0.0;  // max | |root| - q^{-1/2} |
    int root_count = 0;
    bool pass(double tol) const { return solver_ok && max_deviation <= tol; }
};

// All 2g roots via a companion matrix in the rescaled variable v = u sqrt(q)
// (roots move to the unit circle, which keeps the eigenproblem benign).
RhReport check_rh(const LPolynomial& L);

// Per-(q, g) context: quadratic-residue tables for every monic irreducible
// of degree <= g, built once and shared read-only across threads.
class LContext {
public:
    LContext(Fq field, int g);

    const Fq& field() const { return fq_; }
    int genus() const { return g_; }

    // c_0..c_g of L(u, chi_D) via the truncated Euler product over primes of
    // degree <= g; exact, deterministic, no heap traffic. `c` has g+1 slots.
    // `dc`/`dn` describe D's coefficient array (dn = deg D = 2g+1).
    void half_coeffs(const std::int64_t* dc, int dn, std::int64_t* c) const;
    std::vector<std::int64_t> half_coeffs(const Poly& D) const;

    // Full L-polynomial: fast half + symmetry-filled tail.
    LPolynomial lpolynomial(const Poly& D) const;
    LPolynomial lpolynomial_from_half(const std::int64_t* c) const;
    LPolynomial lpolynomial_from_half(const std::vector<Int>& half) const;

private:
    Fq fq_;
    int g_;
    struct PrimeTable {
        std::vector<std::int64_t> pc;  // prime coefficients, low first
        int deg;
        std::vector<std::int8_t> chi;  // indexed by residue index
    };
    std::vector<PrimeTable> tables_;
};

// Validation mode: every coefficient c_0..c_{upto} summed directly as
// sum_{f in M_n} chi_D(f) through the reciprocity-based Jacobi symbol.
// Independent of the residue-table route above.
std::vector<Int> direct_coeffs(const Poly& D, int upto);
LPolynomial lpolynomial_direct(const Poly& D);

// Disk cache, one record per line: "D=<canonical poly>;c=<c_0>,...,<c_g>".
// Corrupt lines are skipped and counted.
class LCache {
public:
    LCache(std::int64_t q, int g) : q_(q), g_(g) {}

    struct LoadStats {
        std::size_t records = 0;
        std::size_t corrupt = 0;
    };
    LoadStats load(const std::string& path);
    void save(const std::string& path) const;

    const std::vector<Int>* find(const Poly& D) const;
    void put(const Poly& D, std::vector<Int> half);
    std::size_t size() const { return entries_.size(); }

    static std::string file_name(std::int64_t q, int g);

private:
    std::int64_t q_;
    int g_;
    std::map<std::string, std::vector<Int>> entries_;  // canonical D -> c_0..c_g
};

}  // namespace ffl
