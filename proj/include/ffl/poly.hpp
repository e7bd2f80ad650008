#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ffl/field.hpp"
#include "ffl/numbers.hpp"

namespace ffl {

// Dense polynomial over F_q, coefficients stored low degree first and kept
// normalized (no trailing zeros; the zero polynomial has an empty vector).
// Values are immutable in practice: every operation returns a new Poly.
class Poly {
public:
    explicit Poly(Fq field) : fq_(field) {}
    Poly(Fq field, std::vector<std::int64_t> coeffs);

    static Poly zero(Fq field) { return Poly(field); }
    static Poly one(Fq field) { return Poly(field, {1}); }
    static Poly constant(Fq field, std::int64_t c) { return Poly(field, {c}); }
    static Poly x(Fq field) { return Poly(field, {0, 1}); }

    const Fq& field() const { return fq_; }
    std::int64_t q() const { return fq_.q; }

    // Degree; -1 for the zero polynomial.
    int deg() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    std::int64_t coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(i)] : 0;
    }
    std::int64_t lc() const { return c_.empty() ? 0 : c_.back(); }
    const std::vector<std::int64_t>& coeffs() const { return c_; }

    // Norm |f| = q^deg(f); |0| is not defined and throws.
    Int norm() const;

    bool operator==(const Poly& o) const { return fq_.q == o.fq_.q && c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Canonical text encoding: comma-separated residues low-to-high,
    // e.g. "2,0,1" is x^2+2 over F_3. The zero polynomial encodes as "0".
    std::string encode() const;
    static Poly decode(Fq field, const std::string& text);

private:
    Fq fq_;
    std::vector<std::int64_t> c_;

    void normalize();
};

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly mul_scalar(const Poly& a, std::int64_t s);

// Exact division with remainder: a = q*b + r, deg r < deg b. Throws on b = 0.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly mod(const Poly& a, const Poly& b);

// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

// Formal derivative.
Poly derivative(const Poly& f);

// Scale by the inverse of the leading coefficient.
Poly make_monic(const Poly& f);

// base^e mod m, e >= 0 as a big integer (exponents reach (q^deg-1)/2).
Poly pow_mod(const Poly& base, Int e, const Poly& m);

// f(g) mod m; used by the Frobenius-power irreducibility test.
Poly compose_mod(const Poly& f, const Poly& g, const Poly& m);

// deg f >= 1 and gcd(f, f') is constant (with the q-th power convention:
// f' = 0 with deg f >= 1 means f is a q-th power, hence not square-free).
bool is_squarefree(const Poly& f);

// Lexicographic order on low-to-high coefficient vectors, the project-wide
// enumeration order inside a fixed degree.
bool lex_less(const Poly& a, const Poly& b);

// Monic polynomials of degree n carry a rank in [0, q^n) whose ascending
// order equals lex order on the coefficient vector (c_0 most significant).
Poly monic_from_rank(Fq field, int n, std::uint64_t rank);
std::uint64_t monic_rank(const Poly& f);

}  // namespace ffl
