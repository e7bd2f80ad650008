#include "ffl/factor.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ffl/families.hpp"

namespace ffl {

namespace {

// Prime divisors of a small integer (degrees, so n <= ~64).
std::vector<int> int_prime_divisors(int n) {
    std::vector<int> ps;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

// In the prime field, c^q = c, so a q-th power is recognized by its support
// and the root is read off directly.
Poly qth_root(const Poly& f) {
    const Fq fq = f.field();
    std::vector<std::int64_t> c(static_cast<size_t>(f.deg() / fq.q) + 1, 0);
    for (int i = 0; i <= f.deg(); ++i) {
        if (f.coeff(i) == 0) continue;
        if (i % fq.q != 0) throw std::logic_error("not a q-th power");
        c[static_cast<size_t>(i / fq.q)] = f.coeff(i);
    }
    return Poly(fq, std::move(c));
}

// Equal-degree splitting of a product of distinct monic irreducibles of
// degree d. Candidates u are scanned monic, lex-ascending, degree-ascending;
// u^((q^d-1)/2) mod g separates any two factors for some such u.
void equal_degree_split(const Poly& g, int d, std::vector<Poly>& out) {
    if (g.deg() == d) {
        out.push_back(g);
        return;
    }
    const Fq fq = g.field();
    Int half = (int_pow(fq.q, d) - 1) / 2;
    for (int cand_deg = 1; cand_deg <= 2 * d; ++cand_deg) {
        std::uint64_t count = 1;
        for (int i = 0; i < cand_deg; ++i) count *= static_cast<std::uint64_t>(fq.q);
        for (std::uint64_t rank = 0; rank < count; ++rank) {
            Poly u = monic_from_rank(fq, cand_deg, rank);
            Poly t = gcd(u, g);
            if (t.deg() == 0) {
                Poly s = pow_mod(u, half, g);
                t = gcd(sub(s, Poly::one(fq)), g);
            }
            if (t.deg() > 0 && t.deg() < g.deg()) {
                equal_degree_split(t, d, out);
                equal_degree_split(divmod(g, t).first, d, out);
                return;
            }
        }
    }
    throw std::logic_error("equal-degree splitting failed; input was not a product of distinct primes");
}

// DDF + EDF for a square-free monic polynomial.
std::vector<Poly> factor_squarefree(const Poly& w) {
    std::vector<Poly> primes;
    const Fq fq = w.field();
    Poly v = w;
    Poly h = Poly::x(fq);
    int d = 0;
    while (v.deg() > 0 && 2 * (d + 1) <= v.deg()) {
        ++d;
        h = pow_mod(h, Int(fq.q), v);
        Poly g = gcd(sub(h, Poly::x(fq)), v);
        if (g.deg() > 0) {
            equal_degree_split(g, d, primes);
            v = divmod(v, g).first;
            h = mod(h, v);
        }
    }
    if (v.deg() > 0) primes.push_back(v);
    return primes;
}

void factor_into(const Poly& f, int multiplier, std::map<std::string, PrimePower>& acc) {
    if (f.deg() <= 0) return;
    Poly d = derivative(f);
    if (d.is_zero()) {
        factor_into(qth_root(f), multiplier * static_cast<int>(f.q()), acc);
        return;
    }
    Poly w = divmod(f, gcd(f, d)).first;  // primes of f with exponent not divisible by q
    Poly rem = f;
    for (const Poly& p : factor_squarefree(w)) {
        int e = 0;
        while (true) {
            auto [quo, r] = divmod(rem, p);
            if (!r.is_zero()) break;
            rem = quo;
            ++e;
        }
        auto key = std::to_string(p.deg()) + "|" + p.encode();
        auto it = acc.find(key);
        if (it == acc.end())
            acc.emplace(key, PrimePower{p, e * multiplier});
        else
            it->second.exponent += e * multiplier;
    }
    if (rem.deg() > 0) factor_into(rem, multiplier, acc);
}

}  // namespace

namespace {

// Root scan plus raw-buffer trial division by the cached irreducibles of
// degree <= n/2. Exhaustive family enumeration calls this millions of times,
// so no heap traffic.
bool irreducible_small_field(const Poly& f) {
    const Fq fq = f.field();
    const int n = f.deg();
    const std::int64_t q = fq.q;
    for (std::int64_t a = 0; a < q; ++a) {
        std::int64_t v = 0;
        for (int i = n; i >= 0; --i) v = (v * a + f.coeff(i)) % q;
        if (v == 0) return false;
    }
    std::int64_t fc[32], buf[32];
    for (int i = 0; i <= n; ++i) fc[i] = f.coeff(i);
    for (int d = 2; 2 * d <= n; ++d) {
        for (const Poly& p : irreducibles(fq, d)) {
            for (int i = 0; i <= n; ++i) buf[i] = fc[i];
            for (int i = n; i >= d; --i) {
                const std::int64_t top = buf[i];
                if (top == 0) continue;
                for (int j = 0; j < d; ++j) {
                    std::int64_t v = (buf[i - d + j] - top * p.coeff(j)) % q;
                    if (v < 0) v += q;
                    buf[i - d + j] = v;
                }
            }
            bool divides = true;
            for (int j = 0; j < d; ++j)
                if (buf[j] != 0) {
                    divides = false;
                    break;
                }
            if (divides) return false;
        }
    }
    return true;
}

}  // namespace

bool is_irreducible(const Poly& f) {
    if (!f.is_monic()) throw std::invalid_argument("irreducibility test expects a monic polynomial");
    int n = f.deg();
    if (n < 1) return false;
    if (n == 1) return true;
    const Fq fq = f.field();
    if (fq.q <= 257 && n <= 24) return irreducible_small_field(f);
    Poly xq = pow_mod(Poly::x(fq), Int(fq.q), f);
    // Frobenius orbit x^(q^i) mod f for i = 1..n.
    std::vector<Poly> frob;
    frob.push_back(xq);
    for (int i = 1; i < n; ++i) frob.push_back(compose_mod(frob.back(), xq, f));
    if (frob.back() != mod(Poly::x(fq), f)) return false;
    for (int p : int_prime_divisors(n)) {
        const Poly& h = frob[static_cast<size_t>(n / p) - 1];
        if (gcd(sub(h, Poly::x(fq)), f).deg() != 0) return false;
    }
    return true;
}

Factorization factorize(const Poly& f) {
    if (!f.is_monic()) throw std::invalid_argument("factorization expects a monic polynomial");
    std::map<std::string, PrimePower> acc;
    factor_into(f, 1, acc);
    Factorization out;
    out.factors.reserve(acc.size());
    for (auto& [key, pp] : acc) out.factors.push_back(pp);
    std::sort(out.factors.begin(), out.factors.end(), [](const PrimePower& a, const PrimePower& b) {
        if (a.prime.deg() != b.prime.deg()) return a.prime.deg() < b.prime.deg();
        return lex_less(a.prime, b.prime);
    });
    return out;
}

Poly Factorization::product(Fq field) const {
    Poly r = Poly::one(field);
    for (const auto& pp : factors)
        for (int i = 0; i < pp.exponent; ++i) r = mul(r, pp.prime);
    return r;
}

int Factorization::big_omega() const {
    int s = 0;
    for (const auto& pp : factors) s += pp.exponent;
    return s;
}

ArithInfo arith_info(const Factorization& fac) {
    ArithInfo info;
    info.omega = fac.omega();
    info.big_omega = fac.big_omega();
    bool squarefree = true;
    Rat nu = 1;
    Int tau = 1;
    for (const auto& pp : fac.factors) {
        if (pp.exponent > 1) squarefree = false;
        Int fact = 1;
        for (int i = 2; i <= pp.exponent; ++i) fact *= i;
        nu /= Rat(fact);
        tau *= (2 * pp.exponent + 1);
    }
    info.mu = squarefree ? (info.omega % 2 == 0 ? 1 : -1) : 0;
    info.nu = nu;
    info.tau_of_square = tau;
    return info;
}

ArithInfo arith_info(const Poly& f) { return arith_info(factorize(f)); }

}  // namespace ffl
