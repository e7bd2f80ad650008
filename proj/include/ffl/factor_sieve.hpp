#pragma once

#include <cstdint>
#include <vector>

#include "ffl/field.hpp"
#include "ffl/guards.hpp"

namespace ffl {

// Smallest-prime-factor table over every monic polynomial of degree
// <= maxdeg, indexed by (degree, lex rank). Built once, then factoring a
// member costs a few raw divisions. Backs the brute-force series oracles,
// where millions of small factorizations are needed.
class FactorSieve {
public:
    FactorSieve(Fq field, int maxdeg, std::int64_t entry_cap = 100'000'000);

    const Fq& field() const { return fq_; }
    int maxdeg() const { return maxdeg_; }

    struct PrimeExp {
        int prime_deg;
        int exponent;
    };

    // Factorization pattern (degrees and exponents of the distinct primes)
    // of the monic polynomial with the given degree and lex rank.
    void pattern(int deg, std::uint64_t rank, std::vector<PrimeExp>& out) const;

    std::uint64_t degree_size(int deg) const { return size_[static_cast<size_t>(deg)]; }

private:
    Fq fq_;
    int maxdeg_;
    std::vector<std::uint64_t> size_;    // q^d per degree
    std::vector<std::uint64_t> offset_;  // start of each degree block
    std::vector<std::uint32_t> spf_;     // 0 = prime (or unit); else prime id + 1
    std::vector<std::vector<std::int64_t>> prime_coeffs_;
};

}  // namespace ffl
