#pragma once

#include <cstdint>
#include <stdexcept>

namespace ffl {

// Prime field parameters. Only odd prime q is supported: quadratic residue
// symbols and the reciprocity law need odd characteristic. q is capped so
// that q*q fits in a signed 64-bit integer, keeping all residue arithmetic
// overflow-free without big integers.
struct Fq {
    std::int64_t q;

    explicit Fq(std::int64_t q_);

    std::int64_t add(std::int64_t a, std::int64_t b) const {
        std::int64_t s = a + b;
        return s >= q ? s - q : s;
    }
    std::int64_t sub(std::int64_t a, std::int64_t b) const {
        std::int64_t s = a - b;
        return s < 0 ? s + q : s;
    }
    std::int64_t mul(std::int64_t a, std::int64_t b) const { return (a * b) % q; }
    std::int64_t neg(std::int64_t a) const { return a == 0 ? 0 : q - a; }
    std::int64_t pow(std::int64_t a, std::int64_t e) const;
    std::int64_t inv(std::int64_t a) const;  // a != 0

    // Residue reduced into [0, q).
    std::int64_t reduce(std::int64_t a) const {
        std::int64_t r = a % q;
        return r < 0 ? r + q : r;
    }

    // Legendre symbol of a nonzero scalar: a^((q-1)/2) mapped to {-1,0,+1}.
    int legendre(std::int64_t a) const;

    bool operator==(const Fq& o) const { return q == o.q; }
};

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_i64(std::int64_t n);

}  // namespace ffl
