#include "ffl/field.hpp"

namespace ffl {

namespace {

std::int64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::int64_t>(
        static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m));
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1) r = static_cast<std::uint64_t>(mulmod_u64(r, a, m));
        a = static_cast<std::uint64_t>(mulmod_u64(a, a, m));
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_i64(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = static_cast<std::uint64_t>(n - 1);
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Sufficient witness set for all n < 3.3e24.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                            29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod_u64(a, d, static_cast<std::uint64_t>(n));
        if (x == 1 || x == static_cast<std::uint64_t>(n - 1)) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = powmod_u64(x, 2, static_cast<std::uint64_t>(n));
            if (x == static_cast<std::uint64_t>(n - 1)) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Fq::Fq(std::int64_t q_) : q(q_) {
    if (q < 3) throw std::invalid_argument("field modulus must be an odd prime >= 3");
    if (q % 2 == 0) throw std::invalid_argument("field modulus must be odd");
    // q*q must stay below 2^63.
    if (q > 3037000499LL) throw std::invalid_argument("field modulus too large for 64-bit residue arithmetic");
    if (!is_prime_i64(q)) throw std::invalid_argument("field modulus must be prime");
}

std::int64_t Fq::pow(std::int64_t a, std::int64_t e) const {
    std::int64_t r = 1;
    a = reduce(a);
    while (e > 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::int64_t Fq::inv(std::int64_t a) const {
    a = reduce(a);
    if (a == 0) throw std::invalid_argument("inverse of zero residue");
    return pow(a, q - 2);
}

int Fq::legendre(std::int64_t a) const {
    a = reduce(a);
    if (a == 0) return 0;
    std::int64_t v = pow(a, (q - 1) / 2);
    return v == 1 ? 1 : -1;
}

}  // namespace ffl
