#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ffl/factor.hpp"
#include "ffl/families.hpp"

using namespace ffl;

TEST_CASE("factorization examples over F_3") {
    Fq f3(3);
    // x^2 + x = x (x+1)
    auto fac = factorize(Poly(f3, {0, 1, 1}));
    REQUIRE(fac.factors.size() == 2);
    CHECK(fac.factors[0].prime == Poly(f3, {0, 1}));
    CHECK(fac.factors[0].exponent == 1);
    CHECK(fac.factors[1].prime == Poly(f3, {1, 1}));
    CHECK(fac.factors[1].exponent == 1);
    auto info = arith_info(fac);
    CHECK(info.mu == 1);
    CHECK(info.omega == 2);

    // x^2 = (x)^2
    auto fac2 = factorize(Poly(f3, {0, 0, 1}));
    REQUIRE(fac2.factors.size() == 1);
    CHECK(fac2.factors[0].exponent == 2);
    CHECK(arith_info(fac2).mu == 0);

    // x^2 + 1 has no root in F_3 and degree 2, so it is irreducible
    CHECK(is_irreducible(Poly(f3, {1, 0, 1})));
    auto fac3 = factorize(Poly(f3, {1, 0, 1}));
    CHECK(fac3.factors.size() == 1);
    CHECK(fac3.factors[0].exponent == 1);
}

TEST_CASE("arithmetic functions") {
    Fq f3(3);
    // nu(P^3) = 1/3!
    auto info = arith_info(Poly(f3, {0, 0, 0, 1}));  // x^3
    CHECK(info.nu == Rat(1, 6));
    CHECK(info.big_omega == 3);
    CHECK(info.mu == 0);

    // tau(x^2) = 3: divisors 1, x, x^2
    CHECK(arith_info(Poly(f3, {0, 1})).tau_of_square == 3);

    // empty product at f = 1
    auto one = arith_info(Poly::one(f3));
    CHECK(one.mu == 1);
    CHECK(one.big_omega == 0);
    CHECK(one.nu == Rat(1));
    CHECK(one.tau_of_square == 1);
}

TEST_CASE("factor then multiply reconstructs, exhaustively to degree 6") {
    for (std::int64_t q : {3, 5}) {
        Fq fq(q);
        for (int n = 0; n <= 6; ++n) {
            std::uint64_t total = monic_space_size(fq, n);
            for (std::uint64_t r = 0; r < total; ++r) {
                Poly f = monic_from_rank(fq, n, r);
                auto fac = factorize(f);
                REQUIRE(fac.product(fq) == f);
                // exponent-weighted degrees add up
                int degsum = 0;
                for (const auto& pp : fac.factors) {
                    CHECK(is_irreducible(pp.prime));
                    degsum += pp.prime.deg() * pp.exponent;
                }
                CHECK(degsum == n);
            }
        }
    }
}

TEST_CASE("multiplicativity on random coprime pairs") {
    std::mt19937 rng(2024);
    for (std::int64_t q : {3, 5}) {
        Fq fq(q);
        int done = 0;
        while (done < 150) {
            int df = 1 + static_cast<int>(rng() % 5);
            int dg = 1 + static_cast<int>(rng() % 5);
            std::uniform_int_distribution<std::uint64_t> pf(0, monic_space_size(fq, df) - 1);
            std::uniform_int_distribution<std::uint64_t> pg(0, monic_space_size(fq, dg) - 1);
            Poly f = monic_from_rank(fq, df, pf(rng));
            Poly g = monic_from_rank(fq, dg, pg(rng));
            if (gcd(f, g).deg() != 0) continue;
            ++done;
            auto fg = arith_info(mul(f, g));
            auto af = arith_info(f);
            auto ag = arith_info(g);
            CHECK(fg.mu == af.mu * ag.mu);
            CHECK(fg.tau_of_square == af.tau_of_square * ag.tau_of_square);
            CHECK(fg.nu == af.nu * ag.nu);
        }
    }
}

TEST_CASE("irreducibility test agrees with factorization, exhaustively") {
    Fq f3(3);
    for (int n = 1; n <= 5; ++n) {
        std::uint64_t total = monic_space_size(f3, n);
        for (std::uint64_t r = 0; r < total; ++r) {
            Poly f = monic_from_rank(f3, n, r);
            auto fac = factorize(f);
            bool irred = fac.factors.size() == 1 && fac.factors[0].exponent == 1;
            CHECK(is_irreducible(f) == irred);
        }
    }
}

TEST_CASE("high-multiplicity and q-th power factorizations") {
    Fq f3(3);
    Poly x1(f3, {1, 1});
    Poly p = Poly::one(f3);
    for (int i = 0; i < 7; ++i) p = mul(p, x1);  // (x+1)^7
    auto fac = factorize(p);
    REQUIRE(fac.factors.size() == 1);
    CHECK(fac.factors[0].exponent == 7);
    CHECK(arith_info(fac).nu == Rat(1, 5040));

    // mixed: x^3 (x+1) over F_3 exercises the q-th power branch
    Poly m = mul(Poly(f3, {0, 0, 0, 1}), x1);
    auto fac2 = factorize(m);
    REQUIRE(fac2.factors.size() == 2);
    CHECK(fac2.factors[0].prime == Poly(f3, {0, 1}));
    CHECK(fac2.factors[0].exponent == 3);
    CHECK(fac2.factors[1].exponent == 1);
}
