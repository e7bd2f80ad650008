#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ffl/poly.hpp"

using namespace ffl;

namespace {

Poly random_monic(Fq fq, int deg, std::mt19937& rng) {
    std::uniform_int_distribution<std::int64_t> dist(0, fq.q - 1);
    std::vector<std::int64_t> c(static_cast<size_t>(deg) + 1);
    for (int i = 0; i < deg; ++i) c[static_cast<size_t>(i)] = dist(rng);
    c[static_cast<size_t>(deg)] = 1;
    return Poly(fq, std::move(c));
}

}  // namespace

TEST_CASE("field validation") {
    CHECK_NOTHROW(Fq(3));
    CHECK_NOTHROW(Fq(5));
    CHECK_NOTHROW(Fq(101));
    CHECK_THROWS_AS(Fq(2), std::invalid_argument);   // even
    CHECK_THROWS_AS(Fq(9), std::invalid_argument);   // odd composite
    CHECK_THROWS_AS(Fq(1), std::invalid_argument);
    CHECK_THROWS_AS(Fq(-7), std::invalid_argument);
    CHECK_THROWS_AS(Fq(4000000007LL), std::invalid_argument);  // q^2 overflows
}

TEST_CASE("legendre symbol of scalars") {
    Fq f3(3);
    CHECK(f3.legendre(1) == 1);
    CHECK(f3.legendre(2) == -1);
    CHECK(f3.legendre(0) == 0);
    Fq f5(5);
    CHECK(f5.legendre(4) == 1);
    CHECK(f5.legendre(2) == -1);
    CHECK(f5.legendre(3) == -1);
}

TEST_CASE("product examples") {
    Fq f3(3);
    // (x+1)(x+2) = x^2 + 3x + 2 = x^2 + 2 over F_3
    Poly a(f3, {1, 1});
    Poly b(f3, {2, 1});
    CHECK(mul(a, b) == Poly(f3, {2, 0, 1}));

    Fq f5(5);
    // (x+1)^2 = x^2 + 2x + 1
    Poly c(f5, {1, 1});
    CHECK(mul(c, c) == Poly(f5, {1, 2, 1}));

    std::mt19937 rng(11);
    for (int i = 0; i < 50; ++i) {
        Poly f = random_monic(f5, 1 + static_cast<int>(rng() % 6), rng);
        CHECK(mul(f, Poly::one(f5)) == f);
        Poly g = random_monic(f5, 1 + static_cast<int>(rng() % 6), rng);
        CHECK(mul(f, g).deg() == f.deg() + g.deg());
    }
}

TEST_CASE("division with remainder") {
    Fq f3(3);
    // x^2 = (x+1)(x+2) + 1
    auto [quo, rem] = divmod(Poly(f3, {0, 0, 1}), Poly(f3, {1, 1}));
    CHECK(quo == Poly(f3, {2, 1}));
    CHECK(rem == Poly(f3, {1}));

    Poly a(f3, {2, 1, 1});
    auto [q1, r1] = divmod(a, a);
    CHECK(q1.is_one());
    CHECK(r1.is_zero());

    auto [q2, r2] = divmod(Poly(f3, {1, 1}), a);  // deg a > deg numerator
    CHECK(q2.is_zero());
    CHECK(r2 == Poly(f3, {1, 1}));

    CHECK_THROWS_AS(divmod(a, Poly::zero(f3)), std::invalid_argument);

    std::mt19937 rng(7);
    Fq f5(5);
    for (int i = 0; i < 200; ++i) {
        Poly f = random_monic(f5, static_cast<int>(rng() % 9), rng);
        Poly g = random_monic(f5, 1 + static_cast<int>(rng() % 5), rng);
        auto [qq, rr] = divmod(f, g);
        CHECK(add(mul(qq, g), rr) == f);
        CHECK(rr.deg() < g.deg());
    }
}

TEST_CASE("norm is q^deg and multiplicative") {
    Fq f3(3);
    CHECK(Poly(f3, {2, 0, 1}).norm() == 9);
    CHECK(Poly::one(f3).norm() == 1);
    std::mt19937 rng(3);
    for (int i = 0; i < 100; ++i) {
        Poly f = random_monic(f3, static_cast<int>(rng() % 7), rng);
        Poly g = random_monic(f3, static_cast<int>(rng() % 7), rng);
        CHECK(mul(f, g).norm() == f.norm() * g.norm());
    }
}

TEST_CASE("canonical text encoding") {
    Fq f3(3);
    Poly p = Poly::decode(f3, "2,0,1");
    CHECK(p.deg() == 2);
    CHECK(p.coeff(0) == 2);
    CHECK(p.coeff(1) == 0);
    CHECK(p.coeff(2) == 1);
    CHECK(p.encode() == "2,0,1");
    CHECK(Poly::decode(f3, "0").is_zero());
    CHECK_THROWS_AS(Poly::decode(f3, ""), std::invalid_argument);
    CHECK_THROWS_AS(Poly::decode(f3, "1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(Poly::decode(f3, "1,x"), std::invalid_argument);
    // residues reduce mod q on input
    CHECK(Poly::decode(f3, "4,1") == Poly(f3, {1, 1}));
}

TEST_CASE("monic rank round trip and lex order") {
    Fq f3(3);
    Poly prev = monic_from_rank(f3, 2, 0);
    CHECK(monic_rank(prev) == 0);
    for (std::uint64_t r = 1; r < 9; ++r) {
        Poly cur = monic_from_rank(f3, 2, r);
        CHECK(monic_rank(cur) == r);
        CHECK(lex_less(prev, cur));
        prev = cur;
    }
    CHECK_THROWS_AS(monic_from_rank(f3, 2, 9), std::invalid_argument);
    // degree 0: the single constant 1
    CHECK(monic_from_rank(f3, 0, 0).is_one());
}

TEST_CASE("gcd, derivative, square-free") {
    Fq f3(3);
    Poly sq = mul(Poly(f3, {1, 1}), Poly(f3, {1, 1}));  // (x+1)^2
    CHECK(gcd(sq, Poly(f3, {1, 1})) == Poly(f3, {1, 1}));
    CHECK(derivative(Poly(f3, {0, 0, 0, 1})).is_zero());  // (x^3)' = 0 in char 3
    CHECK_FALSE(is_squarefree(sq));
    CHECK_FALSE(is_squarefree(Poly(f3, {0, 0, 0, 1})));
    CHECK(is_squarefree(Poly(f3, {0, 1, 0, 1})));  // x^3 + x = x(x^2+1)
    CHECK(is_squarefree(Poly::one(f3)));
    CHECK_FALSE(is_squarefree(Poly::zero(f3)));
}

TEST_CASE("pow_mod and compose_mod") {
    Fq f3(3);
    Poly m(f3, {1, 0, 1});  // x^2 + 1, irreducible over F_3
    Poly x = Poly::x(f3);
    // x^9 = x mod m since the residue field is F_9
    CHECK(pow_mod(x, Int(9), m) == x);
    CHECK(compose_mod(Poly(f3, {1, 0, 1}), x, m).is_zero());  // m(x) mod m = 0
}
