#pragma once

#include <cstdint>
#include <vector>

#include "ffl/factor.hpp"
#include "ffl/numbers.hpp"
#include "ffl/poly.hpp"

namespace ffl {

enum class FamilyKind { monic, squarefree, irreducible };

FamilyKind family_kind_from_string(const std::string& s);
const char* to_string(FamilyKind k);

struct FamilySpec {
    Fq field;
    int n;  // degree
    FamilyKind kind;
};

// Exact member count: q^n monic, q^{n-1}(q-1) square-free (n >= 2; q at
// n = 1, 1 at n = 0), and the Moebius sum for irreducibles.
Int family_count(const FamilySpec& spec);

// Exact number of monic irreducibles of degree n: (1/n) sum_{d|n} mu(d) q^{n/d}.
Int prime_count(Fq field, int n);

bool family_member(const FamilySpec& spec, const Poly& f);

// Visits the family members with rank in [lo, hi) in ascending rank order
// (lex order on coefficient vectors). Ranks live in the full monic space
// [0, q^n); non-members are skipped, so contiguous sub-ranges partition the
// family exactly and may be consumed on distinct threads.
template <typename Fn>
void family_for_each(const FamilySpec& spec, std::uint64_t lo, std::uint64_t hi, Fn&& fn) {
    for (std::uint64_t rank = lo; rank < hi; ++rank) {
        Poly f = monic_from_rank(spec.field, spec.n, rank);
        if (family_member(spec, f)) fn(f);
    }
}

std::uint64_t monic_space_size(Fq field, int n);

std::vector<Poly> family_collect(const FamilySpec& spec);

// Cached lex-ordered list of monic irreducibles of degree n. Thread-safe;
// built once per (q, n).
const std::vector<Poly>& irreducibles(Fq field, int n);

}  // namespace ffl
