#include "ffl/families.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace ffl {

FamilyKind family_kind_from_string(const std::string& s) {
    if (s == "monic") return FamilyKind::monic;
    if (s == "squarefree") return FamilyKind::squarefree;
    if (s == "irreducible") return FamilyKind::irreducible;
    throw std::invalid_argument("unknown family kind: " + s);
}

const char* to_string(FamilyKind k) {
    switch (k) {
        case FamilyKind::monic: return "monic";
        case FamilyKind::squarefree: return "squarefree";
        case FamilyKind::irreducible: return "irreducible";
    }
    return "?";
}

namespace {

int int_moebius(int n) {
    int m = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            m = -m;
        }
    }
    if (n > 1) m = -m;
    return m;
}

}  // namespace

Int prime_count(Fq field, int n) {
    if (n < 1) throw std::invalid_argument("prime_count needs degree >= 1");
    Int sum = 0;
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        int m = int_moebius(d);
        if (m == 0) continue;
        sum += m * int_pow(field.q, n / d);
    }
    return sum / n;
}

Int family_count(const FamilySpec& spec) {
    const auto q = spec.field.q;
    if (spec.n < 0) throw std::invalid_argument("negative degree");
    switch (spec.kind) {
        case FamilyKind::monic: return int_pow(q, spec.n);
        case FamilyKind::squarefree:
            if (spec.n == 0) return 1;
            if (spec.n == 1) return q;
            return int_pow(q, spec.n - 1) * (q - 1);
        case FamilyKind::irreducible:
            if (spec.n == 0) return 0;
            return prime_count(spec.field, spec.n);
    }
    throw std::logic_error("unreachable");
}

bool family_member(const FamilySpec& spec, const Poly& f) {
    switch (spec.kind) {
        case FamilyKind::monic: return true;
        case FamilyKind::squarefree: return is_squarefree(f);
        case FamilyKind::irreducible: return is_irreducible(f);
    }
    return false;
}

std::uint64_t monic_space_size(Fq field, int n) {
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) {
        if (total > UINT64_MAX / static_cast<std::uint64_t>(field.q))
            throw std::overflow_error("family rank space exceeds 64 bits");
        total *= static_cast<std::uint64_t>(field.q);
    }
    return total;
}

std::vector<Poly> family_collect(const FamilySpec& spec) {
    std::vector<Poly> out;
    family_for_each(spec, 0, monic_space_size(spec.field, spec.n),
                    [&](const Poly& f) { out.push_back(f); });
    return out;
}

const std::vector<Poly>& irreducibles(Fq field, int n) {
    static std::recursive_mutex mu;
    static std::map<std::pair<std::int64_t, int>, std::vector<Poly>> cache;
    std::lock_guard<std::recursive_mutex> lock(mu);
    auto key = std::make_pair(field.q, n);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto list = family_collect(FamilySpec{field, n, FamilyKind::irreducible});
    return cache.emplace(key, std::move(list)).first->second;
}

}  // namespace ffl
