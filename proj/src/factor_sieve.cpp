#include "ffl/factor_sieve.hpp"

#include <stdexcept>

namespace ffl {

namespace {

// Monic coefficient vector (low first, leading 1) from a lex rank; c_0 is
// the most significant digit, matching monic_from_rank.
inline void decode_rank(std::int64_t q, int deg, std::uint64_t rank, std::int64_t* c) {
    c[deg] = 1;
    for (int i = deg - 1; i >= 0; --i) {
        c[i] = static_cast<std::int64_t>(rank % static_cast<std::uint64_t>(q));
        rank /= static_cast<std::uint64_t>(q);
    }
}

inline std::uint64_t encode_rank(std::int64_t q, int deg, const std::int64_t* c) {
    std::uint64_t r = 0;
    for (int i = 0; i < deg; ++i)
        r = r * static_cast<std::uint64_t>(q) + static_cast<std::uint64_t>(c[i]);
    return r;
}

}  // namespace

FactorSieve::FactorSieve(Fq field, int maxdeg, std::int64_t entry_cap) : fq_(field), maxdeg_(maxdeg) {
    if (maxdeg < 0 || maxdeg > 24) throw std::invalid_argument("factor sieve degree out of range");
    size_.resize(static_cast<size_t>(maxdeg) + 1);
    offset_.resize(static_cast<size_t>(maxdeg) + 1);
    std::uint64_t total = 0;
    std::uint64_t m = 1;
    for (int d = 0; d <= maxdeg; ++d) {
        size_[static_cast<size_t>(d)] = m;
        offset_[static_cast<size_t>(d)] = total;
        total += m;
        if (total > static_cast<std::uint64_t>(entry_cap))
            throw resource_cap_error("factor sieve would need " + std::to_string(total) + " entries");
        m *= static_cast<std::uint64_t>(fq_.q);
    }
    spf_.assign(total, 0);

    const std::int64_t q = fq_.q;
    std::int64_t pc[32], mc[32], prod[32];
    for (int d = 1; d <= maxdeg; ++d) {
        for (std::uint64_t rank = 0; rank < size_[static_cast<size_t>(d)]; ++rank) {
            if (spf_[offset_[static_cast<size_t>(d)] + rank] != 0) continue;  // composite
            // Unmarked at its own degree: no factor of smaller degree, so prime.
            const std::uint32_t id = static_cast<std::uint32_t>(prime_coeffs_.size());
            decode_rank(q, d, rank, pc);
            prime_coeffs_.emplace_back(pc, pc + d + 1);
            for (int md = 1; md + d <= maxdeg; ++md) {
                const std::uint64_t msize = size_[static_cast<size_t>(md)];
                for (std::uint64_t mrank = 0; mrank < msize; ++mrank) {
                    decode_rank(q, md, mrank, mc);
                    const int pd = d + md;
                    for (int i = 0; i <= pd; ++i) prod[i] = 0;
                    for (int i = 0; i <= d; ++i) {
                        const std::int64_t a = pc[i];
                        if (a == 0) continue;
                        for (int j = 0; j <= md; ++j) prod[i + j] = (prod[i + j] + a * mc[j]) % q;
                    }
                    std::uint64_t idx = offset_[static_cast<size_t>(pd)] + encode_rank(q, pd, prod);
                    if (spf_[idx] == 0) spf_[idx] = id + 1;
                }
            }
        }
    }
}

void FactorSieve::pattern(int deg, std::uint64_t rank, std::vector<PrimeExp>& out) const {
    out.clear();
    if (deg < 0 || deg > maxdeg_) throw std::invalid_argument("degree outside sieve range");
    const std::int64_t q = fq_.q;
    std::int64_t fc[32];
    decode_rank(q, deg, rank, fc);
    int fdeg = deg;
    while (fdeg > 0) {
        std::uint64_t r = encode_rank(q, fdeg, fc);
        std::uint32_t id = spf_[offset_[static_cast<size_t>(fdeg)] + r];
        if (id == 0) {
            // the remaining cofactor is itself irreducible
            out.push_back({fdeg, 1});
            return;
        }
        const auto& pc = prime_coeffs_[id - 1];
        const int pd = static_cast<int>(pc.size()) - 1;
        // divide fc by the (monic) prime; remainder is known to vanish
        int e = 0;
        while (true) {
            std::int64_t work[32], quot[32];
            for (int i = 0; i <= fdeg; ++i) work[i] = fc[i];
            for (int i = fdeg; i >= pd; --i) {
                const std::int64_t top = work[i];
                quot[i - pd] = top;
                if (top == 0) continue;
                work[i] = 0;
                for (int j = 0; j < pd; ++j) {
                    std::int64_t v = (work[i - pd + j] - top * pc[static_cast<size_t>(j)]) % q;
                    if (v < 0) v += q;
                    work[i - pd + j] = v;
                }
            }
            bool divisible = true;
            for (int j = 0; j < pd; ++j)
                if (work[j] != 0) {
                    divisible = false;
                    break;
                }
            if (!divisible) break;
            ++e;
            fdeg -= pd;
            for (int i = 0; i <= fdeg; ++i) fc[i] = quot[i];
            if (fdeg < pd) break;
        }
        out.push_back({pd, e});
    }
}

}  // namespace ffl
