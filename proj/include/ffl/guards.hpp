#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "ffl/field.hpp"
#include "ffl/numbers.hpp"

namespace ffl {

// Refusal to start an exhaustive sweep that would not finish at desk scale.
// The CLI maps this to exit code 2.
class resource_cap_error : public std::runtime_error {
public:
    explicit resource_cap_error(const std::string& what) : std::runtime_error(what) {}
};

// Default cap on |H_{2g+1}| = q^{2g}(q-1) for exhaustive family sweeps.
inline constexpr std::int64_t kDefaultFamilyCap = 50'000'000;

// |H_{2g+1}| as an exact integer (q for g = 0).
inline Int hyperelliptic_family_size(Fq field, int g) {
    if (g < 0) throw std::invalid_argument("negative genus");
    if (g == 0) return Int(field.q);
    return int_pow(field.q, 2 * g) * (field.q - 1);
}

inline void check_family_cap(Fq field, int g, std::int64_t cap) {
    Int size = hyperelliptic_family_size(field, g);
    if (size > cap)
        throw resource_cap_error("family size " + size.str() + " exceeds resource cap " +
                                 std::to_string(cap));
}

}  // namespace ffl
