#pragma once

#include <string>
#include <vector>

#include "ffl/moments.hpp"

namespace ffl {

// Shortest round-trip decimal representation; deterministic.
std::string fmt_double(double v);

// Fixed scan schema: q,g,k,beta,t,family_size,moment,rhs,rel_error,regime.
std::string scan_csv(const std::vector<MomentResult>& rows);

}  // namespace ffl
