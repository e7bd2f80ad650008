#pragma once

#include <string>
#include <vector>

#include "ffl/guards.hpp"
#include "ffl/lfunction.hpp"

namespace ffl {

enum class Regime { improved, second, third, bound5, asymptotic };
const char* to_string(Regime r);

struct MomentOptions {
    int threads = 1;
    std::int64_t family_cap = kDefaultFamilyCap;
    LCache* cache = nullptr;        // optional read-through coefficient cache
    bool update_cache = false;      // record freshly computed halves
    bool force_complex_eval = false;  // evaluate through the complex path even at t = 0
};

struct MomentResult {
    std::int64_t q = 0;
    int g = 0;
    ShiftSpec shift;
    Int family_size;
    double moment = 0.0;
    double rhs_prediction = 0.0;  // NaN when k is not a positive integer
    double rel_error = 0.0;       // |moment - rhs|/rhs when rhs > 0, else NaN
    Regime regime = Regime::asymptotic;
};

// Exhaustive shifted negative moment over H_{2g+1}:
//   (1/|H|) sum_D L(1/2+beta+it, chi_D)^{-k}   (t = 0, positive L)
//   (1/|H|) sum_D |L(1/2+beta+it, chi_D)|^{-k} (t != 0).
// Deterministic chunked summation; bit-identical for any thread count.
// A non-positive L at t = 0 is an implementation bug and throws.
double negative_moment(Fq field, int g, const ShiftSpec& shift, const MomentOptions& opt = {});

// zeta_q(1+2 beta)^{k(k-1)/2} * A(beta) for integer k >= 1 (k = 0 gives 1).
double asymptotic_rhs(Fq field, int k, double beta, int cutoff = 40);

// Admissibility threshold (1+eps) k^2 (k+1) log g / (8 g).
double threshold_beta(double k, int g, double eps);

// Classifies beta against the case boundaries; ties go to the stronger
// bound, and "asymptotic" additionally requires the Corollary threshold.
Regime regime_classify(int g, double beta, double k, double eps);

// One family pass shared across the whole beta grid.
std::vector<MomentResult> compare_scan(Fq field, int g, double k,
                                       const std::vector<double>& beta_grid, double t,
                                       const MomentOptions& opt = {});

}  // namespace ffl
