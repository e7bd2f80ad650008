#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ffl/field.hpp"
#include "ffl/poly.hpp"

namespace ffl {

// Truncated exponential sum_{s <= ell} x^s/s!; ell must be even, which makes
// the value strictly positive for every real x.
double exp_partial_sum(int ell, double x);

// Pointwise sweep of e^x <= (1 + e^{-ell/2}) E_ell(x) on [x_lo, x_hi],
// x_hi <= ell/e^2. Reports the minimum slack (>= 0 when the inequality holds).
struct TaylorSweep {
    double min_slack = 0.0;
    double worst_x = 0.0;
    bool pass = true;
};
TaylorSweep taylor_gap_check(int ell, double x_lo, double x_hi, int samples);

// Regime data for the prime weight: gamma = 1 and B = 1/2 + eps on the
// N*beta -> 0 side, gamma = 0 and B = 1 + 1/(q^{(N+1)beta} - 1) on the
// N*beta >> 1 side. The code cannot evaluate an asymptotic dichotomy, so the
// boundary sits at N*beta = 1 and the boundary itself takes the >> branch.
struct ABetaParams {
    std::int64_t q = 0;
    int N = 0;
    double beta = 0.0;
    double t = 0.0;
    double eps = 0.0;
    int gamma = 0;
    double B = 0.0;

    static ABetaParams make(Fq field, int N, double beta, double t, double eps);
};

struct SeriesValue {
    double value = 0.0;
    double tail_bound = 0.0;
};

// The weight attached to a prime of degree pdeg in the truncated Dirichlet
// polynomial approximation of -log|L|; depends on the prime only through its
// degree. Requires pdeg <= N. The j-series is summed until the increment
// bound (j+1) q^{-j(N+1)beta} drops below 1e-14 of the partial sum (absolute
// floor 1e-30); the geometric remainder is reported.
SeriesValue prime_weight(const ABetaParams& params, int pdeg);

// sum_{deg P in (lo, hi]} a(P;N) chi_D(P) / |P|^{1/2+beta}, primes visited
// by (degree, lex) order. Requires hi <= params.N.
double dirichlet_segment(const Poly& D, int lo, int hi, const ABetaParams& params);

class infeasible_schedule_error : public std::runtime_error {
public:
    explicit infeasible_schedule_error(const std::string& what) : std::runtime_error(what) {}
};

enum class ScheduleBranch { generic, large_beta, small_k };
const char* to_string(ScheduleBranch b);

// The interval decomposition parameters: degrees split at N_0 < ... < N_K,
// truncation orders ell_j (even), moment powers s_j (even), together with
// the budget constraints sum ell_j N_j <= 2g and
// sum_{r<=j} ell_r N_r + s_{j+1} N_{j+1} <= 2g.
struct SieveSchedule {
    std::int64_t q = 0;
    int g = 0;
    double k = 0.0;
    double beta = 0.0;
    double t = 0.0;
    double eps = 0.0;

    double a = 0.0, d = 0.0, r = 0.0, c = 0.0, alpha = 0.0;
    ScheduleBranch branch = ScheduleBranch::generic;
    std::vector<int> N, s, ell;
    int K = 0;

    // Whether c also satisfies the asymptotic sufficient condition
    // c^{1-d} <= (2-a-eps^4)(r^{1-d}-1)/a^d. At desk-scale g it rarely does;
    // the budgets below are what is asserted.
    bool c_condition_holds = false;

    bool budget_total_ok() const;  // sum ell_j N_j <= 2g
    bool budget_mixed_ok() const;  // sum_{r<=j} ell_r N_r + s_{j+1} N_{j+1} <= 2g
    std::int64_t budget_used() const;
};

// Constructs the schedule for (q, g, k, beta, eps), selecting the first-step
// branch by the case analysis: small-k when 2k(1+eps) <= 1, the
// ell_0 = s_0 variant when beta >= (log g)^{1-1/(2k)+eps}/g, and the generic
// first step otherwise. The interval chain is extended greedily while both
// budgets hold; c is then fixed so that N_K = [c g]. Infeasible parameters
// raise infeasible_schedule_error; nothing is clamped silently.
SieveSchedule build_schedule(Fq field, int g, double k, double beta, double eps);

// D lies in the T-set at index r: max_{r <= u <= K} |segment| <= ell_r/(k e^2).
bool t_membership(const Poly& D, const SieveSchedule& sched, int r);

// Fraction of D in H_{2g+1} failing t_membership at r = 0.
double exceptional_fraction(Fq field, int g, const SieveSchedule& sched,
                            std::int64_t family_cap, int threads);

}  // namespace ffl
