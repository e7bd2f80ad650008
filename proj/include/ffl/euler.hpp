#pragma once

#include <complex>
#include <vector>

#include "ffl/factor_sieve.hpp"
#include "ffl/field.hpp"
#include "ffl/numbers.hpp"

namespace ffl {

// zeta_q(s) = 1/(1 - q^{1-s}); throws near the pole line Re s = 1.
std::complex<double> zeta_q(Fq field, std::complex<double> s);
double zeta_q_real(Fq field, double s);

// Z(u) = 1/(1 - q u).
inline double zeta_u(Fq field, double u) { return 1.0 / (1.0 - static_cast<double>(field.q) * u); }

// A truncated Euler product / series value with a rigorous remainder.
struct EulerValue {
    double value = 0.0;
    double tail_bound = 0.0;
    int cutoff_degree = 0;
};

struct EulerValueC {
    std::complex<double> value;
    double tail_bound = 0.0;
    int cutoff_degree = 0;
};

// The arithmetic constant of the moment asymptotics:
//   A(beta) = prod_P (1 + sum_{j=1}^{[k/2]} C(k,2j) |P|^{-j(1+2 beta)}
//             (1+1/|P|)^{-1}) (1 - |P|^{-(1+2 beta)})^{C(k,2)},
// grouped by prime degree with exact degree counts. The tail uses the
// majorization |log factor| <= 2^k |P|^{-(1+2 beta)} per prime (valid for
// every degree >= 2), summed in closed geometric form.
EulerValue moment_euler_constant(Fq field, int k, double beta, int cutoff);

// Same series at complex beta; the tail bound depends on Re beta only.
EulerValueC moment_euler_constant(Fq field, int k, std::complex<double> beta, int cutoff);

// One degree-n factor of the product above, for hand checks.
double moment_euler_local_factor(Fq field, int k, double beta, int n);

// Independent brute-force oracle for zeta_q(1+2 beta)^C(k,2) * A(beta):
// the ordered k-tuples (h_1, ..., h_k) of monic square-free polynomials with
// square product are enumerated through their common square root ell
// (every tuple has prod h_j = ell^2 with deg ell <= maxdeg), each tuple
// weighted mu(h_1)...mu(h_k) |ell|^{-(1+2 beta)} prod_{P | ell}(1+1/|P|)^{-1}.
// Slot assignments per prime are enumerated literally as bitmasks.
EulerValue square_tuple_sum(const FactorSieve& sieve, int k, double beta, int maxdeg);

// Coefficient-by-coefficient comparison of sum_ell tau(ell^2) |ell|^{-(1+2b)}
// u^{deg ell} with the closed form Z(u/q^{1+2b})^3 Z(u^2/q^{2+4b})^{-1}.
// Exact rationals at beta = 0, tolerance 1e-10 otherwise.
struct TauSeriesReport {
    bool pass = true;
    int maxdeg = 0;
    double max_abs_err = 0.0;  // float mode only
};

TauSeriesReport tau_series_check(const FactorSieve& sieve, double beta, int maxdeg);

// Brute per-degree sums sum_{ell in M_n} tau(ell^2), exact.
std::vector<Int> tau_square_sums(const FactorSieve& sieve, int maxdeg);

}  // namespace ffl
