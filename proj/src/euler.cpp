#include "ffl/euler.hpp"

#include <cmath>
#include <stdexcept>

#include "ffl/families.hpp"
#include "ffl/parallel.hpp"

namespace ffl {

std::complex<double> zeta_q(Fq field, std::complex<double> s) {
    const std::complex<double> w =
        1.0 - std::exp((1.0 - s) * std::log(static_cast<double>(field.q)));
    if (std::abs(w) < 1e-12)
        throw std::domain_error("zeta_q evaluated too close to the pole line Re s = 1");
    return 1.0 / w;
}

double zeta_q_real(Fq field, double s) {
    const double w = 1.0 - std::pow(static_cast<double>(field.q), 1.0 - s);
    if (std::abs(w) < 1e-12)
        throw std::domain_error("zeta_q evaluated too close to the pole line Re s = 1");
    return 1.0 / w;
}

namespace {

// Scalar-generic local factor: T is double or complex<double>.
template <typename T>
T local_factor(Fq field, int k, T beta, int n) {
    const double logq = std::log(static_cast<double>(field.q));
    const T x = std::exp(-static_cast<double>(n) * (1.0 + 2.0 * beta) * logq);
    const double invnorm = std::pow(static_cast<double>(field.q), -n);
    T inner = T(0);
    T xj = T(1);
    for (int j = 1; 2 * j <= k; ++j) {
        xj *= x;
        inner += to_double(binomial(k, 2 * j)) * xj;
    }
    const double w = 1.0 / (1.0 + invnorm);  // (1 + 1/|P|)^{-1}
    const double c2 = to_double(binomial(k, 2));
    return (T(1) + inner * w) * std::exp(c2 * std::log(T(1) - x));
}

// Closed-form geometric tail of the log-product beyond `cutoff`:
// sum_{n > cutoff} (q^n/n) 2^k q^{-n(1+2 Re beta)}.
double product_tail_log(Fq field, int k, double re_beta, int cutoff) {
    const double r = std::pow(static_cast<double>(field.q), -2.0 * re_beta);
    if (!(r < 1.0)) return INFINITY;
    const double first = std::pow(r, cutoff + 1);
    return std::exp2(k) / (cutoff + 1) * first / (1.0 - r);
}

template <typename T>
void accumulate_log_product(Fq field, int k, T beta, int cutoff, T& log_acc) {
    log_acc = T(0);
    // fixed ascending-degree order, compensated in the real case
    Kahan real_comp, imag_comp;
    for (int n = 1; n <= cutoff; ++n) {
        const double pi_n = to_double(prime_count(field, n));
        const T lf = std::log(local_factor(field, k, beta, n));
        if constexpr (std::is_same_v<T, double>) {
            real_comp.add(pi_n * lf);
        } else {
            real_comp.add(pi_n * lf.real());
            imag_comp.add(pi_n * lf.imag());
        }
    }
    if constexpr (std::is_same_v<T, double>)
        log_acc = real_comp.total();
    else
        log_acc = T(real_comp.total(), imag_comp.total());
}

}  // namespace

double moment_euler_local_factor(Fq field, int k, double beta, int n) {
    if (k < 1) throw std::invalid_argument("k must be a positive integer");
    return local_factor(field, k, beta, n);
}

EulerValue moment_euler_constant(Fq field, int k, double beta, int cutoff) {
    if (k < 1) throw std::invalid_argument("k must be a positive integer");
    if (cutoff < 1) throw std::invalid_argument("cutoff must be at least 1");
    if (!(beta > 0)) throw std::invalid_argument("beta must be positive");
    EulerValue out;
    out.cutoff_degree = cutoff;
    if (k == 1) {
        // the inner sum is empty and C(1,2) = 0: every factor is exactly 1
        out.value = 1.0;
        out.tail_bound = 0.0;
        return out;
    }
    double log_acc;
    accumulate_log_product(field, k, beta, cutoff, log_acc);
    out.value = std::exp(log_acc);
    out.tail_bound = out.value * std::expm1(product_tail_log(field, k, beta, cutoff));
    return out;
}

EulerValueC moment_euler_constant(Fq field, int k, std::complex<double> beta, int cutoff) {
    if (k < 1) throw std::invalid_argument("k must be a positive integer");
    if (cutoff < 1) throw std::invalid_argument("cutoff must be at least 1");
    if (!(beta.real() > 0)) throw std::invalid_argument("Re beta must be positive");
    EulerValueC out;
    out.cutoff_degree = cutoff;
    if (k == 1) {
        out.value = 1.0;
        out.tail_bound = 0.0;
        return out;
    }
    std::complex<double> log_acc;
    accumulate_log_product(field, k, beta, cutoff, log_acc);
    out.value = std::exp(log_acc);
    out.tail_bound = std::abs(out.value) * std::expm1(product_tail_log(field, k, beta.real(), cutoff));
    return out;
}

namespace {

// Number of ways to place one prime with exponent 2a into k slots, each slot
// taking the prime at most once (the h_j are square-free), with the mu-sign
// of each placement. Literal bitmask enumeration.
std::int64_t slot_assignments(int k, int two_a) {
    std::int64_t total = 0;
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        const int pop = __builtin_popcount(mask);
        if (pop != two_a) continue;
        total += (pop % 2 == 0) ? 1 : -1;
    }
    return total;
}

}  // namespace

EulerValue square_tuple_sum(const FactorSieve& sieve, int k, double beta, int maxdeg) {
    if (k < 1 || k > 16) throw resource_cap_error("tuple slot count out of range");
    if (maxdeg > sieve.maxdeg()) throw std::invalid_argument("maxdeg exceeds sieve range");
    if (!(beta > 0)) throw std::invalid_argument("beta must be positive");
    const Fq field = sieve.field();
    const double logq = std::log(static_cast<double>(field.q));

    // per-exponent assignment counts, computed once
    std::vector<std::int64_t> assign(static_cast<size_t>(k) + 1, 0);
    for (int a = 1; 2 * a <= k; ++a) assign[static_cast<size_t>(a)] = slot_assignments(k, 2 * a);

    Kahan acc;
    acc.add(1.0);  // ell = 1: the all-ones tuple
    std::vector<FactorSieve::PrimeExp> pat;
    for (int n = 1; n <= maxdeg; ++n) {
        const double norm_weight = std::exp(-n * (1.0 + 2.0 * beta) * logq);
        Kahan degree_acc;
        const std::uint64_t m = sieve.degree_size(n);
        for (std::uint64_t rank = 0; rank < m; ++rank) {
            sieve.pattern(n, rank, pat);
            double term = 1.0;
            for (const auto& pe : pat) {
                if (2 * pe.exponent > k) {
                    term = 0.0;
                    break;
                }
                const double pnorm = std::pow(static_cast<double>(field.q), pe.prime_deg);
                term *= static_cast<double>(assign[static_cast<size_t>(pe.exponent)]) *
                        (pnorm / (pnorm + 1.0));
            }
            if (term != 0.0) degree_acc.add(term);
        }
        acc.add(degree_acc.total() * norm_weight);
    }

    EulerValue out;
    out.cutoff_degree = maxdeg;
    out.value = acc.total();
    // Tail: the degree-n block is bounded by C(n+M-1, M-1) q^{-2 n beta}
    // with M = C(k,2)+1, since the assignment product is at most tau_M(ell).
    const double M = to_double(binomial(k, 2)) + 1.0;
    const double x = std::pow(static_cast<double>(field.q), -2.0 * beta);
    double tail = 0.0;
    // seed t_{N+1} = C(N+M, M-1) x^{N+1}, then follow the term ratio
    {
        double t = std::pow(x, maxdeg + 1);
        for (int i = 1; i <= static_cast<int>(M) - 1; ++i)
            t *= static_cast<double>(maxdeg + 1 + i) / i;
        int n = maxdeg + 1;
        while (true) {
            tail += t;
            const double ratio = x * (n + M) / (n + 1);
            if (ratio < 1.0 && t * ratio / (1.0 - ratio) < tail * 1e-15) {
                tail += t * ratio / (1.0 - ratio);
                break;
            }
            if (n > maxdeg + 100000) {  // beta too small for a finite bound
                tail = INFINITY;
                break;
            }
            t *= x * (n + M) / (n + 1);
            ++n;
        }
    }
    out.tail_bound = tail;
    return out;
}

std::vector<Int> tau_square_sums(const FactorSieve& sieve, int maxdeg) {
    if (maxdeg > sieve.maxdeg()) throw std::invalid_argument("maxdeg exceeds sieve range");
    std::vector<Int> sums(static_cast<size_t>(maxdeg) + 1);
    sums[0] = 1;
    std::vector<FactorSieve::PrimeExp> pat;
    for (int n = 1; n <= maxdeg; ++n) {
        std::int64_t sum = 0;
        const std::uint64_t m = sieve.degree_size(n);
        for (std::uint64_t rank = 0; rank < m; ++rank) {
            sieve.pattern(n, rank, pat);
            std::int64_t tau = 1;
            for (const auto& pe : pat) tau *= 2 * pe.exponent + 1;
            sum += tau;
        }
        sums[static_cast<size_t>(n)] = sum;
    }
    return sums;
}

TauSeriesReport tau_series_check(const FactorSieve& sieve, double beta, int maxdeg) {
    TauSeriesReport rep;
    rep.maxdeg = maxdeg;
    const Fq field = sieve.field();
    auto brute = tau_square_sums(sieve, maxdeg);
    // Closed form Z(u/q^{1+2b})^3 Z(u^2/q^{2+4b})^{-1}
    //   = (1 - u^2 q^{-(1+4b)}) (1 - u q^{-2b})^{-3}:
    // coefficient of u^n is q^{-2nb} (C(n+2,2) - C(n,2)/q).
    if (beta == 0.0) {
        for (int n = 0; n <= maxdeg; ++n) {
            Rat lhs(brute[static_cast<size_t>(n)], int_pow(field.q, n));
            Rat rhs = Rat(binomial(n + 2, 2)) - Rat(binomial(n, 2), Int(field.q));
            if (lhs != rhs) {
                rep.pass = false;
                rep.max_abs_err = std::abs(to_double(lhs - rhs));
            }
        }
        return rep;
    }
    for (int n = 0; n <= maxdeg; ++n) {
        const double xb = std::pow(static_cast<double>(field.q), -2.0 * beta * n);
        const double lhs = to_double(brute[static_cast<size_t>(n)]) *
                           std::pow(static_cast<double>(field.q), -n * (1.0 + 2.0 * beta));
        const double rhs =
            xb * (to_double(binomial(n + 2, 2)) -
                  to_double(binomial(n, 2)) / static_cast<double>(field.q));
        const double err = std::abs(lhs - rhs);
        rep.max_abs_err = std::max(rep.max_abs_err, err);
        if (err > 1e-10 * std::max(1.0, std::abs(rhs))) rep.pass = false;
    }
    return rep;
}

}  // namespace ffl
