#include "ffl/sieve.hpp"

#include <cmath>
#include <string>

#include "ffl/characters.hpp"
#include "ffl/families.hpp"
#include "ffl/guards.hpp"
#include "ffl/parallel.hpp"

namespace ffl {

double exp_partial_sum(int ell, double x) {
    if (ell < 0 || ell % 2 != 0) throw std::invalid_argument("truncation order must be even and >= 0");
    double term = 1.0;
    double acc = 1.0;
    for (int s = 1; s <= ell; ++s) {
        term *= x / s;
        acc += term;
    }
    return acc;
}

TaylorSweep taylor_gap_check(int ell, double x_lo, double x_hi, int samples) {
    const double cap = ell / (M_E * M_E);
    if (x_hi > cap) throw std::invalid_argument("sweep upper end must satisfy x <= ell/e^2");
    if (samples < 2) throw std::invalid_argument("need at least two samples");
    TaylorSweep sweep;
    sweep.min_slack = INFINITY;
    const double amp = 1.0 + std::exp(-0.5 * ell);
    for (int i = 0; i < samples; ++i) {
        const double x = x_lo + (x_hi - x_lo) * i / (samples - 1);
        const double slack = amp * exp_partial_sum(ell, x) - std::exp(x);
        if (slack < sweep.min_slack) {
            sweep.min_slack = slack;
            sweep.worst_x = x;
        }
    }
    sweep.pass = sweep.min_slack >= 0.0;
    return sweep;
}

ABetaParams ABetaParams::make(Fq field, int N, double beta, double t, double eps) {
    if (N < 1) throw std::invalid_argument("N must be >= 1");
    if (!(beta > 0)) throw std::invalid_argument("beta must be positive");
    ABetaParams p;
    p.q = field.q;
    p.N = N;
    p.beta = beta;
    p.t = t;
    p.eps = eps;
    p.gamma = (N * beta < 1.0) ? 1 : 0;
    if (p.gamma == 1) {
        p.B = 0.5 + eps;
    } else {
        p.B = 1.0 + 1.0 / (std::pow(static_cast<double>(field.q), (N + 1) * beta) - 1.0);
    }
    return p;
}

SeriesValue prime_weight(const ABetaParams& params, int pdeg) {
    if (!(params.beta > 0)) throw std::invalid_argument("beta must be positive");
    if (pdeg < 1 || pdeg > params.N)
        throw std::invalid_argument("prime degree must lie in [1, N]");
    const double logq = std::log(static_cast<double>(params.q));
    const double M = params.N + 1;
    const double p = pdeg;
    const double x = std::exp(-M * params.beta * logq);        // q^{-(N+1)beta}
    const double y = std::exp(-2.0 * params.beta * (M - p) * logq);  // x^2 |P|^{2beta}

    double series = 0.0;
    double xj = 1.0;
    int j = 0;
    while (true) {
        const double term = (j + 1) * p * xj * (1.0 / (p + j * M) - y / ((j + 2) * M - p));
        series += term;
        const double increment_bound = (j + 1) * xj;
        if (increment_bound < 1e-14 * std::abs(series) || increment_bound < 1e-30) break;
        xj *= x;
        ++j;
        if (j > 100000) break;  // unreachable for beta > 0; belt only
    }
    // |term_j| <= 3 (j+1) x^j, so the dropped part is bounded by the
    // closed-form tail of sum (j+1) x^j.
    const double xJ1 = xj * x;
    const double tail = 3.0 * xJ1 * ((j + 2) - (j + 1) * x) / ((1.0 - x) * (1.0 - x));

    const double pref = -std::cos(params.t * p * logq);
    SeriesValue out;
    out.value = pref * series;
    out.tail_bound = std::abs(pref) * tail;
    return out;
}

double dirichlet_segment(const Poly& D, int lo, int hi, const ABetaParams& params) {
    if (hi > params.N) throw std::invalid_argument("segment upper degree exceeds N");
    const Fq fq = D.field();
    double acc = 0.0;
    for (int dd = lo + 1; dd <= hi; ++dd) {
        const double w = prime_weight(params, dd).value *
                         std::pow(static_cast<double>(fq.q), -dd * (0.5 + params.beta));
        std::int64_t chi_sum = 0;
        for (const Poly& P : irreducibles(fq, dd)) chi_sum += chi_quadratic(D, P);
        acc += w * static_cast<double>(chi_sum);
    }
    return acc;
}

const char* to_string(ScheduleBranch b) {
    switch (b) {
        case ScheduleBranch::generic: return "generic";
        case ScheduleBranch::large_beta: return "large-beta";
        case ScheduleBranch::small_k: return "small-k";
    }
    return "?";
}

bool SieveSchedule::budget_total_ok() const {
    std::int64_t sum = 0;
    for (size_t j = 0; j < N.size(); ++j) sum += static_cast<std::int64_t>(ell[j]) * N[j];
    return sum <= 2 * static_cast<std::int64_t>(g);
}

bool SieveSchedule::budget_mixed_ok() const {
    std::int64_t prefix = 0;
    for (size_t j = 0; j + 1 < N.size(); ++j) {
        prefix += static_cast<std::int64_t>(ell[j]) * N[j];
        if (prefix + static_cast<std::int64_t>(s[j + 1]) * N[j + 1] > 2 * static_cast<std::int64_t>(g))
            return false;
    }
    return true;
}

std::int64_t SieveSchedule::budget_used() const {
    std::int64_t sum = 0;
    for (size_t j = 0; j < N.size(); ++j) sum += static_cast<std::int64_t>(ell[j]) * N[j];
    return sum;
}

namespace {

int even_floor_half(double v) {
    // 2 [v/2]
    if (!(v >= 0)) return 0;
    return 2 * static_cast<int>(std::floor(v / 2.0));
}

[[noreturn]] void infeasible(const std::string& why) { throw infeasible_schedule_error(why); }

}  // namespace

SieveSchedule build_schedule(Fq field, int g, double k, double beta, double eps) {
    if (g < 2) infeasible("g must be at least 2");
    if (!(beta > 0)) infeasible("beta must be positive");
    if (!(k > 0)) infeasible("k must be positive");
    if (!(eps > 0) || eps >= 1) infeasible("eps must lie in (0,1)");

    SieveSchedule sched;
    sched.q = field.q;
    sched.g = g;
    sched.k = k;
    sched.beta = beta;
    sched.t = 0.0;
    sched.eps = eps;

    const double logg = std::log(static_cast<double>(g));
    const double logq = std::log(static_cast<double>(field.q));
    const double e2 = eps / 2.0;
    sched.a = 2.0 * (1.0 - e2 * e2 * e2);
    sched.d = (2.0 + e2) / (2.0 + eps);
    sched.r = 1.0 + e2 * e2 / (1.0 + e2);
    sched.alpha = std::log(1.0 / beta) / logg;

    const double adr = sched.a * (sched.d - 0.5) / sched.r;  // equals 1 - eps/2
    int N0 = 0, s0 = 0, ell0 = 0;

    if (2.0 * k * (1.0 + eps) <= 1.0) {
        sched.branch = ScheduleBranch::small_k;
        if (!(beta >= std::pow(static_cast<double>(g), eps - 1.0 / (2.0 * k))))
            infeasible("small-k branch needs beta >= g^{eps - 1/(2k)}");
        const double lg = std::log1p(-std::pow(static_cast<double>(g), -2.0 * beta));
        if (!(lg < 0)) infeasible("degenerate log(1 - g^{-2 beta})");
        N0 = static_cast<int>(std::floor(-(sched.d - 0.5) * logg * logg /
                                         ((1.0 + 2.0 * eps) * logq * k * lg)));
        s0 = even_floor_half(-(1.0 + 2.0 * eps) * logq * k * static_cast<double>(g) * lg /
                             ((sched.d - 0.5) * logg * logg));
        ell0 = even_floor_half(std::pow(static_cast<double>(s0), sched.d));
    } else if (beta >= std::pow(logg, 1.0 - 1.0 / (2.0 * k) + eps) / static_cast<double>(g)) {
        sched.branch = ScheduleBranch::large_beta;
        const double epsp = k * eps / (8.0 * (2.0 * k - 1.0 + eps / 2.0));
        const double epspp = k * eps / (4.0 * (2.0 * k - 1.0 + 2.0 * k * eps));
        const double a_lo = (0.5 + epsp) / (sched.d - 0.5);
        double A;
        const double slack = 2.0 * k - adr;
        if (slack > 0) {
            const double loglogg = std::log(logg);
            if (!(loglogg > 0)) infeasible("g too small for the large-beta branch");
            const double a_hi =
                2.0 * k * std::log(static_cast<double>(g) * beta) * (1.0 - epspp) / (slack * loglogg);
            if (!(a_lo < a_hi)) infeasible("no admissible exponent A at these parameters");
            A = std::sqrt(a_lo * a_hi);
        } else {
            A = a_lo * (1.0 + eps);
        }
        const double lgA = std::pow(logg, A);
        N0 = static_cast<int>(std::floor(static_cast<double>(g) / lgA));
        s0 = even_floor_half(lgA);
        ell0 = s0;
    } else {
        sched.branch = ScheduleBranch::generic;
        const double F = 2.0 * k * sched.alpha - adr + sched.d - 0.5;
        if (!(F > 0) || !(sched.alpha > 0)) infeasible("generic first step needs alpha > 0 and a positive budget factor");
        const double logqg = logg / logq;  // log_q g
        N0 = static_cast<int>(std::floor(logqg * F / (k * sched.alpha * (1.0 + eps))));
        s0 = even_floor_half(static_cast<double>(g) * k * sched.alpha * (1.0 + eps) / (2.0 * logqg * F));
        ell0 = even_floor_half(std::pow(static_cast<double>(s0), sched.d));
    }

    if (N0 < 1) infeasible("first interval is empty (N_0 < 1)");
    if (s0 < 2 || ell0 < 2) infeasible("first-step truncation orders vanish (s_0 or ell_0 < 2)");
    const std::int64_t budget = 2 * static_cast<std::int64_t>(g);
    if (static_cast<std::int64_t>(ell0) * N0 > budget)
        infeasible("ell_0 N_0 alone exceeds the 2g budget");
    if (2 * static_cast<std::int64_t>(s0) * N0 > budget)
        infeasible("2 s_0 N_0 exceeds 2g; the square-cancellation argument needs deg D > 2 s_0 N_0");

    sched.N.push_back(N0);
    sched.s.push_back(s0);
    sched.ell.push_back(ell0);

    // Greedy extension: keep appending intervals while both budget
    // constraints and the evenness/positivity of s_j, ell_j survive.
    std::int64_t used = static_cast<std::int64_t>(ell0) * N0;
    while (true) {
        const int Nj = static_cast<int>(std::floor(sched.r * (sched.N.back() + 1)));
        if (Nj <= sched.N.back()) break;
        const int sj = even_floor_half(sched.a * static_cast<double>(g) / (2.0 * Nj));
        if (sj < 2) break;
        const int ellj = even_floor_half(std::pow(static_cast<double>(sj), sched.d));
        if (ellj < 2) break;
        if (used + static_cast<std::int64_t>(sj) * Nj > budget) break;    // mixed constraint
        if (used + static_cast<std::int64_t>(ellj) * Nj > budget) break;  // total constraint
        sched.N.push_back(Nj);
        sched.s.push_back(sj);
        sched.ell.push_back(ellj);
        used += static_cast<std::int64_t>(ellj) * Nj;
    }
    sched.K = static_cast<int>(sched.N.size()) - 1;

    // N_K = [c g]: fix c from the last interval end (midpoint rounding keeps
    // floor(c g) == N_K exact).
    sched.c = (static_cast<double>(sched.N.back()) + 0.5) / static_cast<double>(g);
    const double lhs = std::pow(sched.c, 1.0 - sched.d);
    const double rhs = (2.0 - sched.a - std::pow(eps, 4)) *
                       (std::pow(sched.r, 1.0 - sched.d) - 1.0) / std::pow(sched.a, sched.d);
    sched.c_condition_holds = lhs <= rhs;

    if (!sched.budget_total_ok() || !sched.budget_mixed_ok())
        throw std::logic_error("constructed schedule violates its budget constraints");
    return sched;
}

bool t_membership(const Poly& D, const SieveSchedule& sched, int r) {
    if (r < 0 || r > sched.K) throw std::invalid_argument("interval index out of range");
    const Fq fq = D.field();
    const double threshold = sched.ell[static_cast<size_t>(r)] / (sched.k * M_E * M_E);
    const int lo = r == 0 ? 0 : sched.N[static_cast<size_t>(r) - 1];
    const int hi = sched.N[static_cast<size_t>(r)];
    for (int u = r; u <= sched.K; ++u) {
        auto params = ABetaParams::make(fq, sched.N[static_cast<size_t>(u)], sched.beta, sched.t, sched.eps);
        if (std::abs(dirichlet_segment(D, lo, hi, params)) > threshold) return false;
    }
    return true;
}

double exceptional_fraction(Fq field, int g, const SieveSchedule& sched,
                            std::int64_t family_cap, int threads) {
    check_family_cap(field, g, family_cap);
    const int n = 2 * g + 1;
    const std::uint64_t total = monic_space_size(field, n);
    ChunkPlan plan = ChunkPlan::make(total);
    std::vector<std::int64_t> fail(plan.chunk_count, 0), members(plan.chunk_count, 0);
    run_chunks(plan, threads, [&](std::size_t ci, std::uint64_t lo, std::uint64_t hi) {
        std::int64_t f = 0, m = 0;
        FamilySpec spec{field, n, FamilyKind::squarefree};
        family_for_each(spec, lo, hi, [&](const Poly& D) {
            ++m;
            if (!t_membership(D, sched, 0)) ++f;
        });
        fail[ci] = f;
        members[ci] = m;
    });
    std::int64_t total_fail = 0, total_members = 0;
    for (size_t i = 0; i < plan.chunk_count; ++i) {
        total_fail += fail[i];
        total_members += members[i];
    }
    return static_cast<double>(total_fail) / static_cast<double>(total_members);
}

}  // namespace ffl
