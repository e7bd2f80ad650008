#include "ffl/moments.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

#include "ffl/euler.hpp"
#include "ffl/families.hpp"
#include "ffl/parallel.hpp"

namespace ffl {

const char* to_string(Regime r) {
    switch (r) {
        case Regime::improved: return "improved";
        case Regime::second: return "second";
        case Regime::third: return "third";
        case Regime::bound5: return "bound5";
        case Regime::asymptotic: return "asymptotic";
    }
    return "?";
}

namespace {

// Square-free test on a raw coefficient buffer; no heap traffic.
bool squarefree_raw(const Fq& fq, const std::int64_t* dc, int dn) {
    const std::int64_t q = fq.q;
    std::int64_t buf1[64], buf2[64];
    std::int64_t* pa = buf1;
    std::int64_t* pb = buf2;
    int da = dn, db = -1;
    for (int i = 0; i <= dn; ++i) pa[i] = dc[i];
    for (int i = 1; i <= dn; ++i) {
        pb[i - 1] = (dc[i] * (i % q)) % q;
        if (pb[i - 1] != 0) db = i - 1;
    }
    if (db < 0) return false;  // derivative vanishes: a q-th power
    while (true) {
        if (db == 0) return true;  // gcd divides a nonzero constant
        const std::int64_t inv = fq.inv(pb[db]);
        for (int i = da; i >= db; --i) {
            const std::int64_t top = pa[i];
            if (top == 0) continue;
            const std::int64_t f = (top * inv) % q;
            pa[i] = 0;
            for (int j = 0; j < db; ++j) {
                std::int64_t v = (pa[i - db + j] - f * pb[j]) % q;
                if (v < 0) v += q;
                pa[i - db + j] = v;
            }
        }
        int na = -1;
        for (int i = db - 1; i >= 0; --i)
            if (pa[i] != 0) {
                na = i;
                break;
            }
        if (na < 0) return false;  // remainder zero: gcd is pb, degree >= 1
        std::swap(pa, pb);
        da = db;
        db = na;
    }
}

struct EvalWeights {
    // moment exponent and per-coefficient weights W_n, n = 0..g:
    // L = sum c_n W_n with the functional-equation tail folded in.
    double k = 0.0;
    bool real_path = true;
    std::vector<double> wr;
    std::vector<std::complex<double>> wc;
};

EvalWeights make_weights(Fq field, int g, const ShiftSpec& sh, bool force_complex) {
    EvalWeights ew;
    ew.k = sh.k;
    ew.real_path = (sh.t == 0.0) && !force_complex;
    const double logq = std::log(static_cast<double>(field.q));
    if (ew.real_path) {
        const double u = std::exp(-(0.5 + sh.beta) * logq);
        ew.wr.assign(static_cast<size_t>(g) + 1, 0.0);
        for (int n = 0; n <= g; ++n) {
            double w = std::pow(u, n);
            if (n < g)
                w += std::pow(static_cast<double>(field.q), g - n) * std::pow(u, 2 * g - n);
            ew.wr[static_cast<size_t>(n)] = w;
        }
    } else {
        const std::complex<double> su(0.5 + sh.beta, sh.t);
        const std::complex<double> u = std::exp(-su * logq);
        ew.wc.assign(static_cast<size_t>(g) + 1, 0.0);
        for (int n = 0; n <= g; ++n) {
            std::complex<double> w = std::pow(u, n);
            if (n < g)
                w += std::pow(static_cast<double>(field.q), g - n) * std::pow(u, 2 * g - n);
            ew.wc[static_cast<size_t>(n)] = w;
        }
    }
    return ew;
}

double eval_term(const EvalWeights& ew, const std::int64_t* c, int g) {
    if (ew.real_path) {
        double v = 0.0;
        for (int n = 0; n <= g; ++n) v += static_cast<double>(c[n]) * ew.wr[static_cast<size_t>(n)];
        if (!(v > 0.0))
            throw std::logic_error("non-positive L value at t = 0; coefficient computation is broken");
        return std::pow(v, -ew.k);
    }
    std::complex<double> v = 0.0;
    for (int n = 0; n <= g; ++n) v += static_cast<double>(c[n]) * ew.wc[static_cast<size_t>(n)];
    return std::pow(std::abs(v), -ew.k);
}

struct PassResult {
    std::vector<double> moments;
    Int family_size;
};

PassResult family_pass(Fq field, int g, const std::vector<ShiftSpec>& shifts,
                       const MomentOptions& opt) {
    check_family_cap(field, g, opt.family_cap);
    if (g < 1) throw std::invalid_argument("family pass needs g >= 1");
    for (const auto& sh : shifts) {
        if (!(sh.beta > 0)) throw std::invalid_argument("beta must be positive");
        if (sh.k < 0) throw std::invalid_argument("moment exponent k must be >= 0");
    }

    const int n = 2 * g + 1;
    const std::uint64_t total = monic_space_size(field, n);
    LContext ctx(field, g);

    std::vector<EvalWeights> weights;
    weights.reserve(shifts.size());
    for (const auto& sh : shifts) weights.push_back(make_weights(field, g, sh, opt.force_complex_eval));

    ChunkPlan plan = ChunkPlan::make(total);
    std::vector<std::vector<Kahan>> partial(plan.chunk_count,
                                            std::vector<Kahan>(shifts.size()));
    std::vector<std::int64_t> counts(plan.chunk_count, 0);
    std::vector<std::vector<std::pair<std::string, std::vector<Int>>>> fresh(plan.chunk_count);

    run_chunks(plan, opt.threads, [&](std::size_t ci, std::uint64_t lo, std::uint64_t hi) {
        std::int64_t dc[64], c[32];
        std::int64_t members = 0;
        auto& acc = partial[ci];
        for (std::uint64_t rank = lo; rank < hi; ++rank) {
            // decode the monic polynomial of degree n at this rank
            std::uint64_t v = rank;
            dc[n] = 1;
            for (int i = n - 1; i >= 0; --i) {
                dc[i] = static_cast<std::int64_t>(v % static_cast<std::uint64_t>(field.q));
                v /= static_cast<std::uint64_t>(field.q);
            }
            if (!squarefree_raw(field, dc, n)) continue;
            ++members;
            bool computed = false;
            if (opt.cache != nullptr) {
                Poly D(field, std::vector<std::int64_t>(dc, dc + n + 1));
                if (const auto* half = opt.cache->find(D)) {
                    for (int i = 0; i <= g; ++i) c[i] = (*half)[static_cast<size_t>(i)].convert_to<std::int64_t>();
                    computed = true;
                } else {
                    ctx.half_coeffs(dc, n, c);
                    computed = true;
                    if (opt.update_cache) {
                        std::vector<Int> half(static_cast<size_t>(g) + 1);
                        for (int i = 0; i <= g; ++i) half[static_cast<size_t>(i)] = c[i];
                        fresh[ci].emplace_back(D.encode(), std::move(half));
                    }
                }
            }
            if (!computed) ctx.half_coeffs(dc, n, c);
            for (size_t si = 0; si < weights.size(); ++si) acc[si].add(eval_term(weights[si], c, g));
        }
        counts[ci] = members;
    });

    // ordered reduction: chunk index order, sum then compensation
    std::vector<Kahan> master(shifts.size());
    std::int64_t members = 0;
    for (std::size_t ci = 0; ci < plan.chunk_count; ++ci) {
        for (size_t si = 0; si < shifts.size(); ++si) {
            master[si].add(partial[ci][si].sum);
            master[si].add(partial[ci][si].comp);
        }
        members += counts[ci];
    }
    if (opt.cache != nullptr && opt.update_cache) {
        for (auto& chunk : fresh)
            for (auto& [enc, half] : chunk)
                opt.cache->put(Poly::decode(field, enc), std::move(half));
    }

    Int expected = hyperelliptic_family_size(field, g);
    if (Int(members) != expected)
        throw std::logic_error("family sweep count mismatch: got " + std::to_string(members) +
                               ", expected " + expected.str());

    PassResult out;
    out.family_size = expected;
    const double denom = static_cast<double>(members);
    for (size_t si = 0; si < shifts.size(); ++si) out.moments.push_back(master[si].total() / denom);
    return out;
}

bool is_positive_integer(double k) {
    return k >= 1.0 && k == std::floor(k) && k < 64;
}

}  // namespace

double negative_moment(Fq field, int g, const ShiftSpec& shift, const MomentOptions& opt) {
    return family_pass(field, g, {shift}, opt).moments[0];
}

double asymptotic_rhs(Fq field, int k, double beta, int cutoff) {
    if (k < 0) throw std::invalid_argument("k must be a non-negative integer");
    if (k == 0) return 1.0;
    const double zeta = zeta_q_real(field, 1.0 + 2.0 * beta);
    const double c2 = to_double(binomial(k, 2));
    return std::pow(zeta, c2) * moment_euler_constant(field, k, beta, cutoff).value;
}

double threshold_beta(double k, int g, double eps) {
    if (g < 2) throw std::invalid_argument("threshold needs g >= 2");
    return (1.0 + eps) * k * k * (k + 1.0) * std::log(static_cast<double>(g)) /
           (8.0 * static_cast<double>(g));
}

Regime regime_classify(int g, double beta, double k, double eps) {
    if (g < 2) throw std::invalid_argument("classification needs g >= 2");
    if (!(beta > 0)) throw std::invalid_argument("beta must be positive");
    const double logg = std::log(static_cast<double>(g));
    const double b1 = std::pow(logg, std::max(0.0, 1.0 - 1.0 / (2.0 * k) + eps)) / g;
    const double b2 = 1.0 / static_cast<double>(g);
    const double b3 = std::pow(static_cast<double>(g), eps - 1.0 / (2.0 * k));
    const double b4 = threshold_beta(k, g, eps);
    if (beta >= b1 && beta >= b4) return Regime::asymptotic;
    if (beta >= b1) return Regime::improved;
    if (beta >= b2) return Regime::second;
    if (beta >= b3) return Regime::bound5;
    return Regime::third;
}

std::vector<MomentResult> compare_scan(Fq field, int g, double k,
                                       const std::vector<double>& beta_grid, double t,
                                       const MomentOptions& opt) {
    std::vector<ShiftSpec> shifts;
    shifts.reserve(beta_grid.size());
    for (double b : beta_grid) shifts.push_back(ShiftSpec{b, t, k});
    PassResult pass = family_pass(field, g, shifts, opt);

    std::vector<MomentResult> out;
    out.reserve(beta_grid.size());
    for (size_t i = 0; i < beta_grid.size(); ++i) {
        MomentResult r;
        r.q = field.q;
        r.g = g;
        r.shift = shifts[i];
        r.family_size = pass.family_size;
        r.moment = pass.moments[i];
        if (k == 0.0) {
            r.rhs_prediction = 1.0;
        } else if (is_positive_integer(k)) {
            r.rhs_prediction = asymptotic_rhs(field, static_cast<int>(k), beta_grid[i]);
        } else {
            r.rhs_prediction = std::numeric_limits<double>::quiet_NaN();
        }
        r.rel_error = (r.rhs_prediction > 0.0)
                          ? std::abs(r.moment - r.rhs_prediction) / r.rhs_prediction
                          : std::numeric_limits<double>::quiet_NaN();
        r.regime = regime_classify(g, beta_grid[i], k == 0.0 ? 1.0 : k, 0.01);
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace ffl
