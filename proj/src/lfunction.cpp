#include "ffl/lfunction.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "ffl/characters.hpp"
#include "ffl/families.hpp"

namespace ffl {

bool check_functional_equation(const LPolynomial& L) {
    if (static_cast<int>(L.coeffs.size()) != 2 * L.g + 1) return false;
    for (int n = 0; n <= L.g; ++n) {
        if (L.c(2 * L.g - n) != int_pow(L.q, L.g - n) * L.c(n)) return false;
    }
    return true;
}

bool check_coefficient_bounds(const LPolynomial& L) {
    if (L.coeffs.empty() || L.c(0) != 1) return false;
    for (int n = 0; n < static_cast<int>(L.coeffs.size()); ++n) {
        if (abs(L.c(n)) > int_pow(L.q, n)) return false;
    }
    return true;
}

std::complex<double> evaluate(const LPolynomial& L, const ShiftSpec& shift) {
    const double mag = std::pow(static_cast<double>(L.q), -(0.5 + shift.beta));
    if (shift.t == 0.0) {
        double acc = 0.0;
        for (int n = static_cast<int>(L.coeffs.size()) - 1; n >= 0; --n)
            acc = acc * mag + to_double(L.c(n));
        return {acc, 0.0};
    }
    const double theta = -shift.t * std::log(static_cast<double>(L.q));
    const std::complex<double> u = mag * std::complex<double>(std::cos(theta), std::sin(theta));
    std::complex<double> acc = 0.0;
    for (int n = static_cast<int>(L.coeffs.size()) - 1; n >= 0; --n)
        acc = acc * u + to_double(L.c(n));
    return acc;
}

RhReport check_rh(const LPolynomial& L) {
    RhReport rep;
    const int n = 2 * L.g;
    rep.root_count = n;
    if (n == 0) return rep;  // vacuous
    // Work in v = u*sqrt(q): p(v) = sum c_k q^{-k/2} v^k has all roots on
    // |v| = 1, which keeps the companion matrix well scaled.
    const double sq = std::sqrt(static_cast<double>(L.q));
    std::vector<double> a(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) a[static_cast<size_t>(k)] = to_double(L.c(k)) * std::pow(sq, -k);
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) companion(i, n - 1) = -a[static_cast<size_t>(i)] / a[static_cast<size_t>(n)];
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) {
        rep.solver_ok = false;
        return rep;
    }
    const double target = 1.0 / sq;
    for (int i = 0; i < n; ++i) {
        const double r = std::abs(solver.eigenvalues()[i]) / sq;  // back to u-scale
        rep.max_deviation = std::max(rep.max_deviation, std::abs(r - target));
    }
    return rep;
}

namespace {

void require_discriminant(const Poly& D) {
    if (!D.is_monic() || D.deg() % 2 == 0)
        throw std::invalid_argument("discriminant must be monic of odd degree 2g+1");
    if (!is_squarefree(D)) throw std::invalid_argument("discriminant must be square-free");
}

}  // namespace

LContext::LContext(Fq field, int g) : fq_(field), g_(g) {
    if (g < 0) throw std::invalid_argument("negative genus");
    if (g > 30) throw std::invalid_argument("genus too large for the table-driven path");
    // Partial coefficients are bounded by q^n, n <= g; the int64 path needs
    // q^g < 2^62. Families anywhere near that size are not enumerable anyway.
    if (g > 0 && static_cast<double>(g) * std::log2(static_cast<double>(fq_.q)) >= 62.0)
        throw std::invalid_argument("q^g exceeds the exact 64-bit coefficient range");
    for (int d = 1; d <= g; ++d) {
        std::uint64_t m = 1;
        for (int i = 0; i < d; ++i) m *= static_cast<std::uint64_t>(fq_.q);
        for (const Poly& p : irreducibles(fq_, d)) {
            PrimeTable tab;
            tab.deg = d;
            tab.pc.assign(static_cast<size_t>(d) + 1, 0);
            for (int i = 0; i <= d; ++i) tab.pc[static_cast<size_t>(i)] = p.coeff(i);
            tab.chi.assign(m, 0);
            // Mark squares of the nonzero residues; everything else nonzero
            // is a non-residue.
            std::vector<std::int64_t> r(static_cast<size_t>(d), 0);
            for (std::uint64_t idx = 1; idx < m; ++idx) {
                // decode idx -> residue polynomial (r_0 least significant)
                std::uint64_t v = idx;
                for (int i = 0; i < d; ++i) {
                    r[static_cast<size_t>(i)] = static_cast<std::int64_t>(v % static_cast<std::uint64_t>(fq_.q));
                    v /= static_cast<std::uint64_t>(fq_.q);
                }
                Poly rp(fq_, r);
                Poly sq = mod(mul(rp, rp), p);
                std::uint64_t sidx = 0;
                for (int i = d - 1; i >= 0; --i)
                    sidx = sidx * static_cast<std::uint64_t>(fq_.q) + static_cast<std::uint64_t>(sq.coeff(i));
                tab.chi[sidx] = 1;
            }
            for (std::uint64_t idx = 1; idx < m; ++idx)
                if (tab.chi[idx] == 0) tab.chi[idx] = -1;
            tab.chi[0] = 0;
            tables_.push_back(std::move(tab));
        }
    }
}

void LContext::half_coeffs(const std::int64_t* dc, int dn, std::int64_t* c) const {
    const std::int64_t q = fq_.q;
    c[0] = 1;
    for (int n = 1; n <= g_; ++n) c[n] = 0;
    std::int64_t buf[64];
    for (const PrimeTable& tab : tables_) {
        const int d = tab.deg;
        // remainder of D mod P, exploiting that P is monic
        for (int i = 0; i <= dn; ++i) buf[i] = dc[i];
        for (int i = dn; i >= d; --i) {
            const std::int64_t top = buf[i];
            if (top == 0) continue;
            buf[i] = 0;
            for (int j = 0; j < d; ++j) {
                std::int64_t v = (buf[i - d + j] - top * tab.pc[static_cast<size_t>(j)]) % q;
                if (v < 0) v += q;
                buf[i - d + j] = v;
            }
        }
        std::uint64_t idx = 0;
        for (int i = d - 1; i >= 0; --i)
            idx = idx * static_cast<std::uint64_t>(q) + static_cast<std::uint64_t>(buf[i]);
        const int s = tab.chi[idx];
        // multiply the truncated series by (1 - s u^d)^{-1}
        if (s == 1) {
            for (int n = d; n <= g_; ++n) c[n] += c[n - d];
        } else if (s == -1) {
            for (int n = d; n <= g_; ++n) c[n] -= c[n - d];
        }
    }
}

std::vector<std::int64_t> LContext::half_coeffs(const Poly& D) const {
    require_discriminant(D);
    if (D.deg() != 2 * g_ + 1) throw std::invalid_argument("discriminant degree does not match context genus");
    std::vector<std::int64_t> dc(static_cast<size_t>(D.deg()) + 1, 0);
    for (int i = 0; i <= D.deg(); ++i) dc[static_cast<size_t>(i)] = D.coeff(i);
    std::vector<std::int64_t> c(static_cast<size_t>(g_) + 1, 0);
    half_coeffs(dc.data(), D.deg(), c.data());
    return c;
}

LPolynomial LContext::lpolynomial_from_half(const std::int64_t* c) const {
    LPolynomial L;
    L.q = fq_.q;
    L.g = g_;
    L.coeffs.assign(static_cast<size_t>(2 * g_) + 1, 0);
    for (int n = 0; n <= g_; ++n) L.coeffs[static_cast<size_t>(n)] = c[n];
    for (int n = 0; n < g_; ++n)
        L.coeffs[static_cast<size_t>(2 * g_ - n)] = int_pow(fq_.q, g_ - n) * c[n];
    return L;
}

LPolynomial LContext::lpolynomial_from_half(const std::vector<Int>& half) const {
    LPolynomial L;
    L.q = fq_.q;
    L.g = g_;
    L.coeffs.assign(static_cast<size_t>(2 * g_) + 1, 0);
    for (int n = 0; n <= g_; ++n) L.coeffs[static_cast<size_t>(n)] = half[static_cast<size_t>(n)];
    for (int n = 0; n < g_; ++n)
        L.coeffs[static_cast<size_t>(2 * g_ - n)] = int_pow(fq_.q, g_ - n) * half[static_cast<size_t>(n)];
    return L;
}

LPolynomial LContext::lpolynomial(const Poly& D) const {
    auto c = half_coeffs(D);
    return lpolynomial_from_half(c.data());
}

std::vector<Int> direct_coeffs(const Poly& D, int upto) {
    require_discriminant(D);
    const Fq fq = D.field();
    std::vector<Int> c(static_cast<size_t>(upto) + 1, 0);
    c[0] = 1;
    for (int n = 1; n <= upto; ++n) {
        Int sum = 0;
        std::uint64_t m = monic_space_size(fq, n);
        for (std::uint64_t rank = 0; rank < m; ++rank)
            sum += chi_quadratic(D, monic_from_rank(fq, n, rank));
        c[static_cast<size_t>(n)] = sum;
    }
    return c;
}

LPolynomial lpolynomial_direct(const Poly& D) {
    LPolynomial L;
    L.q = D.q();
    L.g = (D.deg() - 1) / 2;
    L.coeffs = direct_coeffs(D, 2 * L.g);
    return L;
}

std::string LCache::file_name(std::int64_t q, int g) {
    return "lpoly_q" + std::to_string(q) + "_g" + std::to_string(g) + ".txt";
}

LCache::LoadStats LCache::load(const std::string& path) {
    LoadStats stats;
    std::ifstream in(path);
    if (!in) return stats;
    std::string line;
    const Fq fq(q_);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        bool ok = false;
        do {
            if (line.rfind("D=", 0) != 0) break;
            auto semi = line.find(";c=");
            if (semi == std::string::npos) break;
            std::string denc = line.substr(2, semi - 2);
            std::string cenc = line.substr(semi + 3);
            Poly D(fq);
            try {
                D = Poly::decode(fq, denc);
            } catch (const std::exception&) {
                break;
            }
            if (!D.is_monic() || D.deg() != 2 * g_ + 1) break;
            std::vector<Int> half;
            size_t pos = 0;
            bool bad = false;
            while (pos <= cenc.size()) {
                size_t comma = cenc.find(',', pos);
                std::string tok =
                    cenc.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
                if (tok.empty()) {
                    bad = true;
                    break;
                }
                try {
                    half.emplace_back(tok);
                } catch (const std::exception&) {
                    bad = true;
                    break;
                }
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
            if (bad || static_cast<int>(half.size()) != g_ + 1) break;
            if (half[0] != 1) break;
            entries_[denc] = std::move(half);
            ok = true;
        } while (false);
        if (ok)
            ++stats.records;
        else
            ++stats.corrupt;
    }
    return stats;
}

void LCache::save(const std::string& path) const {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file: " + path);
    for (const auto& [denc, half] : entries_) {
        out << "D=" << denc << ";c=";
        for (size_t i = 0; i < half.size(); ++i) {
            if (i) out << ',';
            out << half[i].str();
        }
        out << '\n';
    }
}

const std::vector<Int>* LCache::find(const Poly& D) const {
    auto it = entries_.find(D.encode());
    return it == entries_.end() ? nullptr : &it->second;
}

void LCache::put(const Poly& D, std::vector<Int> half) { entries_[D.encode()] = std::move(half); }

}  // namespace ffl
