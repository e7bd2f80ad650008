#include "ffl/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace ffl {

Poly::Poly(Fq field, std::vector<std::int64_t> coeffs) : fq_(field), c_(std::move(coeffs)) {
    for (auto& v : c_) v = fq_.reduce(v);
    normalize();
}

void Poly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Int Poly::norm() const {
    if (is_zero()) throw std::invalid_argument("norm of the zero polynomial");
    return int_pow(fq_.q, deg());
}

std::string Poly::encode() const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) s.push_back(',');
        s += std::to_string(c_[i]);
    }
    return s;
}

Poly Poly::decode(Fq field, const std::string& text) {
    std::vector<std::int64_t> coeffs;
    size_t pos = 0;
    if (text.empty()) throw std::invalid_argument("empty polynomial encoding");
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty()) throw std::invalid_argument("malformed polynomial encoding: " + text);
        size_t used = 0;
        long long v;
        try {
            v = std::stoll(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed polynomial encoding: " + text);
        }
        if (used != tok.size()) throw std::invalid_argument("malformed polynomial encoding: " + text);
        coeffs.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return Poly(field, std::move(coeffs));
}

Poly add(const Poly& a, const Poly& b) {
    const Fq& fq = a.field();
    std::vector<std::int64_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = fq.add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    return Poly(fq, std::move(c));
}

Poly sub(const Poly& a, const Poly& b) {
    const Fq& fq = a.field();
    std::vector<std::int64_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = fq.sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    return Poly(fq, std::move(c));
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly::zero(a.field());
    const Fq& fq = a.field();
    std::vector<std::int64_t> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        std::int64_t ai = a.coeffs()[i];
        if (ai == 0) continue;
        for (size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] = fq.add(c[i + j], fq.mul(ai, b.coeffs()[j]));
    }
    return Poly(fq, std::move(c));
}

Poly mul_scalar(const Poly& a, std::int64_t s) {
    const Fq& fq = a.field();
    s = fq.reduce(s);
    std::vector<std::int64_t> c(a.coeffs());
    for (auto& v : c) v = fq.mul(v, s);
    return Poly(fq, std::move(c));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
    const Fq& fq = a.field();
    if (a.deg() < b.deg()) return {Poly::zero(fq), a};
    std::vector<std::int64_t> rem(a.coeffs());
    std::vector<std::int64_t> quot(static_cast<size_t>(a.deg() - b.deg() + 1), 0);
    std::int64_t lcinv = fq.inv(b.lc());
    for (int i = a.deg(); i >= b.deg(); --i) {
        std::int64_t top = rem[static_cast<size_t>(i)];
        if (top == 0) continue;
        std::int64_t f = fq.mul(top, lcinv);
        quot[static_cast<size_t>(i - b.deg())] = f;
        for (int j = 0; j <= b.deg(); ++j) {
            size_t k = static_cast<size_t>(i - b.deg() + j);
            rem[k] = fq.sub(rem[k], fq.mul(f, b.coeff(j)));
        }
    }
    return {Poly(fq, std::move(quot)), Poly(fq, std::move(rem))};
}

Poly mod(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly gcd(const Poly& a, const Poly& b) {
    Poly u = a, v = b;
    while (!v.is_zero()) {
        Poly r = mod(u, v);
        u = v;
        v = r;
    }
    if (u.is_zero()) return u;
    return make_monic(u);
}

Poly derivative(const Poly& f) {
    const Fq& fq = f.field();
    if (f.deg() <= 0) return Poly::zero(fq);
    std::vector<std::int64_t> c(static_cast<size_t>(f.deg()), 0);
    for (int i = 1; i <= f.deg(); ++i)
        c[static_cast<size_t>(i - 1)] = fq.mul(f.coeff(i), fq.reduce(i));
    return Poly(fq, std::move(c));
}

Poly make_monic(const Poly& f) {
    if (f.is_zero() || f.is_monic()) return f;
    return mul_scalar(f, f.field().inv(f.lc()));
}

Poly pow_mod(const Poly& base, Int e, const Poly& m) {
    if (e < 0) throw std::invalid_argument("negative exponent in pow_mod");
    Poly r = Poly::one(base.field());
    Poly b = mod(base, m);
    while (e > 0) {
        if ((e & 1) != 0) r = mod(mul(r, b), m);
        b = mod(mul(b, b), m);
        e >>= 1;
    }
    return r;
}

Poly compose_mod(const Poly& f, const Poly& g, const Poly& m) {
    // Horner on the coefficients of f, reducing mod m throughout.
    Poly acc = Poly::zero(f.field());
    for (int i = f.deg(); i >= 0; --i) {
        acc = mod(mul(acc, g), m);
        acc = add(acc, Poly::constant(f.field(), f.coeff(i)));
    }
    return acc;
}

bool is_squarefree(const Poly& f) {
    if (f.deg() <= 0) return !f.is_zero();
    Poly d = derivative(f);
    if (d.is_zero()) return false;  // q-th power
    return gcd(f, d).deg() == 0;
}

bool lex_less(const Poly& a, const Poly& b) {
    int n = std::max(a.deg(), b.deg());
    for (int i = 0; i <= n; ++i) {
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    }
    return false;
}

Poly monic_from_rank(Fq field, int n, std::uint64_t rank) {
    if (n < 0) throw std::invalid_argument("negative degree");
    std::vector<std::int64_t> c(static_cast<size_t>(n) + 1, 0);
    c[static_cast<size_t>(n)] = 1;
    // Ascending rank = lex order on (c_0, ..., c_{n-1}): c_0 most significant.
    for (int i = n - 1; i >= 0; --i) {
        c[static_cast<size_t>(i)] =
            static_cast<std::int64_t>(rank % static_cast<std::uint64_t>(field.q));
        rank /= static_cast<std::uint64_t>(field.q);
    }
    if (rank != 0) throw std::invalid_argument("rank out of range for degree");
    return Poly(field, std::move(c));
}

std::uint64_t monic_rank(const Poly& f) {
    if (!f.is_monic()) throw std::invalid_argument("rank of a non-monic polynomial");
    std::uint64_t r = 0;
    for (int i = 0; i < f.deg(); ++i) {
        r = r * static_cast<std::uint64_t>(f.q()) + static_cast<std::uint64_t>(f.coeff(i));
    }
    return r;
}

}  // namespace ffl
