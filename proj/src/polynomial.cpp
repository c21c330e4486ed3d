#include "zuk/polynomial.hpp"

#include <algorithm>

#include "zuk/errors.hpp"

namespace zuk {

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }

Rat Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rat(0);
    return coeffs_[static_cast<std::size_t>(k)];
}

const Rat& Poly::leading() const {
    if (coeffs_.empty()) throw internal_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Rat Poly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return Poly();
    std::vector<Rat> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * Rat(Int(k));
    return Poly(std::move(d));
}

Poly Poly::monic() const {
    if (is_zero()) return Poly();
    const Rat& lead = coeffs_.back();
    if (lead == 1) return *this;
    std::vector<Rat> c = coeffs_;
    for (auto& v : c) v /= lead;
    return Poly(std::move(c));
}

Poly Poly::operator-() const {
    std::vector<Rat> c = coeffs_;
    for (auto& v : c) v = -v;
    return Poly(std::move(c));
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rat> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rat> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(c));
}

Poly Poly::operator*(const Rat& c) const {
    if (c == 0) return Poly();
    std::vector<Rat> out = coeffs_;
    for (auto& v : out) v *= c;
    return Poly(std::move(out));
}

Sign eval_sign(const Poly& p, const Rat& x) { return sign_of(p.eval(x)); }

std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw input_error("polynomial division by zero");
    if (num.degree() < den.degree()) return {Poly(), num};
    std::vector<Rat> rem = num.coeffs();
    std::vector<Rat> quo(static_cast<std::size_t>(num.degree() - den.degree()) + 1, Rat(0));
    const Rat& lead = den.leading();
    for (int k = num.degree() - den.degree(); k >= 0; --k) {
        Rat q = rem[static_cast<std::size_t>(k + den.degree())] / lead;
        quo[static_cast<std::size_t>(k)] = q;
        if (q == 0) continue;
        for (int j = 0; j <= den.degree(); ++j)
            rem[static_cast<std::size_t>(k + j)] -= q * den.coeff(j);
    }
    rem.resize(static_cast<std::size_t>(std::max(den.degree(), 0)));
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

Poly square_free_part(const Poly& p) {
    if (p.is_zero()) throw input_error("square-free part of the zero polynomial");
    if (p.degree() == 0) return Poly::constant(Rat(1));
    Poly g = poly_gcd(p, p.derivative());
    auto [q, r] = divmod(p, g);
    if (!r.is_zero()) throw internal_error("square-free part: inexact gcd division");
    return q.monic();
}

Poly deflate_root(const Poly& p, const Rat& r) {
    if (p.degree() < 1) throw internal_error("deflate_root on a constant polynomial");
    const auto& c = p.coeffs();
    std::vector<Rat> q(c.size() - 1);
    Rat carry = c.back();
    for (int k = p.degree() - 1; k >= 0; --k) {
        q[static_cast<std::size_t>(k)] = carry;
        carry = c[static_cast<std::size_t>(k)] + r * carry;
    }
    if (carry != 0) throw internal_error("deflate_root: " + to_string(r) + " is not a root");
    return Poly(std::move(q));
}

std::vector<std::pair<Poly, int>> square_free_decompose(const Poly& p) {
    if (p.is_zero()) throw input_error("cannot decompose the zero polynomial");
    std::vector<std::pair<Poly, int>> out;
    Poly f = p.monic();
    if (f.degree() == 0) return out;

    Poly d = f.derivative();
    Poly g = poly_gcd(f, d);
    if (g.degree() == 0) {
        out.emplace_back(f, 1);
        return out;
    }
    auto exact_div = [](const Poly& a, const Poly& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) throw internal_error("square-free decomposition: inexact division");
        return q;
    };
    // Yun's algorithm
    Poly c = exact_div(f, g);
    Poly w = exact_div(d, g) - c.derivative();
    int i = 1;
    while (c.degree() > 0) {
        Poly fac = poly_gcd(c, w);
        if (fac.degree() > 0) out.emplace_back(fac.monic(), i);
        Poly cn = exact_div(c, fac);
        w = exact_div(w, fac) - cn.derivative();
        c = std::move(cn);
        ++i;
    }
    return out;
}

std::vector<Int> primitive_integer_coeffs(const Poly& p) {
    if (p.is_zero()) return {};
    Int den_lcm = 1;
    for (const Rat& c : p.coeffs()) den_lcm = lcm(den_lcm, denominator(c));
    std::vector<Int> ints;
    ints.reserve(p.coeffs().size());
    Int content = 0;
    for (const Rat& c : p.coeffs()) {
        Int v = numerator(c) * (den_lcm / denominator(c));
        content = gcd(content, v);
        ints.push_back(std::move(v));
    }
    for (auto& v : ints) v /= content;  // content > 0: gcd of a nonzero set
    return ints;
}

}  // namespace zuk
