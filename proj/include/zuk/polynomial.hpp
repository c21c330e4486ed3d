#pragma once

#include <utility>
#include <vector>

#include "zuk/numeric.hpp"

namespace zuk {

// Dense univariate polynomial over Q, coefficients stored lowest degree
// first. The zero polynomial has an empty coefficient list, degree() == -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs);
    static Poly constant(const Rat& c);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    Rat coeff(int k) const;     // 0 outside the stored range
    const Rat& leading() const; // requires a nonzero polynomial

    Rat eval(const Rat& x) const;  // Horner
    Poly derivative() const;
    Poly monic() const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator*(const Rat& c) const;
    bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }

private:
    std::vector<Rat> coeffs_;
    void normalize();
};

Sign eval_sign(const Poly& p, const Rat& x);

// Euclidean division; divisor must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den);

// Monic gcd; poly_gcd(p, 0) == p.monic(), poly_gcd(0, 0) == 0.
Poly poly_gcd(Poly a, Poly b);

// p / gcd(p, p'), monic: same roots, all simple.
Poly square_free_part(const Poly& p);

// Exact division by (x - r); the root must actually divide p.
Poly deflate_root(const Poly& p, const Rat& r);

// Yun decomposition into pairwise-coprime square-free monic factors with
// multiplicities; the product of factor^mult equals p up to a constant.
// Rejects the zero polynomial.
std::vector<std::pair<Poly, int>> square_free_decompose(const Poly& p);

// The integer coefficient vector of the primitive associate of p (signs
// kept, content 1). Empty for the zero polynomial.
std::vector<Int> primitive_integer_coeffs(const Poly& p);

}  // namespace zuk
