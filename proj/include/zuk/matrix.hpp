#pragma once

#include <vector>

#include "zuk/numeric.hpp"
#include "zuk/polynomial.hpp"

namespace zuk {

// Square matrix over Q, row-major, entries always reduced.
class RationalMatrix {
public:
    explicit RationalMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n) * n) {}
    int size() const { return n_; }
    Rat& at(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }
    const Rat& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }
    bool operator==(const RationalMatrix& o) const { return n_ == o.n_ && e_ == o.e_; }

private:
    int n_;
    std::vector<Rat> e_;
};

// Monic characteristic polynomial det(xI - m), exact. Each row's
// denominators are cleared to form an integer pencil; integer determinants
// at n+1 points feed an exact Newton interpolation; the result is
// renormalized to monic.
Poly char_poly(const RationalMatrix& m);

// Same, at caller-chosen pairwise-distinct integer sample points (exactly
// n+1 of them). Different point sets must reproduce identical coefficients.
Poly char_poly_sampled(const RationalMatrix& m, const std::vector<Int>& points);

}  // namespace zuk
