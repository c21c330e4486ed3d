#pragma once

#include <vector>

#include "zuk/polynomial.hpp"

namespace zuk {

// One isolated real root: either an exact rational, or an open interval
// (lo, hi) with rational endpoints containing exactly one real root.
struct IsolatedRoot {
    bool exact = true;
    Rat value;           // exact case
    Rat lo, hi;          // interval case, lo < hi
    int multiplicity = 1;
    int residual_index = -1;  // interval case: index into residual_factors

    Rat midpoint() const { return exact ? value : (lo + hi) / 2; }
    double approx() const;
};

struct RootIsolation {
    std::vector<IsolatedRoot> roots;  // ascending
    // The square-free non-rational parts (monic) with their multiplicities;
    // every interval root points at the factor it was isolated from.
    std::vector<std::pair<Poly, int>> residual_factors;
    int total_multiplicity() const;
};

// Number of distinct real roots of square-free p in the half-open interval
// (lo, hi], by Sturm sign-variation counting. Exact.
int sturm_count(const Poly& p, const Rat& lo, const Rat& hi);

// Certified isolation of all (real) roots of p. Rational roots are found
// exactly via the rational-root theorem on the integer-scaled square-free
// factors; the rest land in pairwise-disjoint open intervals of width
// <= precision, refined by Sturm-guided bisection until they also exclude
// every exact root and every point in `avoid`. Multiplicities come from the
// square-free decomposition. Throws internal_error("non-real roots
// detected...") when the found roots cannot account for deg(p).
RootIsolation isolate_roots(const Poly& p, const Rat& precision,
                            const std::vector<Rat>& avoid = {});

}  // namespace zuk
