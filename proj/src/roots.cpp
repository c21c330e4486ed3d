#include "zuk/roots.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "zuk/errors.hpp"

namespace zuk {

double IsolatedRoot::approx() const { return to_double(midpoint()); }

int RootIsolation::total_multiplicity() const {
    int total = 0;
    for (const auto& r : roots) total += r.multiplicity;
    return total;
}

namespace {

// Positive rescaling to primitive integer coefficients; keeps all signs, so
// Sturm sign sequences are unchanged while coefficient growth stays tame.
Poly scale_primitive(const Poly& p) {
    if (p.is_zero()) return p;
    std::vector<Int> ints = primitive_integer_coeffs(p);
    std::vector<Rat> coeffs;
    coeffs.reserve(ints.size());
    for (auto& v : ints) coeffs.emplace_back(std::move(v));
    return Poly(std::move(coeffs));
}

std::vector<Poly> sturm_chain(const Poly& p) {
    std::vector<Poly> chain;
    chain.push_back(scale_primitive(p));
    Poly d = p.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(scale_primitive(d));
    while (true) {
        Poly r = divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(scale_primitive(-r));
    }
    return chain;
}

int variations(const std::vector<Poly>& chain, const Rat& x) {
    int count = 0;
    Sign prev = Sign::zero;
    for (const Poly& p : chain) {
        Sign s = eval_sign(p, x);
        if (s == Sign::zero) continue;
        if (prev != Sign::zero && s != prev) ++count;
        prev = s;
    }
    return count;
}

// roots in (lo, hi]
int chain_count(const std::vector<Poly>& chain, const Rat& lo, const Rat& hi) {
    return variations(chain, lo) - variations(chain, hi);
}

std::vector<Int> positive_divisors(Int n) {
    // trial division; coefficient sizes in this pipeline keep this cheap
    std::vector<std::pair<Int, int>> factors;
    for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) factors.emplace_back(p, e);
    }
    if (n > 1) factors.emplace_back(n, 1);
    std::vector<Int> divs{Int(1)};
    for (const auto& [p, e] : factors) {
        std::size_t base = divs.size();
        Int pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

// All rational roots of a square-free polynomial, via the rational-root
// theorem on its primitive integer associate.
std::vector<Rat> rational_roots(const Poly& f) {
    std::vector<Rat> roots;
    std::vector<Int> c = primitive_integer_coeffs(f);
    std::size_t low = 0;
    while (low < c.size() && c[low] == 0) ++low;
    if (low > 0) roots.emplace_back(0);  // x | f, simple since f is square-free
    if (low + 1 >= c.size()) {
        std::sort(roots.begin(), roots.end());
        return roots;
    }
    Int a0 = abs(c[low]);
    Int an = abs(c.back());
    std::set<Rat> candidates;
    for (const Int& r : positive_divisors(a0))
        for (const Int& s : positive_divisors(an)) {
            candidates.insert(Rat(r, s));
            candidates.insert(Rat(-r, s));
        }
    for (const Rat& cand : candidates)
        if (f.eval(cand) == 0) roots.push_back(cand);
    std::sort(roots.begin(), roots.end());
    return roots;
}

// Smallest integer strictly greater than the Cauchy bound 1 + max|c_i/c_n|.
Int cauchy_bound(const Poly& g) {
    Rat m(0);
    for (int i = 0; i < g.degree(); ++i) {
        Rat v = abs(g.coeff(i) / g.leading());
        if (v > m) m = v;
    }
    Rat b = 1 + m;
    return numerator(b) / denominator(b) + 1;
}

struct Interval {
    Rat lo, hi;
    int factor;  // residual factor index
    int mult;
};

// Replace (lo, hi) by the open half that keeps the interval's single root.
void bisect_keep_root(Interval& w, const std::vector<Poly>& chain) {
    Rat mid = (w.lo + w.hi) / 2;
    if (chain_count(chain, w.lo, mid) == 1)
        w.hi = mid;
    else
        w.lo = mid;
}

}  // namespace

int sturm_count(const Poly& p, const Rat& lo, const Rat& hi) {
    if (p.is_zero()) throw input_error("sturm_count: zero polynomial");
    if (!(lo < hi)) throw input_error("sturm_count: interval endpoints must satisfy lo < hi");
    if (poly_gcd(p, p.derivative()).degree() > 0)
        throw input_error("sturm_count requires a square-free polynomial");
    if (p.degree() == 0) return 0;
    std::vector<Poly> chain = sturm_chain(p);
    return chain_count(chain, lo, hi);
}

RootIsolation isolate_roots(const Poly& p, const Rat& precision, const std::vector<Rat>& avoid) {
    if (p.is_zero()) throw input_error("cannot isolate roots of the zero polynomial");
    if (!(precision > 0)) throw input_error("isolation precision must be positive");

    RootIsolation out;
    if (p.degree() == 0) return out;

    struct ExactRec {
        Rat value;
        int mult;
    };
    std::vector<ExactRec> exact;
    std::vector<std::vector<Poly>> chains;
    std::vector<Interval> intervals;

    for (const auto& [factor, mult] : square_free_decompose(p)) {
        std::vector<Rat> rroots = rational_roots(factor);
        Poly g = factor;
        for (const Rat& r : rroots) {
            exact.push_back({r, mult});
            g = deflate_root(g, r);
        }
        if (g.degree() == 0) continue;

        // g has no rational roots: no bisection point can ever hit one.
        int idx = static_cast<int>(out.residual_factors.size());
        out.residual_factors.emplace_back(g.monic(), mult);
        chains.push_back(sturm_chain(g));
        const std::vector<Poly>& chain = chains.back();

        Int bound = cauchy_bound(g);
        std::deque<Interval> queue;
        queue.push_back({Rat(-bound), Rat(bound), idx, mult});
        while (!queue.empty()) {
            Interval w = queue.front();
            queue.pop_front();
            int count = chain_count(chain, w.lo, w.hi);
            if (count == 0) continue;
            if (count == 1 && w.hi - w.lo <= precision) {
                intervals.push_back(w);
                continue;
            }
            Rat mid = (w.lo + w.hi) / 2;
            queue.push_back({w.lo, mid, idx, mult});
            queue.push_back({mid, w.hi, idx, mult});
        }
    }

    // Refine until the intervals are pairwise disjoint and exclude every
    // exact root and every requested avoid point. All isolated roots are
    // distinct reals (the square-free factors are pairwise coprime), so this
    // terminates.
    std::vector<Rat> points = avoid;
    for (const auto& e : exact) points.push_back(e.value);
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& w : intervals)
            for (const Rat& v : points)
                while (w.lo < v && v < w.hi) {
                    bisect_keep_root(w, chains[static_cast<std::size_t>(w.factor)]);
                    changed = true;
                }
        std::sort(intervals.begin(), intervals.end(),
                  [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
        for (std::size_t i = 0; i + 1 < intervals.size(); ++i) {
            Interval& a = intervals[i];
            Interval& b = intervals[i + 1];
            if (a.hi > b.lo) {
                Interval& wider = (a.hi - a.lo) >= (b.hi - b.lo) ? a : b;
                bisect_keep_root(wider, chains[static_cast<std::size_t>(wider.factor)]);
                changed = true;
            }
        }
    }

    for (const auto& e : exact) {
        IsolatedRoot r;
        r.exact = true;
        r.value = e.value;
        r.multiplicity = e.mult;
        out.roots.push_back(std::move(r));
    }
    for (const auto& w : intervals) {
        IsolatedRoot r;
        r.exact = false;
        r.lo = w.lo;
        r.hi = w.hi;
        r.multiplicity = w.mult;
        r.residual_index = w.factor;
        out.roots.push_back(std::move(r));
    }
    std::sort(out.roots.begin(), out.roots.end(), [](const IsolatedRoot& a, const IsolatedRoot& b) {
        // disjointness makes the low endpoint a sound sort key; an exact root
        // sitting on another interval's endpoint precedes that interval
        Rat ka = a.exact ? a.value : a.lo;
        Rat kb = b.exact ? b.value : b.lo;
        if (ka != kb) return ka < kb;
        return a.exact && !b.exact;
    });

    if (out.total_multiplicity() != p.degree())
        throw internal_error(
            "non-real roots detected: isolated multiplicities sum to " +
            std::to_string(out.total_multiplicity()) + " but the degree is " +
            std::to_string(p.degree()));
    return out;
}

}  // namespace zuk
