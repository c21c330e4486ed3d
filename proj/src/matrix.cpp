#include "zuk/matrix.hpp"

#include <set>

#include "zuk/bareiss.hpp"
#include "zuk/errors.hpp"

namespace zuk {

namespace {

// Exact Newton interpolation through (xs[i], ys[i]).
Poly newton_interpolate(const std::vector<Int>& xs, const std::vector<Int>& ys) {
    std::size_t n = xs.size();
    std::vector<Rat> dd(n);
    for (std::size_t i = 0; i < n; ++i) dd[i] = Rat(ys[i]);
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i)
            dd[i] = (dd[i] - dd[i - 1]) / Rat(xs[i] - xs[i - j]);
    Poly p = Poly::constant(dd[n - 1]);
    for (std::size_t k = n - 1; k-- > 0;) {
        Poly shift(std::vector<Rat>{Rat(-xs[k]), Rat(1)});  // x - xs[k]
        p = p * shift + Poly::constant(dd[k]);
    }
    return p;
}

}  // namespace

Poly char_poly_sampled(const RationalMatrix& m, const std::vector<Int>& points) {
    const int n = m.size();
    if (points.size() != static_cast<std::size_t>(n) + 1)
        throw input_error("char_poly_sampled needs exactly n+1 sample points");
    if (std::set<Int>(points.begin(), points.end()).size() != points.size())
        throw input_error("char_poly_sampled needs pairwise-distinct sample points");

    // Clear each row's denominators: D m = B with D = diag(d), B integer.
    // Then det(xI - m) = det(xD - B) / prod(d).
    std::vector<Int> row_scale(static_cast<std::size_t>(n));
    std::vector<Int> cleared(static_cast<std::size_t>(n) * n);
    Int scale_product = 1;
    for (int i = 0; i < n; ++i) {
        Int d = 1;
        for (int j = 0; j < n; ++j) d = lcm(d, denominator(m.at(i, j)));
        row_scale[static_cast<std::size_t>(i)] = d;
        scale_product *= d;
        for (int j = 0; j < n; ++j)
            cleared[static_cast<std::size_t>(i) * n + j] =
                numerator(m.at(i, j)) * (d / denominator(m.at(i, j)));
    }

    std::vector<Int> values;
    values.reserve(points.size());
    for (const Int& k : points) {
        std::vector<Int> pencil = cleared;
        for (auto& v : pencil) v = -v;
        for (int i = 0; i < n; ++i)
            pencil[static_cast<std::size_t>(i) * n + i] += k * row_scale[static_cast<std::size_t>(i)];
        values.push_back(bareiss_determinant(std::move(pencil), n));
    }

    Poly p = newton_interpolate(points, values) * Rat(Int(1), scale_product);
    if (p.degree() != n)
        throw internal_error("characteristic polynomial: interpolated degree " +
                             std::to_string(p.degree()) + ", expected " + std::to_string(n));
    if (!(p.leading() == 1))
        throw internal_error("characteristic polynomial is not monic after renormalization");
    return p;
}

Poly char_poly(const RationalMatrix& m) {
    std::vector<Int> points;
    points.reserve(static_cast<std::size_t>(m.size()) + 1);
    for (int k = 0; k <= m.size(); ++k) points.emplace_back(k);
    return char_poly_sampled(m, points);
}

}  // namespace zuk
