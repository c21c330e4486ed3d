#include "zuk/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "zuk/errors.hpp"

namespace zuk {

RationalMatrix laplacian_matrix(const LinkGraph& g) {
    WalkData wd(g);  // rejects degree-0 vertices
    const int n = g.vertex_count();
    RationalMatrix m(n);
    for (int i = 0; i < n; ++i) {
        m.at(i, i) = 1;
        Rat w(1, g.degree(i));
        for (int j : g.neighbors(i)) m.at(i, j) = -w;
    }
    return m;
}

std::vector<double> symmetrized_laplacian(const LinkGraph& g) {
    WalkData wd(g);
    const int n = g.vertex_count();
    std::vector<double> m(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        m[static_cast<std::size_t>(i) * n + i] = 1.0;
        for (int j : g.neighbors(i))
            m[static_cast<std::size_t>(i) * n + j] =
                -1.0 / std::sqrt(static_cast<double>(g.degree(i)) *
                                 static_cast<double>(g.degree(j)));
    }
    return m;
}

namespace {

constexpr double kJacobiResidual = 1e-12;
constexpr int kJacobiMaxSweeps = 100;

double off_diagonal_norm(const std::vector<double>& a, int n) {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) s += a[static_cast<std::size_t>(i) * n + j] *
                             a[static_cast<std::size_t>(i) * n + j];
    return std::sqrt(s);
}

std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n) {
    auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
    for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a, n) < kJacobiResidual) break;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                double apq = at(p, q);
                if (apq == 0.0) continue;
                double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                double tau = s / (1.0 + c);
                double app = at(p, p), aqq = at(q, q);
                at(p, p) = app - t * apq;
                at(q, q) = aqq + t * apq;
                at(p, q) = at(q, p) = 0.0;
                for (int r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    double arp = at(r, p), arq = at(r, q);
                    at(r, p) = at(p, r) = arp - s * (arq + tau * arp);
                    at(r, q) = at(q, r) = arq + s * (arp - tau * arq);
                }
            }
    }
    double residual = off_diagonal_norm(a, n);
    if (residual >= kJacobiResidual) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3e", residual);
        throw internal_error(std::string("jacobi sweep cap reached; off-diagonal residual ") +
                             buf);
    }
    std::vector<double> eig(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) eig[static_cast<std::size_t>(i)] = at(i, i);
    std::sort(eig.begin(), eig.end());
    return eig;
}

SpectralReport summarize(const LinkGraph& g) {
    SpectralReport rep;
    rep.n = g.vertex_count();
    rep.edges = g.edge_count();
    rep.degrees = g.degrees();
    auto blocks = connected_components(g);
    rep.components = static_cast<int>(blocks.size());
    for (const auto& b : blocks) rep.component_sizes.push_back(static_cast<int>(b.size()));
    return rep;
}

void check_laplacian_invariants(const RationalMatrix& m, const LinkGraph& g) {
    const int n = m.size();
    for (int i = 0; i < n; ++i) {
        Rat row_sum(0);
        for (int j = 0; j < n; ++j) row_sum += m.at(i, j);
        if (row_sum != 0)
            throw internal_error("Laplacian row " + std::to_string(i) + " does not sum to zero");
    }
    // nu-self-adjointness: diag(deg) * m must be exactly symmetric
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (m.at(i, j) * g.degree(i) != m.at(j, i) * g.degree(j))
                throw internal_error("diag(nu) * Laplacian is not symmetric at (" +
                                     std::to_string(i) + "," + std::to_string(j) + ")");
}

Trichotomy decide_vs_half(const Poly& cp, const IsolatedRoot& lambda1) {
    const Rat half(1, 2);
    if (lambda1.exact) {
        if (lambda1.value < half) return Trichotomy::less;
        if (lambda1.value == half) return Trichotomy::equal;
        return Trichotomy::greater;
    }
    // irrational lambda_1: count roots of the square-free part in (0, 1/2)
    Poly sqf = square_free_part(cp);
    int half_open = sturm_count(sqf, Rat(0), half);
    bool half_is_root = eval_sign(cp, half) == Sign::zero;
    int open = half_open - (half_is_root ? 1 : 0);
    if (open >= 1) return Trichotomy::less;
    return half_is_root ? Trichotomy::equal : Trichotomy::greater;
}

}  // namespace

std::vector<double> numeric_spectrum(const LinkGraph& g) {
    return jacobi_eigenvalues(symmetrized_laplacian(g), g.vertex_count());
}

SpectralReport exact_spectrum(const LinkGraph& g, const Rat& precision) {
    SpectralReport rep = summarize(g);
    RationalMatrix lap = laplacian_matrix(g);
    check_laplacian_invariants(lap, g);

    Poly cp = char_poly(lap);
    // trace identity: the coefficient of x^(n-1) is -(sum of eigenvalues) = -n
    if (cp.coeff(rep.n - 1) != Rat(-rep.n))
        throw internal_error("eigenvalue sum differs from the trace " + std::to_string(rep.n));

    // 0, 1/2 and 2 are the decision points; keeping isolating intervals clear
    // of them makes every comparison below exact.
    RootIsolation iso = isolate_roots(cp, precision, {Rat(0), Rat(1, 2), Rat(2)});

    for (const auto& r : iso.roots) {
        bool in_range = r.exact ? (r.value >= 0 && r.value <= 2) : (r.lo >= 0 && r.hi <= 2);
        if (!in_range)
            throw internal_error("eigenvalue outside [0, 2] detected");
    }
    if (iso.roots.empty() || !iso.roots.front().exact || iso.roots.front().value != 0)
        throw internal_error("eigenvalue 0 is missing from the spectrum");
    if (iso.roots.front().multiplicity != rep.components)
        throw internal_error("multiplicity of eigenvalue 0 (" +
                             std::to_string(iso.roots.front().multiplicity) +
                             ") differs from the component count (" +
                             std::to_string(rep.components) + ")");

    rep.char_polynomial = cp;
    rep.eigenvalues = iso;
    if (rep.components == 1 && rep.n >= 2) {
        rep.lambda1 = iso.roots[1];  // smallest nonzero eigenvalue
        rep.lambda1_vs_half = decide_vs_half(cp, *rep.lambda1);
    }
    return rep;
}

SpectralReport full_report(const LinkGraph& g, const Rat& precision, const Rat& tolerance) {
    SpectralReport rep = exact_spectrum(g, precision);
    std::vector<double> numeric = numeric_spectrum(g);

    std::vector<double> exact_approx;
    exact_approx.reserve(static_cast<std::size_t>(rep.n));
    for (const auto& r : rep.eigenvalues->roots)
        for (int k = 0; k < r.multiplicity; ++k) exact_approx.push_back(r.approx());
    std::sort(exact_approx.begin(), exact_approx.end());

    double cross = 0.0;
    for (std::size_t i = 0; i < exact_approx.size(); ++i)
        cross = std::max(cross, std::fabs(exact_approx[i] - numeric[i]));
    if (cross > to_double(tolerance)) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3e", cross);
        throw internal_error(std::string("exact and numeric engines disagree: max |diff| = ") +
                             buf + ", tolerance " + to_string(tolerance));
    }
    rep.numeric_eigenvalues = std::move(numeric);
    rep.cross_check = cross;
    return rep;
}

}  // namespace zuk
