#pragma once

#include <optional>
#include <vector>

#include "zuk/link_graph.hpp"
#include "zuk/matrix.hpp"
#include "zuk/roots.hpp"

namespace zuk {

enum class Trichotomy { greater, equal, less };

struct SpectralReport {
    // graph summary, always present
    int n = 0;
    int edges = 0;
    int components = 0;
    std::vector<int> component_sizes;
    std::vector<int> degrees;

    // exact engine
    std::optional<Poly> char_polynomial;        // monic
    std::optional<RootIsolation> eigenvalues;   // multiplicities sum to n
    std::optional<IsolatedRoot> lambda1;        // smallest nonzero eigenvalue;
                                                // present iff connected and n >= 2
    std::optional<Trichotomy> lambda1_vs_half;  // decided exactly

    // numeric engine
    std::optional<std::vector<double>> numeric_eigenvalues;  // ascending
    std::optional<double> cross_check;  // max |exact - numeric| over sorted pairs
};

// I on the diagonal, -1/deg(x) on edges, rows in graph vertex order. This is
// the walk Laplacian in the delta basis; rows sum to zero exactly.
RationalMatrix laplacian_matrix(const LinkGraph& g);

// The symmetric matrix similar to the Laplacian under conjugation by
// diag(sqrt(deg)): 1 on the diagonal, -1/sqrt(deg(x) deg(y)) on edges.
// Row-major n*n doubles; cospectral with laplacian_matrix(g).
std::vector<double> symmetrized_laplacian(const LinkGraph& g);

// Eigenvalues of the symmetrized Laplacian by cyclic Jacobi rotations,
// swept until the off-diagonal Frobenius norm drops below 1e-12 (at most
// 100 sweeps, internal_error with the residual otherwise). Ascending.
std::vector<double> numeric_spectrum(const LinkGraph& g);

// Exact engine only: characteristic polynomial, certified eigenvalues,
// lambda_1 and its exact trichotomy against 1/2.
SpectralReport exact_spectrum(const LinkGraph& g, const Rat& precision);

// Both engines plus the cross-check; throws internal_error when the engines
// disagree beyond the tolerance.
SpectralReport full_report(const LinkGraph& g, const Rat& precision, const Rat& tolerance);

}  // namespace zuk
