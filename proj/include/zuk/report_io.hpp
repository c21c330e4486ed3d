#pragma once

#include <string>

#include "zuk/pipeline.hpp"

namespace zuk {

// Monic expanded form, e.g. "x^4 - 4*x^3 + (19/4)*x^2 - (3/2)*x".
std::string poly_to_string(const Poly& p);

// Factored form from an isolation: exact-root linear factors ascending, then
// the residual square-free factors, e.g. "x * (x - 1/2)^3 * (x^2 - 2)".
std::string factored_string(const Poly& p, const RootIsolation& iso);

// Human-readable run report; ends with the single verdict line. stamp
// appends a "generated:" line (off by default so outputs are byte-stable).
std::string render_text(const RunResult& r, const RunOptions& opt, bool stamp = false);

// The stable JSON schema: input_summary, graph {n, edges, degrees, labels,
// components}, char_poly {monic_coefficients}, spectrum [{value | interval,
// multiplicity}], lambda1, lambda1_vs_half, verdict {kind, reason,
// conclusion}, numeric_spectrum, cross_check.
std::string render_json(const RunResult& r, const RunOptions& opt, bool stamp = false);

// Single line: the monic expanded characteristic polynomial.
std::string render_charpoly_file(const Poly& p);

}  // namespace zuk
