#include "zuk/report_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>

#include "zuk/errors.hpp"

namespace zuk {

namespace {

std::string fmt_double(double v, const char* spec = "%.12f") {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

// "4", "(19/4)", used as a coefficient in rendered polynomials
std::string coeff_string(const Rat& c) {
    if (denominator(c) == 1) return numerator(c).str();
    return "(" + to_string(c) + ")";
}

std::string term_string(const Rat& c, int k, bool leading_term) {
    Rat a = abs(c);
    std::string mag;
    if (k == 0) {
        mag = coeff_string(a);
    } else {
        std::string var = k == 1 ? "x" : "x^" + std::to_string(k);
        mag = (a == 1) ? var : coeff_string(a) + "*" + var;
    }
    if (leading_term) return c < 0 ? "-" + mag : mag;
    return (c < 0 ? " - " : " + ") + mag;
}

std::string timestamp_line() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[64];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string trichotomy_name(Trichotomy t) {
    switch (t) {
        case Trichotomy::greater: return "greater";
        case Trichotomy::equal: return "equal";
        case Trichotomy::less: return "less";
    }
    return "?";
}

std::string root_display(const IsolatedRoot& r) {
    if (r.exact) return to_string(r.value);
    return "~" + fmt_double(r.approx());
}

std::string verdict_line(const Verdict& v) {
    std::string detail;
    switch (v.kind) {
        case VerdictKind::boundary:
            detail = "λ₁ = 1/2 exactly";
            break;
        case VerdictKind::holds:
            detail = v.lambda1->exact
                         ? "λ₁ = " + to_string(v.lambda1->value) + " > 1/2"
                         : "λ₁ ≈ " + fmt_double(v.lambda1->approx()) + ", certified > 1/2";
            break;
        case VerdictKind::below:
            detail = v.lambda1->exact
                         ? "λ₁ = " + to_string(v.lambda1->value) + " < 1/2"
                         : "λ₁ ≈ " + fmt_double(v.lambda1->approx()) + ", certified < 1/2";
            break;
        case VerdictKind::inapplicable:
            detail = v.reason;
            break;
    }
    return "verdict: " + verdict_kind_name(v.kind) + " (" + detail + ")";
}

}  // namespace

std::string poly_to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        Rat c = p.coeff(k);
        if (c == 0) continue;
        out += term_string(c, k, first);
        first = false;
    }
    return out;
}

std::string factored_string(const Poly& p, const RootIsolation& iso) {
    std::vector<std::string> factors;
    Rat constant = p.is_zero() ? Rat(0) : p.leading();
    for (const auto& r : iso.roots) {
        if (!r.exact) continue;
        std::string base;
        if (r.value == 0)
            base = "x";
        else if (r.value < 0)
            base = "(x + " + to_string(-r.value) + ")";
        else
            base = "(x - " + to_string(r.value) + ")";
        factors.push_back(r.multiplicity == 1 ? base
                                              : base + "^" + std::to_string(r.multiplicity));
    }
    for (const auto& [factor, mult] : iso.residual_factors) {
        std::string base = "(" + poly_to_string(factor) + ")";
        factors.push_back(mult == 1 ? base : base + "^" + std::to_string(mult));
    }
    std::string out;
    if (constant != 1 || factors.empty()) out = coeff_string(constant);
    for (const auto& f : factors) {
        if (!out.empty()) out += " * ";
        out += f;
    }
    return out;
}

std::string render_charpoly_file(const Poly& p) { return poly_to_string(p) + "\n"; }

std::string render_text(const RunResult& r, const RunOptions& opt, bool stamp) {
    const SpectralReport& rep = r.report;
    std::string out;
    out += "input: " + r.input_summary + "\n";
    out += "graph: " + std::to_string(rep.n) + (rep.n == 1 ? " vertex, " : " vertices, ") +
           std::to_string(rep.edges) + (rep.edges == 1 ? " edge, " : " edges, ") +
           std::to_string(rep.components) + (rep.components == 1 ? " component" : " components") +
           "\n";
    out += "degrees:";
    for (int v = 0; v < rep.n; ++v)
        out += " " + r.graph.labels()[static_cast<std::size_t>(v)] + "=" +
               std::to_string(rep.degrees[static_cast<std::size_t>(v)]);
    out += "\n";

    if (rep.char_polynomial) {
        out += "char poly: " + poly_to_string(*rep.char_polynomial) + "\n";
        out += "factored: " + factored_string(*rep.char_polynomial, *rep.eigenvalues) + "\n";
        out += "spectrum:\n";
        for (const auto& root : rep.eigenvalues->roots)
            out += "  " + root_display(root) + " (multiplicity " +
                   std::to_string(root.multiplicity) + ")\n";
        if (rep.lambda1) {
            out += "lambda_1: " + root_display(*rep.lambda1) + "\n";
            out += "lambda_1 vs 1/2: " + trichotomy_name(*rep.lambda1_vs_half) + "\n";
        } else {
            out += "lambda_1: (absent: graph is disconnected)\n";
        }
    }
    if (rep.numeric_eigenvalues) {
        out += "numeric spectrum:";
        for (double v : *rep.numeric_eigenvalues) out += " " + fmt_double(v);
        out += "\n";
    }
    if (rep.cross_check)
        out += "cross check: " + fmt_double(*rep.cross_check, "%.3e") + " (tolerance " +
               to_string(opt.tolerance) + ")\n";
    if (stamp) out += "generated: " + timestamp_line() + "\n";
    if (r.verdict) {
        out += "conclusion: " + r.verdict->conclusion + "\n";
        out += verdict_line(*r.verdict) + "\n";
    } else {
        out += "conclusion: (exact engine disabled; no verdict)\n";
    }
    return out;
}

std::string render_json(const RunResult& r, const RunOptions& opt, bool stamp) {
    using json = nlohmann::ordered_json;
    const SpectralReport& rep = r.report;

    json doc;
    doc["input_summary"] = r.input_summary;
    json graph;
    graph["n"] = rep.n;
    graph["edges"] = rep.edges;
    graph["degrees"] = rep.degrees;
    graph["labels"] = r.graph.labels();
    graph["components"] = rep.components;
    graph["component_sizes"] = rep.component_sizes;
    doc["graph"] = std::move(graph);

    if (rep.char_polynomial) {
        json coeffs = json::array();
        for (int k = 0; k <= rep.char_polynomial->degree(); ++k)
            coeffs.push_back(to_string(rep.char_polynomial->coeff(k)));
        doc["char_poly"] = json{{"monic_coefficients", std::move(coeffs)}};
    } else {
        doc["char_poly"] = nullptr;
    }

    if (rep.eigenvalues) {
        json spectrum = json::array();
        for (const auto& root : rep.eigenvalues->roots) {
            json entry;
            if (root.exact)
                entry["value"] = to_string(root.value);
            else
                entry["interval"] = json::array({to_string(root.lo), to_string(root.hi)});
            entry["multiplicity"] = root.multiplicity;
            spectrum.push_back(std::move(entry));
        }
        doc["spectrum"] = std::move(spectrum);
    } else {
        doc["spectrum"] = nullptr;
    }

    if (rep.lambda1) {
        json l;
        if (rep.lambda1->exact)
            l["value"] = to_string(rep.lambda1->value);
        else
            l["interval"] = json::array({to_string(rep.lambda1->lo), to_string(rep.lambda1->hi)});
        doc["lambda1"] = std::move(l);
        doc["lambda1_vs_half"] = trichotomy_name(*rep.lambda1_vs_half);
    } else {
        doc["lambda1"] = nullptr;
        doc["lambda1_vs_half"] = nullptr;
    }

    if (r.verdict) {
        doc["verdict"] = json{{"kind", verdict_kind_name(r.verdict->kind)},
                              {"reason", r.verdict->reason},
                              {"conclusion", r.verdict->conclusion}};
    } else {
        doc["verdict"] = nullptr;
    }

    if (rep.numeric_eigenvalues)
        doc["numeric_spectrum"] = *rep.numeric_eigenvalues;
    else
        doc["numeric_spectrum"] = nullptr;
    if (rep.cross_check) {
        doc["cross_check"] = *rep.cross_check;
        doc["tolerance"] = to_string(opt.tolerance);
    } else {
        doc["cross_check"] = nullptr;
    }
    if (stamp) doc["generated"] = timestamp_line();
    return doc.dump(2) + "\n";
}

}  // namespace zuk
