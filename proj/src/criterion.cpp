#include "zuk/criterion.hpp"

namespace zuk {

namespace {

const char* kHoldsConclusion = "Γ has Property (T) by Żuk's criterion";
const char* kNoConclusion = "criterion does not apply; no conclusion about Property (T)";

std::string join_sizes(const std::vector<int>& sizes) {
    std::string out;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(sizes[i]);
    }
    return out;
}

std::string join_labels(const std::vector<std::string>& labels) {
    std::string out;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) out += ", ";
        out += labels[i];
    }
    return out;
}

}  // namespace

std::string verdict_kind_name(VerdictKind k) {
    switch (k) {
        case VerdictKind::holds: return "holds";
        case VerdictKind::boundary: return "boundary";
        case VerdictKind::below: return "below";
        case VerdictKind::inapplicable: return "inapplicable";
    }
    return "?";
}

Verdict evaluate(const SpectralReport& report) {
    Verdict v;
    if (!report.lambda1) {
        v.kind = VerdictKind::inapplicable;
        v.reason = "disconnected: " + std::to_string(report.components) +
                   " components of sizes " + join_sizes(report.component_sizes);
        v.conclusion = kNoConclusion;
        return v;
    }
    v.lambda1 = report.lambda1;
    switch (*report.lambda1_vs_half) {
        case Trichotomy::greater:
            v.kind = VerdictKind::holds;
            v.reason = "λ₁ > 1/2 decided exactly";
            v.conclusion = kHoldsConclusion;
            break;
        case Trichotomy::equal:
            v.kind = VerdictKind::boundary;
            v.reason = "λ₁ = 1/2 exactly";
            v.conclusion = kNoConclusion;
            break;
        case Trichotomy::less:
            v.kind = VerdictKind::below;
            v.reason = "0 < λ₁ < 1/2 decided exactly";
            v.conclusion = kNoConclusion;
            break;
    }
    return v;
}

Verdict kernel_undefined_verdict(const std::vector<std::string>& zero_degree_labels) {
    Verdict v;
    v.kind = VerdictKind::inapplicable;
    v.reason = "kernel undefined: degree-0 vertices: " + join_labels(zero_degree_labels);
    v.conclusion = kNoConclusion;
    return v;
}

}  // namespace zuk
