#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zuk/spectral.hpp"

namespace zuk {

enum class VerdictKind { holds, boundary, below, inapplicable };

// The decision is one-directional: `holds` asserts Property (T); the other
// kinds never assert its absence.
struct Verdict {
    VerdictKind kind = VerdictKind::inapplicable;
    std::optional<IsolatedRoot> lambda1;
    std::string reason;
    std::string conclusion;
};

Verdict evaluate(const SpectralReport& report);

// For graphs where the walk kernel itself is undefined (degree-0 vertices)
// and no spectrum exists.
Verdict kernel_undefined_verdict(const std::vector<std::string>& zero_degree_labels);

std::string verdict_kind_name(VerdictKind k);

}  // namespace zuk
