#pragma once

#include <optional>
#include <string>

#include "zuk/criterion.hpp"
#include "zuk/input.hpp"
#include "zuk/link_graph.hpp"
#include "zuk/spectral.hpp"

namespace zuk {

enum class EngineMode { exact_only, numeric_only, both };

struct RunOptions {
    EngineMode engine = EngineMode::both;
    Rat precision;  // root isolation width, default 1/10^12
    Rat tolerance;  // exact-vs-numeric cross-check bound, default 1/10^9
    bool symmetrize = false;

    RunOptions();
};

struct RunResult {
    LinkGraph graph;
    SpectralReport report;  // graph summary always filled; engine fields per mode
    std::optional<Verdict> verdict;  // absent in numeric-only mode
    std::string input_summary;
};

// build -> spectrum -> verdict. Degree-0 vertices yield an "inapplicable"
// verdict with an engine-free report rather than an error.
RunResult run_pipeline(const InputSpec& spec, const RunOptions& opt);

}  // namespace zuk
