#include "zuk/pipeline.hpp"

#include "zuk/errors.hpp"

namespace zuk {

RunOptions::RunOptions()
    : precision(Rat(1) / Rat(pow10(12))), tolerance(Rat(1) / Rat(pow10(9))) {}

namespace {

SpectralReport graph_only_report(const LinkGraph& g) {
    SpectralReport rep;
    rep.n = g.vertex_count();
    rep.edges = g.edge_count();
    rep.degrees = g.degrees();
    auto blocks = connected_components(g);
    rep.components = static_cast<int>(blocks.size());
    for (const auto& b : blocks) rep.component_sizes.push_back(static_cast<int>(b.size()));
    return rep;
}

std::vector<std::string> zero_degree_labels(const LinkGraph& g) {
    std::vector<std::string> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) out.push_back(g.labels()[static_cast<std::size_t>(v)]);
    return out;
}

}  // namespace

RunResult run_pipeline(const InputSpec& spec, const RunOptions& opt) {
    std::string summary;
    LinkGraph graph = [&] {
        if (spec.is_group()) {
            const GroupInput& gi = spec.group();
            SetPolicy policy = (gi.symmetrize || opt.symmetrize) ? SetPolicy::symmetrize
                                                                 : SetPolicy::strict;
            GeneratingSet s = GeneratingSet::make(gi.desc, gi.generators, policy);
            summary = "group " + gi.desc.describe() + "; " + std::to_string(s.size()) +
                      " generators (" + std::to_string(s.distinct_count()) + " distinct); policy " +
                      (policy == SetPolicy::strict ? "strict" : "symmetrize");
            return build_link_graph(s);
        }
        const GraphInput& gr = spec.graph();
        summary = "graph; " + std::to_string(gr.labels.size()) + " vertices, " +
                  std::to_string(gr.edges.size()) + " edges (explicit edge list)";
        return from_edge_list(gr.labels, gr.edges);
    }();

    RunResult result{std::move(graph), {}, std::nullopt, std::move(summary)};
    const LinkGraph& g = result.graph;

    std::vector<std::string> dead = zero_degree_labels(g);
    if (!dead.empty()) {
        result.report = graph_only_report(g);
        result.verdict = kernel_undefined_verdict(dead);
        return result;
    }

    switch (opt.engine) {
        case EngineMode::exact_only:
            result.report = exact_spectrum(g, opt.precision);
            result.verdict = evaluate(result.report);
            break;
        case EngineMode::numeric_only:
            result.report = graph_only_report(g);
            result.report.numeric_eigenvalues = numeric_spectrum(g);
            break;
        case EngineMode::both:
            result.report = full_report(g, opt.precision, opt.tolerance);
            result.verdict = evaluate(result.report);
            break;
    }
    return result;
}

}  // namespace zuk
