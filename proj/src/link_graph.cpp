#include "zuk/link_graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "zuk/errors.hpp"

namespace zuk {

LinkGraph::LinkGraph(std::vector<std::string> labels,
                     const std::vector<std::pair<int, int>>& edges)
    : labels_(std::move(labels)), adj_(labels_.size()) {
    const int n = static_cast<int>(labels_.size());
    std::set<std::pair<int, int>> seen;
    for (auto [i, j] : edges) {
        if (i < 0 || j < 0 || i >= n || j >= n)
            throw internal_error("edge endpoint out of range");
        if (i == j) throw internal_error("self-loop in simple graph construction");
        auto key = std::minmax(i, j);
        if (!seen.insert({key.first, key.second}).second)
            throw internal_error("duplicate edge in simple graph construction");
        adj_[static_cast<std::size_t>(i)].push_back(j);
        adj_[static_cast<std::size_t>(j)].push_back(i);
        ++edge_count_;
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

std::vector<int> LinkGraph::degrees() const {
    std::vector<int> d;
    d.reserve(adj_.size());
    for (const auto& nb : adj_) d.push_back(static_cast<int>(nb.size()));
    return d;
}

bool LinkGraph::has_edge(int i, int j) const {
    const auto& nb = adj_[static_cast<std::size_t>(i)];
    return std::binary_search(nb.begin(), nb.end(), j);
}

std::vector<std::pair<int, int>> LinkGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int i = 0; i < vertex_count(); ++i)
        for (int j : adj_[static_cast<std::size_t>(i)])
            if (i < j) out.emplace_back(i, j);
    return out;
}

LinkGraph build_link_graph(const GeneratingSet& s) {
    const int n = static_cast<int>(s.size());
    // Full directed membership relation; its symmetry is a theorem given
    // S = S^-1, checked here as a hard invariant.
    std::vector<bool> rel(static_cast<std::size_t>(n) * n, false);
    for (int i = 0; i < n; ++i) {
        GroupElement inv = inverse(s.at(static_cast<std::size_t>(i)));
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            GroupElement prod = multiply(inv, s.at(static_cast<std::size_t>(j)));
            rel[static_cast<std::size_t>(i) * n + j] = s.contains_form(canonical_key(prod));
        }
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool ij = rel[static_cast<std::size_t>(i) * n + j];
            bool ji = rel[static_cast<std::size_t>(j) * n + i];
            if (ij != ji)
                throw internal_error("edge relation is not symmetric between " +
                                     s.labels()[static_cast<std::size_t>(i)] + " and " +
                                     s.labels()[static_cast<std::size_t>(j)]);
            if (ij) edges.emplace_back(i, j);
        }
    return LinkGraph(s.labels(), edges);
}

LinkGraph from_edge_list(const std::vector<std::string>& labels,
                         const std::vector<std::pair<std::string, std::string>>& edges) {
    if (labels.empty()) throw input_error("graph needs at least one vertex");
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (!index.emplace(labels[i], static_cast<int>(i)).second)
            throw input_error("duplicate vertex label '" + labels[i] + "'");

    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<int, int>> resolved;
    for (const auto& [a, b] : edges) {
        auto ia = index.find(a);
        if (ia == index.end()) throw input_error("unknown vertex label '" + a + "' in edge");
        auto ib = index.find(b);
        if (ib == index.end()) throw input_error("unknown vertex label '" + b + "' in edge");
        if (ia->second == ib->second)
            throw input_error("self-loop on vertex '" + a + "' is not allowed");
        auto key = std::minmax(ia->second, ib->second);
        if (!seen.insert({key.first, key.second}).second)
            throw input_error("duplicate edge between '" + a + "' and '" + b + "'");
        resolved.emplace_back(ia->second, ib->second);
    }
    return LinkGraph(labels, resolved);
}

std::vector<std::vector<int>> connected_components(const LinkGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> blocks;
    for (int start = 0; start < n; ++start) {
        if (comp[static_cast<std::size_t>(start)] != -1) continue;
        int id = static_cast<int>(blocks.size());
        blocks.emplace_back();
        std::deque<int> queue{start};
        comp[static_cast<std::size_t>(start)] = id;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            blocks[static_cast<std::size_t>(id)].push_back(v);
            for (int w : g.neighbors(v))
                if (comp[static_cast<std::size_t>(w)] == -1) {
                    comp[static_cast<std::size_t>(w)] = id;
                    queue.push_back(w);
                }
        }
        std::sort(blocks[static_cast<std::size_t>(id)].begin(),
                  blocks[static_cast<std::size_t>(id)].end());
    }
    return blocks;
}

WalkData::WalkData(const LinkGraph& g) : g_(&g) {
    std::vector<std::string> offenders;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) offenders.push_back(g.labels()[static_cast<std::size_t>(v)]);
    if (!offenders.empty()) throw kernel_undefined_error(std::move(offenders));
}

Rat WalkData::mu(int x, int y) const {
    if (!g_->has_edge(x, y)) return Rat(0);
    return Rat(1, g_->degree(x));
}

Int WalkData::nu(int x) const { return Int(g_->degree(x)); }

WalkData walk_data(const LinkGraph& g) { return WalkData(g); }

namespace {

std::string escape_label(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

std::string unescape_label(const std::string& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '\\' && i + 1 < s.size()) ++i;
        out.push_back(s[i]);
    }
    return out;
}

}  // namespace

std::string to_dot(const LinkGraph& g) {
    std::string out = "graph linkgraph {\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        out += "  v" + std::to_string(v) + " [label=\"" +
               escape_label(g.labels()[static_cast<std::size_t>(v)]) + "\"];\n";
    for (auto [i, j] : g.edges())
        out += "  v" + std::to_string(i) + " -- v" + std::to_string(j) + ";\n";
    out += "}\n";
    return out;
}

DotGraph parse_dot(const std::string& text) {
    DotGraph out;
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) lines.push_back(cur);

    auto trim = [](std::string s) {
        std::size_t a = s.find_first_not_of(" \t\r");
        if (a == std::string::npos) return std::string();
        std::size_t b = s.find_last_not_of(" \t\r");
        return s.substr(a, b - a + 1);
    };

    std::map<std::string, bool> node_seen;
    for (const std::string& raw : lines) {
        std::string line = trim(raw);
        if (line.empty() || line == "}" || line.rfind("graph", 0) == 0) continue;
        auto label_pos = line.find("[label=\"");
        if (label_pos != std::string::npos) {
            // vN [label="..."];
            std::string node = trim(line.substr(0, label_pos));
            std::size_t start = label_pos + 8;
            std::string lab;
            bool closed = false;
            for (std::size_t i = start; i < line.size(); ++i) {
                if (line[i] == '\\' && i + 1 < line.size()) {
                    lab.push_back(line[i]);
                    lab.push_back(line[i + 1]);
                    ++i;
                    continue;
                }
                if (line[i] == '"') {
                    closed = true;
                    break;
                }
                lab.push_back(line[i]);
            }
            if (node.empty() || !closed) throw input_error("malformed DOT node line: " + raw);
            if (!node_seen.emplace(node, true).second)
                throw input_error("duplicate DOT node: " + node);
            out.labels.push_back(unescape_label(lab));
            continue;
        }
        auto dash = line.find(" -- ");
        if (dash != std::string::npos) {
            std::string a = trim(line.substr(0, dash));
            std::string b = trim(line.substr(dash + 4));
            if (!b.empty() && b.back() == ';') b.pop_back();
            b = trim(b);
            auto resolve = [&](const std::string& name) -> std::string {
                if (name.size() < 2 || name[0] != 'v')
                    throw input_error("malformed DOT edge endpoint: " + name);
                std::size_t idx = std::stoul(name.substr(1));
                if (idx >= out.labels.size())
                    throw input_error("DOT edge references unknown node " + name);
                return out.labels[idx];
            };
            out.edges.emplace_back(resolve(a), resolve(b));
            continue;
        }
        throw input_error("unrecognized DOT line: " + raw);
    }
    return out;
}

}  // namespace zuk
