#include "zuk/input.hpp"

#include <cctype>
#include <optional>
#include <sstream>

#include "zuk/errors.hpp"

namespace zuk {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
    throw input_error("line " + std::to_string(line) + ": " + msg);
}

// whitespace-separated tokens; double quotes group a token, backslash escapes
std::vector<std::string> tokenize(const std::string& line, int lineno) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::string tok;
        if (line[i] == '"') {
            ++i;
            bool closed = false;
            while (i < line.size()) {
                if (line[i] == '\\' && i + 1 < line.size()) {
                    tok.push_back(line[i + 1]);
                    i += 2;
                    continue;
                }
                if (line[i] == '"') {
                    closed = true;
                    ++i;
                    break;
                }
                tok.push_back(line[i++]);
            }
            if (!closed) fail(lineno, "unterminated quoted token");
        } else {
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
                tok.push_back(line[i++]);
        }
        out.push_back(std::move(tok));
    }
    return out;
}

// Nested integer arrays: value := integer | '[' value (',' value)* ']' | '[]'
struct ArrayParser {
    const std::string& text;
    std::size_t pos = 0;
    int lineno;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    struct Node {
        std::optional<Int> leaf;
        std::vector<Node> children;
    };

    Node parse_value() {
        skip_ws();
        if (pos >= text.size()) fail(lineno, "unexpected end of array expression");
        if (text[pos] == '[') {
            ++pos;
            Node n;
            skip_ws();
            if (pos < text.size() && text[pos] == ']') {
                ++pos;
                return n;
            }
            while (true) {
                n.children.push_back(parse_value());
                skip_ws();
                if (pos < text.size() && text[pos] == ',') {
                    ++pos;
                    continue;
                }
                if (pos < text.size() && text[pos] == ']') {
                    ++pos;
                    return n;
                }
                fail(lineno, "expected ',' or ']' in array");
            }
        }
        std::string digits;
        if (text[pos] == '+' || text[pos] == '-') digits.push_back(text[pos++]);
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            digits.push_back(text[pos++]);
        if (digits.empty() || digits == "+" || digits == "-")
            fail(lineno, "expected an integer in array expression");
        Node n;
        n.leaf = Int(digits);
        return n;
    }

    Node parse_all() {
        Node n = parse_value();
        skip_ws();
        if (pos != text.size()) fail(lineno, "trailing characters after array expression");
        return n;
    }
};

std::vector<Int> flat_vector(const ArrayParser::Node& n, int lineno, const char* what) {
    std::vector<Int> out;
    if (n.leaf) {
        out.push_back(*n.leaf);
        return out;
    }
    for (const auto& c : n.children) {
        if (!c.leaf) fail(lineno, std::string("expected a flat integer array for ") + what);
        out.push_back(*c.leaf);
    }
    return out;
}

std::vector<Int> generator_payload(const GroupDescriptor& desc, const std::string& expr,
                                   int lineno) {
    ArrayParser p{expr, 0, lineno};
    ArrayParser::Node n = p.parse_all();
    switch (desc.kind) {
        case GroupKind::free_abelian: {
            if (n.leaf) fail(lineno, "vector generator must be an array like [1,-2]");
            std::vector<Int> v = flat_vector(n, lineno, "a vector generator");
            if (v.size() != static_cast<std::size_t>(desc.rank))
                fail(lineno, "generator has " + std::to_string(v.size()) +
                                 " entries, expected rank " + std::to_string(desc.rank));
            return v;
        }
        case GroupKind::integer_matrix: {
            if (n.leaf || n.children.empty() || n.children.front().leaf)
                fail(lineno, "matrix generator must be an array of rows like [[1,1],[0,1]]");
            if (n.children.size() != static_cast<std::size_t>(desc.dim))
                fail(lineno, "matrix generator has " + std::to_string(n.children.size()) +
                                 " rows, expected dim " + std::to_string(desc.dim));
            std::vector<Int> v;
            for (const auto& row : n.children) {
                std::vector<Int> r = flat_vector(row, lineno, "a matrix row");
                if (r.size() != static_cast<std::size_t>(desc.dim))
                    fail(lineno, "matrix row has " + std::to_string(r.size()) +
                                     " entries, expected dim " + std::to_string(desc.dim));
                for (auto& x : r) v.push_back(std::move(x));
            }
            return v;
        }
        case GroupKind::cyclic: {
            if (n.leaf) return {*n.leaf};
            std::vector<Int> v = flat_vector(n, lineno, "a residue generator");
            if (v.size() != 1) fail(lineno, "residue generator must be a single integer");
            return v;
        }
    }
    fail(lineno, "unreachable generator kind");
}

GroupDescriptor parse_group_line(const std::vector<std::string>& tok, int lineno) {
    if (tok.size() < 2) fail(lineno, "group line needs a kind");
    const std::string& kind = tok[1];
    auto want_int = [&](std::size_t i, const char* what) -> Int {
        if (i >= tok.size()) fail(lineno, std::string("missing value for ") + what);
        try {
            return Int(tok[i]);
        } catch (...) {
            fail(lineno, std::string("malformed integer for ") + what + ": '" + tok[i] + "'");
        }
    };
    if (kind == "free_abelian") {
        if (tok.size() != 4 || tok[2] != "rank")
            fail(lineno, "expected: group free_abelian rank N");
        Int r = want_int(3, "rank");
        if (r < 1 || r > 64) fail(lineno, "rank must be in [1, 64]");
        return GroupDescriptor::free_abelian(r.convert_to<int>());
    }
    if (kind == "integer_matrix") {
        if ((tok.size() != 4 && tok.size() != 6) || tok[2] != "dim")
            fail(lineno, "expected: group integer_matrix dim N [det D]");
        Int d = want_int(3, "dim");
        if (d < 1 || d > 16) fail(lineno, "dim must be in [1, 16]");
        std::optional<int> det;
        if (tok.size() == 6) {
            if (tok[4] != "det") fail(lineno, "expected 'det' after dim");
            Int dv = want_int(5, "det");
            if (dv != 1 && dv != -1) fail(lineno, "det constraint must be +1 or -1");
            det = dv.convert_to<int>();
        }
        return GroupDescriptor::integer_matrix(d.convert_to<int>(), det);
    }
    if (kind == "cyclic") {
        if (tok.size() != 4 || tok[2] != "modulus")
            fail(lineno, "expected: group cyclic modulus M");
        Int m = want_int(3, "modulus");
        if (m < 2) fail(lineno, "modulus must be >= 2");
        return GroupDescriptor::cyclic(m);
    }
    fail(lineno, "unknown group kind '" + kind + "' (free_abelian | integer_matrix | cyclic)");
}

}  // namespace

InputSpec parse_input(const std::string& text) {
    std::optional<std::string> mode;
    std::optional<GroupDescriptor> desc;
    std::vector<std::pair<std::string, int>> generator_exprs;  // text, line
    bool symmetrize = false;
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> edges;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;

        std::vector<std::string> tok = tokenize(line, lineno);
        if (tok.empty()) continue;
        const std::string& key = tok[0];

        if (key == "mode") {
            if (tok.size() != 2 || (tok[1] != "group" && tok[1] != "graph"))
                fail(lineno, "expected: mode group|graph");
            if (mode) fail(lineno, "duplicate mode line");
            mode = tok[1];
        } else if (key == "group") {
            if (desc) fail(lineno, "duplicate group line");
            desc = parse_group_line(tok, lineno);
        } else if (key == "policy") {
            if (tok.size() != 2 || (tok[1] != "strict" && tok[1] != "symmetrize"))
                fail(lineno, "expected: policy strict|symmetrize");
            symmetrize = tok[1] == "symmetrize";
        } else if (key == "generator") {
            std::size_t at = line.find("generator");
            generator_exprs.emplace_back(line.substr(at + 9), lineno);
        } else if (key == "vertex") {
            if (tok.size() != 2) fail(lineno, "expected: vertex LABEL");
            labels.push_back(tok[1]);
        } else if (key == "edge") {
            if (tok.size() != 3) fail(lineno, "expected: edge LABEL LABEL");
            edges.emplace_back(tok[1], tok[2]);
        } else {
            fail(lineno, "unknown key '" + key + "'");
        }
    }

    if (!mode) throw input_error("missing 'mode group' or 'mode graph' line");

    if (*mode == "group") {
        if (!labels.empty() || !edges.empty())
            throw input_error("vertex/edge lines are only valid in graph mode");
        if (!desc) throw input_error("group mode needs a 'group' line");
        if (generator_exprs.empty()) throw input_error("group mode needs at least one generator");
        GroupInput gi;
        gi.desc = *desc;
        gi.symmetrize = symmetrize;
        for (const auto& [expr, line] : generator_exprs) {
            std::vector<Int> payload = generator_payload(*desc, expr, line);
            try {
                gi.generators.push_back(make_element(*desc, std::move(payload)));
            } catch (const input_error& e) {
                fail(line, e.what());
            }
        }
        return InputSpec{std::move(gi)};
    }

    if (desc || !generator_exprs.empty())
        throw input_error("group/generator lines are only valid in group mode");
    if (labels.empty()) throw input_error("graph mode needs at least one vertex");
    GraphInput gr;
    gr.labels = std::move(labels);
    gr.edges = std::move(edges);
    return InputSpec{std::move(gr)};
}

}  // namespace zuk
