#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "zuk/group.hpp"

namespace zuk {

struct GroupInput {
    GroupDescriptor desc;
    std::vector<GroupElement> generators;
    bool symmetrize = false;  // "policy symmetrize" in the document
};

struct GraphInput {
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> edges;
};

struct InputSpec {
    std::variant<GroupInput, GraphInput> payload;

    bool is_group() const { return std::holds_alternative<GroupInput>(payload); }
    const GroupInput& group() const { return std::get<GroupInput>(payload); }
    const GraphInput& graph() const { return std::get<GraphInput>(payload); }
};

// Parses the line-oriented input document:
//
//   # comment
//   mode group|graph
//   group free_abelian rank N | integer_matrix dim N [det D] | cyclic modulus M
//   policy strict|symmetrize            (group mode, optional)
//   generator [1]                        (vector; matrices as [[a,b],[c,d]];
//   generator 3                          residues as plain integers)
//   vertex LABEL                         (graph mode; quote labels with spaces)
//   edge LABEL LABEL
//
// All integers are parsed with arbitrary precision. Errors carry the line.
InputSpec parse_input(const std::string& text);

}  // namespace zuk
