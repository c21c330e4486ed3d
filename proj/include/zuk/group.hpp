#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zuk/numeric.hpp"

namespace zuk {

enum class GroupKind { free_abelian, integer_matrix, cyclic };

// One of the supported concrete groups: Z^rank, dim x dim integer matrices
// (optionally constrained to a fixed determinant +1 or -1), or Z/modulus.
struct GroupDescriptor {
    GroupKind kind = GroupKind::free_abelian;
    int rank = 0;                       // free_abelian
    int dim = 0;                        // integer_matrix
    std::optional<int> det_constraint;  // integer_matrix: +1 or -1
    Int modulus = 0;                    // cyclic: >= 2

    static GroupDescriptor free_abelian(int rank);
    static GroupDescriptor integer_matrix(int dim, std::optional<int> det_constraint = {});
    static GroupDescriptor cyclic(const Int& modulus);

    bool operator==(const GroupDescriptor& o) const;
    std::string describe() const;
};

// Payload layout: integer vector of length rank | dim x dim matrix in
// row-major order | a single residue reduced into [0, modulus).
struct GroupElement {
    GroupDescriptor group;
    std::vector<Int> payload;
};

GroupElement identity(const GroupDescriptor& g);

// Validates shape and the determinant constraint; reduces residues.
GroupElement make_element(const GroupDescriptor& g, std::vector<Int> entries);

GroupElement multiply(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& a);

bool same_element(const GroupElement& a, const GroupElement& b);

// Injective per group and deterministic across runs. Encoding: payload-kind
// byte, then each entry in row-major order as little-endian sign-magnitude
// with a fixed-width length prefix. Byte-lexicographic order on keys is the
// canonical vertex order everywhere.
using CanonicalKey = std::vector<std::uint8_t>;
CanonicalKey canonical_key(const GroupElement& a);

// "(a,b,...)" | "[[a,b],[c,d]]" | "k mod m"
std::string render_element(const GroupElement& a);

enum class SetPolicy { strict, symmetrize };

// A validated generating sequence: identity-free and closed under inverses
// (strict rejects violations, symmetrize inserts the missing inverses).
// The element sequence is the graph's vertex list, sorted by canonical key.
// Listed duplicates of one group element are kept as distinct formal
// vertices (stable order, disambiguated labels); membership queries work on
// the deduplicated canonical-form index.
class GeneratingSet {
public:
    static GeneratingSet make(const GroupDescriptor& g, std::vector<GroupElement> elems,
                              SetPolicy policy);

    const GroupDescriptor& group() const { return group_; }
    std::size_t size() const { return elements_.size(); }
    const GroupElement& at(std::size_t i) const { return elements_[i]; }
    const std::vector<GroupElement>& elements() const { return elements_; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::size_t distinct_count() const { return key_index_.size(); }
    bool contains_form(const CanonicalKey& key) const;
    std::optional<std::size_t> index_of_form(const CanonicalKey& key) const;

private:
    GeneratingSet() = default;
    GroupDescriptor group_;
    std::vector<GroupElement> elements_;
    std::map<CanonicalKey, std::size_t> key_index_;  // canonical form -> first position
    std::vector<std::string> labels_;
};

}  // namespace zuk
