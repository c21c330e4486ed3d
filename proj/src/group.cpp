#include "zuk/group.hpp"

#include <algorithm>
#include <iterator>
#include <set>

#include "zuk/bareiss.hpp"
#include "zuk/errors.hpp"

namespace zuk {

GroupDescriptor GroupDescriptor::free_abelian(int rank) {
    if (rank < 1) throw input_error("free_abelian rank must be >= 1");
    GroupDescriptor d;
    d.kind = GroupKind::free_abelian;
    d.rank = rank;
    return d;
}

GroupDescriptor GroupDescriptor::integer_matrix(int dim, std::optional<int> det_constraint) {
    if (dim < 1) throw input_error("integer_matrix dim must be >= 1");
    if (det_constraint && *det_constraint != 1 && *det_constraint != -1)
        throw input_error("det constraint must be +1 or -1");
    GroupDescriptor d;
    d.kind = GroupKind::integer_matrix;
    d.dim = dim;
    d.det_constraint = det_constraint;
    return d;
}

GroupDescriptor GroupDescriptor::cyclic(const Int& modulus) {
    if (modulus < 2) throw input_error("cyclic modulus must be >= 2");
    GroupDescriptor d;
    d.kind = GroupKind::cyclic;
    d.modulus = modulus;
    return d;
}

bool GroupDescriptor::operator==(const GroupDescriptor& o) const {
    return kind == o.kind && rank == o.rank && dim == o.dim &&
           det_constraint == o.det_constraint && modulus == o.modulus;
}

std::string GroupDescriptor::describe() const {
    switch (kind) {
        case GroupKind::free_abelian:
            return "free_abelian rank " + std::to_string(rank);
        case GroupKind::integer_matrix:
            return "integer_matrix dim " + std::to_string(dim) +
                   (det_constraint ? " det " + std::to_string(*det_constraint) : "");
        case GroupKind::cyclic:
            return "cyclic modulus " + modulus.str();
    }
    return "?";
}

namespace {

Int matrix_det(const std::vector<Int>& m, int dim) { return bareiss_determinant(m, dim); }

// residues reduced into [0, m)
Int mod_reduce(const Int& x, const Int& m) {
    Int r = x % m;
    if (r < 0) r += m;
    return r;
}

std::size_t expected_payload_size(const GroupDescriptor& g) {
    switch (g.kind) {
        case GroupKind::free_abelian:
            return static_cast<std::size_t>(g.rank);
        case GroupKind::integer_matrix:
            return static_cast<std::size_t>(g.dim) * g.dim;
        case GroupKind::cyclic:
            return 1;
    }
    return 0;
}

}  // namespace

GroupElement identity(const GroupDescriptor& g) {
    GroupElement e;
    e.group = g;
    switch (g.kind) {
        case GroupKind::free_abelian:
            e.payload.assign(static_cast<std::size_t>(g.rank), Int(0));
            break;
        case GroupKind::integer_matrix:
            e.payload.assign(static_cast<std::size_t>(g.dim) * g.dim, Int(0));
            for (int i = 0; i < g.dim; ++i) e.payload[static_cast<std::size_t>(i) * g.dim + i] = 1;
            break;
        case GroupKind::cyclic:
            e.payload.assign(1, Int(0));
            break;
    }
    return e;
}

GroupElement make_element(const GroupDescriptor& g, std::vector<Int> entries) {
    if (entries.size() != expected_payload_size(g))
        throw input_error("element shape mismatch: expected " +
                          std::to_string(expected_payload_size(g)) + " entries for " +
                          g.describe() + ", got " + std::to_string(entries.size()));
    GroupElement e;
    e.group = g;
    e.payload = std::move(entries);
    if (g.kind == GroupKind::cyclic) e.payload[0] = mod_reduce(e.payload[0], g.modulus);
    if (g.kind == GroupKind::integer_matrix && g.det_constraint) {
        Int d = matrix_det(e.payload, g.dim);
        if (d != *g.det_constraint)
            throw input_error("generator " + render_element(e) + " has determinant " + d.str() +
                              ", violates det constraint " + std::to_string(*g.det_constraint));
    }
    return e;
}

GroupElement multiply(const GroupElement& a, const GroupElement& b) {
    if (!(a.group == b.group)) throw input_error("cannot multiply elements of different groups");
    const GroupDescriptor& g = a.group;
    GroupElement r;
    r.group = g;
    switch (g.kind) {
        case GroupKind::free_abelian: {
            r.payload.resize(a.payload.size());
            for (std::size_t i = 0; i < a.payload.size(); ++i)
                r.payload[i] = a.payload[i] + b.payload[i];
            break;
        }
        case GroupKind::integer_matrix: {
            int n = g.dim;
            r.payload.assign(static_cast<std::size_t>(n) * n, Int(0));
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < n; ++k) {
                    const Int& aik = a.payload[static_cast<std::size_t>(i) * n + k];
                    if (aik == 0) continue;
                    for (int j = 0; j < n; ++j)
                        r.payload[static_cast<std::size_t>(i) * n + j] +=
                            aik * b.payload[static_cast<std::size_t>(k) * n + j];
                }
            break;
        }
        case GroupKind::cyclic:
            r.payload.assign(1, mod_reduce(a.payload[0] + b.payload[0], g.modulus));
            break;
    }
    return r;
}

GroupElement inverse(const GroupElement& a) {
    const GroupDescriptor& g = a.group;
    GroupElement r;
    r.group = g;
    switch (g.kind) {
        case GroupKind::free_abelian: {
            r.payload.resize(a.payload.size());
            for (std::size_t i = 0; i < a.payload.size(); ++i) r.payload[i] = -a.payload[i];
            break;
        }
        case GroupKind::integer_matrix: {
            int n = g.dim;
            Int d = matrix_det(a.payload, n);
            if (d != 1 && d != -1)
                throw input_error("matrix " + render_element(a) + " has determinant " + d.str() +
                                  "; only determinant +1/-1 matrices are invertible over Z");
            // adjugate / det
            r.payload.assign(static_cast<std::size_t>(n) * n, Int(0));
            if (n == 1) {
                r.payload[0] = d;  // a = [d], inverse = [d]
                break;
            }
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    std::vector<Int> minor;
                    minor.reserve(static_cast<std::size_t>(n - 1) * (n - 1));
                    for (int p = 0; p < n; ++p) {
                        if (p == j) continue;
                        for (int q = 0; q < n; ++q) {
                            if (q == i) continue;
                            minor.push_back(a.payload[static_cast<std::size_t>(p) * n + q]);
                        }
                    }
                    Int c = bareiss_determinant(std::move(minor), n - 1);
                    if ((i + j) % 2 != 0) c = -c;
                    r.payload[static_cast<std::size_t>(i) * n + j] = d > 0 ? c : Int(-c);
                }
            break;
        }
        case GroupKind::cyclic:
            r.payload.assign(1, mod_reduce(-a.payload[0], g.modulus));
            break;
    }
    return r;
}

bool same_element(const GroupElement& a, const GroupElement& b) {
    return a.group == b.group && a.payload == b.payload;
}

CanonicalKey canonical_key(const GroupElement& a) {
    CanonicalKey key;
    switch (a.group.kind) {
        case GroupKind::free_abelian:
            key.push_back(0x01);
            break;
        case GroupKind::integer_matrix:
            key.push_back(0x02);
            break;
        case GroupKind::cyclic:
            key.push_back(0x03);
            break;
    }
    for (const Int& v : a.payload) {
        std::vector<std::uint8_t> mag;
        if (v != 0) {
            Int magnitude = abs(v);
            export_bits(magnitude, std::back_inserter(mag), 8, false);
        }
        std::uint32_t len = static_cast<std::uint32_t>(mag.size());
        for (int b = 0; b < 4; ++b) key.push_back(static_cast<std::uint8_t>((len >> (8 * b)) & 0xff));
        key.push_back(v < 0 ? 0x01 : 0x00);
        key.insert(key.end(), mag.begin(), mag.end());
    }
    return key;
}

std::string render_element(const GroupElement& a) {
    switch (a.group.kind) {
        case GroupKind::free_abelian: {
            std::string s = "(";
            for (std::size_t i = 0; i < a.payload.size(); ++i) {
                if (i) s += ",";
                s += a.payload[i].str();
            }
            return s + ")";
        }
        case GroupKind::integer_matrix: {
            int n = a.group.dim;
            std::string s = "[";
            for (int i = 0; i < n; ++i) {
                if (i) s += ",";
                s += "[";
                for (int j = 0; j < n; ++j) {
                    if (j) s += ",";
                    s += a.payload[static_cast<std::size_t>(i) * n + j].str();
                }
                s += "]";
            }
            return s + "]";
        }
        case GroupKind::cyclic:
            return a.payload[0].str() + " mod " + a.group.modulus.str();
    }
    return "?";
}

GeneratingSet GeneratingSet::make(const GroupDescriptor& g, std::vector<GroupElement> elems,
                                  SetPolicy policy) {
    if (elems.empty()) throw input_error("generating set is empty");
    for (const auto& e : elems)
        if (!(e.group == g))
            throw input_error("generator " + render_element(e) + " does not belong to " +
                              g.describe());

    const CanonicalKey identity_key = canonical_key(identity(g));
    for (const auto& e : elems)
        if (canonical_key(e) == identity_key)
            throw input_error("identity element in generating set: " + render_element(e));

    std::set<CanonicalKey> forms;
    for (const auto& e : elems) forms.insert(canonical_key(e));

    if (policy == SetPolicy::symmetrize) {
        const std::size_t listed = elems.size();
        for (std::size_t i = 0; i < listed; ++i) {
            GroupElement inv = inverse(elems[i]);
            CanonicalKey k = canonical_key(inv);
            if (!forms.count(k)) {
                forms.insert(k);
                elems.push_back(std::move(inv));
            }
        }
    } else {
        for (const auto& e : elems)
            if (!forms.count(canonical_key(inverse(e))))
                throw input_error("generating set is not symmetric: missing inverse of " +
                                  render_element(e));
    }

    std::stable_sort(elems.begin(), elems.end(),
                     [](const GroupElement& x, const GroupElement& y) {
                         return canonical_key(x) < canonical_key(y);
                     });

    GeneratingSet s;
    s.group_ = g;
    s.elements_ = std::move(elems);
    for (std::size_t i = 0; i < s.elements_.size(); ++i) {
        CanonicalKey k = canonical_key(s.elements_[i]);
        s.key_index_.emplace(std::move(k), i);  // keeps the first position
    }
    // Disambiguate labels of formally repeated elements: "X", "X#2", ...
    std::map<std::string, int> seen;
    for (const auto& e : s.elements_) {
        std::string base = render_element(e);
        int n = ++seen[base];
        s.labels_.push_back(n == 1 ? base : base + "#" + std::to_string(n));
    }
    return s;
}

bool GeneratingSet::contains_form(const CanonicalKey& key) const {
    return key_index_.count(key) > 0;
}

std::optional<std::size_t> GeneratingSet::index_of_form(const CanonicalKey& key) const {
    auto it = key_index_.find(key);
    if (it == key_index_.end()) return std::nullopt;
    return it->second;
}

}  // namespace zuk
