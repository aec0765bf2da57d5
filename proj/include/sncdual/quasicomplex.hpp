#pragma once

#include <map>
#include <string>
#include <vector>

namespace sncdual {

using VertexId = std::string;

/// A combinatorial simplex: strictly sorted vertex list plus a tag that
/// distinguishes distinct cells sharing the same vertex set.
struct Simplex {
    std::vector<VertexId> vertices;
    int tag = 0;

    int dim() const { return int(vertices.size()) - 1; }
    std::string key() const;

    bool operator==(const Simplex& o) const { return vertices == o.vertices && tag == o.tag; }
    bool operator<(const Simplex& o) const {
        if (vertices != o.vertices) return vertices < o.vertices;
        return tag < o.tag;
    }
};

Simplex make_simplex(std::vector<VertexId> vertices, int tag = 0);

struct Violation {
    std::string code;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

/// Raw cell description used to build a complex; `faces` lists the
/// codimension-one faces in deletion order (k-th face omits the k-th vertex).
struct CellSpec {
    Simplex simplex;
    std::vector<Simplex> faces;
};

/// A finite collection of simplices closed under faces, in which two cells may
/// meet in a union of common faces. Cells are stored in canonical order
/// (lexicographic by vertex list, then tag) and the face relation is explicit,
/// since distinct cells may share a vertex set.
class QuasiComplex {
public:
    QuasiComplex() = default;

    /// Builds from raw cells without rejecting invalid data; use
    /// validate_complex to obtain the violation list.
    static QuasiComplex build(std::vector<CellSpec> cells);

    /// Simplicial complex generated by the given vertex sets (closed downward,
    /// all tags zero).
    static QuasiComplex simplicial(const std::vector<std::vector<VertexId>>& generators);

    int size() const { return int(cells_.size()); }
    bool empty() const { return cells_.empty(); }
    int dim() const;
    const Simplex& simplex(int i) const { return cells_[i]; }
    const std::vector<int>& face_indices(int i) const { return face_idx_[i]; }
    const std::vector<Simplex>& face_specs(int i) const { return face_specs_[i]; }
    int find(const Simplex& s) const;
    bool contains(const Simplex& s) const { return find(s) >= 0; }
    std::vector<VertexId> vertex_ids() const;
    int count_dim(int p) const;

    /// All tags zero and no two cells share a vertex set, so the face relation
    /// is determined by vertex subsets.
    bool is_simplicial() const;

    /// Reflexive iterated-face relation: true when cells_[a] is a face of cells_[b].
    bool is_face_of(int a, int b) const;

    bool operator==(const QuasiComplex& o) const;

private:
    std::vector<Simplex> cells_;
    std::vector<std::vector<Simplex>> face_specs_;
    std::vector<std::vector<int>> face_idx_;   // -1 where a face spec is unresolved
    std::map<Simplex, int> index_;
    // reach_[b] holds the iterated faces of cell b (including b)
    mutable std::vector<std::vector<bool>> reach_;

    void finalize();
    void ensure_reach() const;
    friend QuasiComplex subcomplex(const QuasiComplex&, const std::vector<int>&);
};

ValidationReport validate_complex(const QuasiComplex& k);
void require_valid(const QuasiComplex& k);

/// All cells having sigma as an iterated face, including sigma itself.
std::vector<Simplex> star(const QuasiComplex& k, const Simplex& sigma);

/// closure(star(sigma)) minus star(sigma), as a sub-quasicomplex.
QuasiComplex link(const QuasiComplex& k, const Simplex& sigma);

/// Sub-quasicomplex on the given cell indices (must be face-closed).
QuasiComplex subcomplex(const QuasiComplex& k, const std::vector<int>& keep);

/// Replaces the star of sigma by the cone, from a fresh vertex, over the part
/// of its closed star that does not contain sigma. Cone cells are created with
/// multiplicity: one per connected component of the cells lying above both
/// sigma and the base cell, which is what keeps the realization unchanged on
/// quasicomplexes with multiple cells per vertex set.
QuasiComplex stellar_subdivide(const QuasiComplex& k, const Simplex& sigma);

/// Deterministic name of the vertex stellar_subdivide would introduce.
VertexId fresh_vertex_id(const QuasiComplex& k, const Simplex& sigma);

/// Join v * s: s itself, the vertex v and one cone cell per cell of s.
QuasiComplex join_cone(const VertexId& v, const QuasiComplex& s);

/// Alternating sum of cell counts per dimension.
long euler_characteristic(const QuasiComplex& k);

/// Test helpers with library-level invariants of their own.
QuasiComplex disjoint_union(const QuasiComplex& a, const QuasiComplex& b);
QuasiComplex relabel(const QuasiComplex& k, const std::map<VertexId, VertexId>& mapping);

/// Canonical JSON serialization; parse(serialize(k)) == k for valid complexes.
std::string complex_to_json(const QuasiComplex& k, bool pretty = false);
QuasiComplex complex_from_json(const std::string& text);

} // namespace sncdual
