#pragma once

#include <string>
#include <vector>

namespace dwred {

struct ValidationReport {
    bool ok = true;
    std::string message;
};

/// Closed oriented combinatorial manifold in Delta-complex form: simplices
/// with ordered vertices, each k-simplex (k >= 1) recording its k+1 faces as
/// (k-1)-simplex ids (face i deletes vertex i), plus a sign for every top
/// simplex making the fundamental chain a signed cycle. Ordered-vertex
/// simplices (rather than simplicial complexes) admit one-vertex surfaces,
/// which keeps coloring spaces tiny.
///
/// Immutable after construction; safe to share across threads.
class DeltaComplex {
  public:
    DeltaComplex(std::string name, int dimension, int vertex_count,
                 std::vector<std::vector<std::vector<int>>> faces_by_level,
                 std::vector<int> top_signs);

    const std::string& name() const { return name_; }
    int dimension() const { return dimension_; }
    int vertex_count() const { return vertex_count_; }

    int simplex_count(int level) const;
    /// Face ids of a k-simplex, k >= 1; entry i is the face deleting vertex i.
    const std::vector<int>& faces(int level, int id) const;
    int top_count() const { return simplex_count(dimension_); }
    int sign(int top_id) const { return signs_[top_id]; }

    int edge_count() const { return simplex_count(1); }
    int edge_source(int e) const { return faces(1, e)[1]; }
    int edge_target(int e) const { return faces(1, e)[0]; }

    /// The n "consecutive" edges (i-1, i), i = 1..n, of a top simplex,
    /// extracted through iterated face maps. These are the edges a cocycle
    /// evaluation reads.
    const std::vector<int>& consecutive_edges(int top_id) const {
        return top_edges_[top_id];
    }

    /// Checks simplicial identities, closedness and the fundamental cycle;
    /// reports the first violation with simplex ids.
    ValidationReport validate() const;

    /// Connected components (by shared faces), each a standalone complex.
    std::vector<DeltaComplex> components() const;

    /// The edge (a, b), a < b, of a simplex, by iterated face maps.
    int subedge(int level, int id, int a, int b) const;

  private:
    std::string name_;
    int dimension_;
    int vertex_count_;
    std::vector<std::vector<std::vector<int>>> faces_; // faces_[k], k >= 1
    std::vector<int> signs_;
    std::vector<std::vector<int>> top_edges_;
};

/// m vertices and m edges in a cycle; all signs +1.
DeltaComplex circle(int m);

/// Boundary of the 3-simplex with alternating signs: 4 vertices, 6 edges,
/// 4 triangles.
DeltaComplex sphere2();

/// One-vertex genus-h surface: the 4h-gon with identification word
/// prod [a_i, b_i], fan-triangulated into 4h-2 triangles.
DeltaComplex surface(int h);

/// p*q-vertex grid torus with 2pq triangles.
DeltaComplex torus_grid(int p, int q);

/// x times the circle, triangulated by staircase prisms: each n-simplex
/// yields n+1 staircase top simplices per circle level, the j-th carrying
/// sign eps * (-1)^j. `levels` is the number of edges the circle factor is
/// subdivided into; vertex count is levels * V(x). Rejects non-closed input.
DeltaComplex product_with_circle(const DeltaComplex& x, int levels = 1);

DeltaComplex disjoint_union_complex(const DeltaComplex& a, const DeltaComplex& b);

/// Complex with no simplices at all (the monoidal unit of disjoint union).
DeltaComplex empty_complex(int dimension);

} // namespace dwred
