#pragma once

// The fundamental polyhedron D: its 14 vertices, the 10 complex lines, the
// eight bounding bisectors with their defining inequalities, the facet
// complex (vertices / edges / ridges / sides) with its collapse-dependent
// identifications, the coordinate-bound lemmas, the xi coordinates, and the
// Giraud ridge test.

#include "dmlat/moves.hpp"

#include <array>
#include <string>
#include <vector>

namespace dmlat {

struct VertexEntry {
  int index = 0;      // 1..14
  Vec3 z;             // affine lift (z1, z2, 1)
  Vec3 w;             // affine lift (w1, w2, 1)
};

// The 14 vertices in the paper's indexing (entry i-1 has index i).
std::array<VertexEntry, 14> vertex_table(const GeneratorSet& g);

// iota's action on vertex indices: 1<->2, 3<->4, 5, 6<->10, 7<->11, 8<->9,
// 12<->14, 13.
int iota_vertex_image(int index);

struct ComplexLine {
  std::string label;                    // "L*0", ..., "L13"
  Vec3 polar;                           // polar vector (z-side), affine when possible
  std::array<int, 4> vertices{};        // indices on the line, 0-padded
  int n_vertices = 0;
  // Residual of the line's affine equation at an affine point, z- and w-side.
  cplx z_residual(const GeneratorSet& g, cplx z1, cplx z2) const;
  cplx w_residual(const GeneratorSet& g, cplx w1, cplx w2) const;
  int eq_id = 0;  // internal dispatch tag
};

std::array<ComplexLine, 10> line_table(const GeneratorSet& g);

// The eight bisectors bounding D, indexed 0..7 in the order
// B(P), B(P^-1), B(J), B(J^-1), B(R1), B(R1^-1), B(R2), B(R2^-1).
struct Bisector {
  std::string label;
  std::string condition;            // e.g. "Im z1 = 0"
  std::vector<int> vertices;        // paper's incidence list (generic case)
  // Signed coordinate functional: D is { side_value > 0 } for every bisector.
  double side_value(const GeneratorSet& g, const Vec3& z) const;
  int id = 0;
};

const std::array<Bisector, 8>& bisector_table();

enum class Membership { Interior, Boundary, Exterior };

struct MembershipResult {
  Membership status = Membership::Exterior;
  std::vector<std::string> active;  // bisectors met within tolerance
};

// Classify a point of H^2_C against the eight defining inequalities.
MembershipResult membership(const GeneratorSet& g, const Vec3& z, double tol = 1e-9);

// The coordinate half-space condition is equivalent to the metric condition
// |<z, n_+>| < |<z, n_->| for the bisector's two transported polar vectors
// (representatives normalized to third coordinate 1). Returns true when the
// two sides agree at z (both conditions give the same strict answer).
bool side_inequality_check(const GeneratorSet& g, int bisector_id, const Vec3& z);

// Coordinate bounds on D: |z1|^2, |w1|^2 <= m/s and |z2|^2, |w2|^2 <= sin(phi)/s;
// additionally |z1|, |w1| < 1 when p > 6 and |z2|, |w2| <= 1 when l >= 0.
bool lemma_bounds_check(const GeneratorSet& g, const Vec3& z, double tol = 1e-9);

// xi coordinates: xi1 = (sin(phi) - s z2) / (1 - z2), xi2 = z1 (s - sin(phi)) / (1 - z2).
std::pair<cplx, cplx> xi_coords(const GeneratorSet& g, const Vec3& z);

struct Ridge {
  std::string label;           // e.g. "F(P,R2)"
  char type = 'S';             // 'S' complex line, 'M' bisector-contained, 'G' Giraud
  int b1 = 0, b2 = 0;          // the two bisector ids whose closure meets here
  std::vector<int> vertices;   // generic-case vertex indices
};

struct EdgeEntry {
  int va = 0, vb = 0;                 // endpoint vertex indices (generic labels)
  std::vector<std::string> ridges;    // incident ridge labels
};

struct FacetComplex {
  CollapseCase collapse;
  std::vector<int> vertices;              // surviving representative indices
  std::vector<std::array<int, 2>> merged; // identification pairs (index -> representative)
  std::vector<EdgeEntry> edges;
  std::vector<Ridge> ridges;
  std::array<std::string, 8> sides;       // bisector labels
  int n_vertices() const { return static_cast<int>(vertices.size()); }
  int n_edges() const { return static_cast<int>(edges.size()); }
  int n_ridges() const { return static_cast<int>(ridges.size()); }
};

// Generic tables (before collapse).
const std::vector<Ridge>& ridge_table();
const std::vector<EdgeEntry>& edge_table();

// The collapse-adjusted complex: merged vertices relabelled to the smallest
// index of their class, degenerate edges and ridges removed.
FacetComplex facet_complex(const LatticeParams& lp);

// For a Giraud ridge: checks that the two bisector equalities hold at all of
// the ridge's vertices, and that the four transported polar vectors span
// exactly three points of the projective plane (the Giraud triple).
bool giraud_check(const GeneratorSet& g, const std::string& ridge_label, double tol = 1e-8);

// A random interior point of D, found by rejection sampling (deterministic in
// the seed). Throws std::runtime_error if none is found.
Vec3 interior_witness(const GeneratorSet& g, std::uint64_t seed = 0);

}  // namespace dmlat
