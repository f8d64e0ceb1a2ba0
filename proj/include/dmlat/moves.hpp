#pragma once

// Generators of the lattice in matrix form, the z <-> w coordinate change,
// the antiholomorphic symmetry iota, the extra symmetric-case maps, and the
// numerical verification of the group relations.

#include "dmlat/cxgeom.hpp"
#include "dmlat/params.hpp"

#include <string>
#include <vector>

namespace dmlat {

// Generators for the extra three-fold symmetry, built in a frame where
// theta' = phi' (own Hermitian form). For rows symmetric via k = p/2 this is
// the main frame; for rows symmetric via l = p/2 it is the swapped pair
// (p, p/2).
struct SymmetricFrame {
  double theta = 0.0;  // = phi
  HForm h;
  Isometry r1, r2, s1, s2, a1, p, j, k;  // K = R1 R2 S1
  bool same_frame = false;               // frame coincides with the main one
};

struct GeneratorSet {
  LatticeParams params;
  HForm h;
  double theta = 0.0, phi = 0.0;
  double s = 0.0, m = 0.0;  // sin(theta+phi), sin(phi)+sin(theta-phi)

  // All matrices carry the scalar prefactor 1/((1 - e^{-i theta}) sin(phi))
  // where the paper displays one, so each is exactly H-unitary.
  Isometry r1, r2, a1, p, j;  // P = R1 R2, J = P A1
  Isometry iota;              // antiholomorphic, iota(z) = P R1 conj(z)

  // Scalar c = 1/((1 - e^{-i theta}) sin(phi)); the stored R2, P, J matrices
  // equal c times the displayed bracket matrices.
  cplx prefactor() const;

  bool has_symmetric = false;
  SymmetricFrame sym;
};

GeneratorSet build_generators(const LatticeParams& lp);

// z -> w coordinate change. The matrix route applies R1^{-1} iota and
// affine-normalizes; the closed-form route evaluates the printed rational
// formulas. Both throw std::domain_error on a vanishing denominator.
Vec3 to_w_matrix(const GeneratorSet& g, const Vec3& z);
Vec3 to_w_formula(const GeneratorSet& g, const Vec3& z);
Vec3 to_z_formula(const GeneratorSet& g, const Vec3& w);  // inverse change
Vec3 to_w(const GeneratorSet& g, const Vec3& z);          // matrix route

// iota(z), affine-normalized: (conj(w1), conj(w2) e^{i theta}, 1).
Vec3 apply_iota(const GeneratorSet& g, const Vec3& z);

struct RelationCheck {
  std::string name;
  bool applicable = true;   // e.g. l-power relation needs positive integer l
  bool informational = false;
  bool pass = false;
  double residual = 0.0;
};

struct RelationReport {
  std::vector<RelationCheck> checks;
  bool all_pass() const;
};

// Order relations, conjugation relations R2 = P R1 P^{-1} = J R1 J^{-1},
// P = R1 R2, the iota-conjugation relations, and (when applicable) the
// symmetric-case relations.
RelationReport verify_relations(const GeneratorSet& g, double tol = 1e-9);

}  // namespace dmlat
