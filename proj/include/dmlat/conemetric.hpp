#pragma once

// The flattened cone-metric picture: the planar octagon attached to a
// configuration vector (z1, z2, z3), its signed area, the identity relating
// that area to the Hermitian norm, and the vertex equations satisfied when a
// generator acts on the configuration.

#include "dmlat/moves.hpp"

#include <array>
#include <string>
#include <vector>

namespace dmlat {

// Vertices in boundary order v0, v1, v2, v3, v*, v-3, v-2, v-1.
struct Octagon {
  std::array<cplx, 8> v{};
  static constexpr const char* kNames[8] = {"v0", "v1", "v2", "v3", "v*", "v-3", "v-2", "v-1"};
};

// Octagon for angle pair (theta, phi); z is a full configuration vector,
// not an affine point (no normalization is applied).
Octagon build_octagon(double theta, double phi, const Vec3& z);
Octagon build_octagon(const GeneratorSet& g, const Vec3& z);

// Shoelace: (1/2) sum Im(conj(v_i) v_{i+1}) over the cyclic boundary.
double signed_area(const Octagon& o);

// |signed_area(octagon(z)) - <z,z>_H|: zero identically.
double area_form_defect(double theta, double phi, const Vec3& z);

enum class Move { R1, R2, S1 };

// Residuals of the vertex equations tying octagon(M z) to octagon(z):
//   R1 fixes v0, v1 and sends v2 -> v3', v-3 -> v-2';
//   R2 fixes v0, v3 and sends v1 -> v2', v-2 -> v-1';
//   S1 (theta = phi only) fixes v2, v3 and sends v0 -> v1', v-1 -> v0'.
// For S1 the symmetric frame's angles and matrix are used; requesting it on a
// row without theta = phi in the main frame throws std::invalid_argument.
std::vector<std::pair<std::string, double>> move_vertex_equations(const GeneratorSet& g,
                                                                  Move mv, const Vec3& z);

}  // namespace dmlat
