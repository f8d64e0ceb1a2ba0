#pragma once

// Complex hyperbolic plane primitives: the Hermitian form of signature (1,2)
// attached to a parameter pair, inner products, the distance functional, and
// holomorphic / antiholomorphic isometries in matrix form.

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <optional>

namespace dmlat {

using cplx = std::complex<double>;
using Vec3 = Eigen::Vector3cd;
using Mat3 = Eigen::Matrix3cd;

// Diagonal Hermitian form of signature (+,-,-) (positive cone = H^2_C),
// built from the angle pair theta = 2*pi/p, phi = pi/k.
struct HForm {
  Mat3 h = Mat3::Identity();
  double theta = 0.0;
  double phi = 0.0;

  // <z,w> = w^* H z (linear in the first slot, antilinear in the second).
  cplx inner(const Vec3& z, const Vec3& w) const { return w.adjoint() * (h * z); }
  double norm(const Vec3& z) const { return inner(z, z).real(); }
  bool is_positive(const Vec3& z, double tol = 0.0) const { return norm(z) > tol; }
};

// H = sin(theta) * diag(-sin(phi)/m, -1, sin(phi)/s) with
// s = sin(theta+phi), m = sin(phi) + sin(theta-phi).
HForm hermitian_form(double theta, double phi);

// cosh^2(dist/2); requires both points positive.
double cosh2_half_dist(const HForm& h, const Vec3& z, const Vec3& w);
double distance(const HForm& h, const Vec3& z, const Vec3& w);

// Projective equality via vanishing of all 2x2 minors, scale-free:
// |z_i w_j - z_j w_i| <= tol * max(|z|_inf,1) * max(|w|_inf,1).
bool proj_equal(const Vec3& z, const Vec3& w, double tol = 1e-9);

// Lift an affine point (z1, z2) of the paper's coordinates to (z1, z2, 1).
Vec3 lift(cplx z1, cplx z2);

// Affine representative: rescale so the third coordinate is 1.
// Throws std::domain_error when the third coordinate vanishes.
Vec3 affine(const Vec3& z);

// An isometry of H^2_C: a matrix together with a flag telling whether the
// argument is conjugated first (antiholomorphic maps, e.g. iota).
struct Isometry {
  Mat3 m = Mat3::Identity();
  bool antiholomorphic = false;

  Vec3 apply(const Vec3& z) const { return antiholomorphic ? Vec3(m * z.conjugate()) : Vec3(m * z); }
  Vec3 operator()(const Vec3& z) const { return apply(z); }

  // (A o B)(z) = A(B(z)).
  Isometry operator*(const Isometry& o) const;
  Isometry inverse() const;
  Isometry pow(int n) const;
};

// max |G^* H G - H| over entries; zero iff G preserves the form.
double unitarity_defect(const HForm& h, const Mat3& g);
double unitarity_defect(const HForm& h, const Isometry& g);

// Smallest n in [1, n_max] with g^n projectively the identity, or nullopt.
// Antiholomorphic inputs are squared first (their square is holomorphic) and
// the resulting order doubled, except when g itself is already projectively
// an involution.
std::optional<int> proj_order(const Isometry& g, int n_max = 200, double tol = 1e-9);

// max over entries of |M/lambda - Id| minimized over the diagonal phase,
// i.e. the defect of M being a scalar matrix times identity.
double proj_identity_defect(const Mat3& m);

}  // namespace dmlat
