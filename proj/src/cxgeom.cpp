#include "dmlat/cxgeom.hpp"

#include <cmath>
#include <stdexcept>

namespace dmlat {

HForm hermitian_form(double theta, double phi) {
  const double s = std::sin(theta + phi);
  const double m = std::sin(phi) + std::sin(theta - phi);
  HForm f;
  f.theta = theta;
  f.phi = phi;
  f.h = Mat3::Zero();
  f.h(0, 0) = std::sin(theta) * (-std::sin(phi) / m);
  f.h(1, 1) = -std::sin(theta);
  f.h(2, 2) = std::sin(theta) * (std::sin(phi) / s);
  return f;
}

double cosh2_half_dist(const HForm& h, const Vec3& z, const Vec3& w) {
  const cplx zw = h.inner(z, w);
  const cplx wz = h.inner(w, z);
  const double zz = h.norm(z);
  const double ww = h.norm(w);
  if (zz <= 0.0 || ww <= 0.0) throw std::domain_error("cosh2_half_dist: point outside H^2_C");
  return (zw * wz).real() / (zz * ww);
}

double distance(const HForm& h, const Vec3& z, const Vec3& w) {
  const double c2 = cosh2_half_dist(h, z, w);
  return 2.0 * std::acosh(std::sqrt(std::max(c2, 1.0)));
}

bool proj_equal(const Vec3& z, const Vec3& w, double tol) {
  const double scale = std::max(z.cwiseAbs().maxCoeff(), 1.0) * std::max(w.cwiseAbs().maxCoeff(), 1.0);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (std::abs(z(i) * w(j) - z(j) * w(i)) > tol * scale) return false;
  return true;
}

Vec3 lift(cplx z1, cplx z2) { return Vec3(z1, z2, cplx(1.0)); }

Vec3 affine(const Vec3& z) {
  if (std::abs(z(2)) < 1e-14 * z.cwiseAbs().maxCoeff())
    throw std::domain_error("affine: third coordinate vanishes");
  return z / z(2);
}

Isometry Isometry::operator*(const Isometry& o) const {
  Isometry r;
  r.m = antiholomorphic ? Mat3(m * o.m.conjugate()) : Mat3(m * o.m);
  r.antiholomorphic = antiholomorphic != o.antiholomorphic;
  return r;
}

Isometry Isometry::inverse() const {
  Isometry r;
  if (antiholomorphic) {
    // (M conj)^-1 = conj(M^-1) conj
    r.m = m.inverse().conjugate();
    r.antiholomorphic = true;
  } else {
    r.m = m.inverse();
  }
  return r;
}

Isometry Isometry::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  Isometry r;
  for (int i = 0; i < n; ++i) r = r * *this;
  return r;
}

double unitarity_defect(const HForm& h, const Mat3& g) {
  return (g.adjoint() * h.h * g - h.h).cwiseAbs().maxCoeff();
}

double unitarity_defect(const HForm& h, const Isometry& g) {
  // An antiholomorphic z -> M conj(z) preserves the form iff M^* H M = conj(H);
  // H here is real diagonal, so the same defect applies.
  return unitarity_defect(h, g.m);
}

double proj_identity_defect(const Mat3& m) {
  // Pick the largest diagonal entry as the scalar candidate.
  int best = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(m(i, i)) > std::abs(m(best, best))) best = i;
  const cplx lambda = m(best, best);
  if (std::abs(lambda) < 1e-300) return 1.0;
  return (m / lambda - Mat3::Identity()).cwiseAbs().maxCoeff();
}

std::optional<int> proj_order(const Isometry& g, int n_max, double tol) {
  Isometry base = g;
  int factor = 1;
  if (g.antiholomorphic) {
    if (proj_identity_defect((g * g).m) <= tol) return 2;
    base = g * g;
    factor = 2;
  }
  Mat3 acc = Mat3::Identity();
  for (int n = 1; n <= n_max; ++n) {
    acc = acc * base.m;
    if (proj_identity_defect(acc) <= tol) return factor * n;
  }
  return std::nullopt;
}

}  // namespace dmlat
