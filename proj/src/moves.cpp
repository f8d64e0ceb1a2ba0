#include "dmlat/moves.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dmlat {

namespace {

cplx eip(double a) { return std::polar(1.0, a); }

// The displayed bracket matrix of R2 for angle pair (theta, phi).
Mat3 r2_bracket(double th, double ph) {
  const double s = std::sin(th + ph);
  const double m = std::sin(ph) + std::sin(th - ph);
  Mat3 b;
  b << -std::sin(th) * eip(-ph), -m, m,
       -std::sin(ph), -std::sin(ph) * eip(-th), std::sin(ph),
       -s, -s, std::sin(ph) + std::sin(th) * eip(ph);
  return b;
}

Isometry holo(const Mat3& m) { return Isometry{m, false}; }

}  // namespace

cplx GeneratorSet::prefactor() const {
  return 1.0 / ((1.0 - eip(-theta)) * std::sin(phi));
}

GeneratorSet build_generators(const LatticeParams& lp) {
  GeneratorSet g;
  g.params = lp;
  g.theta = lp.theta();
  g.phi = lp.phi();
  g.s = std::sin(g.theta + g.phi);
  g.m = std::sin(g.phi) + std::sin(g.theta - g.phi);
  g.h = hermitian_form(g.theta, g.phi);

  const cplx c = g.prefactor();
  g.r1 = holo(Vec3(1.0, eip(g.theta), 1.0).asDiagonal());
  g.a1 = holo(Vec3(eip(2.0 * g.phi), 1.0, 1.0).asDiagonal());
  g.r2 = holo(c * r2_bracket(g.theta, g.phi));
  g.p = g.r1 * g.r2;
  g.j = g.p * g.a1;
  g.iota = Isometry{(g.p * g.r1).m, true};

  if (lp.symmetric) {
    SymmetricFrame f;
    f.same_frame = !lp.symmetric_via_l;
    // theta' = phi' = 2*pi/p in both conventions (k' = p/2 => phi' = 2*pi/p).
    f.theta = 2.0 * std::numbers::pi / lp.p.to_double();
    f.h = hermitian_form(f.theta, f.theta);
    const cplx cs = 1.0 / ((1.0 - eip(-f.theta)) * std::sin(f.theta));
    f.r1 = holo(Vec3(1.0, eip(f.theta), 1.0).asDiagonal());
    f.s1 = holo(Vec3(eip(f.theta), 1.0, 1.0).asDiagonal());
    f.a1 = f.s1 * f.s1;
    f.r2 = holo(cs * r2_bracket(f.theta, f.theta));
    f.p = f.r1 * f.r2;
    f.j = f.p * f.a1;
    f.k = f.r1 * f.r2 * f.s1;
    f.s2 = f.p * f.s1 * f.p.inverse();
    g.sym = f;
    g.has_symmetric = true;
  }
  return g;
}

Vec3 to_w_matrix(const GeneratorSet& g, const Vec3& z) {
  const Vec3 iz = affine(g.iota(z));
  return Vec3(std::conj(iz(0)), std::conj(iz(1)) * eip(g.theta), 1.0);
}

Vec3 to_w_formula(const GeneratorSet& g, const Vec3& zv) {
  const Vec3 z = affine(zv);
  const double sth = std::sin(g.theta), sph = std::sin(g.phi);
  const cplx dz = -g.s * z(0) - g.s * eip(-g.theta) * z(1) + sph + sth * eip(-g.phi);
  if (std::abs(dz) < 1e-14) throw std::domain_error("to_w_formula: vanishing denominator");
  const cplx w1 = (-sth * eip(g.phi) * z(0) - g.m * eip(-g.theta) * z(1) + g.m) / dz;
  const cplx w2 = (-sph * z(0) - sph * z(1) + sph) / dz;
  return Vec3(w1, w2, 1.0);
}

Vec3 to_z_formula(const GeneratorSet& g, const Vec3& wv) {
  const Vec3 w = affine(wv);
  const double sth = std::sin(g.theta), sph = std::sin(g.phi);
  const cplx dw = -g.s * w(0) - g.s * w(1) + sph + sth * eip(g.phi);
  if (std::abs(dw) < 1e-14) throw std::domain_error("to_z_formula: vanishing denominator");
  const cplx z1 = (-sth * eip(-g.phi) * w(0) - g.m * w(1) + g.m) / dw;
  const cplx z2 = (-sph * eip(g.theta) * w(0) - sph * w(1) + sph * eip(g.theta)) / dw;
  return Vec3(z1, z2, 1.0);
}

Vec3 to_w(const GeneratorSet& g, const Vec3& z) { return to_w_matrix(g, z); }

Vec3 apply_iota(const GeneratorSet& g, const Vec3& z) { return affine(g.iota(z)); }

bool RelationReport::all_pass() const {
  for (const auto& c : checks)
    if (c.applicable && !c.informational && !c.pass) return false;
  return true;
}

namespace {

void add_proj_identity(RelationReport& rep, const std::string& name, const Isometry& g,
                       double tol, bool applicable = true, bool info = false) {
  RelationCheck c;
  c.name = name;
  c.applicable = applicable;
  c.informational = info;
  if (applicable) {
    c.residual = g.antiholomorphic ? 1.0 : proj_identity_defect(g.m);
    c.pass = c.residual <= tol;
  }
  rep.checks.push_back(c);
}

void add_order(RelationReport& rep, const std::string& name, const Isometry& g,
               const ExtRational& expected, double tol) {
  RelationCheck c;
  c.name = name;
  c.applicable = !expected.is_infinite() && expected > ExtRational(0) && expected.is_integer();
  if (c.applicable) {
    const auto n = proj_order(g, 210, tol);
    c.pass = n.has_value() && *n == expected.num();
    c.residual = c.pass ? 0.0 : 1.0;
  }
  rep.checks.push_back(c);
}

}  // namespace

RelationReport verify_relations(const GeneratorSet& g, double tol) {
  RelationReport rep;
  const LatticeParams& lp = g.params;

  add_order(rep, "J^3 = I", g.j, ExtRational(3), tol);
  add_order(rep, "R1^p = I", g.r1, lp.p, tol);
  add_order(rep, "R2^p = I", g.r2, lp.p, tol);
  add_order(rep, "(P^-1 J)^k = I", g.p.inverse() * g.j, lp.k, tol);
  add_order(rep, "P^(3d) = I", g.p, lp.d * ExtRational(3), tol);
  add_order(rep, "(R2 R1 J)^l = I", g.r2 * g.r1 * g.j, lp.l, tol);

  add_proj_identity(rep, "R2 = P R1 P^-1",
                    g.p * g.r1 * g.p.inverse() * g.r2.inverse(), tol);
  add_proj_identity(rep, "R2 = J R1 J^-1",
                    g.j * g.r1 * g.j.inverse() * g.r2.inverse(), tol);
  add_proj_identity(rep, "P = R1 R2", g.r1 * g.r2 * g.p.inverse(), tol);

  add_proj_identity(rep, "iota^2 = I", g.iota * g.iota, tol);
  add_proj_identity(rep, "J iota = iota J^-1",
                    g.j * g.iota * (g.iota * g.j.inverse()).inverse(), tol);
  add_proj_identity(rep, "P iota = iota P^-1",
                    g.p * g.iota * (g.iota * g.p.inverse()).inverse(), tol);
  add_proj_identity(rep, "R1 iota = iota R2^-1",
                    g.r1 * g.iota * (g.iota * g.r2.inverse()).inverse(), tol);
  add_proj_identity(rep, "R2 iota = iota R1^-1",
                    g.r2 * g.iota * (g.iota * g.r1.inverse()).inverse(), tol);

  if (g.has_symmetric) {
    const SymmetricFrame& f = g.sym;
    add_proj_identity(rep, "sym: S1^2 = A1", f.s1 * f.s1 * f.a1.inverse(), tol);
    add_proj_identity(rep, "sym: S1 R1 = R1 S1",
                      f.s1 * f.r1 * (f.r1 * f.s1).inverse(), tol);
    add_proj_identity(rep, "sym: S1 R2 S1 = R2 S1 R2",
                      f.s1 * f.r2 * f.s1 * (f.r2 * f.s1 * f.r2).inverse(), tol);
    add_proj_identity(rep, "sym: R2 = K R1 K^-1",
                      f.k * f.r1 * f.k.inverse() * f.r2.inverse(), tol);
    add_proj_identity(rep, "sym: S1 = K^2 R1 K^-2",
                      f.k.pow(2) * f.r1 * f.k.pow(-2) * f.s1.inverse(), tol);
    add_proj_identity(rep, "sym: S2 = K^3 R1 K^-3",
                      f.k.pow(3) * f.r1 * f.k.pow(-3) * f.s2.inverse(), tol);
    add_proj_identity(rep, "sym: R1 = K^4 R1 K^-4",
                      f.k.pow(4) * f.r1 * f.k.pow(-4) * f.r1.inverse(), tol);
    add_order(rep, "sym: S1^p = I", f.s1, lp.p, tol);
    add_order(rep, "sym: K^4 = I (projectively)", f.k, ExtRational(4), tol);
  }
  return rep;
}

}  // namespace dmlat
