#include "dmlat/conemetric.hpp"

#include <cmath>
#include <stdexcept>

namespace dmlat {

namespace {
cplx eip(double a) { return std::polar(1.0, a); }
const cplx I(0.0, 1.0);
}  // namespace

Octagon build_octagon(double th, double ph, const Vec3& z) {
  const double s = std::sin(th + ph);
  const double m = std::sin(ph) + std::sin(th - ph);
  const cplx z1 = z(0), z2 = z(1), z3 = z(2);
  const cplx o = -I * (std::sin(th) / s) * z3;
  const cplx q = I * (std::sin(ph) / s) * eip(-(th + ph)) * z3;
  const cplx qm = I * (std::sin(ph) / s) * eip(th + ph) * z3;
  const double g = std::sin(th) / m;
  Octagon oct;
  oct.v[0] = o + I * g * z1;
  oct.v[1] = o + I * eip(-ph) * z1;
  oct.v[2] = q - I * eip(-ph) * z2;
  oct.v[3] = q - I * eip(-(th + ph)) * z2;
  oct.v[4] = 0.0;
  oct.v[5] = qm - I * eip(th + ph) * z2;  // v-3
  oct.v[6] = qm - I * eip(ph) * z2;       // v-2
  oct.v[7] = o + I * eip(ph) * z1;        // v-1
  return oct;
}

Octagon build_octagon(const GeneratorSet& g, const Vec3& z) {
  return build_octagon(g.theta, g.phi, z);
}

double signed_area(const Octagon& o) {
  double a = 0.0;
  for (int i = 0; i < 8; ++i) a += (std::conj(o.v[i]) * o.v[(i + 1) % 8]).imag();
  return 0.5 * a;
}

double area_form_defect(double theta, double phi, const Vec3& z) {
  const HForm h = hermitian_form(theta, phi);
  return std::abs(signed_area(build_octagon(theta, phi, z)) - h.norm(z));
}

std::vector<std::pair<std::string, double>> move_vertex_equations(const GeneratorSet& g,
                                                                  Move mv, const Vec3& z) {
  double th = g.theta, ph = g.phi;
  Mat3 mat;
  // (fixed, fixed, old->new, old->new) as index pairs (new octagon, old octagon).
  struct Eq { const char* name; int inew; int iold; };
  std::vector<Eq> eqs;
  switch (mv) {
    case Move::R1:
      mat = g.r1.m;
      eqs = {{"v0' = v0", 0, 0}, {"v1' = v1", 1, 1}, {"v3' = v2", 3, 2}, {"v-2' = v-3", 6, 5}};
      break;
    case Move::R2:
      mat = g.r2.m;
      eqs = {{"v0' = v0", 0, 0}, {"v3' = v3", 3, 3}, {"v2' = v1", 2, 1}, {"v-1' = v-2", 7, 6}};
      break;
    case Move::S1:
      if (!g.has_symmetric || !g.sym.same_frame)
        throw std::invalid_argument("move_vertex_equations: S1 needs theta = phi in the main frame");
      th = ph = g.sym.theta;
      mat = g.sym.s1.m;
      eqs = {{"v3' = v3", 3, 3}, {"v2' = v2", 2, 2}, {"v1' = v0", 1, 0}, {"v0' = v-1", 0, 7}};
      break;
  }
  const Octagon before = build_octagon(th, ph, z);
  const Octagon after = build_octagon(th, ph, Vec3(mat * z));
  std::vector<std::pair<std::string, double>> out;
  for (const auto& e : eqs) out.emplace_back(e.name, std::abs(after.v[e.inew] - before.v[e.iold]));
  return out;
}

}  // namespace dmlat
