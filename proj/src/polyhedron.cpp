#include "dmlat/polyhedron.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace dmlat {

namespace {

cplx eip(double a) { return std::polar(1.0, a); }

}  // namespace

std::array<VertexEntry, 14> vertex_table(const GeneratorSet& g) {
  const double th = g.theta, ph = g.phi;
  const double s = g.s, m = g.m;
  const double sth = std::sin(th), sph = std::sin(ph);
  const cplx u = 1.0 - sth * sth / (s * m);        // second coord of z7, w9
  const double c2 = sph * (2.0 * std::cos(th) - 1.0) / s;
  const cplx q = eip(-ph) * (m / sth) * (1.0 - sph / s);
  const double r = (s - sph) / s;

  std::array<VertexEntry, 14> t;
  auto set = [&](int i, cplx z1, cplx z2, cplx w1, cplx w2) {
    t[i - 1].index = i;
    t[i - 1].z = Vec3(z1, z2, 1.0);
    t[i - 1].w = Vec3(w1, w2, 1.0);
  };
  const cplx dz1 = sph + eip(ph) * sth;   // denominator of z-coords of z1... z2
  const cplx dw1 = sph + eip(-ph) * sth;
  set(1, 0.0, 0.0, m / dw1, sph / dw1);
  set(2, m / dz1, eip(th) * sph / dz1, 0.0, 0.0);
  set(3, m / s, 0.0, m / s, eip(th) * c2);
  set(4, m / s, c2, m / s, 0.0);
  set(5, m / s, eip(th) * c2, m / s, c2);
  set(6, eip(-ph) * sth / s, 0.0, r, eip(th) * sph / s);
  set(7, eip(-ph) * sth / s, u, std::conj(q), eip(th) * sph / s);
  set(8, eip(-ph) * sth / s, eip(th) * u, 0.0, eip(th) * sph / s);
  set(9, 0.0, sph / s, eip(ph) * sth / s, u);
  set(10, r, sph / s, eip(ph) * sth / s, 0.0);
  set(11, q, sph / s, eip(ph) * sth / s, eip(th) * u);
  set(12, 0.0, eip(th) * sph / s, std::conj(q), sph / s);
  set(13, r, eip(th) * sph / s, r, sph / s);
  set(14, q, eip(th) * sph / s, 0.0, sph / s);
  return t;
}

int iota_vertex_image(int i) {
  static const int img[15] = {0, 2, 1, 4, 3, 5, 10, 11, 9, 8, 6, 7, 14, 13, 12};
  if (i < 1 || i > 14) throw std::out_of_range("iota_vertex_image");
  return img[i];
}

namespace {

// Affine line equation residuals, dispatched by eq_id (order of line_table).
cplx line_z_res(const GeneratorSet& g, int id, cplx z1, cplx z2) {
  const double th = g.theta, ph = g.phi, s = g.s, m = g.m;
  const double sth = std::sin(th), sph = std::sin(ph);
  switch (id) {
    case 0: return z1 - m / s;                                    // L*0
    case 1: return z1 - eip(-ph) * sth / s;                       // L*1
    case 2: return z2 - eip(th) * sph / s;                        // L*2
    case 3: return z2 - sph / s;                                  // L*3
    case 4: return z1;                                            // L01
    case 5: return (sth / m) * eip(ph) * z1 + z2 - 1.0;           // L02
    case 6: return (sth / m) * eip(ph) * z1 + eip(-th) * z2 - 1.0;  // L03
    case 7: return z1 + z2 - 1.0;                                 // L12
    case 8: return z1 + eip(-th) * z2 - 1.0;                      // L13
    case 9: return z2;                                            // L23
  }
  throw std::out_of_range("line id");
}

cplx line_w_res(const GeneratorSet& g, int id, cplx w1, cplx w2) {
  const double th = g.theta, ph = g.phi, s = g.s, m = g.m;
  const double sth = std::sin(th), sph = std::sin(ph);
  switch (id) {
    case 0: return w1 - m / s;                                    // L*0
    case 1: return w2 - eip(th) * sph / s;                        // L*1
    case 2: return w2 - sph / s;                                  // L*2
    case 3: return w1 - eip(ph) * sth / s;                        // L*3
    case 4: return (sth / m) * eip(-ph) * w1 + w2 - 1.0;          // L01
    case 5: return (sth / m) * eip(-ph) * w1 + eip(-th) * w2 - 1.0;  // L02
    case 6: return w1;                                            // L03
    case 7: return w2;                                            // L12
    case 8: return w1 + w2 - 1.0;                                 // L13
    case 9: return w1 + eip(-th) * w2 - 1.0;                      // L23
  }
  throw std::out_of_range("line id");
}

}  // namespace

cplx ComplexLine::z_residual(const GeneratorSet& g, cplx z1, cplx z2) const {
  return line_z_res(g, eq_id, z1, z2);
}

cplx ComplexLine::w_residual(const GeneratorSet& g, cplx w1, cplx w2) const {
  return line_w_res(g, eq_id, w1, w2);
}

std::array<ComplexLine, 10> line_table(const GeneratorSet& g) {
  const double th = g.theta, ph = g.phi;
  const double sth = std::sin(th);
  // Polar vector of the homogeneous covector (a, b, c): n = H^{-1} conj(a,b,c).
  auto polar_of = [&](cplx a, cplx b, cplx c) {
    Vec3 cov(std::conj(a), std::conj(b), std::conj(c));
    Vec3 n = g.h.h.inverse() * cov;
    // Prefer the affine representative when the third coordinate survives.
    if (std::abs(n(2)) > 1e-12 * n.cwiseAbs().maxCoeff()) n /= n(2);
    return n;
  };
  const double s = g.s, m = g.m, sph = std::sin(ph);
  std::array<ComplexLine, 10> t;
  auto set = [&](int id, const char* lbl, cplx a, cplx b, cplx c, std::initializer_list<int> vs) {
    t[id].label = lbl;
    t[id].eq_id = id;
    t[id].polar = polar_of(a, b, c);
    t[id].n_vertices = 0;
    for (int v : vs) t[id].vertices[t[id].n_vertices++] = v;
  };
  // Covectors (a, b, c) of the z-side equations a z1 + b z2 + c = 0.
  set(0, "L*0", 1.0, 0.0, -m / s, {3, 4, 5});
  set(1, "L*1", 1.0, 0.0, -eip(-ph) * sth / s, {6, 7, 8});
  set(2, "L*2", 0.0, 1.0, -eip(th) * sph / s, {12, 13, 14});
  set(3, "L*3", 0.0, 1.0, -sph / s, {9, 10, 11});
  set(4, "L01", 1.0, 0.0, 0.0, {1, 9, 12});
  set(5, "L02", (sth / m) * eip(ph), 1.0, -1.0, {7, 11});
  set(6, "L03", (sth / m) * eip(ph), eip(-th), -1.0, {2, 8, 14});
  set(7, "L12", 1.0, 1.0, -1.0, {2, 4, 10});
  set(8, "L13", 1.0, eip(-th), -1.0, {5, 13});
  set(9, "L23", 0.0, 1.0, 0.0, {1, 3, 6});
  return t;
}

namespace {

// Signed value whose positivity defines D's side of bisector id (0..7).
double bis_side_value(const GeneratorSet& g, int id, const Vec3& zv) {
  const Vec3 z = affine(zv);
  const double th = g.theta, ph = g.phi;
  switch (id) {
    case 0: return -std::imag(z(0));                  // B(P):    Im z1 < 0
    case 2: return std::imag(eip(ph) * z(0));         // B(J):    Im(e^{i phi} z1) > 0
    case 4: return std::imag(z(1));                   // B(R1):   Im z2 > 0
    case 5: return -std::imag(eip(-th) * z(1));       // B(R1^-1)
    default: break;
  }
  const Vec3 w = to_w_matrix(g, z);
  switch (id) {
    case 1: return std::imag(w(0));                   // B(P^-1): Im w1 > 0
    case 3: return -std::imag(eip(-ph) * w(0));       // B(J^-1)
    case 6: return std::imag(w(1));                   // B(R2):   Im w2 > 0
    case 7: return -std::imag(eip(-th) * w(1));       // B(R2^-1)
  }
  throw std::out_of_range("bisector id");
}

}  // namespace

double Bisector::side_value(const GeneratorSet& g, const Vec3& z) const {
  return bis_side_value(g, id, z);
}

const std::array<Bisector, 8>& bisector_table() {
  static const std::array<Bisector, 8> t = [] {
    std::array<Bisector, 8> b;
    auto set = [&](int id, const char* lbl, const char* cond, std::vector<int> vs) {
      b[id] = Bisector{lbl, cond, std::move(vs), id};
    };
    set(0, "B(P)", "Im z1 = 0", {1, 3, 4, 5, 9, 10, 12, 13});
    set(1, "B(P^-1)", "Im w1 = 0", {2, 3, 4, 5, 6, 8, 13, 14});
    set(2, "B(J)", "Im(e^{i phi} z1) = 0", {1, 6, 7, 8, 9, 11, 12, 14});
    set(3, "B(J^-1)", "Im(e^{-i phi} w1) = 0", {2, 7, 8, 9, 10, 11, 12, 14});
    set(4, "B(R1)", "Im z2 = 0", {1, 3, 4, 6, 7, 9, 10, 11});
    set(5, "B(R1^-1)", "Im(e^{-i theta} z2) = 0", {1, 3, 5, 6, 8, 12, 13, 14});
    set(6, "B(R2)", "Im w2 = 0", {2, 4, 5, 9, 10, 12, 13, 14});
    set(7, "B(R2^-1)", "Im(e^{-i theta} w2) = 0", {2, 3, 4, 6, 7, 8, 10, 11});
    return b;
  }();
  return t;
}

MembershipResult membership(const GeneratorSet& g, const Vec3& z, double tol) {
  MembershipResult r;
  bool outside = false, boundary = false;
  for (const auto& b : bisector_table()) {
    const double v = b.side_value(g, z);
    if (std::abs(v) <= tol) {
      boundary = true;
      r.active.push_back(b.label);
    } else if (v < 0.0) {
      outside = true;
    }
  }
  r.status = outside ? Membership::Exterior
                     : (boundary ? Membership::Boundary : Membership::Interior);
  return r;
}

namespace {

// Polar representatives of the four mirror lines, normalized to third
// coordinate 1 (the paper's printed representatives).
Vec3 polar_n(const GeneratorSet& g, int i) {
  const double sth = std::sin(g.theta);
  switch (i) {
    case 0: return Vec3(1.0, 0.0, 1.0);
    case 1: return Vec3(eip(-g.phi) * g.m / sth, 0.0, 1.0);
    case 2: return Vec3(0.0, 1.0, eip(-g.theta));
    case 3: return Vec3(0.0, 1.0, 1.0);
  }
  throw std::out_of_range("polar_n");
}

Vec3 aff3(const Vec3& n) {
  if (std::abs(n(2)) < 1e-13 * n.cwiseAbs().maxCoeff())
    throw std::domain_error("polar transport: third coordinate vanishes");
  return n / n(2);
}

// Transport of a polar vector through iota: |<iota(z), n>| = |<z, q>| with
// q = H^{-1} M_iota^T H conj(n).
Vec3 iota_polar(const GeneratorSet& g, const Vec3& n) {
  return g.h.h.inverse() * (g.iota.m.transpose() * (g.h.h * n.conjugate()));
}

// The metric pair (n_inside, n_outside) of bisector id, expressed on the
// z-coordinate side; the four w-side bisectors are the iota transports of
// their mirror partners.
std::pair<Vec3, Vec3> bisector_polar_pair(const GeneratorSet& g, int id) {
  switch (id) {
    case 0: return {aff3(polar_n(g, 1)), aff3(g.p.inverse().m * polar_n(g, 3))};   // B(P)
    case 2: return {aff3(polar_n(g, 0)), aff3(g.j.inverse().m * polar_n(g, 0))};   // B(J)
    case 4: return {aff3(polar_n(g, 2)), aff3(g.r1.inverse().m * polar_n(g, 3))};  // B(R1)
    case 5: return {aff3(polar_n(g, 3)), aff3(g.r1.m * polar_n(g, 2))};            // B(R1^-1)
    case 1: { auto pr = bisector_polar_pair(g, 0);                                 // B(P^-1)
      return {iota_polar(g, pr.first), iota_polar(g, pr.second)}; }
    case 3: { auto pr = bisector_polar_pair(g, 2);                                 // B(J^-1)
      return {iota_polar(g, pr.first), iota_polar(g, pr.second)}; }
    case 6: { auto pr = bisector_polar_pair(g, 5);                                 // B(R2)
      return {iota_polar(g, pr.first), iota_polar(g, pr.second)}; }
    case 7: { auto pr = bisector_polar_pair(g, 4);                                 // B(R2^-1)
      return {iota_polar(g, pr.first), iota_polar(g, pr.second)}; }
  }
  throw std::out_of_range("bisector id");
}

}  // namespace

bool side_inequality_check(const GeneratorSet& g, int id, const Vec3& zv) {
  const Vec3 z = affine(zv);
  const double coord = bis_side_value(g, id, z);
  const auto [a, b] = bisector_polar_pair(g, id);
  const double metric = std::abs(g.h.inner(z, b)) - std::abs(g.h.inner(z, a));
  return (coord > 0.0) == (metric > 0.0);
}

bool lemma_bounds_check(const GeneratorSet& g, const Vec3& zv, double tol) {
  const Vec3 z = affine(zv);
  const Vec3 w = to_w_matrix(g, z);
  const double bnd1 = g.m / g.s, bnd2 = std::sin(g.phi) / g.s;
  if (std::norm(z(0)) > bnd1 + tol || std::norm(w(0)) > bnd1 + tol) return false;
  if (std::norm(z(1)) > bnd2 + tol || std::norm(w(1)) > bnd2 + tol) return false;
  if (g.params.p > ExtRational(6)) {
    if (std::abs(z(0)) >= 1.0 + tol || std::abs(w(0)) >= 1.0 + tol) return false;
  }
  if (!(g.params.l < ExtRational(0))) {
    if (std::abs(z(1)) > 1.0 + tol || std::abs(w(1)) > 1.0 + tol) return false;
  }
  return true;
}

std::pair<cplx, cplx> xi_coords(const GeneratorSet& g, const Vec3& zv) {
  const Vec3 z = affine(zv);
  const cplx den = 1.0 - z(1);
  if (std::abs(den) < 1e-14) throw std::domain_error("xi_coords: z2 = 1");
  const double sph = std::sin(g.phi);
  return {(sph - g.s * z(1)) / den, z(0) * (g.s - sph) / den};
}

const std::vector<Ridge>& ridge_table() {
  static const std::vector<Ridge> t = {
      {"F(P,J)", 'S', 0, 2, {1, 9, 12}},
      {"F(R1,R1^-1)", 'S', 4, 5, {1, 3, 6}},
      {"F(P,R1)", 'M', 0, 4, {1, 3, 4, 9, 10}},
      {"F(P,R1^-1)", 'M', 0, 5, {1, 3, 5, 12, 13}},
      {"F(J,R1)", 'M', 2, 4, {1, 6, 7, 9, 11}},
      {"F(J,R1^-1)", 'M', 2, 5, {1, 6, 8, 12, 14}},
      {"F(P^-1,J^-1)", 'S', 1, 3, {2, 8, 14}},
      {"F(R2,R2^-1)", 'S', 6, 7, {2, 4, 10}},
      {"F(P^-1,R2)", 'M', 1, 6, {2, 4, 5, 13, 14}},
      {"F(P^-1,R2^-1)", 'M', 1, 7, {2, 3, 4, 6, 8}},
      {"F(J^-1,R2)", 'M', 3, 6, {2, 9, 10, 12, 14}},
      {"F(J^-1,R2^-1)", 'M', 3, 7, {2, 7, 8, 10, 11}},
      {"F(P,R2)", 'G', 0, 6, {4, 5, 9, 10, 12, 13}},
      {"F(J,J^-1)", 'G', 2, 3, {7, 8, 9, 11, 12, 14}},
      {"F(R1,R2^-1)", 'G', 4, 7, {3, 4, 6, 7, 10, 11}},
      {"F(R1^-1,P^-1)", 'G', 5, 1, {3, 5, 6, 8, 13, 14}},
      {"F(P,P^-1)", 'S', 0, 1, {3, 4, 5}},
      {"F(J,R2^-1)", 'S', 2, 7, {6, 7, 8}},
      {"F(R1,J^-1)", 'S', 4, 3, {9, 10, 11}},
      {"F(R1^-1,R2)", 'S', 5, 6, {12, 13, 14}},
  };
  return t;
}

const std::vector<EdgeEntry>& edge_table() {
  static const std::vector<EdgeEntry> t = {
      {1, 3, {"F(R1,R1^-1)", "F(P,R1)", "F(P,R1^-1)"}},
      {1, 6, {"F(R1,R1^-1)", "F(J,R1)", "F(J,R1^-1)"}},
      {1, 9, {"F(P,J)", "F(P,R1)", "F(J,R1)"}},
      {1, 12, {"F(P,J)", "F(P,R1^-1)", "F(J,R1^-1)"}},
      {2, 4, {"F(R2,R2^-1)", "F(P^-1,R2^-1)", "F(P^-1,R2)"}},
      {2, 8, {"F(P^-1,J^-1)", "F(P^-1,R2^-1)", "F(J^-1,R2^-1)"}},
      {2, 10, {"F(R2,R2^-1)", "F(J^-1,R2)", "F(J^-1,R2^-1)"}},
      {2, 14, {"F(P^-1,J^-1)", "F(P^-1,R2)", "F(J^-1,R2)"}},
      {5, 13, {"F(P,R1^-1)", "F(P^-1,R2)", "F(P,R2)", "F(R1^-1,P^-1)"}},
      {7, 11, {"F(J,R1)", "F(J^-1,R2^-1)", "F(J,J^-1)", "F(R1,R2^-1)"}},
      {9, 10, {"F(R1,J^-1)", "F(P,R1)", "F(J^-1,R2)", "F(P,R2)"}},
      {3, 4, {"F(P,P^-1)", "F(P,R1)", "F(P^-1,R2^-1)", "F(R1,R2^-1)"}},
      {6, 8, {"F(J,R2^-1)", "F(J,R1^-1)", "F(P^-1,R2^-1)", "F(R1^-1,P^-1)"}},
      {12, 14, {"F(R1^-1,R2)", "F(J,R1^-1)", "F(J^-1,R2)", "F(J,J^-1)"}},
      {4, 10, {"F(R2,R2^-1)", "F(P,R1)", "F(P,R2)", "F(R1,R2^-1)"}},
      {8, 14, {"F(P^-1,J^-1)", "F(J,R1^-1)", "F(J,J^-1)", "F(R1^-1,P^-1)"}},
      {9, 12, {"F(P,J)", "F(J^-1,R2)", "F(P,R2)", "F(J,J^-1)"}},
      {3, 6, {"F(R1,R1^-1)", "F(P^-1,R2^-1)", "F(R1,R2^-1)", "F(R1^-1,P^-1)"}},
      {13, 14, {"F(R1^-1,R2)", "F(P^-1,R2)", "F(R1^-1,P^-1)"}},
      {12, 13, {"F(R1^-1,R2)", "F(P,R1^-1)", "F(P,R2)"}},
      {10, 11, {"F(R1,J^-1)", "F(J^-1,R2^-1)", "F(R1,R2^-1)"}},
      {9, 11, {"F(R1,J^-1)", "F(J,R1)", "F(J,J^-1)"}},
      {7, 8, {"F(J,R2^-1)", "F(J^-1,R2^-1)", "F(J,J^-1)"}},
      {6, 7, {"F(J,R2^-1)", "F(J,R1)", "F(R1,R2^-1)"}},
      {4, 5, {"F(P,P^-1)", "F(P^-1,R2)", "F(P,R2)"}},
      {3, 5, {"F(P,P^-1)", "F(P,R1^-1)", "F(R1^-1,P^-1)"}},
  };
  return t;
}

FacetComplex facet_complex(const LatticeParams& lp) {
  FacetComplex fc;
  fc.collapse = lp.collapse;

  int rep[15];
  for (int i = 0; i <= 14; ++i) rep[i] = i;
  std::vector<std::vector<int>> classes;
  const bool collapse_z345 = lp.collapse == CollapseCase::CollapseZ345 ||
                             lp.collapse == CollapseCase::CollapseAllFour;
  const bool collapse_triples = lp.collapse == CollapseCase::CollapseThreeTriples ||
                                lp.collapse == CollapseCase::CollapseAllFour;
  if (collapse_z345) classes.push_back({3, 4, 5});
  if (collapse_triples) {
    classes.push_back({6, 7, 8});
    classes.push_back({9, 10, 11});
    classes.push_back({12, 13, 14});
  }
  for (const auto& cl : classes)
    for (size_t i = 1; i < cl.size(); ++i) {
      rep[cl[i]] = cl[0];
      fc.merged.push_back({cl[i], cl[0]});
    }
  for (int i = 1; i <= 14; ++i)
    if (rep[i] == i) fc.vertices.push_back(i);

  std::set<std::pair<int, int>> seen_edges;
  for (const auto& e : edge_table()) {
    int a = rep[e.va], b = rep[e.vb];
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    if (!seen_edges.insert({a, b}).second)
      throw std::logic_error("facet_complex: unexpected edge identification");
    fc.edges.push_back({a, b, e.ridges});
  }

  for (const auto& r : ridge_table()) {
    std::set<int> vs;
    for (int v : r.vertices) vs.insert(rep[v]);
    if (vs.size() <= 1 && r.vertices.size() > 1) continue;  // ridge degenerates
    Ridge out = r;
    out.vertices.assign(vs.begin(), vs.end());
    fc.ridges.push_back(std::move(out));
  }

  for (int i = 0; i < 8; ++i) fc.sides[i] = bisector_table()[i].label;
  return fc;
}

bool giraud_check(const GeneratorSet& g, const std::string& ridge_label, double tol) {
  const Ridge* ridge = nullptr;
  for (const auto& r : ridge_table())
    if (r.label == ridge_label) ridge = &r;
  if (!ridge) throw std::invalid_argument("giraud_check: unknown ridge " + ridge_label);
  if (ridge->type != 'G') throw std::invalid_argument("giraud_check: not a Giraud ridge");

  const auto [a1, b1] = bisector_polar_pair(g, ridge->b1);
  const auto [a2, b2] = bisector_polar_pair(g, ridge->b2);

  // The four polar vectors must span exactly three points of P^2.
  const Vec3 vecs[4] = {a1, b1, a2, b2};
  int classes = 0;
  int cls[4] = {-1, -1, -1, -1};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < i; ++j)
      if (cls[j] >= 0 && proj_equal(vecs[i], vecs[j], 1e-8)) { cls[i] = cls[j]; break; }
    if (cls[i] < 0) cls[i] = classes++;
  }
  if (classes != 3) return false;

  // Both bisector equalities hold at every vertex of the ridge.
  const auto vt = vertex_table(g);
  for (int vi : ridge->vertices) {
    const Vec3& z = vt[vi - 1].z;
    const double m1a = std::abs(g.h.inner(z, a1)), m1b = std::abs(g.h.inner(z, b1));
    const double m2a = std::abs(g.h.inner(z, a2)), m2b = std::abs(g.h.inner(z, b2));
    const double scale = std::max({m1a, m1b, m2a, m2b, 1e-3});
    if (std::abs(m1a - m1b) > tol * scale) return false;
    if (std::abs(m2a - m2b) > tol * scale) return false;
  }
  return true;
}

Vec3 interior_witness(const GeneratorSet& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x2545F4914F6CDD1DULL);
  std::uniform_real_distribution<double> unit(0.05, 0.95);
  const double r1max = std::sqrt(g.m / g.s);
  const double r2max = std::sqrt(std::sin(g.phi) / g.s);
  for (int attempt = 0; attempt < 20000; ++attempt) {
    const double a1 = -g.phi * unit(rng);        // arg z1 in (-phi, 0)
    const double a2 = g.theta * unit(rng);       // arg z2 in (0, theta)
    const Vec3 z(std::polar(r1max * unit(rng), a1), std::polar(r2max * unit(rng), a2), 1.0);
    if (!g.h.is_positive(z)) continue;
    try {
      if (membership(g, z, 1e-9).status == Membership::Interior) return z;
    } catch (const std::domain_error&) {
      continue;
    }
  }
  throw std::runtime_error("interior_witness: rejection sampling failed");
}

}  // namespace dmlat
