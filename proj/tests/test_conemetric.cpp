#include "dmlat/conemetric.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace dmlat;

namespace {

cplx eip(double a) { return std::polar(1.0, a); }

Vec3 random_config(std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  return Vec3(cplx(nd(rng), nd(rng)), cplx(nd(rng), nd(rng)), cplx(nd(rng), nd(rng)));
}

}  // namespace

TEST_CASE("octagon area equals the Hermitian norm (1000 configs x 5 rows)") {
  const std::pair<long, long> rows[5] = {{7, 3}, {3, 4}, {18, 2}, {10, 5}, {4, 6}};
  for (const auto& [p, k] : rows) {
    const LatticeParams lp = derive_params(ExtRational(p), ExtRational(k));
    std::mt19937_64 rng(31);
    CAPTURE(p); CAPTURE(k);
    for (int i = 0; i < 1000; ++i) {
      const Vec3 z = random_config(rng);
      CHECK(area_form_defect(lp.theta(), lp.phi(), z) < 1e-10 * (1.0 + z.squaredNorm()));
    }
  }
}

TEST_CASE("degenerate configurations give zero area") {
  const LatticeParams lp = derive_params(ExtRational(8), ExtRational(3));
  // Null vectors of the form have vanishing octagon area.
  const HForm h = hermitian_form(lp.theta(), lp.phi());
  const double a = std::sqrt(-h.h(2, 2).real() / h.h(0, 0).real());
  const Vec3 null_vec(a, 0.0, 1.0);
  CHECK(std::abs(h.norm(null_vec)) < 1e-14);
  CHECK(std::abs(signed_area(build_octagon(lp.theta(), lp.phi(), null_vec))) < 1e-12);
}

TEST_CASE("move vertex equations for R1 and R2 (100 configs per row)") {
  for (const auto& row : lattice_table()) {
    const GeneratorSet g = build_generators(row);
    std::mt19937_64 rng(32);
    const std::string rowtag_ = row.p.str() + "," + row.k.str(); CAPTURE(rowtag_);
    for (int i = 0; i < 100; ++i) {
      const Vec3 z = random_config(rng);
      for (Move mv : {Move::R1, Move::R2}) {
        for (const auto& [name, res] : move_vertex_equations(g, mv, z)) {
          CAPTURE(name);
          CHECK(res < 1e-10 * (1.0 + z.norm()));
        }
      }
    }
  }
}

TEST_CASE("S1 move equations hold exactly when theta = phi") {
  for (const auto& row : lattice_table()) {
    if (!row.symmetric || row.symmetric_via_l) continue;
    const GeneratorSet g = build_generators(row);
    std::mt19937_64 rng(33);
    const std::string rowtag_ = row.p.str() + "," + row.k.str(); CAPTURE(rowtag_);
    for (int i = 0; i < 100; ++i) {
      const Vec3 z = random_config(rng);
      for (const auto& [name, res] : move_vertex_equations(g, Move::S1, z)) {
        CAPTURE(name);
        CHECK(res < 1e-10 * (1.0 + z.norm()));
      }
    }
  }
  // S1 is rejected off the symmetric locus.
  const GeneratorSet g = build_generators(derive_params(ExtRational(7), ExtRational(3)));
  CHECK_THROWS_AS(move_vertex_equations(g, Move::S1, Vec3(1.0, 1.0, 1.0)),
                  std::invalid_argument);
}

TEST_CASE("cone-point coalescences match the line factors") {
  // v0 and v1 coalesce iff z1 = 0; v2 and v3 iff z2 = 0; v0 = v* iff
  // s z1 = m z3. These are the linear factors behind the line table.
  const LatticeParams lp = derive_params(ExtRational(9), ExtRational(3));
  const double th = lp.theta(), ph = lp.phi();
  const double s = std::sin(th + ph), m = std::sin(ph) + std::sin(th - ph);
  std::mt19937_64 rng(34);
  std::normal_distribution<double> nd;
  for (int i = 0; i < 50; ++i) {
    const cplx a(nd(rng), nd(rng)), b(nd(rng), nd(rng));
    {
      const Octagon o = build_octagon(th, ph, Vec3(0.0, a, b));
      CHECK(std::abs(o.v[0] - o.v[1]) < 1e-13 * (1.0 + std::abs(a) + std::abs(b)));
    }
    {
      const Octagon o = build_octagon(th, ph, Vec3(a, 0.0, b));
      CHECK(std::abs(o.v[2] - o.v[3]) < 1e-13 * (1.0 + std::abs(a) + std::abs(b)));
    }
    {
      const Octagon o = build_octagon(th, ph, Vec3((m / s) * b, a, b));
      CHECK(std::abs(o.v[0] - o.v[4]) < 1e-13 * (1.0 + std::abs(a) + std::abs(b)));
    }
  }
}

TEST_CASE("octagon is linear in the configuration") {
  const LatticeParams lp = derive_params(ExtRational(5), ExtRational(4));
  std::mt19937_64 rng(35);
  const Vec3 z = random_config(rng), w = random_config(rng);
  const cplx a(0.3, -1.1);
  const Octagon oz = build_octagon(lp.theta(), lp.phi(), z);
  const Octagon ow = build_octagon(lp.theta(), lp.phi(), w);
  const Octagon os = build_octagon(lp.theta(), lp.phi(), Vec3(a * z + w));
  for (int i = 0; i < 8; ++i) CHECK(std::abs(os.v[i] - (a * oz.v[i] + ow.v[i])) < 1e-12);
}
