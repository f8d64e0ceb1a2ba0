#pragma once

// Lattice parameters: the (p,k) -> (l, d, t, mu) arithmetic, the collapse
// classification, the ball-quintuple condition, and the 39-row census table.

#include "dmlat/extrational.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace dmlat {

enum class CollapseCase {
  FullD,                 // p > 6 and k > 2p/(p-2): all 14 vertices distinct
  CollapseZ345,          // p <= 6, k > 2p/(p-2): z3 = z4 = z5
  CollapseThreeTriples,  // p > 6, k <= 2p/(p-2): {z6,z7,z8}, {z9,z10,z11}, {z12,z13,z14}
  CollapseAllFour        // p <= 6 and k <= 2p/(p-2)
};

std::string to_string(CollapseCase c);

struct LatticeParams {
  ExtRational p;   // order of R1, R2
  ExtRational k;   // integer or half-integer >= 2
  ExtRational l;   // 1/l = 1/2 - 1/p - 1/k (may be negative or infinite)
  ExtRational d;   // 1/d = 1/2 - 3/p      (may be negative or infinite)
  ExtRational t;   // t = -1/2 + 1/p + 2/k
  std::array<ExtRational, 5> mu;  // ball quintuple; mu2 = mu3 = mu4

  CollapseCase collapse = CollapseCase::FullD;
  bool symmetric = false;       // extra three-fold symmetry (k = p/2 or l = p/2)
  bool symmetric_via_l = false; // symmetric frame is the swapped pair (p, p/2)
  bool in_table = false;        // one of the 39 census rows

  double theta() const;  // 2*pi/p
  double phi() const;    // pi/k
};

// Derive every field from (p, k). p must be an integer >= 3; k must be an
// integer or half-integer with k >= 2 (throws std::invalid_argument otherwise).
LatticeParams derive_params(const ExtRational& p, const ExtRational& k);

CollapseCase classify(const ExtRational& p, const ExtRational& k);

// Deligne-Mostow SigmaINT condition for the quintuple (with the three-fold
// symmetry on mu2 = mu3 = mu4): all mu in (0,1), sum = 2, and for each pair
// i < j with mu_i + mu_j < 1, (1 - mu_i - mu_j)^{-1} is an integer or, when
// mu_i = mu_j, a half-integer.
bool ball_quintuple_check(const std::array<ExtRational, 5>& mu);

// Cone angles at (v0, v1, v2, v3, v*) of the flattened octagon:
// (pi - theta + 2 phi, pi + theta, pi + theta, pi + theta, 2 pi - 2 theta - 2 phi).
std::array<double, 5> cone_angles(const LatticeParams& lp);

// The 39 census rows, in the paper's order.
const std::vector<LatticeParams>& lattice_table();

// Table lookup; nullopt when (p,k) is not one of the 39 rows.
std::optional<LatticeParams> find_lattice(const ExtRational& p, const ExtRational& k);

}  // namespace dmlat
