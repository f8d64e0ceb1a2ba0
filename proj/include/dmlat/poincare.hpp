#pragma once

// Poincare-polyhedron bookkeeping: side pairings, ridge cycles, the orbit
// table of the facet identifications, the Euler orbifold characteristic
// (combinatorial sum vs closed form), and the group presentation.

#include "dmlat/polyhedron.hpp"

#include <string>
#include <vector>

namespace dmlat {

// Evaluate a word in the generators; letters are "J", "P", "R1", "R2", "A1",
// and their inverses "J^-1", ...; on symmetric rows also "S1", "S2", "K" in
// the symmetric frame.
Isometry evaluate_word(const GeneratorSet& g, const std::vector<std::string>& letters);

struct SidePairingEntry {
  std::string word;          // the pairing isometry ("P", "J", "R1", "R2")
  std::string from, to;      // B(word^-1) -> B(word) as verified numerically
  std::vector<std::pair<int, int>> vertex_map;  // induced map on vertex indices
  bool verified = false;
};

// The four side pairings, with the action on vertices checked projectively.
std::vector<SidePairingEntry> side_pairing_report(const GeneratorSet& g, double tol = 1e-9);

struct CycleRow {
  std::string start_ridge;
  std::vector<std::string> sequence;       // alternating ridge, letter, ridge, ...
  std::vector<std::string> word;           // cycle transformation, last-to-first
  int ell = 1;                             // cycle length multiplier
  std::string order_tag;                   // "1", "p", "k", "l", or "d"
  ExtRational order(const LatticeParams& lp) const;  // m: (word)^(ell*m) = I
  bool applicable(const LatticeParams& lp) const;    // ell*m positive integer
};

// The nine ridge cycles of the Poincare polyhedron theorem.
const std::vector<CycleRow>& cycle_table();

// Residual of (word)^(ell * m) being projectively the identity; requires the
// row to be applicable (positive integer ell*m).
double cycle_relation_defect(const GeneratorSet& g, const CycleRow& row);

struct OrbitRow {
  enum class Kind { Vertex, Edge, Ridge, Side, Cell } kind;
  std::vector<std::string> members;   // labels ("z3", "g9,10", "F(P,R2)", ...)
  std::string stabilizer_word;        // named word, or "" when the paper leaves it implicit
  std::vector<std::string> word;      // evaluable letters (empty when implicit)
  ExtRational stabilizer_order;       // expected projective order (1/order enters chi)
};

std::vector<OrbitRow> orbit_table(const LatticeParams& lp);

// Euler characteristic: the alternating orbit sum and the closed form
// chi = (p^2 + 12 p - 60) / (16 p^2) - t^2 / 4, both exact.
ExtRational euler_orbit_sum(const LatticeParams& lp);
ExtRational euler_closed_form(const LatticeParams& lp);

struct Relator {
  std::string name;
  std::vector<std::string> word;
  long exponent = 1;
  bool applicable = true;
};

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Relator> relators;
};

// <J, P, R1, R2 | J^3 = P^{3d} = R1^p = R2^p = (P^-1 J)^k = (R2 R1 J)^l = I,
//  R2 = P R1 P^-1 = J R1 J^-1, P = R1 R2>, power relations included only for
// positive integer exponents.
Presentation presentation(const LatticeParams& lp);

// Symmetric-case presentation on <K, R1> (requires lp.symmetric).
Presentation symmetric_presentation(const LatticeParams& lp);

// Largest projective-identity defect over the applicable relators.
double presentation_defect(const GeneratorSet& g, const Presentation& pres);

}  // namespace dmlat
