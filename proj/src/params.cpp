#include "dmlat/params.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dmlat {

namespace {
const ExtRational kHalf(1, 2);
const ExtRational kOne(1);
const ExtRational kTwo(2);

// (p, k) pairs of the census, in the paper's order.
const std::vector<std::pair<ExtRational, ExtRational>>& table_pairs() {
  static const std::vector<std::pair<ExtRational, ExtRational>> rows = {
      {3, 4}, {3, 5}, {3, 6}, {4, 3}, {4, 4}, {5, 2}, {ExtRational(5), ExtRational(5, 2)},
      {5, 3}, {6, 2}, {6, 3},
      {3, 7}, {3, 8}, {3, 9}, {3, 10}, {3, 12}, {4, 5}, {4, 6}, {4, 8},
      {5, 4}, {5, 5}, {6, 4}, {6, 6},
      {7, 2}, {8, 2}, {9, 2}, {10, 2}, {12, 2}, {18, 2},
      {7, 3}, {8, 3}, {9, 3}, {10, 3}, {12, 3}, {18, 3},
      {ExtRational(7), ExtRational(7, 2)}, {8, 4}, {ExtRational(9), ExtRational(9, 2)},
      {10, 5}, {12, 4}};
  return rows;
}
}  // namespace

std::string to_string(CollapseCase c) {
  switch (c) {
    case CollapseCase::FullD: return "FullD";
    case CollapseCase::CollapseZ345: return "CollapseZ345";
    case CollapseCase::CollapseThreeTriples: return "CollapseThreeTriples";
    case CollapseCase::CollapseAllFour: return "CollapseAllFour";
  }
  return "?";
}

double LatticeParams::theta() const { return 2.0 * std::numbers::pi / p.to_double(); }
double LatticeParams::phi() const { return std::numbers::pi / k.to_double(); }

CollapseCase classify(const ExtRational& p, const ExtRational& k) {
  // k > 2p/(p-2) <=> 1/k < 1/2 - 1/p (p >= 3 so both sides positive).
  const bool k_big = k.reciprocal() < kHalf - p.reciprocal();
  const bool p_big = p > ExtRational(6);
  if (p_big && k_big) return CollapseCase::FullD;
  if (!p_big && k_big) return CollapseCase::CollapseZ345;
  if (p_big) return CollapseCase::CollapseThreeTriples;
  return CollapseCase::CollapseAllFour;
}

LatticeParams derive_params(const ExtRational& p, const ExtRational& k) {
  if (p.is_infinite() || k.is_infinite()) throw std::invalid_argument("derive_params: p, k must be finite");
  if (!p.is_integer() || p < ExtRational(3)) throw std::invalid_argument("derive_params: p must be an integer >= 3");
  if (!(k * kTwo).is_integer() || k < kTwo) throw std::invalid_argument("derive_params: k must be an integer or half-integer >= 2");

  LatticeParams lp;
  lp.p = p;
  lp.k = k;
  lp.l = (kHalf - p.reciprocal() - k.reciprocal()).reciprocal();
  lp.d = (kHalf - ExtRational(3) / p).reciprocal();
  lp.t = ExtRational(-1, 2) + p.reciprocal() + kTwo / k;
  lp.mu = {kHalf + p.reciprocal() - k.reciprocal(),
           kHalf - p.reciprocal(), kHalf - p.reciprocal(), kHalf - p.reciprocal(),
           kTwo / p + k.reciprocal()};
  lp.collapse = classify(p, k);
  if (k * kTwo == p) {
    lp.symmetric = true;
  } else if (lp.l * kTwo == p) {
    lp.symmetric = true;
    lp.symmetric_via_l = true;
  }
  for (const auto& [tp, tk] : table_pairs())
    if (tp == p && tk == k) lp.in_table = true;
  return lp;
}

bool ball_quintuple_check(const std::array<ExtRational, 5>& mu) {
  ExtRational sum(0);
  for (const auto& m : mu) {
    if (m.is_infinite() || !(ExtRational(0) < m) || !(m < kOne)) return false;
    sum = sum + m;
  }
  if (sum != kTwo) return false;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      const ExtRational s = mu[i] + mu[j];
      if (!(s < kOne)) continue;
      const ExtRational inv = (kOne - s).reciprocal();
      if (mu[i] == mu[j]) {
        if (!(inv * kTwo).is_integer()) return false;
      } else if (!inv.is_integer()) {
        return false;
      }
    }
  return true;
}

std::array<double, 5> cone_angles(const LatticeParams& lp) {
  const double pi = std::numbers::pi;
  const double th = lp.theta(), ph = lp.phi();
  return {pi - th + 2 * ph, pi + th, pi + th, pi + th, 2 * pi - 2 * th - 2 * ph};
}

const std::vector<LatticeParams>& lattice_table() {
  static const std::vector<LatticeParams> table = [] {
    std::vector<LatticeParams> out;
    for (const auto& [p, k] : table_pairs()) out.push_back(derive_params(p, k));
    return out;
  }();
  return table;
}

std::optional<LatticeParams> find_lattice(const ExtRational& p, const ExtRational& k) {
  for (const auto& lp : lattice_table())
    if (lp.p == p && lp.k == k) return lp;
  return std::nullopt;
}

}  // namespace dmlat
