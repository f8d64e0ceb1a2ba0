#include "dmlat/poincare.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace dmlat {

Isometry evaluate_word(const GeneratorSet& g, const std::vector<std::string>& letters) {
  auto lookup = [&](const std::string& base) -> Isometry {
    if (base == "J") return g.j;
    if (base == "P") return g.p;
    if (base == "R1") return g.r1;
    if (base == "R2") return g.r2;
    if (base == "A1") return g.a1;
    if (base == "iota") return g.iota;
    if (!g.has_symmetric)
      throw std::invalid_argument("evaluate_word: symmetric letter on a non-symmetric row");
    if (base == "K") return g.sym.k;
    if (base == "S1") return g.sym.s1;
    if (base == "S2") return g.sym.s2;
    if (base == "R1s") return g.sym.r1;
    if (base == "R2s") return g.sym.r2;
    if (base == "Ps") return g.sym.p;
    if (base == "Js") return g.sym.j;
    throw std::invalid_argument("evaluate_word: unknown letter " + base);
  };
  Isometry acc;
  for (const auto& l : letters) {
    bool inv = false;
    std::string base = l;
    if (base.size() > 3 && base.substr(base.size() - 3) == "^-1") {
      inv = true;
      base = base.substr(0, base.size() - 3);
    }
    Isometry gi = lookup(base);
    acc = acc * (inv ? gi.inverse() : gi);
  }
  return acc;
}

std::vector<SidePairingEntry> side_pairing_report(const GeneratorSet& g, double tol) {
  const auto vt = vertex_table(g);
  const auto& bis = bisector_table();
  // (word, bisector id of B(T), bisector id of B(T^-1))
  const std::tuple<const char*, int, int> pairs[4] = {
      {"P", 0, 1}, {"J", 2, 3}, {"R1", 4, 5}, {"R2", 6, 7}};
  std::vector<SidePairingEntry> out;
  for (const auto& [word, id_fwd, id_bwd] : pairs) {
    const Isometry t = evaluate_word(g, {word});
    auto try_dir = [&](int src, int dst, SidePairingEntry& e) {
      e.vertex_map.clear();
      for (int v : bis[src].vertices) {
        const Vec3 img = t(vt[v - 1].z);
        int hit = 0;
        for (int u : bis[dst].vertices)
          if (proj_equal(img, vt[u - 1].z, tol)) { hit = u; break; }
        if (!hit) return false;
        e.vertex_map.push_back({v, hit});
      }
      return true;
    };
    SidePairingEntry e;
    e.word = word;
    if (try_dir(id_bwd, id_fwd, e)) {
      e.from = bis[id_bwd].label;
      e.to = bis[id_fwd].label;
      e.verified = true;
    } else if (try_dir(id_fwd, id_bwd, e)) {
      e.from = bis[id_fwd].label;
      e.to = bis[id_bwd].label;
      e.verified = true;
    }
    out.push_back(std::move(e));
  }
  return out;
}

ExtRational CycleRow::order(const LatticeParams& lp) const {
  if (order_tag == "p") return lp.p;
  if (order_tag == "k") return lp.k;
  if (order_tag == "l") return lp.l;
  if (order_tag == "d") return lp.d;
  return ExtRational::parse(order_tag);
}

bool CycleRow::applicable(const LatticeParams& lp) const {
  const ExtRational total = order(lp) * ExtRational(ell);
  return !total.is_infinite() && total > ExtRational(0) && total.is_integer();
}

const std::vector<CycleRow>& cycle_table() {
  static const std::vector<CycleRow> t = [] {
    std::vector<CycleRow> rows;
    auto add = [&](const char* start, std::vector<std::string> seq,
                   std::vector<std::string> word, int ell, const char* order_tag) {
      rows.push_back({start, std::move(seq), std::move(word), ell, order_tag});
    };
    add("F(P,J)", {"F(P,J)", "J", "F(P^-1,J^-1)", "P^-1"}, {"P^-1", "J"}, 1, "k");
    add("F(R1,R1^-1)", {"F(R1,R1^-1)", "R1"}, {"R1"}, 1, "p");
    add("F(R2,R2^-1)", {"F(R2,R2^-1)", "R2"}, {"R2"}, 1, "p");
    add("F(P,R1)",
        {"F(P,R1)", "P", "F(P^-1,R2)", "R2", "F(P^-1,R2^-1)", "P^-1", "F(P,R1^-1)", "R1^-1"},
        {"R1^-1", "P^-1", "R2", "P"}, 1, "1");
    add("F(J,R1)",
        {"F(J,R1)", "J", "F(J^-1,R2)", "R2", "F(J^-1,R2^-1)", "J^-1", "F(J,R1^-1)", "R1^-1"},
        {"R1^-1", "J^-1", "R2", "J"}, 1, "1");
    add("F(R1,R2^-1)", {"F(R1,R2^-1)", "R1", "F(R1^-1,P^-1)", "P^-1", "F(P,R2)", "R2"},
        {"R2", "P^-1", "R1"}, 1, "1");
    add("F(J,R2^-1)", {"F(J,R2^-1)", "J", "F(R1,J^-1)", "R1", "F(R1^-1,R2)", "R2"},
        {"R2", "R1", "J"}, 1, "l");
    add("F(J,J^-1)", {"F(J,J^-1)", "J"}, {"J"}, 3, "1");
    add("F(P,P^-1)", {"F(P,P^-1)", "P"}, {"P"}, 3, "d");
    return rows;
  }();
  return t;
}

double cycle_relation_defect(const GeneratorSet& g, const CycleRow& row) {
  if (!row.applicable(g.params)) throw std::invalid_argument("cycle not applicable");
  const Isometry w = evaluate_word(g, row.word);
  const long n = (row.order(g.params) * ExtRational(row.ell)).num();
  return proj_identity_defect(w.pow(static_cast<int>(n)).m);
}

std::vector<OrbitRow> orbit_table(const LatticeParams& lp) {
  using K = OrbitRow::Kind;
  const ExtRational p = lp.p, k = lp.k, l = lp.l, d = lp.d;
  const ExtRational two(2), three(3);
  std::vector<OrbitRow> t;
  auto add = [&](K kind, std::vector<std::string> members, std::string wname,
                 std::vector<std::string> word, ExtRational order) {
    t.push_back({kind, std::move(members), std::move(wname), std::move(word), order});
  };
  add(K::Vertex, {"z1", "z2"}, "<A1,R1>", {}, k * p);
  add(K::Vertex, {"z3", "z4", "z5"}, "<P^3,R1>", {}, p * d);
  add(K::Vertex, {"z6", "z10", "z13"}, "<A1',R1>", {}, p * l);
  add(K::Vertex, {"z7", "z8", "z9", "z11", "z12", "z14"}, "<A1,A1'>", {}, k * l);
  add(K::Edge, {"g1,3", "g2,4"}, "R1", {"R1"}, p);
  add(K::Edge, {"g1,6", "g2,10"}, "R1", {"R1"}, p);
  add(K::Edge, {"g3,6", "g5,13", "g4,10"}, "R1", {"R1"}, p);
  add(K::Edge, {"g2,8", "g1,9", "g1,12", "g2,14"}, "A1", {"A1"}, k);
  add(K::Edge, {"g7,11", "g9,12", "g8,14"}, "J R1", {"J", "R1"}, two * k);
  add(K::Edge, {"g9,10", "g12,13", "g6,7", "g13,14", "g6,8", "g10,11"}, "A2'", {}, l);
  add(K::Edge, {"g7,8", "g12,14", "g9,11"}, "J R1^-1", {"J", "R1^-1"}, two * l);
  add(K::Edge, {"g4,5", "g3,5", "g3,4"}, "R2 P", {"R2", "P"}, two * d);
  add(K::Ridge, {"F(P,J)", "F(P^-1,J^-1)"}, "A1", {"A1"}, k);
  add(K::Ridge, {"F(R1,R1^-1)"}, "R1", {"R1"}, p);
  add(K::Ridge, {"F(R2,R2^-1)"}, "R2", {"R2"}, p);
  add(K::Ridge, {"F(P,R1)", "F(P,R1^-1)", "F(P^-1,R2)", "F(P^-1,R2^-1)"}, "", {}, ExtRational(1));
  add(K::Ridge, {"F(J,R1)", "F(J,R1^-1)", "F(J^-1,R2)", "F(J^-1,R2^-1)"}, "", {}, ExtRational(1));
  add(K::Ridge, {"F(P,R2)", "F(R1,R2^-1)", "F(R1^-1,P^-1)"}, "", {}, ExtRational(1));
  add(K::Ridge, {"F(J,R2^-1)", "F(R1,J^-1)", "F(R1^-1,R2)"}, "A1'", {}, l);
  add(K::Ridge, {"F(J,J^-1)"}, "J", {"J"}, three);
  add(K::Ridge, {"F(P,P^-1)"}, "P", {"P"}, three * d);
  add(K::Side, {"B(P)", "B(P^-1)"}, "", {}, ExtRational(1));
  add(K::Side, {"B(J)", "B(J^-1)"}, "", {}, ExtRational(1));
  add(K::Side, {"B(R1)", "B(R1^-1)"}, "", {}, ExtRational(1));
  add(K::Side, {"B(R2)", "B(R2^-1)"}, "", {}, ExtRational(1));
  add(K::Cell, {"D"}, "", {}, ExtRational(1));
  return t;
}

ExtRational euler_orbit_sum(const LatticeParams& lp) {
  ExtRational chi(0);
  for (const auto& row : orbit_table(lp)) {
    const bool negative = row.kind == OrbitRow::Kind::Edge || row.kind == OrbitRow::Kind::Side;
    const ExtRational term = row.stabilizer_order.reciprocal();
    chi = negative ? chi - term : chi + term;
  }
  return chi;
}

ExtRational euler_closed_form(const LatticeParams& lp) {
  const std::int64_t p = lp.p.num();
  const ExtRational lead(p * p + 12 * p - 60, 16 * p * p);
  return lead - lp.t * lp.t / ExtRational(4);
}

Presentation presentation(const LatticeParams& lp) {
  Presentation pr;
  pr.generators = {"J", "P", "R1", "R2"};
  auto power = [&](const std::string& name, std::vector<std::string> word,
                   const ExtRational& order) {
    Relator r;
    r.name = name;
    r.word = std::move(word);
    const bool ok = !order.is_infinite() && order > ExtRational(0) && order.is_integer();
    r.applicable = ok;
    r.exponent = ok ? order.num() : 0;
    pr.relators.push_back(std::move(r));
  };
  power("J^3", {"J"}, ExtRational(3));
  power("P^(3d)", {"P"}, lp.d * ExtRational(3));
  power("R1^p", {"R1"}, lp.p);
  power("R2^p", {"R2"}, lp.p);
  power("(P^-1 J)^k", {"P^-1", "J"}, lp.k);
  power("(R2 R1 J)^l", {"R2", "R1", "J"}, lp.l);
  pr.relators.push_back({"R2 = P R1 P^-1", {"R2^-1", "P", "R1", "P^-1"}, 1, true});
  pr.relators.push_back({"R2 = J R1 J^-1", {"R2^-1", "J", "R1", "J^-1"}, 1, true});
  pr.relators.push_back({"P = R1 R2", {"P^-1", "R1", "R2"}, 1, true});
  return pr;
}

Presentation symmetric_presentation(const LatticeParams& lp) {
  if (!lp.symmetric) throw std::invalid_argument("symmetric_presentation: row is not symmetric");
  Presentation pr;
  pr.generators = {"K", "R1"};
  auto add = [&](const char* name, std::vector<std::string> word, const ExtRational& order) {
    Relator r;
    r.name = name;
    r.word = std::move(word);
    const bool ok = !order.is_infinite() && order > ExtRational(0) && order.is_integer();
    r.applicable = ok;
    r.exponent = ok ? order.num() : 0;
    pr.relators.push_back(std::move(r));
  };
  add("R1^p", {"R1s"}, lp.p);
  add("K^4", {"K"}, ExtRational(4));
  add("(K^-1 R1)^(3d)", {"K^-1", "R1s"}, lp.d * ExtRational(3));
  add("(K R1)^3", {"K", "R1s"}, ExtRational(3));
  pr.relators.push_back({"J = K S1", {"K", "S1", "Js^-1"}, 1, true});
  pr.relators.push_back({"K^2 = R2 S1 J", {"K", "K", "Js^-1", "S1^-1", "R2s^-1"}, 1, true});
  pr.relators.push_back({"(K^2 R1)^2 = (R1 K^2)^2",
                         {"K", "K", "R1s", "K", "K", "R1s",
                          "K^-1", "K^-1", "R1s^-1", "K^-1", "K^-1", "R1s^-1"},
                         1, true});
  return pr;
}

double presentation_defect(const GeneratorSet& g, const Presentation& pres) {
  double worst = 0.0;
  for (const auto& r : pres.relators) {
    if (!r.applicable) continue;
    const Isometry w = evaluate_word(g, r.word);
    worst = std::max(worst, proj_identity_defect(w.pow(static_cast<int>(r.exponent)).m));
  }
  return worst;
}

}  // namespace dmlat
