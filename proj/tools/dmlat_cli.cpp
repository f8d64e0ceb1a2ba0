// Command-line front end: list the census, inspect a row, run the full
// verification battery, export tables, print the octagon, and print the
// presentation. Exit codes: 0 success, 1 verification failure, 2 usage or
// parameter error.

#include "dmlat/conemetric.hpp"
#include "dmlat/poincare.hpp"
#include "dmlat/polyhedron.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <numbers>
#include <random>

using json = nlohmann::ordered_json;
using namespace dmlat;

namespace {

json jcplx(const cplx& z) { return json::array({z.real(), z.imag()}); }

json jvec(const Vec3& v) { return json::array({jcplx(v(0)), jcplx(v(1)), jcplx(v(2))}); }

// An angle as a fraction of pi, e.g. "2/3 pi".
std::string pi_fraction(double a) {
  const double f = a / std::numbers::pi;
  for (int den = 1; den <= 120; ++den) {
    const double num = f * den;
    if (std::abs(num - std::round(num)) < 1e-9) {
      const long n = std::lround(num);
      if (den == 1) return std::to_string(n) + " pi";
      return std::to_string(n) + "/" + std::to_string(den) + " pi";
    }
  }
  return std::to_string(f) + " pi";
}

struct Options {
  std::string p, k;
  double tol = 1e-9;
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "text";
};

LatticeParams parse_row(const Options& opt) {
  const ExtRational p = ExtRational::parse(opt.p);
  const ExtRational k = ExtRational::parse(opt.k);
  return derive_params(p, k);
}

std::ostream& open_out(const Options& opt, std::ofstream& file) {
  if (opt.out.empty()) return std::cout;
  file.open(opt.out);
  if (!file) throw std::runtime_error("cannot open " + opt.out);
  return file;
}

json row_json(const LatticeParams& lp) {
  json j;
  j["p"] = lp.p.str();
  j["k"] = lp.k.str();
  j["l"] = lp.l.str();
  j["d"] = lp.d.str();
  j["t"] = lp.t.str();
  j["mu"] = json::array();
  for (const auto& m : lp.mu) j["mu"].push_back(m.str());
  j["collapse"] = to_string(lp.collapse);
  j["symmetric"] = lp.symmetric;
  j["in_table"] = lp.in_table;
  return j;
}

int cmd_list(const Options& opt) {
  std::ofstream file;
  std::ostream& os = open_out(opt, file);
  if (opt.format == "json") {
    json j = json::array();
    for (const auto& lp : lattice_table()) j.push_back(row_json(lp));
    os << j.dump(2) << "\n";
  } else {
    os << "p\tk\tl\td\tt\tmu1\tmu2-4\tmu5\tcollapse\tsymmetric\n";
    for (const auto& lp : lattice_table())
      os << lp.p.str() << "\t" << lp.k.str() << "\t" << lp.l.str() << "\t" << lp.d.str()
         << "\t" << lp.t.str() << "\t" << lp.mu[0].str() << "\t" << lp.mu[1].str() << "\t"
         << lp.mu[4].str() << "\t" << to_string(lp.collapse) << "\t"
         << (lp.symmetric ? "yes" : "no") << "\n";
  }
  return 0;
}

int cmd_inspect(const Options& opt) {
  const LatticeParams lp = parse_row(opt);
  const GeneratorSet g = build_generators(lp);
  std::ofstream file;
  std::ostream& os = open_out(opt, file);
  if (opt.format == "json") {
    json j = row_json(lp);
    j["theta"] = pi_fraction(lp.theta());
    j["phi"] = pi_fraction(lp.phi());
    j["cone_angles"] = json::array();
    for (double a : cone_angles(lp)) j["cone_angles"].push_back(pi_fraction(a));
    j["ball_quintuple_ok"] = ball_quintuple_check(lp.mu);
    j["generators"] = json::object();
    auto put = [&](const char* n, const Isometry& iso) {
      json rows = json::array();
      for (int r = 0; r < 3; ++r) {
        json row = json::array();
        for (int c = 0; c < 3; ++c) row.push_back(jcplx(iso.m(r, c)));
        rows.push_back(row);
      }
      j["generators"][n] = rows;
    };
    put("R1", g.r1);
    put("R2", g.r2);
    put("A1", g.a1);
    put("P", g.p);
    put("J", g.j);
    json verts = json::array();
    for (const auto& v : vertex_table(g)) {
      json jv;
      jv["index"] = v.index;
      jv["z"] = jvec(v.z);
      jv["w"] = jvec(v.w);
      verts.push_back(jv);
    }
    j["vertices"] = verts;
    const FacetComplex fc = facet_complex(lp);
    j["facets"] = {{"vertices", fc.n_vertices()},
                   {"edges", fc.n_edges()},
                   {"ridges", fc.n_ridges()},
                   {"sides", 8}};
    j["euler"] = euler_closed_form(lp).str();
    os << j.dump(2) << "\n";
  } else {
    os << "lattice (p, k) = (" << lp.p.str() << ", " << lp.k.str() << ")\n"
       << "  l = " << lp.l.str() << ", d = " << lp.d.str() << ", t = " << lp.t.str() << "\n"
       << "  mu = (" << lp.mu[0].str() << ", " << lp.mu[1].str() << ", " << lp.mu[1].str()
       << ", " << lp.mu[1].str() << ", " << lp.mu[4].str() << ")"
       << (ball_quintuple_check(lp.mu) ? "  [ball quintuple ok]" : "  [NOT a ball quintuple]")
       << "\n"
       << "  theta = " << pi_fraction(lp.theta()) << ", phi = " << pi_fraction(lp.phi()) << "\n"
       << "  collapse case: " << to_string(lp.collapse)
       << (lp.symmetric ? " (extra threefold symmetry)" : "") << "\n";
    os << "  cone angles:";
    for (double a : cone_angles(lp)) os << " " << pi_fraction(a);
    os << "\n";
    const FacetComplex fc = facet_complex(lp);
    os << "  facets: " << fc.n_vertices() << " vertices, " << fc.n_edges() << " edges, "
       << fc.n_ridges() << " ridges, 8 sides\n"
       << "  euler characteristic: " << euler_closed_form(lp).str() << "\n";
  }
  return 0;
}

struct VerifyOutcome {
  int checks = 0, failures = 0;
  json details = json::array();
  void note(const std::string& name, bool ok, std::ostream* os) {
    ++checks;
    if (!ok) ++failures;
    details.push_back({{"check", name}, {"pass", ok}});
    if (os && !ok) *os << "  FAIL: " << name << "\n";
  }
};

void verify_row(const LatticeParams& lp, double tol, std::uint64_t seed, VerifyOutcome& out,
                std::ostream* os) {
  const GeneratorSet g = build_generators(lp);
  const std::string tag = "(" + lp.p.str() + "," + lp.k.str() + ") ";

  out.note(tag + "ball quintuple", ball_quintuple_check(lp.mu), os);
  out.note(tag + "unitarity",
           unitarity_defect(g.h, g.r1) <= tol && unitarity_defect(g.h, g.r2) <= tol &&
               unitarity_defect(g.h, g.p) <= tol && unitarity_defect(g.h, g.j) <= tol,
           os);
  const RelationReport rel = verify_relations(g, tol);
  out.note(tag + "relations", rel.all_pass(), os);

  // z <-> w routes agree and are inverse to one another.
  std::mt19937_64 rng(seed + 17);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  bool routes = true;
  for (int i = 0; i < 50; ++i) {
    const Vec3 z(cplx(u(rng), u(rng)), cplx(u(rng), u(rng)), 1.0);
    try {
      const Vec3 wa = to_w_matrix(g, z), wb = to_w_formula(g, z);
      if (!proj_equal(wa, wb, 1e-7)) routes = false;
      if (!proj_equal(to_z_formula(g, wa), z, 1e-7)) routes = false;
    } catch (const std::domain_error&) {
    }
  }
  out.note(tag + "w-route agreement", routes, os);

  // Vertex table internally consistent: w(z_i) equals the printed w_i,
  // iota permutes the vertices as printed, lines pass through their vertices.
  const auto vt = vertex_table(g);
  bool vert_ok = true, iota_ok = true, lines_ok = true;
  for (const auto& v : vt) {
    if (!proj_equal(to_w_matrix(g, v.z), v.w, 1e-7)) vert_ok = false;
    const Vec3 img = apply_iota(g, v.z);
    if (!proj_equal(img, vt[iota_vertex_image(v.index) - 1].z, 1e-7)) iota_ok = false;
  }
  for (const auto& line : line_table(g))
    for (int i = 0; i < line.n_vertices; ++i) {
      const auto& v = vt[line.vertices[i] - 1];
      if (std::abs(line.z_residual(g, v.z(0), v.z(1))) > 1e-8) lines_ok = false;
      if (std::abs(line.w_residual(g, v.w(0), v.w(1))) > 1e-8) lines_ok = false;
      if (std::abs(g.h.inner(v.z, line.polar)) > 1e-8) lines_ok = false;
    }
  out.note(tag + "vertex table (w, iota, lines)", vert_ok && iota_ok && lines_ok, os);

  // Bisector incidences and facet counts.
  bool inc_ok = true;
  for (const auto& b : bisector_table())
    for (int vi : b.vertices)
      if (std::abs(b.side_value(g, vt[vi - 1].z)) > 1e-8) inc_ok = false;
  out.note(tag + "bisector incidences", inc_ok, os);
  const FacetComplex fc = facet_complex(lp);
  int ev = 0, ee = 0, er = 0;
  switch (lp.collapse) {
    case CollapseCase::FullD: ev = 14; ee = 26; er = 20; break;
    case CollapseCase::CollapseZ345: ev = 12; ee = 23; er = 19; break;
    case CollapseCase::CollapseThreeTriples: ev = 8; ee = 17; er = 17; break;
    case CollapseCase::CollapseAllFour: ev = 6; ee = 14; er = 16; break;
  }
  out.note(tag + "facet counts",
           fc.n_vertices() == ev && fc.n_edges() == ee && fc.n_ridges() == er, os);

  // Interior point: membership, metric/coordinate agreement, lemma bounds.
  bool interior_ok = true, sides_ok = true, lemma_ok = true;
  try {
    const Vec3 zin = interior_witness(g, seed);
    interior_ok = membership(g, zin, tol).status == Membership::Interior;
    for (int b = 0; b < 8; ++b)
      if (!side_inequality_check(g, b, zin)) sides_ok = false;
    lemma_ok = lemma_bounds_check(g, zin);
  } catch (const std::exception&) {
    interior_ok = false;
  }
  out.note(tag + "interior witness", interior_ok, os);
  out.note(tag + "side inequalities (metric = coordinate)", sides_ok, os);
  out.note(tag + "lemma bounds", lemma_ok, os);

  // Giraud ridges.
  bool gir = true;
  for (const auto& r : ridge_table())
    if (r.type == 'G' && !giraud_check(g, r.label)) gir = false;
  out.note(tag + "giraud ridges", gir, os);

  // Cone-metric area identity and move equations on random configurations.
  std::mt19937_64 rng2(seed + 99);
  std::normal_distribution<double> nd;
  bool area_ok = true, move_ok = true;
  for (int i = 0; i < 100; ++i) {
    const Vec3 z(cplx(nd(rng2), nd(rng2)), cplx(nd(rng2), nd(rng2)), cplx(nd(rng2), nd(rng2)));
    if (area_form_defect(g.theta, g.phi, z) > 1e-9 * (1.0 + z.squaredNorm())) area_ok = false;
    for (auto mv : {Move::R1, Move::R2})
      for (const auto& [name, res] : move_vertex_equations(g, mv, z))
        if (res > 1e-9 * (1.0 + z.norm())) move_ok = false;
  }
  out.note(tag + "octagon area identity", area_ok, os);
  out.note(tag + "octagon move equations", move_ok, os);

  // Poincare data: side pairings, cycles, Euler characteristic, presentation.
  bool sp_ok = true;
  for (const auto& e : side_pairing_report(g))
    if (!e.verified) sp_ok = false;
  out.note(tag + "side pairings", sp_ok, os);
  bool cyc_ok = true;
  for (const auto& row : cycle_table())
    if (row.applicable(lp) && cycle_relation_defect(g, row) > tol) cyc_ok = false;
  out.note(tag + "ridge cycles", cyc_ok, os);
  out.note(tag + "euler characteristic", euler_orbit_sum(lp) == euler_closed_form(lp), os);
  out.note(tag + "presentation relators", presentation_defect(g, presentation(lp)) <= tol, os);
  if (lp.symmetric)
    out.note(tag + "symmetric presentation relators",
             presentation_defect(g, symmetric_presentation(lp)) <= tol, os);
}

int cmd_verify(const Options& opt, bool all) {
  std::ofstream file;
  std::ostream& os = open_out(opt, file);
  VerifyOutcome out;
  std::ostream* text = opt.format == "json" ? nullptr : &os;
  if (all) {
    for (const auto& lp : lattice_table()) verify_row(lp, opt.tol, opt.seed, out, text);
  } else {
    verify_row(parse_row(opt), opt.tol, opt.seed, out, text);
  }
  if (opt.format == "json") {
    json j;
    j["checks"] = out.checks;
    j["failures"] = out.failures;
    j["details"] = out.details;
    os << j.dump(2) << "\n";
  } else {
    os << out.checks << " checks, " << out.failures << " failures\n";
  }
  return out.failures == 0 ? 0 : 1;
}

int cmd_export(const Options& opt) {
  const LatticeParams lp = parse_row(opt);
  const GeneratorSet g = build_generators(lp);
  std::ofstream file;
  std::ostream& os = open_out(opt, file);
  json j = row_json(lp);
  json verts = json::array();
  for (const auto& v : vertex_table(g))
    verts.push_back({{"index", v.index}, {"z", jvec(v.z)}, {"w", jvec(v.w)}});
  j["vertices"] = verts;
  json lines = json::array();
  for (const auto& line : line_table(g)) {
    json jl;
    jl["label"] = line.label;
    jl["polar"] = jvec(line.polar);
    jl["vertices"] = json::array();
    for (int i = 0; i < line.n_vertices; ++i) jl["vertices"].push_back(line.vertices[i]);
    lines.push_back(jl);
  }
  j["lines"] = lines;
  const FacetComplex fc = facet_complex(lp);
  json ridges = json::array();
  for (const auto& r : fc.ridges)
    ridges.push_back({{"label", r.label},
                      {"type", std::string(1, r.type)},
                      {"vertices", r.vertices}});
  j["ridges"] = ridges;
  json edges = json::array();
  for (const auto& e : fc.edges)
    edges.push_back({{"vertices", {e.va, e.vb}}, {"ridges", e.ridges}});
  j["edges"] = edges;
  j["sides"] = fc.sides;
  json cycles = json::array();
  for (const auto& row : cycle_table())
    cycles.push_back({{"start", row.start_ridge},
                      {"word", row.word},
                      {"ell", row.ell},
                      {"order", row.order(lp).str()},
                      {"applicable", row.applicable(lp)}});
  j["cycles"] = cycles;
  json orbits = json::array();
  for (const auto& row : orbit_table(lp))
    orbits.push_back({{"members", row.members},
                      {"stabilizer", row.stabilizer_word},
                      {"order", row.stabilizer_order.str()}});
  j["orbits"] = orbits;
  j["euler"] = {{"orbit_sum", euler_orbit_sum(lp).str()},
                {"closed_form", euler_closed_form(lp).str()}};
  os << j.dump(2) << "\n";
  return 0;
}

int cmd_octagon(const Options& opt) {
  const LatticeParams lp = parse_row(opt);
  const GeneratorSet g = build_generators(lp);
  std::mt19937_64 rng(opt.seed);
  std::normal_distribution<double> nd;
  const Vec3 z(cplx(nd(rng), nd(rng)), cplx(nd(rng), nd(rng)), cplx(nd(rng), nd(rng)));
  const Octagon oct = build_octagon(g, z);
  std::ofstream file;
  std::ostream& os = open_out(opt, file);
  if (opt.format == "json") {
    json j;
    j["configuration"] = jvec(z);
    j["vertices"] = json::object();
    for (int i = 0; i < 8; ++i) j["vertices"][Octagon::kNames[i]] = jcplx(oct.v[i]);
    j["signed_area"] = signed_area(oct);
    j["hermitian_norm"] = g.h.norm(z);
    os << j.dump(2) << "\n";
  } else {
    os << "configuration z = " << z.transpose() << "\n";
    for (int i = 0; i < 8; ++i)
      os << "  " << Octagon::kNames[i] << " = " << oct.v[i] << "\n";
    os << "signed area   = " << signed_area(oct) << "\n"
       << "hermitian norm = " << g.h.norm(z) << "\n";
  }
  return 0;
}

int cmd_presentation(const Options& opt) {
  const LatticeParams lp = parse_row(opt);
  const GeneratorSet g = build_generators(lp);
  std::ofstream file;
  std::ostream& os = open_out(opt, file);
  auto render = [&](const Presentation& pr, json& jj) {
    jj["generators"] = pr.generators;
    jj["relators"] = json::array();
    for (const auto& r : pr.relators)
      jj["relators"].push_back({{"name", r.name},
                                {"word", r.word},
                                {"exponent", r.exponent},
                                {"applicable", r.applicable}});
  };
  const Presentation pr = presentation(lp);
  if (opt.format == "json") {
    json j;
    render(pr, j["main"]);
    j["main"]["max_defect"] = presentation_defect(g, pr);
    if (lp.symmetric) {
      const Presentation sp = symmetric_presentation(lp);
      render(sp, j["symmetric"]);
      j["symmetric"]["max_defect"] = presentation_defect(g, sp);
    }
    os << j.dump(2) << "\n";
  } else {
    os << "<J, P, R1, R2 |";
    for (const auto& r : pr.relators)
      if (r.applicable) os << " " << r.name << ";";
    os << ">\n";
    os << "max relator defect: " << presentation_defect(g, pr) << "\n";
    if (lp.symmetric) {
      const Presentation sp = symmetric_presentation(lp);
      os << "symmetric: <K, R1 |";
      for (const auto& r : sp.relators)
        if (r.applicable) os << " " << r.name << ";";
      os << ">\n";
      os << "max relator defect: " << presentation_defect(g, sp) << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deligne-Mostow lattice verification (three-fold symmetry census)"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool needs_row) {
    if (needs_row) {
      sub->add_option("--p", opt.p, "order p (integer >= 3)")->required();
      sub->add_option("--k", opt.k, "parameter k (integer or half-integer, e.g. 7/2)")->required();
    }
    sub->add_option("--tol", opt.tol, "numerical tolerance")->capture_default_str();
    sub->add_option("--seed", opt.seed, "random seed")->capture_default_str();
    sub->add_option("--out", opt.out, "output file (default: stdout)");
    sub->add_option("--format", opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };

  auto* list = app.add_subcommand("list", "list the 39 census rows");
  add_common(list, false);
  auto* inspect = app.add_subcommand("inspect", "inspect one row");
  add_common(inspect, true);
  auto* verify = app.add_subcommand("verify", "run the verification battery");
  bool all = false;
  verify->add_flag("--all", all, "verify every census row");
  verify->add_option("--p", opt.p, "order p");
  verify->add_option("--k", opt.k, "parameter k");
  verify->add_option("--tol", opt.tol, "numerical tolerance")->capture_default_str();
  verify->add_option("--seed", opt.seed, "random seed")->capture_default_str();
  verify->add_option("--out", opt.out, "output file (default: stdout)");
  verify->add_option("--format", opt.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  auto* exp = app.add_subcommand("export", "export one row's tables as JSON");
  add_common(exp, true);
  auto* oct = app.add_subcommand("octagon", "print the flattened octagon of a random configuration");
  add_common(oct, true);
  auto* pres = app.add_subcommand("presentation", "print and check the presentation");
  add_common(pres, true);

  CLI11_PARSE(app, argc, argv);

  try {
    if (list->parsed()) return cmd_list(opt);
    if (inspect->parsed()) return cmd_inspect(opt);
    if (verify->parsed()) {
      if (!all && (opt.p.empty() || opt.k.empty())) {
        std::cerr << "verify: need --all or both --p and --k\n";
        return 2;
      }
      return cmd_verify(opt, all);
    }
    if (exp->parsed()) return cmd_export(opt);
    if (oct->parsed()) return cmd_octagon(opt);
    if (pres->parsed()) return cmd_presentation(opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
