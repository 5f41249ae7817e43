#include "mfb/algorithm.hpp"
#include "mfb/builders.hpp"
#include "mfb/calculus.hpp"
#include "mfb/invariants.hpp"
#include "mfb/io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace mfb;

namespace {

bool g_json = false;

std::string big(const BigInt& x) { return x.str(); }

json poly_json(const CycloPoly& p) {
  json j;
  j["factored"] = p.str();
  j["cyclotomic"] = p.cyclotomic_str();
  j["degree"] = p.degree();
  if (p.is_polynomial()) {
    json c = json::array();
    for (const auto& x : p.expand()) c.push_back(big(x));
    j["coefficients"] = c;
  }
  return j;
}

json torsion_json(const std::vector<BigInt>& t) {
  json a = json::array();
  for (const auto& x : t) a.push_back(big(x));
  return a;
}

void emit(const json& report, const std::string& text) {
  if (g_json)
    std::cout << report.dump(2) << "\n";
  else
    std::cout << text;
}

void save(const std::string& out, const std::string& content) {
  if (out.empty() || out == "-")
    std::cout << content;
  else
    write_file(out, content);
}

std::string file_kind(const std::string& content) {
  std::istringstream in(content);
  std::string line;
  while (std::getline(in, line)) {
    if (auto k = line.find('#'); k != std::string::npos) line.erase(k);
    std::istringstream ls(line);
    std::string w;
    if (ls >> w) return w;
  }
  return "";
}

json branch_json(const Branch& b) {
  json j;
  j["vertices"] = b.vertices.size();
  j["d"] = b.d;
  j["cutting_edges"] = b.cutting_edges.size();
  j["d_e"] = b.d_e;
  j["transversal_branches"] = b.n_branches;
  j["gluing_tori"] = b.gluing_tori;
  return j;
}

std::string branch_text(const Branch& b, size_t j) {
  std::ostringstream s;
  s << "branch " << j << ": d=" << b.d << " gluing_tori=" << b.gluing_tori << " #TSigma=" << b.n_branches << " d(e)=";
  for (size_t i = 0; i < b.d_e.size(); ++i) s << (i ? "," : "") << b.d_e[i];
  s << "\n";
  return s.str();
}

int cmd_validate(const std::string& path) {
  std::string content = read_file(path);
  std::string kind = file_kind(content);
  json r;
  std::ostringstream t;
  if (kind == "gammaC") {
    auto g = parse_gammaC(content);
    auto rep = validate_gammaC(g);
    r["kind"] = "gammaC";
    r["ok"] = rep.ok();
    auto names = [&](const std::vector<int>& es) {
      json a = json::array();
      for (int e : es) a.push_back(g.edge_name(e));
      return a;
    };
    r["compatibility_errors"] = names(rep.compatibility_errors);
    r["structural"] = rep.structural;
    r["assumption_a_violations"] = names(rep.assumption_a_violations);
    r["assumption_b_violations"] = names(rep.assumption_b_violations);
    t << (rep.ok() ? "ok" : "invalid") << ": gammaC with " << g.vertices().size() << " vertices, "
      << g.arrows().size() << " arrows, " << g.edges.size() << " edges\n";
    for (int e : rep.compatibility_errors) t << "incompatible edge " << g.edge_name(e) << "\n";
    for (const auto& s : rep.structural) t << s << "\n";
    for (int e : rep.assumption_a_violations) t << "assumption A fails at " << g.edge_name(e) << "\n";
    for (int e : rep.assumption_b_violations) t << "assumption B fails at " << g.edge_name(e) << "\n";
    emit(r, t.str());
    return rep.ok() ? 0 : 2;
  }
  if (kind == "plumb") {
    auto p = parse_plumb(content);
    bool has_mult = false;
    for (const auto& n : p.nodes) has_mult |= n.mult.has_value();
    r["kind"] = "plumb";
    bool ok = true;
    if (has_mult) {
      auto mc = check_multiplicity_system(p);
      ok = mc.ok;
      json f = json::array();
      for (int v : mc.failures) f.push_back(p.nodes[v].id);
      r["multiplicity_failures"] = f;
      for (int v : mc.failures) t << "multiplicity system fails at " << p.nodes[v].id << "\n";
    }
    r["ok"] = ok;
    t << (ok ? "ok" : "invalid") << ": plumbing graph with " << p.vertices().size() << " vertices\n";
    emit(r, t.str());
    return ok ? 0 : 2;
  }
  throw ValidationError("unknown file kind '" + kind + "'");
}

PlumbGraph maybe_strip(const PlumbGraph& p, bool boundary) { return boundary ? strip_to_boundary(p) : p; }

int cmd_signature(const std::string& path) {
  auto p = load_plumb(path);
  auto s = invariant_signature(p);
  json r;
  r["cg"] = s.cg;
  r["h1rank"] = s.h1rank;
  r["n_arrows"] = s.n_arrows;
  r["torsion"] = torsion_json(s.torsion);
  r["det_abs"] = big(s.det_abs);
  emit(r, s.str() + "\n");
  return 0;
}

int cmd_snf(const std::string& path) {
  auto p = load_plumb(path);
  auto id = intersection_data(p);
  auto st = graph_stats(p, true);
  i64 free_rank = 2 * st.g_sum + st.c + id.corankA;
  json r;
  r["free_rank"] = free_rank;
  r["torsion"] = torsion_json(id.torsion());
  json d = json::array();
  for (const auto& x : id.snf) d.push_back(big(x));
  r["snf_diagonal"] = d;
  r["corank_A"] = id.corankA;
  std::ostringstream t;
  t << "free rank " << free_rank << "\ntorsion [";
  auto tor = id.torsion();
  for (size_t i = 0; i < tor.size(); ++i) t << (i ? "," : "") << tor[i];
  t << "]\n";
  emit(r, t.str());
  return 0;
}

int cmd_orbifold(const std::string& path) {
  auto e = orbifold_euler(load_plumb(path));
  json r;
  r["orbifold_euler"] = to_string(e);
  r["negative_definite"] = e < 0;
  emit(r, to_string(e) + "\n");
  return 0;
}

int cmd_invariants(const std::string& path) {
  auto g = load_gammaC(path);
  auto rr = rank_report(g);
  json r;
  r["rank_h1_boundary"] = rr.rank_h1_boundary;
  r["rank_h1_minus_vg"] = rr.rank_h1_minus_vg;
  r["rank_h1_boundary_eig1"] = rr.rank_h1_boundary_eig1;
  r["rank_h1_partial2"] = rr.rank_h1_partial2j;
  r["geneig1_phi"] = rr.geneig1_phi;
  r["geneig1_j"] = rr.geneig1_j;
  r["jordan2_phi"] = rr.jordan2_phi;
  r["jordan2_j"] = rr.jordan2_j;
  json bs = json::array();
  for (const auto& b : rr.transversal) bs.push_back(branch_json(b));
  r["transversal"] = bs;
  std::ostringstream t;
  t << "rank H1(boundary) " << rr.rank_h1_boundary << "\n"
    << "rank H1(boundary minus V_g) " << rr.rank_h1_minus_vg << "\n"
    << "rank H1(boundary) eigenvalue 1 " << rr.rank_h1_boundary_eig1 << "\n"
    << "vertical eigenvalue-1 rank " << rr.geneig1_phi << "\n"
    << "2-Jordan blocks at 1 " << rr.jordan2_phi << "\n";
  for (size_t j = 0; j < rr.rank_h1_partial2j.size(); ++j)
    t << "branch " << j << ": rank H1(partial_2) " << rr.rank_h1_partial2j[j] << ", eigenvalue-1 rank "
      << rr.geneig1_j[j] << ", 2-Jordan blocks " << rr.jordan2_j[j] << "\n";
  for (size_t j = 0; j < rr.transversal.size(); ++j) t << branch_text(rr.transversal[j], j);
  emit(r, t.str());
  return 0;
}

int cmd_charpoly(const std::string& which, int branch, const std::string& path) {
  auto g = load_gammaC(path);
  Which w = parse_which(which);
  auto p = charpoly(w, g, branch);
  json r;
  r["which"] = which_name(w);
  if (which_needs_branch(w)) r["branch"] = branch;
  r["poly"] = poly_json(p);
  emit(r, p.str() + "\n");
  return 0;
}

int cmd_boundary_charpoly(const std::string& path) {
  auto g = load_gammaC(path);
  auto b = charpoly_boundary(g);
  json r;
  r["exact"] = b.exact;
  r["reason"] = b.reason;
  r["p_h"] = poly_json(b.p_h);
  std::string text;
  if (b.exact) {
    r["poly"] = poly_json(b.poly);
    text = b.poly.str() + "\n";
  } else {
    r["t_minus_1_base_exponent"] = b.n_base;
    r["known_factor"] = poly_json(b.known_factor);
    text = "undetermined: (t-1)^" + std::to_string(b.n_base) + " * Q(t) / P_h * " + b.known_factor.str() + "\n";
  }
  emit(r, text);
  return 0;
}

int cmd_reduce(const std::string& in, const std::string& out, bool no_r5, bool trace) {
  auto p = load_plumb(in);
  auto rr = reduce_traced(p, !no_r5);
  if (trace)
    for (const auto& s : rr.steps) std::cerr << s.rule << " " << s.vertex << "\n";
  save(out, write_plumb(rr.graph));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Milnor fiber boundary graphs and invariants"};
  app.require_subcommand(1);
  app.add_flag("--json", g_json, "emit structured reports");

  std::string in, out, mode = "resolution", part, which, assumption;
  bool boundary = false, no_r5 = false, trace = false;
  int branch = 0;
  i64 mu = 0, I = 0, a = 1, b = 1;

  auto* validate = app.add_subcommand("validate", "check a graph file");
  validate->add_option("file", in)->required();

  auto* preprocess = app.add_subcommand("preprocess", "apply the Assumption A or B blow-ups");
  preprocess->add_option("--assumption", assumption)->required()->check(CLI::IsMember({"a", "b"}));
  preprocess->add_option("in", in)->required();
  preprocess->add_option("out", out)->required();

  auto* main_alg = app.add_subcommand("main-alg", "plumbing graph of the Milnor fiber boundary");
  main_alg->add_option("gammaC", in)->required();
  main_alg->add_option("-o", out);
  main_alg->add_flag("--boundary", boundary, "drop arrowheads and multiplicities");

  auto* collapse = app.add_subcommand("collapse-alg", "collapsing variant of the main algorithm");
  collapse->add_option("gammaC", in)->required();
  collapse->add_option("-o", out);
  collapse->add_flag("--boundary", boundary, "drop arrowheads and multiplicities");

  auto* extract = app.add_subcommand("extract", "graphs of the two boundary pieces");
  extract->add_option("--part", part)->required()->check(CLI::IsMember({"g1", "g2"}));
  extract->add_option("--mode", mode)->check(CLI::IsMember({"resolution", "boundary", "boundary-minus-vg"}));
  extract->add_option("gammaC", in)->required();
  extract->add_option("-o", out);

  auto* reduce_cmd = app.add_subcommand("reduce", "reduced plumbing calculus to a fixpoint");
  reduce_cmd->add_flag("--no-r5", no_r5);
  reduce_cmd->add_flag("--trace", trace, "list the applied moves on stderr");
  reduce_cmd->add_option("plumb", in)->required();
  reduce_cmd->add_option("-o", out);
  auto* nf_cmd = app.add_subcommand("normal-form", "Seifert or lens normal form of a reduced star-shaped graph");
  nf_cmd->add_option("plumb", in)->required();
  nf_cmd->add_option("-o", out);

  auto* signature = app.add_subcommand("signature", "invariant signature of a plumbing graph");
  signature->add_option("plumb", in)->required();

  auto* invariants = app.add_subcommand("invariants", "rank report and transversal data");
  invariants->add_option("gammaC", in)->required();

  auto* charpoly_cmd = app.add_subcommand("charpoly", "characteristic polynomial from the divisors");
  charpoly_cmd->add_option("--which", which)->required();
  charpoly_cmd->add_option("--branch", branch);
  charpoly_cmd->add_option("gammaC", in)->required();

  auto* bcp = app.add_subcommand("boundary-charpoly", "characteristic polynomial on H1 of the boundary");
  bcp->add_option("gammaC", in)->required();

  auto* snf = app.add_subcommand("snf", "integral homology of a plumbing graph");
  snf->add_option("plumb", in)->required();

  auto* orb = app.add_subcommand("orbifold-euler", "orbifold Euler number of a star-shaped graph");
  orb->add_option("plumb", in)->required();

  auto* build = app.add_subcommand("build", "construct graphs from combinatorial data");
  build->require_subcommand(1);
  auto* b_cyl = build->add_subcommand("cylinder", "cylinder of a plane curve from its resolution graph");
  b_cyl->add_option("resolution", in)->required();
  b_cyl->add_option("-o", out);
  auto* b_hom = build->add_subcommand("homogeneous", "homogeneous singularity from curve data");
  b_hom->add_option("data", in)->required();
  b_hom->add_option("-o", out);
  auto* b_arr = build->add_subcommand("arrangement", "line arrangement");
  b_arr->add_option("data", in)->required();
  b_arr->add_option("-o", out);
  auto* b_xayb = build->add_subcommand("xayb", "Seifert graph of f(x^a y^b, z)");
  b_xayb->add_option("--mu", mu)->required();
  b_xayb->add_option("--I", I)->required();
  b_xayb->add_option("--a", a)->required();
  b_xayb->add_option("--b", b)->required();
  b_xayb->add_option("-o", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*validate) return cmd_validate(in);
    if (*preprocess) {
      auto g = load_gammaC(in);
      write_file(out, write_gammaC(assumption == "a" ? blowup_assumption_a(g) : prepare(g, true)));
      return 0;
    }
    if (*main_alg) {
      save(out, write_plumb(maybe_strip(main_algorithm(prepare(load_gammaC(in), true)), boundary)));
      return 0;
    }
    if (*collapse) {
      save(out, write_plumb(maybe_strip(collapsing_algorithm(prepare(load_gammaC(in), false)), boundary)));
      return 0;
    }
    if (*extract) {
      auto g = load_gammaC(in);
      if (part == "g1") {
        G1Mode m = mode == "resolution" ? G1Mode::resolution
                   : mode == "boundary" ? G1Mode::boundary
                                        : G1Mode::boundary_minus_vg;
        save(out, write_plumb(extract_g1(g, m)));
        return 0;
      }
      auto parts = extract_g2(g);
      for (size_t j = 0; j < parts.size(); ++j) {
        std::string target = out;
        if (!out.empty() && out != "-" && parts.size() > 1) target = out + "." + std::to_string(j);
        save(target, write_plumb(parts[j]));
      }
      return 0;
    }
    if (*reduce_cmd) return cmd_reduce(in, out, no_r5, trace);
    if (*nf_cmd) {
      save(out, write_plumb(normal_form(load_plumb(in))));
      return 0;
    }
    if (*signature) return cmd_signature(in);
    if (*invariants) return cmd_invariants(in);
    if (*charpoly_cmd) return cmd_charpoly(which, branch, in);
    if (*bcp) return cmd_boundary_charpoly(in);
    if (*snf) return cmd_snf(in);
    if (*orb) return cmd_orbifold(in);
    if (*b_cyl) {
      save(out, write_gammaC(build_cylinder(load_plumb(in))));
      return 0;
    }
    if (*b_hom) {
      auto dir = std::filesystem::path(in).parent_path().string();
      save(out, write_gammaC(build_homogeneous(parse_curve_data(read_file(in), dir))));
      return 0;
    }
    if (*b_arr) {
      auto [d, pts] = parse_arrangement(read_file(in));
      save(out, write_gammaC(build_arrangement(d, pts)));
      return 0;
    }
    if (*b_xayb) {
      save(out, write_plumb(build_xayb(mu, I, a, b)));
      return 0;
    }
  } catch (const ValidationError& e) {
    std::cerr << "error: validation: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: computation: " << e.what() << "\n";
    return 3;
  }
  return 1;
}
