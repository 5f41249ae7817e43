#include "mfb/invariants.hpp"

#include "mfb/hj.hpp"

#include <functional>
#include <set>

namespace mfb {

std::vector<BigInt> IntersectionData::torsion() const {
  std::vector<BigInt> t;
  for (const auto& d : snf)
    if (d > 1) t.push_back(d);
  return t;
}

IntersectionData intersection_data(const PlumbGraph& p) {
  IntersectionData r;
  r.rows = p.vertices();
  std::vector<int> row(p.nodes.size(), -1);
  for (int i = 0; i < int(r.rows.size()); ++i) row[r.rows[i]] = i;
  std::vector<int> arrows = p.arrows();
  std::vector<int> col(p.nodes.size(), -1);
  for (int i = 0; i < int(arrows.size()); ++i) col[arrows[i]] = i;
  size_t W = r.rows.size(), NA = arrows.size() + p.dashes.size();
  r.A = zero_matrix(W, W);
  r.I = zero_matrix(W, NA);
  for (int v : r.rows) {
    const auto& n = p.nodes[v];
    if (!n.euler && !p.dash_count(v)) throw ComputeError("intersection data: vertex " + n.id + " has no euler number");
    r.A[row[v]][row[v]] += n.euler.value_or(0);
  }
  for (const auto& e : p.edges) {
    bool aa = p.nodes[e.a].arrow, ba = p.nodes[e.b].arrow;
    if (aa && ba) throw ComputeError("intersection data: edge between arrowheads");
    if (aa || ba) {
      int v = aa ? e.b : e.a, a = aa ? e.a : e.b;
      r.I[row[v]][col[a]] += e.sign;
    } else if (e.a == e.b) {
      r.A[row[e.a]][row[e.a]] += 2 * e.sign;
    } else {
      r.A[row[e.a]][row[e.b]] += e.sign;
      r.A[row[e.b]][row[e.a]] += e.sign;
    }
  }
  for (size_t k = 0; k < p.dashes.size(); ++k) r.I[row[p.dashes[k].at]][arrows.size() + k] += 1;
  i64 rA = rank(r.A);
  Matrix AI = r.A;
  for (size_t i = 0; i < W; ++i) AI[i].insert(AI[i].end(), r.I[i].begin(), r.I[i].end());
  r.corankA = i64(W) - rA;
  r.corankAI = i64(W + NA) - rank(AI);
  r.snf = smith_diagonal(r.A);
  r.det_abs = r.corankA == 0 ? BigInt(abs(determinant(r.A))) : BigInt(0);
  return r;
}

BoundaryNumbers boundary_numbers(const PlumbGraph& p) {
  BoundaryNumbers b;
  Stats s = graph_stats(p, true);
  auto id = intersection_data(p);
  b.c = s.c;
  b.g = s.g_sum;
  b.corankA = id.corankA;
  b.corankAI = id.corankAI;
  b.n_arrows = s.n_A + i64(p.dashes.size());
  return b;
}

namespace {

BiDivisor unit() {
  BiDivisor d;
  d.add({0, 1}, {0, 1});
  return d;
}

Branch branch_at(const std::vector<Branch>& bs, int j) {
  if (j < 0 || j >= int(bs.size())) throw ComputeError("branch index " + std::to_string(j) + " out of range");
  return bs[j];
}

}  // namespace

BiDivisor div_phi(const GammaC& g0) {
  GammaC g = prepare(g0, false);
  BiDivisor d = unit();
  for (int w : g.vertices()) {
    const auto& v = g.nodes[w];
    d += lambda_div(v.m, v.n, v.nu).scaled(2 * v.genus + delta(g, w) - 2);
  }
  return d;
}

BiDivisor div_j(const GammaC& g0, int j) {
  GammaC g = prepare(g0, false);
  Branch b = branch_at(branches_of(g), j);
  BiDivisor d;
  for (i64 k = 0; k < b.d; ++k) d.add({0, 1}, Root::make(k, b.d));
  for (int w : b.vertices) {
    const auto& v = g.nodes[w];
    d += lambda_div(v.m, v.n, v.nu).scaled(delta(g, w) - 2);
  }
  return d;
}

BiDivisor div_prime_j(const GammaC& g0, int j) {
  GammaC g = prepare(g0, false);
  Branch b = branch_at(branches_of(g), j);
  BiDivisor d = unit();
  for (int w : b.vertices) {
    const auto& v = g.nodes[w];
    d += lambda_div(v.m, v.n, exact_div(v.nu, b.d, "nu/d_j")).scaled(delta(g, w) - 2);
  }
  return d;
}

Which parse_which(const std::string& s) {
  for (int k = 0; k <= int(Which::jprime_hor_on_ver1); ++k)
    if (which_name(Which(k)) == s) return Which(k);
  throw ValidationError("unknown charpoly selector '" + s + "'");
}

std::string which_name(Which w) {
  static const char* names[] = {"phi-hor", "phi-ver", "phi-hor-on-ver1", "j-hor", "j-ver", "j-hor-on-ver1",
                                "jprime-hor", "jprime-ver", "jprime-hor-on-ver1"};
  return names[int(w)];
}

bool which_needs_branch(Which w) { return int(w) >= int(Which::j_hor); }

CycloPoly charpoly(Which which, const GammaC& g0, int j) {
  GammaC g = prepare(g0, false);
  CycloPoly p;
  auto factor = [&](int w, i64 coeff) {
    const auto& v = g.nodes[w];
    i64 mn = gcd(v.m, v.n);
    switch (which) {
      case Which::phi_hor:
      case Which::j_hor:
        return CycloPoly::tk(v.m, checked_mul(v.nu, coeff));
      case Which::phi_ver:
      case Which::j_ver:
        return CycloPoly::tk(checked_mul(v.m, v.nu) / mn, checked_mul(mn, coeff));
      case Which::phi_hor_on_ver1:
      case Which::j_hor_on_ver1:
      case Which::jprime_hor_on_ver1:
        return CycloPoly::tk(mn, coeff);
      default:
        return CycloPoly();
    }
  };
  if (!which_needs_branch(which)) {
    p = CycloPoly::tk(1);
    for (int w : g.vertices()) p *= factor(w, 2 * g.nodes[w].genus + delta(g, w) - 2);
  } else {
    Branch b = branch_at(branches_of(g), j);
    switch (which) {
      case Which::j_hor: p = CycloPoly::tk(1, b.d); break;
      case Which::j_ver: p = CycloPoly::tk(b.d); break;
      default: p = CycloPoly::tk(1); break;
    }
    for (int w : b.vertices) {
      const auto& v = g.nodes[w];
      i64 coeff = delta(g, w) - 2;
      i64 mn = gcd(v.m, v.n);
      if (which == Which::jprime_hor)
        p *= CycloPoly::tk(v.m, checked_mul(exact_div(v.nu, b.d, "nu/d_j"), coeff));
      else if (which == Which::jprime_ver)
        p *= CycloPoly::tk(exact_div(checked_mul(v.m, v.nu), checked_mul(b.d, mn), "jprime-ver"), checked_mul(mn, coeff));
      else
        p *= factor(w, coeff);
    }
  }
  if (!p.is_polynomial()) throw ComputeError("charpoly " + which_name(which) + " has a negative exponent");
  return p;
}

namespace {

std::vector<std::vector<int>> upper_components_of(const GammaC& g) {
  std::vector<std::vector<int>> out;
  for (const auto& b : branches_of(g)) out.push_back(b.vertices);
  return out;
}

}  // namespace

CycloPoly p_h_cover(const GammaC& g0, PhVariant variant, int j) {
  bool hat = variant == PhVariant::hat || variant == PhVariant::branch_hat;
  bool branch = variant == PhVariant::branch || variant == PhVariant::branch_hat;
  GammaC g = prepare(g0, !hat);
  std::set<int> keep;
  if (branch) {
    auto comps = upper_components_of(g);
    if (j < 0 || j >= int(comps.size())) throw ComputeError("branch index out of range");
    keep.insert(comps[j].begin(), comps[j].end());
  } else {
    for (int w : g.vertices()) keep.insert(w);
  }
  CycloPoly p = CycloPoly::tk(1);
  if (!hat) {
    for (int w : keep) p /= CycloPoly::tk(vertex_cover_index(g, w));
    for (int e = 0; e < int(g.edges.size()); ++e) {
      const auto& x = g.edges[e];
      if (keep.count(x.a) && keep.count(x.b)) p *= CycloPoly::tk(edge_cover_index(g, e));
    }
    return p;
  }
  Collapsed col = collapse_subtrees(g);
  std::set<int> seen;
  for (int w : keep) {
    int r = col.record_of[w];
    if (r < 0)
      p /= CycloPoly::tk(vertex_cover_index(g, w));
    else if (seen.insert(r).second)
      p /= CycloPoly::tk(col.records[r].n_gamma);
  }
  for (int e = 0; e < int(g.edges.size()); ++e) {
    const auto& x = g.edges[e];
    if (!keep.count(x.a) || !keep.count(x.b) || g.vanishing(e)) continue;
    p *= CycloPoly::tk(edge_cover_index(g, e));
  }
  return p;
}

RankReport rank_report(const GammaC& g0) {
  RankReport r;
  GammaC gB = prepare(g0, true);
  PlumbGraph G = main_algorithm(gB);
  auto bn = boundary_numbers(G);
  r.rank_h1_boundary = 2 * bn.g + bn.c + bn.corankA;
  r.rank_h1_minus_vg = 2 * bn.g + bn.c + bn.corankAI;
  Stats sc = graph_stats(g0);
  auto cp = charpoly_boundary(g0);
  i64 corank = cp.hat ? boundary_numbers(collapsing_algorithm(prepare(g0, false))).corankA : bn.corankA;
  r.rank_h1_boundary_eig1 = 2 * sc.g_sum + sc.c + corank;
  if (cp.exact && cp.poly.exponent(1) != r.rank_h1_boundary_eig1)
    throw ComputeError("1-eigenspace rank mismatch: " + std::to_string(r.rank_h1_boundary_eig1) +
                       " vs charpoly multiplicity " + std::to_string(cp.poly.exponent(1)));
  r.geneig1_phi = 2 * bn.g + 2 * bn.c + bn.n_arrows - 1;
  r.jordan2_phi = bn.c - bn.corankAI + bn.n_arrows;
  r.geneig1_phi_divisor = charpoly(Which::phi_hor_on_ver1, g0).degree();
  if (r.geneig1_phi != r.geneig1_phi_divisor)
    throw ComputeError("eigenvalue-1 rank mismatch: graph side " + std::to_string(r.geneig1_phi) + ", divisor side " +
                       std::to_string(r.geneig1_phi_divisor));
  r.transversal = transversal_data(g0);
  auto g2 = extract_g2(g0);
  for (size_t j = 0; j < g2.size(); ++j) {
    auto b = boundary_numbers(g2[j]);
    r.rank_h1_partial2j.push_back(2 * b.g + b.c + b.corankAI);
    r.geneig1_j.push_back(2 * b.g + 2 * b.c + b.n_arrows - 1);
    r.jordan2_j.push_back(b.c - b.corankAI + b.n_arrows);
    r.geneig1_j_divisor.push_back(charpoly(Which::j_hor_on_ver1, g0, int(j)).degree());
    if (r.geneig1_j.back() != r.geneig1_j_divisor.back())
      throw ComputeError("eigenvalue-1 rank mismatch on branch " + std::to_string(j));
  }
  return r;
}

namespace {

bool unicolored(const GammaC& g, const std::set<int>* within) {
  int w = 0;
  for (int e = 0; e < int(g.edges.size()); ++e) {
    const auto& x = g.edges[e];
    if (g.nodes[x.a].arrow || g.nodes[x.b].arrow) continue;
    if (within && (!within->count(x.a) || !within->count(x.b))) continue;
    if (g.vanishing(e)) return false;
    if (w && x.w != w) return false;
    w = x.w;
  }
  return true;
}

CycloPoly vertex_product(const GammaC& g) {
  CycloPoly p;
  for (int w : g.vertices()) {
    const auto& v = g.nodes[w];
    p *= CycloPoly::tk(gcd(v.m, v.n), 2 * v.genus + delta(g, w) - 2);
  }
  return p;
}

}  // namespace

BoundaryCharpoly charpoly_boundary(const GammaC& g0) {
  BoundaryCharpoly out;
  GammaC gA = prepare(g0, false);
  CycloPoly prod = vertex_product(gA);
  bool has_vanishing = false;
  for (int e = 0; e < int(gA.edges.size()); ++e) has_vanishing |= gA.vanishing(e);

  auto finish = [&](const BoundaryNumbers& b, const CycloPoly& ph, const std::string& why, bool hat = false) {
    out.exact = true;
    out.hat = hat;
    out.reason = why;
    out.p_h = ph;
    out.poly = CycloPoly::tk(1, 2 + b.corankA - b.n_arrows) / ph * prod;
    if (!out.poly.is_polynomial()) throw ComputeError("boundary charpoly has a negative exponent");
    return out;
  };

  GammaC gB = prepare(g0, true);
  PlumbGraph G = main_algorithm(gB);
  auto b = boundary_numbers(G);
  CycloPoly ph = p_h_cover(g0, PhVariant::full);
  if (!has_vanishing && unicolored(gA, nullptr)) return finish(b, ph, "unicolored");
  if (b.c == 0) return finish(b, ph, "c(G)=0");
  if (b.corankAI == b.n_arrows) return finish(b, ph, "corank(A,I)=#A");
  {
    auto branches = branches_of(gB);
    auto g2 = extract_g2(g0);
    bool all = !branches.empty() && branches.size() == g2.size();
    for (size_t j = 0; all && j < branches.size(); ++j) {
      std::set<int> in(branches[j].vertices.begin(), branches[j].vertices.end());
      auto b2 = boundary_numbers(g2[j]);
      bool ok = unicolored(gB, &in) || b2.c == 0 || b2.corankAI == i64(branches[j].cutting_edges.size());
      all = ok;
    }
    if (all) return finish(b, ph, "every branch");
  }
  if (has_vanishing) {
    Collapsed col = collapse_subtrees(gA);
    PlumbGraph Gh = collapsing_algorithm(gA);
    auto bh = boundary_numbers(Gh);
    CycloPoly phh = p_h_cover(g0, PhVariant::hat);
    if (unicolored(col.ghat, nullptr)) return finish(bh, phh, "almost unicolored", true);
    if (bh.c == 0) return finish(bh, phh, "c(Ghat)=0", true);
    if (bh.corankAI == bh.n_arrows) return finish(bh, phh, "corank(A,I)=#A on Ghat", true);
  }
  out.exact = false;
  out.reason = "no sufficient condition holds";
  out.known_factor = prod;
  out.p_h = ph;
  out.n_base = 2 + b.corankA - b.n_arrows - b.c;
  return out;
}

Rational orbifold_euler(const PlumbGraph& p0) {
  PlumbGraph p = strip_to_boundary(p0);
  Stats s = graph_stats(p);
  if (s.c != 0) throw ComputeError("orbifold euler: graph is not a tree");
  int n = int(p.nodes.size());
  if (n == 0) throw ComputeError("orbifold euler: empty graph");
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = p.degree(v);
  int center = -1, big = 0;
  for (int v = 0; v < n; ++v)
    if (deg[v] >= 3) {
      ++big;
      center = v;
    }
  if (big > 1) throw ComputeError("orbifold euler: graph is not star-shaped");
  if (center < 0) {
    center = 0;
    for (int v = 0; v < n; ++v)
      if (p.nodes[v].genus > p.nodes[center].genus || (p.nodes[v].genus == p.nodes[center].genus && deg[v] > deg[center]))
        center = v;
  }
  for (int v = 0; v < n; ++v) {
    if (!p.nodes[v].euler) throw ComputeError("orbifold euler: missing euler at " + p.nodes[v].id);
    if (v != center && p.nodes[v].genus) throw ComputeError("orbifold euler: genus off the centre");
  }
  Rational e = *p.nodes[center].euler;
  for (int e0 : p.incident(center)) {
    std::vector<i64> leg;
    int prev = center, cur = p.other(e0, center);
    while (true) {
      leg.push_back(*p.nodes[cur].euler);
      int next = -1;
      for (int f : p.incident(cur))
        if (p.other(f, cur) != prev) next = p.other(f, cur);
      if (next < 0) break;
      prev = cur;
      cur = next;
    }
    Rational v = leg.back();
    for (int i = int(leg.size()) - 2; i >= 0; --i) {
      if (v == 0) throw ComputeError("orbifold euler: zero denominator");
      v = Rational(leg[i]) - 1 / v;
    }
    if (v == 0) throw ComputeError("orbifold euler: zero denominator");
    e -= 1 / v;
  }
  return e;
}

}  // namespace mfb
