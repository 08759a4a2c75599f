#include "vq/json_io.hpp"

#include <sstream>

#include "vq/errors.hpp"

namespace vq {

json field_to_json(const Field& f) {
  return json{{"p", f.p()}, {"d", f.degree()}, {"sigma", f.has_involution() ? "frobenius" : "id"}};
}

const Field& field_from_json(const json& j) {
  if (!j.contains("p") || !j.contains("d")) throw input_error("field json: missing p or d");
  std::string sig = j.value("sigma", "id");
  if (sig != "id" && sig != "frobenius") throw input_error("field json: bad sigma");
  return Field::get(j.at("p").get<int>(), j.at("d").get<int>(), sig == "frobenius");
}

json lambda_to_json(const LambdaSpace& lam) {
  json j;
  j["case"] = to_string(lam.form_case());
  j["field"] = field_to_json(lam.K());
  std::vector<int> k0;
  for (int x = 0; x < lam.K().q(); ++x)
    if (lam.in_k0(uint8_t(x))) k0.push_back(x);
  j["K0"] = k0;
  json L;
  L["dim"] = lam.ldim();
  std::vector<std::vector<int>> gram(lam.ldim(), std::vector<int>(lam.ldim()));
  for (int i = 0; i < lam.ldim(); ++i)
    for (int k = 0; k < lam.ldim(); ++k) gram[i][k] = lam.gram_f().at(i, k);
  L["gram_f"] = gram;
  L["q_table"] = std::vector<int>(lam.q_table().begin(), lam.q_table().end());
  j["L"] = L;
  return j;
}

LambdaSpace lambda_from_json(const json& j) {
  std::string cs = j.at("case").get<std::string>();
  FormCase c;
  if (cs == "I") c = FormCase::I;
  else if (cs == "II") c = FormCase::II;
  else if (cs == "II-symplectic") c = FormCase::IISymplectic;
  else throw input_error("lambda json: unknown case tag '" + cs + "'");
  const Field& K = field_from_json(j.at("field"));
  uint64_t k0 = 0;
  if (j.contains("K0"))
    for (int x : j.at("K0").get<std::vector<int>>()) {
      if (x < 0 || x >= K.q()) throw input_error("lambda json: K0 entry out of range");
      k0 |= uint64_t(1) << x;
    }
  const json& L = j.at("L");
  int ldim = L.at("dim").get<int>();
  if (L.contains("blocks")) {
    const json& b = L.at("blocks");
    int hyp = b.value("hyperbolic", 0);
    std::vector<uint8_t> diag;
    for (int x : b.value("diagonal", std::vector<int>{})) diag.push_back(uint8_t(x));
    if (2 * hyp + int(diag.size()) != ldim) throw input_error("lambda json: blocks/dim mismatch");
    return LambdaSpace::make_blocks(c, K, hyp, diag, k0);
  }
  Mat gram(ldim);
  auto gj = L.at("gram_f").get<std::vector<std::vector<int>>>();
  if (int(gj.size()) != ldim) throw input_error("lambda json: gram_f dimension mismatch");
  for (int i = 0; i < ldim; ++i) {
    if (int(gj[i].size()) != ldim) throw input_error("lambda json: gram_f row size mismatch");
    for (int k = 0; k < ldim; ++k) {
      if (gj[i][k] < 0 || gj[i][k] >= K.q()) throw input_error("lambda json: gram entry range");
      gram.at(i, k) = uint8_t(gj[i][k]);
    }
  }
  std::vector<uint8_t> qt;
  for (int x : L.at("q_table").get<std::vector<int>>()) {
    if (x < 0 || x >= K.q()) throw input_error("lambda json: q_table entry range");
    qt.push_back(uint8_t(x));
  }
  return LambdaSpace::make(c, K, ldim, std::move(gram), std::move(qt), k0);
}

json linespace_to_json(const LineSpace& S) {
  return json{{"points", S.n()}, {"lines", S.lines()}};
}

LineSpace linespace_from_json(const json& j) {
  return LineSpace(j.at("points").get<int>(),
                   j.at("lines").get<std::vector<std::vector<int>>>());
}

json graph_to_json(const VeldkampGraph& g) {
  json j;
  j["n"] = g.V();
  j["gon"] = g.gonality();
  std::vector<std::string> part(g.V());
  for (int v = 0; v < g.V(); ++v) part[v] = g.is_point(v) ? "P" : "L";
  j["partition"] = part;
  std::vector<std::vector<int>> adj(g.V());
  for (int v = 0; v < g.V(); ++v)
    adj[v] = std::vector<int>(g.nbr_begin(v), g.nbr_begin(v) + g.deg(v));
  j["adj"] = adj;
  json opp = json::object();
  for (int v = 0; v < g.V(); ++v) {
    if (g.trivial_at(v)) {
      opp[std::to_string(v)] = "trivial";
    } else {
      std::vector<std::pair<int, int>> pairs;
      for (int i = 0; i < g.deg(v); ++i)
        for (int k = i + 1; k < g.deg(v); ++k)
          if (g.opp(v, i, k)) pairs.emplace_back(i, k);
      opp[std::to_string(v)] = pairs;
    }
  }
  j["opposition"] = opp;
  return j;
}

VeldkampGraph graph_from_json(const json& j) {
  int V = j.at("n").get<int>();
  auto part = j.at("partition").get<std::vector<std::string>>();
  auto adj = j.at("adj").get<std::vector<std::vector<int>>>();
  if (int(part.size()) != V || int(adj.size()) != V)
    throw input_error("graph json: size mismatch");
  int np = 0;
  while (np < V && part[np] == "P") ++np;
  for (int v = np; v < V; ++v)
    if (part[v] != "L") throw input_error("graph json: points must precede lines");
  std::vector<std::vector<int>> lines;
  for (int v = np; v < V; ++v) lines.push_back(adj[v]);
  VeldkampGraph g = VeldkampGraph::build(np, lines, j.value("gon", 4));
  for (int v = 0; v < V; ++v) {
    std::vector<int> want = adj[v];
    std::sort(want.begin(), want.end());
    std::vector<int> have(g.nbr_begin(v), g.nbr_begin(v) + g.deg(v));
    if (want != have) throw input_error("graph json: adjacency is not symmetric");
  }
  const json& opp = j.at("opposition");
  for (int v = 0; v < V; ++v) {
    auto it = opp.find(std::to_string(v));
    if (it == opp.end()) throw input_error("graph json: missing opposition entry");
    if (it->is_string()) {
      if (it->get<std::string>() != "trivial") throw input_error("graph json: bad opposition");
      continue;
    }
    g.set_opposition_pairs(v, it->get<std::vector<std::pair<int, int>>>());
  }
  return g;
}

json catalog_to_json(const SingularCatalog& cat) {
  json j;
  std::vector<std::vector<int>> pts;
  for (const Vec& v : cat.points()) pts.emplace_back(v.begin(), v.end());
  j["points"] = pts;
  j["lines"] = cat.lines();
  return j;
}

json axioms_to_json(const AxiomReport& r) {
  json j{{"VP1", r.vp1}, {"VP2", r.vp2}, {"VP3", r.vp3}, {"plump2", r.plump2}};
  if (!r.witness.empty()) j["witness"] = r.witness;
  return j;
}

json quotient_to_json(const QuotientResult& r) {
  json j;
  j["graph"] = graph_to_json(r.graph);
  j["point_class"] = r.point_class;
  j["line_class"] = r.line_class;
  j["pi"] = r.pi;
  j["quotient_axioms"] = axioms_to_json(r.quotient_axioms);
  // class-size histogram, for the CLI
  std::map<int, int> psz, lsz;
  for (int c : r.point_class) psz[c]++;
  for (int c : r.line_class) lsz[c]++;
  std::map<int, int> phist, lhist;
  for (auto& [c, s] : psz) phist[s]++;
  for (auto& [c, s] : lsz) lhist[s]++;
  json ph = json::object(), lh = json::object();
  for (auto& [s, k] : phist) ph[std::to_string(s)] = k;
  for (auto& [s, k] : lhist) lh[std::to_string(s)] = k;
  j["point_class_size_histogram"] = ph;
  j["line_class_size_histogram"] = lh;
  return j;
}

json certificate_to_json(const MoufangCertificate& c) {
  json j;
  j["instance"] = c.instance;
  j["case"] = to_string(c.form_case);
  j["ok"] = c.ok;
  j["T_order"] = c.t_order;
  j["K_order"] = c.k_order;
  j["edges_total"] = c.edges_total;
  j["edge_orbit"] = c.edge_orbit;
  j["roots_at_point_edge"] = c.roots_at_point_edge;
  j["alpha_root_orbit"] = c.alpha_root_orbit;
  j["roots_at_line_edge"] = c.roots_at_line_edge;
  j["gamma_root_orbit"] = c.gamma_root_orbit;
  json acts = json::array();
  for (auto& a : c.actions)
    acts.push_back(json{{"family", a.family},
                        {"target1", a.target1},
                        {"orbit1", a.orbit1},
                        {"target2", a.target2},
                        {"orbit2", a.orbit2},
                        {"simply_transitive", a.simply_transitive}});
  j["root_group_actions"] = acts;
  j["generators_are_isometries"] = c.generators_are_isometries;
  j["generators_induce_automorphisms"] = c.generators_induce_automorphisms;
  j["families_fix_root_middles"] = c.families_fix_root_middles;
  j["sigma_circuit_facts"] = c.sigma_circuit_facts;
  j["a_tau_transitive"] = c.a_tau_transitive_on_x2p;
  j["c_rho_transitive"] = c.c_rho_transitive_on_x1x2p;
  j["checks"] = c.checks;
  if (!c.failure.empty()) j["failure"] = c.failure;
  return j;
}

json relations_to_json(const RelationReport& r) {
  json j;
  j["instance"] = r.instance;
  j["ok"] = r.ok;
  j["identities_checked"] = r.identities_checked;
  json fams = json::array();
  for (auto& [name, count] : r.families)
    fams.push_back(json{{"relation", name}, {"count", count}});
  j["families"] = fams;
  if (!r.failure.empty()) j["failure"] = r.failure;
  return j;
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

std::string graph_to_dot(const VeldkampGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int v = 0; v < g.V(); ++v) {
    if (g.is_point(v))
      os << "  v" << v << " [shape=circle,label=\"p" << v << "\"];\n";
    else
      os << "  v" << v << " [shape=box,label=\"l" << (v - g.points()) << "\"];\n";
  }
  for (int v = 0; v < g.points(); ++v)
    for (int i = 0; i < g.deg(v); ++i) os << "  v" << v << " -- v" << g.nb(v, i) << ";\n";
  // dashed: 2-paths through a point that are not straight
  for (int a = 0; a < g.points(); ++a) {
    if (g.trivial_at(a)) continue;
    for (int i = 0; i < g.deg(a); ++i)
      for (int j = i + 1; j < g.deg(a); ++j)
        if (!g.opp(a, i, j))
          os << "  v" << g.nb(a, i) << " -- v" << g.nb(a, j)
             << " [style=dashed,constraint=false];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace vq
