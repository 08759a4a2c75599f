// Command-line front end: build catalog instances, run verification suites,
// compute flat quotients, emit Moufang certificates and exports.
//
// Exit codes: 0 all requested checks passed, 2 input error, 3 cap exceeded,
// 4 theorem violation / failed check.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "vq/catalog.hpp"
#include "vq/correspond.hpp"
#include "vq/errors.hpp"
#include "vq/json_io.hpp"
#include "vq/parallel.hpp"
#include "vq/presets.hpp"

using namespace vq;

namespace {

json run_prop_suite(const VeldkampGraph& g) {
  json out;
  auto ops = opposite_sets(g);
  auto put = [&](const char* name, const std::optional<std::string>& w) {
    out[name] = w ? json{{"ok", false}, {"witness", *w}} : json{{"ok", true}};
  };
  put("toy8_root_uniqueness", prop_toy8(g, ops));
  put("toy9_common_opposites", prop_toy9(g, ops));
  put("toy35_end_opposition", prop_toy35(g));
  put("fla3_no_4_circuits", prop_fla3(g));
  put("fla40_no_straight_2path_in_6_circuit", prop_fla40(g));
  put("toy20_opposite_points_distance4", prop_toy20(g, ops));
  put("toy21_diameter4", prop_toy21(g));
  put("toy22_distance4_nonopposite", prop_toy22(g, ops));
  put("toy36_class_triviality", prop_toy36_classes(g));
  if (is_green(g)) {
    auto weeds = find_weeds(g);
    put("fla32_flat_iff_no_weeds", prop_fla32(g, ops));
    put("fla11_opposition_respects_sim", prop_fla11(g, weeds));
    if (is_flat(g, ops)) put("toy25_opposite_iff_distance4", prop_toy25_points(g, ops));
  }
  bool all = true;
  for (auto& [k, v] : out.items())
    if (!v.at("ok").get<bool>()) all = false;
  out["all_passed"] = all;
  return out;
}

VeldkampGraph load_graph(const std::string& graph_path, const std::string& preset, int cone_apex,
                         long long cap) {
  if (!graph_path.empty()) {
    std::ifstream in(graph_path);
    if (!in) throw input_error("cannot open " + graph_path);
    json j;
    in >> j;
    return graph_from_json(j);
  }
  LineSpace S = preset_linespace(preset, cap);
  if (cone_apex >= 0) return cone(S, cone_apex).graph;
  return polar_to_veldkamp(S);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot write " + path);
  out << content;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polar spaces and Veldkamp quadrangles over small finite fields"};
  app.require_subcommand(1);

  int jobs = 0;
  long long cap = 10'000'000;
  app.add_option("--jobs", jobs, "worker thread cap (default: hardware)");
  app.add_option("--max-vectors", cap, "vector enumeration cap (default 1e7)");

  std::string preset, lambda_path, out_dir = ".", graph_path, suite = "all";
  int cone_apex = -1;
  bool dot = false;

  auto* cmd_build = app.add_subcommand("build", "build a polar space and its Veldkamp graph");
  cmd_build->add_option("--preset", preset, "one of: w3 q5plus3 sp63 h34 h54 grid");
  cmd_build->add_option("--lambda", lambda_path, "Lambda descriptor JSON file");
  cmd_build->add_option("--out", out_dir, "output directory");
  cmd_build->add_option("--cone", cone_apex, "emit the cone over this point instead");
  cmd_build->add_flag("--dot", dot, "also write a DOT rendering");

  auto* cmd_verify = app.add_subcommand("verify", "run verification suites on a graph");
  cmd_verify->add_option("--graph", graph_path, "graph JSON file");
  cmd_verify->add_option("--preset", preset, "build this preset instead of reading a file");
  cmd_verify->add_option("--cone", cone_apex, "verify the cone over this point");
  cmd_verify->add_option("--suite", suite, "axioms | propositions | all");

  auto* cmd_quotient = app.add_subcommand("quotient", "compute the canonical flat quotient");
  cmd_quotient->add_option("--graph", graph_path, "graph JSON file");
  cmd_quotient->add_option("--preset", preset, "build this preset instead");
  cmd_quotient->add_option("--cone", cone_apex, "quotient of the cone over this point");
  cmd_quotient->add_option("--out", out_dir, "output directory");

  auto* cmd_moufang = app.add_subcommand("moufang", "emit a Moufang / relation certificate");
  cmd_moufang->add_option("--preset", preset,
                          "q5plus3 sp63 h34 h54 w3 (certification) or d3gf3 d3gf5 (relations)");
  cmd_moufang->add_option("--lambda", lambda_path, "Lambda descriptor JSON file");
  cmd_moufang->add_option("--out", out_dir, "output directory for the certificate");

  CLI11_PARSE(app, argc, argv);
  if (jobs > 0) set_worker_count(jobs);

  try {
    if (*cmd_build) {
      if (preset.empty() && lambda_path.empty())
        throw input_error("build: need --preset or --lambda");
      std::string name = preset;
      LineSpace S = [&] {
        if (!lambda_path.empty()) {
          std::ifstream in(lambda_path);
          if (!in) throw input_error("cannot open " + lambda_path);
          json j;
          in >> j;
          name = "custom";
          LambdaSpace lam = lambda_from_json(j);
          Ambient amb(lam);
          return line_space_from_catalog(enumerate_singular(amb, cap));
        }
        return preset_linespace(preset, cap);
      }();
      write_file(out_dir + "/" + name + "_polar.json", canonical_dump(linespace_to_json(S)));
      if (cone_apex >= 0) {
        Cone c = cone(S, cone_apex);
        std::string base = name + "_cone" + std::to_string(cone_apex);
        write_file(out_dir + "/" + base + "_graph.json",
                   canonical_dump(graph_to_json(c.graph)));
        if (dot) write_file(out_dir + "/" + base + ".dot", graph_to_dot(c.graph, base));
        std::cout << "wrote " << base << " (" << c.graph.points() << " points, "
                  << c.graph.line_count() << " lines)\n";
      } else {
        VeldkampGraph g = polar_to_veldkamp(S);
        write_file(out_dir + "/" + name + "_graph.json", canonical_dump(graph_to_json(g)));
        if (dot) write_file(out_dir + "/" + name + ".dot", graph_to_dot(g, name));
        std::cout << "wrote " << name << " (" << S.n() << " points, " << S.lines().size()
                  << " lines)\n";
      }
      return 0;
    }

    if (*cmd_verify) {
      if (graph_path.empty() && preset.empty())
        throw input_error("verify: need --graph or --preset");
      VeldkampGraph g = load_graph(graph_path, preset, cone_apex, cap);
      json rep;
      rep["vertices"] = g.V();
      rep["points"] = g.points();
      rep["green"] = is_green(g);
      bool pass = true;
      if (suite == "axioms" || suite == "all") {
        AxiomReport ar = check_axioms(g);
        rep["axioms"] = axioms_to_json(ar);
        pass = pass && ar.all();
      }
      if (suite == "propositions" || suite == "all") {
        rep["propositions"] = run_prop_suite(g);
        pass = pass && rep["propositions"]["all_passed"].get<bool>();
      }
      if (suite != "axioms" && suite != "propositions" && suite != "all")
        throw input_error("verify: unknown suite '" + suite + "'");
      {
        auto ops = opposite_sets(g);
        rep["flat"] = is_flat(g, ops);
      }
      rep["all_passed"] = pass;
      std::cout << canonical_dump(rep);
      return pass ? 0 : 4;
    }

    if (*cmd_quotient) {
      if (graph_path.empty() && preset.empty())
        throw input_error("quotient: need --graph or --preset");
      VeldkampGraph g = load_graph(graph_path, preset, cone_apex, cap);
      if (!is_green(g)) throw input_error("quotient: input graph is not green");
      QuotientResult qr = flat_quotient(g);
      json j = quotient_to_json(qr);
      std::string base = preset.empty() ? "graph" : preset;
      if (cone_apex >= 0) base += "_cone" + std::to_string(cone_apex);
      write_file(out_dir + "/" + base + "_quotient.json", canonical_dump(j));
      std::cout << "quotient: " << qr.graph.points() << " point classes, "
                << qr.graph.line_count() << " line classes\n"
                << "point class sizes: " << j["point_class_size_histogram"].dump() << "\n"
                << "line class sizes: " << j["line_class_size_histogram"].dump() << "\n";
      return 0;
    }

    if (*cmd_moufang) {
      json j;
      bool ok;
      if (preset == "d3gf3" || preset == "d3gf5") {
        RelationReport rel = verify_d3(preset == "d3gf3" ? 3 : 5);
        RelationReport c4 = verify_chin4(preset_lambda(preset));
        j["d3"] = relations_to_json(rel);
        j["chin4"] = relations_to_json(c4);
        ok = rel.ok && c4.ok;
      } else {
        LambdaSpace lam = [&] {
          if (!lambda_path.empty()) {
            std::ifstream in(lambda_path);
            if (!in) throw input_error("cannot open " + lambda_path);
            json lj;
            in >> lj;
            return lambda_from_json(lj);
          }
          return preset_lambda(preset);
        }();
        MoufangCertificate cert = certify_moufang(lam, cap);
        cert.instance = preset.empty() ? "custom" : preset;
        RelationReport c4 = verify_chin4(lam);
        j["certificate"] = certificate_to_json(cert);
        j["chin4"] = relations_to_json(c4);
        ok = cert.ok && c4.ok;
      }
      j["ok"] = ok;
      std::string base = preset.empty() ? "custom" : preset;
      write_file(out_dir + "/" + base + "_moufang.json", canonical_dump(j));
      std::cout << canonical_dump(j);
      return ok ? 0 : 4;
    }
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const cap_exceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const theorem_violation& e) {
    std::cerr << "theorem violation: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
