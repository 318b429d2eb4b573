// Batch front end: every operation of the library behind one JSON-in /
// JSON-out command. Exit codes: 0 success, 1 input error, 2 scenario
// failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "scenarios.hpp"
#include "serialize.hpp"

namespace {

using moduli::GaussianRat;
using moduli::Int;
using moduli::Rat;
using moduli::input_error;
using nlohmann::json;
namespace io = moduli::io;
namespace lat = moduli::lattice;
namespace mk = moduli::mukai;
namespace pc = moduli::curves;
namespace fb = moduli::fibers;
namespace ss = moduli::specseq;
namespace ce = moduli::cech;

struct Request {
  std::string command;
  std::string op;
  std::string json_arg;
  std::string input_path;
  std::string output_path;
  bool pretty = false;
};

json load_input(const Request& req) {
  std::string text;
  if (!req.json_arg.empty()) {
    text = req.json_arg;
  } else if (!req.input_path.empty()) {
    if (req.input_path == "-") {
      std::ostringstream buf;
      buf << std::cin.rdbuf();
      text = buf.str();
    } else {
      std::ifstream f(req.input_path);
      if (!f) throw input_error("cannot open input file: " + req.input_path);
      std::ostringstream buf;
      buf << f.rdbuf();
      text = buf.str();
    }
  } else {
    throw input_error("operation needs a JSON argument or --input");
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw input_error(std::string("malformed JSON: ") + e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw input_error(std::string("missing field \"") + key + "\"");
  return j[key];
}

json run_lattice(const std::string& op, const json& in) {
  if (op == "pair") {
    lat::BilinearLattice l = io::lattice_from_json(field(in, "gram"), "gram");
    return json{{"value", io::to_json(lat::pair(l, io::vec_from_json(field(in, "x"), "x"),
                                                io::vec_from_json(field(in, "y"), "y")))}};
  }
  if (op == "complement") {
    lat::BilinearLattice l = io::lattice_from_json(field(in, "gram"), "gram");
    std::vector<lat::Vec> vs;
    for (const auto& v : field(in, "vs")) vs.push_back(io::vec_from_json(v, "vs"));
    auto basis = lat::orthogonal_complement(l, vs);
    return json{{"basis", io::to_json(basis)},
                {"gram", io::to_json(lat::gram_of(l, basis).gram())}};
  }
  if (op == "gram") {
    lat::BilinearLattice l = io::lattice_from_json(field(in, "gram"), "gram");
    lat::SublatticeBasis b;
    for (const auto& v : field(in, "basis")) b.vectors.push_back(io::vec_from_json(v, "basis"));
    return json{{"gram", io::to_json(lat::gram_of(l, b).gram())}};
  }
  if (op == "det") {
    lat::BilinearLattice l = io::lattice_from_json(field(in, "gram"), "gram");
    return json{{"det", io::to_json(lat::determinant(l))}, {"unimodular", lat::is_unimodular(l)}};
  }
  if (op == "signature") {
    lat::BilinearLattice l = io::lattice_from_json(field(in, "gram"), "gram");
    return io::to_json(lat::signature(l));
  }
  if (op == "congruent") {
    lat::BilinearLattice g1 = io::lattice_from_json(field(in, "g1"), "g1");
    lat::BilinearLattice g2 = io::lattice_from_json(field(in, "g2"), "g2");
    int bound = in.value("bound", 2);
    auto r = lat::congruent(g1, g2, bound);
    switch (r.verdict) {
      case lat::CongruenceVerdict::Yes:
        return json{{"verdict", "yes"}, {"witness", io::to_json(*r.witness)}};
      case lat::CongruenceVerdict::No:
        return json{{"invariant", r.invariant}, {"verdict", "no"}};
      default:
        return json{{"verdict", "inconclusive"}};
    }
  }
  throw input_error("unknown lattice op: " + op);
}

json run_mukai(const std::string& op, const json& in) {
  mk::K3Surface s = io::surface_from_json(in);
  if (op == "vector") {
    auto v = mk::vector_of_sheaf(s, io::int_from_json(field(in, "r"), "r"),
                                 io::vec_from_json(field(in, "c1"), "c1"),
                                 io::int_from_json(field(in, "c2"), "c2"));
    return json{{"v", io::to_json(v)}};
  }
  if (op == "pair") {
    return json{{"value", io::to_json(mk::pairing(
                              s, io::mukai_vector_from_json(field(in, "v"), "v"),
                              io::mukai_vector_from_json(field(in, "w"), "w")))}};
  }
  if (op == "dim") {
    return io::to_json(mk::moduli_dimension(s, io::mukai_vector_from_json(field(in, "v"), "v")));
  }
  if (op == "picard") {
    auto m = mk::moduli_picard(s, io::mukai_vector_from_json(field(in, "v"), "v"));
    return json{{"basis", io::to_json(m.picard_basis)},
                {"dimension", io::to_json(m.dimension)},
                {"gram", io::to_json(m.picard.gram())}};
  }
  if (op == "distinguish") {
    std::optional<mk::ReferenceBases> refs;
    if (in.contains("ref_basis1") && in.contains("ref_basis2")) {
      mk::ReferenceBases r;
      for (const auto& v : in["ref_basis1"]) r.first.push_back(io::vec_from_json(v, "ref_basis1"));
      for (const auto& v : in["ref_basis2"]) r.second.push_back(io::vec_from_json(v, "ref_basis2"));
      refs = std::move(r);
    }
    auto d = mk::distinguish(s, io::mukai_vector_from_json(field(in, "v1"), "v1"),
                             io::mukai_vector_from_json(field(in, "v2"), "v2"),
                             in.value("bound", 2), refs);
    json out{{"gram1", io::to_json(d.first.picard.gram())},
             {"gram2", io::to_json(d.second.picard.gram())}};
    switch (d.verdict) {
      case mk::PicardVerdict::SamePicard:
        out["verdict"] = "same";
        if (d.witness) out["witness"] = io::to_json(*d.witness);
        break;
      case mk::PicardVerdict::DifferentPicard:
        out["verdict"] = "different";
        out["invariant"] = d.invariant;
        break;
      default:
        out["verdict"] = "inconclusive";
    }
    return out;
  }
  throw input_error("unknown mukai op: " + op);
}

json run_pluecker(const std::string& op, const json& in) {
  if (op == "stratify") {
    auto s = pc::stratify_sextic();
    json out = io::to_json(s);
    out["base_euler_sum"] = io::to_json(s.base_euler_sum());
    return out;
  }
  if (op == "branch-genus")
    return json{{"genus", io::to_json(pc::branch_genus(io::int_from_json(field(in, "branch_points"),
                                                                         "branch_points")))}};
  pc::PlaneCurveClass c = io::curve_from_json(in);
  if (op == "dual-degree") return json{{"degree", io::to_json(pc::dual_degree(c))}};
  if (op == "dual-cusps") return json{{"cusps", io::to_json(pc::dual_cusps(c))}};
  if (op == "dual-nodes") return json{{"nodes", io::to_json(pc::dual_nodes(c))}};
  if (op == "dual") return json{{"dual", io::to_json(pc::dual_curve(c))}};
  if (op == "genus") return json{{"genus", io::to_json(pc::geometric_genus(c))}};
  if (op == "curve-euler") return json{{"euler", io::to_json(pc::nodal_curve_euler(c))}};
  throw input_error("unknown pluecker op: " + op);
}

json run_fiber(const std::string& op, const json& in) {
  if (op == "cross-ratio") {
    const json& pts = field(in, "points");
    if (!pts.is_array() || pts.size() != 4) throw input_error("points: expected four points");
    Rat lambda = fb::cross_ratio(io::point_from_json(pts[0]), io::point_from_json(pts[1]),
                                 io::point_from_json(pts[2]), io::point_from_json(pts[3]));
    return json{{"lambda", io::to_json(lambda)}};
  }
  if (op == "build") return io::to_json(io::fiber_model_from_json(in));
  if (op == "euler") {
    auto m = io::fiber_model_from_json(in.contains("model") ? in["model"] : in);
    return json{{"euler", io::to_json(fb::fiber_euler(m))}};
  }
  if (op == "dual") {
    auto m = io::fiber_model_from_json(in.contains("model") ? in["model"] : in);
    return io::to_json(fb::dual_fiber_model(m));
  }
  if (op == "shift") {
    auto m = io::fiber_model_from_json(in.contains("model") ? in["model"] : in);
    return io::to_json(fb::degree_shift(m, io::int_from_json(field(in, "d"), "d")));
  }
  if (op == "incidence") {
    Int dim = fb::incidence_dimension(io::int_from_json(field(in, "base_dim"), "base_dim"),
                                      io::int_from_json(field(in, "discriminant_dim"), "discriminant_dim"),
                                      io::int_from_json(field(in, "fiber_dim"), "fiber_dim"));
    json out{{"dimension", io::to_json(dim)}};
    if (in.contains("n")) out["bound_ok"] = fb::bm_bound_ok(dim, io::int_from_json(in["n"], "n"));
    return out;
  }
  throw input_error("unknown fiber op: " + op);
}

json run_euler(const std::string& op, const json& in) {
  if (op != "total") throw input_error("unknown euler op: " + op);
  pc::LinearSystemStratification strat;
  if (in.is_object() && in.contains("strata")) {
    for (const auto& st : in["strata"]) {
      pc::Stratum stratum;
      stratum.curve_type = st.at("curve_type").get<int>();
      stratum.base_dimension = st.value("base_dimension", 0);
      stratum.base_euler = io::int_from_json(st.at("base_euler"), "base_euler");
      stratum.count = std::string("unspecified");
      strat.strata.push_back(stratum);
    }
  } else {
    strat = pc::stratify_sextic();
  }
  std::map<int, fb::FiberModel> models;
  if (in.is_object() && in.contains("fibers")) {
    for (const auto& [key, value] : in["fibers"].items())
      models.emplace(std::stoi(key), io::fiber_model_from_json(value));
  } else {
    models = fb::standard_fiber_models();
  }
  return json{{"total", io::to_json(fb::total_euler(strat, models))}};
}

json run_specseq(const std::string& op, const json& in) {
  if (op == "e2") {
    if (in.is_object() && in.contains("preset")) {
      std::string preset = in["preset"].get<std::string>();
      if (preset == "O") return io::to_json(ss::leray_o_page());
      if (preset == "Z-bottom") return io::to_json(ss::leray_z_bottom_row());
      if (preset == "Ostar-bottom") {
        json labels = json::array();
        for (const auto& l : ss::unit_page_bottom_row_labels()) labels.push_back(l);
        return json{{"labels", labels},
                    {"note", "display only; the degree-0 entry is divisible and has no rank"}};
      }
      throw input_error("unknown preset: " + preset);
    }
    std::map<ss::Cell, Int> base;
    for (const auto& e : field(in, "entries")) {
      if (!e.is_array() || e.size() != 3) throw input_error("entry: expected [i, j, rank]");
      base[{e[0].get<int>(), e[1].get<int>()}] = io::int_from_json(e[2], "rank");
    }
    return io::to_json(ss::leray_e2(base, in.value("width", -1), in.value("height", -1)));
  }
  if (op == "next")
    return io::to_json(ss::next_page(io::page_from_json(field(in, "page")),
                                     io::differentials_from_json(field(in, "differentials"))));
  if (op == "degenerate")
    return json{{"forced", ss::forced_degeneration(io::page_from_json(
                               in.contains("page") ? in["page"] : in))}};
  if (op == "abutment") {
    auto h = ss::abutment(io::page_from_json(in.contains("page") ? in["page"] : in));
    json out = json::array();
    for (const Int& n : h) out.push_back(io::to_json(n));
    return json{{"totals", out}};
  }
  if (op == "koszul") {
    std::vector<Int> e = io::vec_from_json(field(in, "ext_ranks"), "ext_ranks");
    return io::to_json(ss::koszul_page(e, field(in, "conormal_rank").get<int>()));
  }
  if (op == "deduce") {
    auto e = ss::deduce_ext_vanishing(field(in, "conormal_rank").get<int>(),
                                      field(in, "abutment_zero").get<bool>(),
                                      field(in, "p_max").get<int>());
    json out = json::array();
    for (const Int& x : e) out.push_back(io::to_json(x));
    return json{{"ext_ranks", out}};
  }
  if (op == "survival") {
    const json& cell = field(in, "cell");
    if (!cell.is_array() || cell.size() != 2) throw input_error("cell: expected [i, j]");
    auto cons = ss::survival_constraints(io::page_from_json(field(in, "page")),
                                         {cell[0].get<int>(), cell[1].get<int>()});
    json out = json::array();
    for (const auto& c : cons)
      out.push_back(json{{"must_vanish", true},
                         {"r", c.r},
                         {"source", json::array({c.source.first, c.source.second})}});
    return json{{"constraints", out}};
  }
  throw input_error("unknown specseq op: " + op);
}

json run_cech(const std::string& op, const json& in) {
  ce::CoverNerve nerve = io::nerve_from_json(field(in, "nerve"));
  if (op == "cohomology") {
    std::string group = field(in, "group").get<std::string>();
    int degree = field(in, "degree").get<int>();
    ce::CohomologyRank h;
    if (group == "Z")
      h = ce::nerve_cohomology_z(nerve, degree);
    else if (group == "Q(i)")
      h = ce::nerve_cohomology_q(nerve, degree);
    else
      throw input_error("cohomology supports groups \"Z\" and \"Q(i)\"");
    json torsion = json::array();
    for (const Int& t : h.torsion) torsion.push_back(io::to_json(t));
    return json{{"rank", io::to_json(h.free_rank)}, {"torsion", torsion}};
  }
  if (op == "gerbe") {
    auto scalars = io::modz_cochain_from_json(field(in, "scalars"), nerve);
    std::string group = field(in, "classes").value("group", "Z");
    if (group == "Z") {
      auto classes = io::int_cochain_from_json(field(in, "classes"), nerve);
      return io::cochain_to_json(ce::gerbe_from_trivializations(nerve, classes, scalars));
    }
    auto classes = io::modz_cochain_from_json(field(in, "classes"), nerve);
    return io::cochain_to_json(ce::gerbe_from_trivializations(nerve, classes, scalars));
  }
  if (op == "glue") {
    auto psi = io::modz_cochain_from_json(field(in, "psi"), nerve);
    auto beta = io::modz_cochain_from_json(field(in, "beta"), nerve);
    return json{{"glues", ce::twisted_glue_check(nerve, psi, beta)}};
  }
  if (op == "torsor") {
    auto kappa = io::gaussian_cochain_from_json(field(in, "kappa"), nerve);
    Rat t = io::rat_from_json(field(in, "t"), "t");
    return io::cochain_to_json(ce::torsor_path(nerve, kappa, t));
  }
  if (op == "bockstein") {
    auto c = io::modz_cochain_from_json(field(in, "cochain"), nerve);
    return io::cochain_to_json(ce::bockstein(nerve, c));
  }
  // remaining ops dispatch on the cochain's coefficient group
  const json& cj = field(in, "cochain");
  std::string group = cj.value("group", "Q(i)/Z");
  auto respond = [&](auto cochain) -> json {
    if (op == "coboundary") return io::cochain_to_json(ce::coboundary(nerve, cochain));
    if (op == "cocycle") return json{{"cocycle", ce::is_cocycle(nerve, cochain)}};
    if (op == "solve") {
      auto witness = ce::is_coboundary(nerve, cochain);
      if (witness) return json{{"verdict", "yes"}, {"witness", io::cochain_to_json(*witness)}};
      return json{{"verdict", "no"}};
    }
    throw input_error("unknown cech op: " + op);
  };
  if (group == "Z") return respond(io::int_cochain_from_json(cj, nerve));
  if (group == "Q(i)") return respond(io::gaussian_cochain_from_json(cj, nerve));
  if (group == "Q(i)/Z") return respond(io::modz_cochain_from_json(cj, nerve));
  throw input_error("unknown coefficient group: " + group);
}

int run_scenario_command(const std::string& id, json& out) {
  if (id == "list") {
    json ids = json::array();
    for (const auto& s : moduli::scenarios::list_scenarios()) ids.push_back(s);
    out = json{{"scenarios", ids}};
    return 0;
  }
  if (id == "all") {
    json reports = json::array();
    bool pass = true;
    for (const auto& entry : moduli::scenarios::registry()) {
      auto report = entry.run();
      pass = pass && report.pass();
      reports.push_back(report.to_json());
    }
    out = json{{"pass", pass}, {"reports", reports}};
    return pass ? 0 : 2;
  }
  auto report = moduli::scenarios::run_scenario(id);
  if (!report) throw input_error("unknown scenario id: " + id);
  out = report->to_json();
  return report->pass() ? 0 : 2;
}

void emit(const Request& req, const json& out) {
  std::string text = req.pretty ? out.dump(2) : out.dump();
  text += '\n';
  if (req.output_path.empty() || req.output_path == "-") {
    std::cout << text;
  } else {
    std::ofstream f(req.output_path);
    if (!f) throw input_error("cannot open output file: " + req.output_path);
    f << text;
  }
}

int dispatch(const Request& req) {
  json out;
  int code = 0;
  if (req.command == "scenario") {
    code = run_scenario_command(req.op, out);
  } else {
    json in;
    const bool input_optional =
        (req.command == "pluecker" && req.op == "stratify") || req.command == "euler";
    if (!req.json_arg.empty() || !req.input_path.empty())
      in = load_input(req);
    else if (!input_optional)
      throw input_error("operation needs a JSON argument or --input");
    if (req.command == "lattice") out = run_lattice(req.op, in);
    else if (req.command == "mukai") out = run_mukai(req.op, in);
    else if (req.command == "pluecker") out = run_pluecker(req.op, in);
    else if (req.command == "fiber") out = run_fiber(req.op, in);
    else if (req.command == "euler") out = run_euler(req.op, in);
    else if (req.command == "specseq") out = run_specseq(req.op, in);
    else if (req.command == "cech") out = run_cech(req.op, in);
    else throw input_error("unknown command: " + req.command);
  }
  emit(req, out);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of abelian-surface fibrations: lattices, dual curves, "
               "spectral sequences, and Cech cocycles"};
  app.require_subcommand(1);

  Request req;
  const std::pair<const char*, const char*> commands[] = {
      {"lattice", "integer bilinear lattices: pair, complement, gram, det, signature, congruent"},
      {"mukai", "Mukai vectors and moduli Picard lattices: vector, pair, dim, picard, distinguish"},
      {"pluecker", "plane-curve duality: dual-degree, dual-cusps, dual-nodes, dual, genus, "
                   "curve-euler, stratify, branch-genus"},
      {"fiber", "compactified-Jacobian fiber models: build, euler, cross-ratio, dual, shift, "
                "incidence"},
      {"euler", "total Euler characteristic of the fibration: total"},
      {"specseq", "rank-level spectral sequences: e2, next, degenerate, abutment, koszul, "
                  "deduce, survival"},
      {"cech", "Cech cochains on cover nerves: coboundary, cocycle, solve, bockstein, gerbe, "
               "glue, torsor, cohomology"},
      {"scenario", "bundled worked computations: list, all, or a scenario id"},
  };
  for (const auto& [name, desc] : commands) {
    auto* sub = app.add_subcommand(name, desc);
    sub->add_option("op", req.op, "operation (or scenario id)")->required();
    sub->add_option("json", req.json_arg, "inline JSON input");
    sub->add_option("--input", req.input_path, "read JSON input from FILE or - for stdin");
    sub->add_option("--output", req.output_path, "write JSON output to FILE or - for stdout");
    sub->add_flag("--pretty", req.pretty, "indent output");
    sub->callback([&req, name = std::string(name)] { req.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    return dispatch(req);
  } catch (const input_error& e) {
    json err{{"error", {{"message", e.what()}, {"type", "input"}}}};
    std::cout << (req.pretty ? err.dump(2) : err.dump()) << "\n";
    return 1;
  } catch (const json::exception& e) {
    json err{{"error", {{"message", e.what()}, {"type", "input"}}}};
    std::cout << (req.pretty ? err.dump(2) : err.dump()) << "\n";
    return 1;
  } catch (const std::exception& e) {
    json err{{"error", {{"message", e.what()}, {"type", "internal"}}}};
    std::cout << (req.pretty ? err.dump(2) : err.dump()) << "\n";
    return 1;
  }
}
