// ddg-forge: construct, verify and catalog divisible-design machinery from
// the command line. Matrices and graphs travel in the plain text format
// described in the README; reports and parameter records are JSON.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ddgf/catalog.hpp"
#include "ddgf/ddg.hpp"
#include "ddgf/designs.hpp"
#include "ddgf/errors.hpp"
#include "ddgf/graphs.hpp"
#include "ddgf/matrix.hpp"
#include "ddgf/parallel.hpp"
#include "ddgf/symplectic.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

void save_text(const fs::path& path, const std::string& text) {
  std::ofstream os(path);
  ddgf::require(os.good(), ddgf::errc::io_error,
                "cannot open for writing: " + path.string());
  os << text;
}

void save_partition_file(const fs::path& path, const ddgf::Partition& p) {
  std::ofstream os(path);
  ddgf::require(os.good(), ddgf::errc::io_error,
                "cannot open for writing: " + path.string());
  ddgf::write_partition(os, p);
}

ordered_json ddg_params_json(const ddgf::DDGParameters& p,
                             ddgf::DdgClass cls) {
  ordered_json j;
  j["v"] = p.v;
  j["k"] = p.k;
  j["lambda1"] = p.lambda1;
  j["lambda2"] = p.lambda2;
  j["m"] = p.m;
  j["n"] = p.n;
  j["classification"] = ddgf::ddg_class_name(cls);
  return j;
}

void save_json(const fs::path& path, const ordered_json& j) {
  save_text(path, j.dump(2) + "\n");
}

ddgf::ConferenceMatrix conference_of_order(std::size_t t) {
  if (t == 2)
    return ddgf::verify_conference(ddgf::IntMatrix::of({{0, 1}, {1, 0}}));
  return ddgf::conference_paley(t - 1);
}

struct ConstructArgs {
  std::string family;
  std::string out_dir;
  std::string in_path;
  std::uint64_t q = 3;
  std::size_t t = 2;
  std::size_t n = 4;
  std::size_t r = 2;
  std::uint64_t b = 1;
  unsigned k = 2;
  int eps = 1;
  int delta = 1;
  int diag = -1;
};

void write_ddg_bundle(const fs::path& dir, const ddgf::ThinDDG& ddg,
                      const ddgf::RQPair& pair) {
  ddgf::save_matrix((dir / "adjacency.mat").string(), ddg.graph.adjacency());
  save_partition_file(dir / "partition.txt", ddg.partition);
  ddgf::save_matrix((dir / "R.mat").string(), pair.r);
  ddgf::save_matrix((dir / "Q.mat").string(), pair.q);
  save_json(dir / "params.json", ddg_params_json(ddg.params, ddg.cls));
}

int run_construct(const ConstructArgs& args) {
  const fs::path dir(args.out_dir);
  fs::create_directories(dir);
  const ddgf::IntMatrix h4 = ddgf::hadamard_sylvester(2);

  if (args.family == "lattice") {
    const ddgf::Graph g = ddgf::lattice_graph(args.n);
    ddgf::save_matrix((dir / "adjacency.mat").string(), g.adjacency());
    const auto p = ddgf::verify_vkl_graph(g);
    std::cout << "lattice graph L(" << args.n << "): (" << p.v << "," << p.k
              << "," << p.lambda << ")\n";
    return kExitOk;
  }
  if (args.family == "sp") {
    const ddgf::Graph g = ddgf::sp_graph(args.t, args.q);
    ddgf::save_matrix((dir / "adjacency.mat").string(), g.adjacency());
    const auto p = ddgf::verify_srg(g);
    std::cout << "Sp(" << 2 * args.t << "," << args.q << "): SRG(" << p.v
              << "," << p.k << "," << p.lambda << "," << p.mu << ")\n";
    return kExitOk;
  }
  if (args.family == "sp4-ext") {
    const ddgf::Sp4Model model = ddgf::sp4_extension_model(args.q);
    ddgf::save_matrix((dir / "adjacency.mat").string(),
                      model.graph.adjacency());
    const auto p = ddgf::verify_srg(model.graph);
    std::cout << "Sp(4," << args.q << ") extension model: SRG(" << p.v << ","
              << p.k << "," << p.lambda << "," << p.mu << ")\n";
    return kExitOk;
  }
  if (args.family == "sp4-star") {
    const ddgf::Sp4Star star = ddgf::sp4_star(args.q);
    ddgf::save_matrix((dir / "adjacency.mat").string(),
                      star.graph.adjacency());
    save_partition_file(dir / "spread.txt", star.spread);
    ordered_json j;
    j["vertices"] = star.graph.order();
    j["intersection_array"] = star.array.to_string();
    j["spread_cliques"] = star.spread.class_count();
    j["clique_size"] = star.spread.classes[0].size();
    save_json(dir / "params.json", j);
    std::cout << "Sp(4," << args.q << ")*: " << star.graph.order()
              << " vertices, array " << star.array.to_string() << "\n";
    return kExitOk;
  }
  if (args.family == "sp4-complement-ddg") {
    const ddgf::Sp4ComplementDdg c = ddgf::sp4_complement_ddg(args.q);
    const ddgf::RQPair pair = ddgf::decompose_to_rq(c.ddg);
    write_ddg_bundle(dir, c.ddg, pair);
    std::cout << "complement of Sp(4," << args.q
              << "): " << c.ddg.params.to_string() << " "
              << ddgf::ddg_class_name(c.ddg.cls) << "\n";
    return kExitOk;
  }
  if (args.family == "mathon") {
    const ddgf::MathonGraph m =
        ddgf::mathon_graph(args.q, args.r, static_cast<ddgf::felt>(args.b));
    ddgf::save_matrix((dir / "adjacency.mat").string(), m.graph.adjacency());
    save_partition_file(dir / "antipodal.txt", m.antipodal);
    ordered_json j;
    j["vertices"] = m.graph.order();
    j["intersection_array"] = m.array.to_string();
    j["field_size"] = m.q;
    j["subgroup_index"] = m.r;
    j["subgroup_order"] = m.m;
    save_json(dir / "params.json", j);
    std::cout << "M(" << m.q << ") with r=" << m.r << ": " << m.graph.order()
              << " vertices, array " << m.array.to_string() << "\n";
    return kExitOk;
  }
  if (args.family == "paley-conference") {
    const ddgf::ConferenceMatrix c = ddgf::conference_paley(args.q);
    ddgf::save_matrix((dir / "matrix.mat").string(), c.c);
    std::cout << "Paley conference matrix: W(" << c.n << "," << c.n - 1
              << ")\n";
    return kExitOk;
  }
  if (args.family == "conference-square") {
    ddgf::require(!args.in_path.empty(), ddgf::errc::usage_error,
                  "conference-square needs --in");
    const ddgf::ConferenceMatrix in =
        ddgf::verify_conference(ddgf::load_matrix(args.in_path));
    const ddgf::ConferenceMatrix sq = ddgf::conference_square(in);
    ddgf::save_matrix((dir / "matrix.mat").string(), sq.c);
    std::cout << "conference square: W(" << sq.n << "," << sq.n - 1 << ")\n";
    return kExitOk;
  }
  if (args.family == "hadamard-sylvester") {
    const ddgf::IntMatrix h = ddgf::hadamard_sylvester(args.k);
    ddgf::save_matrix((dir / "matrix.mat").string(), h);
    std::cout << "Sylvester Hadamard matrix of order " << h.rows() << "\n";
    return kExitOk;
  }
  if (args.family == "rshcd-base") {
    const ddgf::RSHCD h = ddgf::rshcd_base(args.eps, args.diag);
    ddgf::save_matrix((dir / "matrix.mat").string(), h.h);
    std::cout << "RSHCD order 4, type " << h.eps << ", diagonal " << h.e
              << "\n";
    return kExitOk;
  }
  if (args.family == "multipartite") {
    const std::vector<ddgf::IntMatrix> parts(args.t,
                                             ddgf::rshcd_base(args.eps, -1).h);
    const ddgf::WeighingMatrix signing =
        ddgf::build_q_kronecker(conference_of_order(args.t), h4);
    const ddgf::FamilyResult res = ddgf::family_multipartite(parts, signing);
    write_ddg_bundle(dir, res.ddg, res.pair);
    std::cout << "multipartite family: " << res.ddg.params.to_string() << " "
              << ddgf::ddg_class_name(res.ddg.cls) << "\n";
    return kExitOk;
  }
  if (args.family == "bipartite") {
    const ddgf::IntMatrix part = ddgf::rshcd_base(args.eps, -1).h;
    const ddgf::FamilyResult res = ddgf::family_bipartite(part, part, h4);
    write_ddg_bundle(dir, res.ddg, res.pair);
    std::cout << "bipartite family: " << res.ddg.params.to_string() << " "
              << ddgf::ddg_class_name(res.ddg.cls) << "\n";
    return kExitOk;
  }
  if (args.family == "pair-of-cliques") {
    const ddgf::IntMatrix base = ddgf::rshcd_base(-1, -1).h;  // J - 2I
    const ddgf::IntMatrix reg = args.delta == 1 ? base : base.negate();
    const ddgf::FamilyResult res =
        ddgf::family_pair_of_cliques(reg, base, base);
    write_ddg_bundle(dir, res.ddg, res.pair);
    std::cout << "pair-of-cliques family: " << res.ddg.params.to_string()
              << " " << ddgf::ddg_class_name(res.ddg.cls) << "\n";
    return kExitOk;
  }
  if (args.family == "ps22-a" || args.family == "ps22-b") {
    const ddgf::WeighingMatrix q =
        ddgf::build_q_kronecker(conference_of_order(args.t), h4);
    const ddgf::FamilyResult res = ddgf::family_ps22(
        args.family == "ps22-a" ? ddgf::Ps22Variant::a : ddgf::Ps22Variant::b,
        q);
    write_ddg_bundle(dir, res.ddg, res.pair);
    std::cout << args.family << ": " << res.ddg.params.to_string() << " "
              << ddgf::ddg_class_name(res.ddg.cls) << "\n";
    return kExitOk;
  }
  if (args.family == "rshcd-recursion-a") {
    const ddgf::IntMatrix part = ddgf::rshcd_base(args.eps, -1).h;
    const ddgf::RSHCD out = ddgf::rshcd_recursion_a(part, part, h4);
    ddgf::save_matrix((dir / "matrix.mat").string(), out.h);
    std::cout << "recursion A: RSHCD order " << out.n << ", type " << out.eps
              << "\n";
    return kExitOk;
  }
  if (args.family == "rshcd-recursion-b") {
    const ddgf::IntMatrix base = ddgf::rshcd_base(-1, -1).h;
    const ddgf::IntMatrix reg = args.delta == 1 ? base : base.negate();
    const ddgf::RSHCD out = ddgf::rshcd_recursion_b(reg, base, base);
    ddgf::save_matrix((dir / "matrix.mat").string(), out.h);
    std::cout << "recursion B: RSHCD order " << out.n << ", type " << out.eps
              << "\n";
    return kExitOk;
  }
  if (args.family == "conference-from-srg") {
    ddgf::require(!args.in_path.empty(), ddgf::errc::usage_error,
                  "conference-from-srg needs --in");
    const ddgf::Graph g =
        ddgf::Graph::from_adjacency(ddgf::load_matrix(args.in_path));
    const ddgf::ConferenceMatrix c = ddgf::conference_from_srg(g);
    ddgf::save_matrix((dir / "matrix.mat").string(), c.c);
    std::cout << "bordered Seidel matrix: W(" << c.n << "," << c.n - 1
              << ")\n";
    return kExitOk;
  }
  if (args.family == "srg-from-conference") {
    ddgf::require(!args.in_path.empty(), ddgf::errc::usage_error,
                  "srg-from-conference needs --in");
    const ddgf::ConferenceMatrix c =
        ddgf::verify_conference(ddgf::load_matrix(args.in_path));
    const ddgf::Graph g = ddgf::srg_from_conference(c);
    ddgf::save_matrix((dir / "adjacency.mat").string(), g.adjacency());
    const auto p = ddgf::verify_srg(g);
    std::cout << "conference graph: SRG(" << p.v << "," << p.k << ","
              << p.lambda << "," << p.mu << ")\n";
    return kExitOk;
  }
  std::cerr << "unknown family: " << args.family << "\n";
  return kExitUsage;
}

int run_verify(const std::string& kind, const std::string& in_path,
               const std::string& partition_path) {
  if (kind == "weighing") {
    const ddgf::WeighingMatrix w = ddgf::verify_weighing(
        ddgf::load_matrix(in_path));
    std::cout << "W(" << w.n << "," << w.w << ")\n";
    return kExitOk;
  }
  if (kind == "hadamard") {
    const std::size_t n = ddgf::verify_hadamard(ddgf::load_matrix(in_path));
    std::cout << "Hadamard matrix of order " << n << "\n";
    return kExitOk;
  }
  if (kind == "conference") {
    const ddgf::ConferenceMatrix c =
        ddgf::verify_conference(ddgf::load_matrix(in_path));
    std::cout << "conference matrix W(" << c.n << "," << c.n - 1 << ")"
              << (c.symmetric ? " symmetric" : "")
              << (c.normalized ? " normalized" : "") << "\n";
    return kExitOk;
  }
  if (kind == "rshcd") {
    const ddgf::RSHCD h = ddgf::verify_rshcd(ddgf::load_matrix(in_path));
    std::cout << "RSHCD(n=" << h.n << ", a=" << h.a << ", e=" << h.e
              << ", type=" << h.eps << ")\n";
    return kExitOk;
  }
  if (kind == "srg") {
    const auto p = ddgf::verify_srg(
        ddgf::Graph::from_adjacency(ddgf::load_matrix(in_path)));
    std::cout << "(" << p.v << "," << p.k << "," << p.lambda << "," << p.mu
              << ")\n";
    return kExitOk;
  }
  if (kind == "vkl") {
    const auto p = ddgf::verify_vkl_graph(
        ddgf::Graph::from_adjacency(ddgf::load_matrix(in_path)));
    std::cout << "(" << p.v << "," << p.k << "," << p.lambda << ")\n";
    return kExitOk;
  }
  if (kind == "distance-regular") {
    const auto arr = ddgf::verify_distance_regular(
        ddgf::Graph::from_adjacency(ddgf::load_matrix(in_path)));
    std::cout << arr.to_string() << "\n";
    return kExitOk;
  }
  if (kind == "ddg") {
    ddgf::require(!partition_path.empty(), ddgf::errc::usage_error,
                  "--kind ddg needs --partition");
    const ddgf::Graph g =
        ddgf::Graph::from_adjacency(ddgf::load_matrix(in_path));
    std::ifstream ps(partition_path);
    ddgf::require(ps.good(), ddgf::errc::io_error,
                  "cannot open " + partition_path);
    const ddgf::Partition p = ddgf::read_partition(ps, g.order());
    const auto v = ddgf::verify_ddg(g, p);
    std::cout << v.params.to_string() << " " << ddgf::ddg_class_name(v.cls)
              << "\n";
    return kExitOk;
  }
  if (kind == "equitable") {
    ddgf::require(!partition_path.empty(), ddgf::errc::usage_error,
                  "--kind equitable needs --partition");
    const ddgf::Graph g =
        ddgf::Graph::from_adjacency(ddgf::load_matrix(in_path));
    std::ifstream ps(partition_path);
    ddgf::require(ps.good(), ddgf::errc::io_error,
                  "cannot open " + partition_path);
    const ddgf::Partition p = ddgf::read_partition(ps, g.order());
    const ddgf::IntMatrix q = ddgf::quotient_equitable(g, p);
    ddgf::write_matrix(std::cout, q);
    return kExitOk;
  }
  std::cerr << "unknown kind: " << kind << "\n";
  return kExitUsage;
}

int run_catalog_cmd(int max_q, const std::string& out_path) {
  if (max_q != 3 && max_q != 5 && max_q != 7) {
    std::cerr << "catalog: --max-q must be 3, 5 or 7\n";
    return kExitUsage;
  }
  const ddgf::Report report = ddgf::run_catalog(max_q);
  if (!out_path.empty()) {
    std::ofstream os(out_path);
    ddgf::require(os.good(), ddgf::errc::io_error, "cannot open " + out_path);
    ddgf::write_report_json(os, report);
  } else {
    ddgf::write_report_json(std::cout, report);
  }
  std::size_t passed = 0;
  for (const auto& r : report.records)
    if (r.pass) ++passed;
  std::cout << "catalog: " << passed << "/" << report.records.size()
            << " checks passed\n";
  for (const auto& r : report.records)
    if (!r.pass)
      std::cerr << "[FAIL] " << r.name << " " << r.instance << ": expected "
                << r.expected << ", observed " << r.observed << "\n";
  return report.all_pass() ? kExitOk : kExitCheckFailed;
}

void print_info() {
  std::cout << "ddg-forge: construction and verification toolkit for thin\n"
               "divisible design graphs and their matrix machinery.\n\n";
  std::cout << "construct families:\n"
               "  lattice sp sp4-ext sp4-star sp4-complement-ddg mathon\n"
               "  paley-conference conference-square hadamard-sylvester\n"
               "  rshcd-base multipartite bipartite pair-of-cliques\n"
               "  ps22-a ps22-b rshcd-recursion-a rshcd-recursion-b\n"
               "  conference-from-srg srg-from-conference\n";
  std::cout << "verify kinds:\n"
               "  weighing hadamard conference rshcd srg vkl\n"
               "  distance-regular ddg equitable\n";
  std::cout << "formats: matrix text (header '<rows> <cols>', one row per\n"
               "line), partition text (one class per line), JSON parameter\n"
               "records and catalog reports.\n";
  std::cout << "workers: " << ddgf::worker_count()
            << " (cap with DDG_FORGE_THREADS)\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ddg-forge: thin divisible design graph toolkit"};
  app.require_subcommand(1);

  ConstructArgs cargs;
  CLI::App* construct = app.add_subcommand("construct", "build a named object");
  construct->add_option("--family", cargs.family, "construction family")
      ->required();
  construct->add_option("--out", cargs.out_dir, "output directory")->required();
  construct->add_option("--in", cargs.in_path, "input matrix file");
  construct->add_option("--q", cargs.q, "field size / prime power");
  construct->add_option("--t", cargs.t, "parts / half-dimension");
  construct->add_option("--n", cargs.n, "lattice side");
  construct->add_option("--r", cargs.r, "subgroup index");
  construct->add_option("--b", cargs.b, "adjacency coset element");
  construct->add_option("--k", cargs.k, "Sylvester exponent");
  construct->add_option("--eps", cargs.eps, "RSHCD type (+1/-1)");
  construct->add_option("--delta", cargs.delta, "row-sum sign (+1/-1)");
  construct->add_option("--diag", cargs.diag, "diagonal value (+1/-1)");

  std::string kind, in_path, partition_path;
  CLI::App* verify = app.add_subcommand("verify", "verify an object from disk");
  verify->add_option("--kind", kind, "object kind")->required();
  verify->add_option("--in", in_path, "input matrix file")->required();
  verify->add_option("--partition", partition_path, "partition file");

  int max_q = 3;
  std::string report_path;
  CLI::App* catalog =
      app.add_subcommand("catalog", "run the full reproduction grid");
  catalog->add_option("--max-q", max_q, "largest symplectic q (3, 5 or 7)");
  catalog->add_option("--out", report_path, "JSON report path");

  CLI::App* info = app.add_subcommand("info", "describe commands and formats");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (construct->parsed()) return run_construct(cargs);
    if (verify->parsed()) return run_verify(kind, in_path, partition_path);
    if (catalog->parsed()) return run_catalog_cmd(max_q, report_path);
    if (info->parsed()) {
      print_info();
      return kExitOk;
    }
  } catch (const ddgf::check_error& e) {
    if (e.code() == ddgf::errc::usage_error) {
      std::cerr << e.what() << "\n";
      return kExitUsage;
    }
    std::cerr << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}
