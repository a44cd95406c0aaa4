// flagrec: combinatorial boundaries of flag complexes, class verification,
// and reconstruction from boundary distance matrices.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "flagrec/complex.hpp"
#include "flagrec/generate.hpp"
#include "flagrec/graph.hpp"
#include "flagrec/json_io.hpp"
#include "flagrec/reconstruct.hpp"
#include "flagrec/verify.hpp"

namespace {

using namespace flagrec;

constexpr int kExitVerdictFalse = 1;
constexpr int kExitInputError = 2;
constexpr int kExitEmptyBoundary = 3;
constexpr int kExitNotReconstructible = 4;

int exit_code_for(const Error& error) {
  switch (error.code()) {
    case ErrorCode::EmptyBoundary: return kExitEmptyBoundary;
    case ErrorCode::NotReconstructible: return kExitNotReconstructible;
    default: return kExitInputError;
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::ostream& open_out(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) fail(ErrorCode::ParseError, "cannot write " + path);
  return file;
}

struct GenFlags {
  std::string family;
  std::string spec_file;
  std::string cls = "helly";
  GenSpec spec;

  void attach(CLI::App* cmd, bool with_class) {
    cmd->add_option("--family", family,
                    "tree | king-grid | triangular-patch | chordal | wheel | filtered");
    cmd->add_option("--spec", spec_file, "generator spec as a JSON file (alternative to flags)");
    cmd->add_option("--n", spec.n, "vertex count (tree, chordal, filtered) or rim size (wheel)");
    cmd->add_option("--rows", spec.rows, "king grid rows");
    cmd->add_option("--cols", spec.cols, "king grid columns");
    cmd->add_option("--radius", spec.radius, "triangular disk radius");
    cmd->add_option("--tris", spec.tri_count, "masked region size in triangles");
    cmd->add_option("--density-num", spec.density_num, "chordal attachment density numerator");
    cmd->add_option("--density-den", spec.density_den, "chordal attachment density denominator");
    cmd->add_option("--attempts", spec.attempts, "filtered generation attempt budget");
    if (with_class) {
      cmd->add_option("--class", cls, "target class for filtered generation");
    }
    cmd->add_option("--seed", spec.seed, "PRNG seed");
  }

  GenSpec resolve() {
    if (!spec_file.empty()) return genspec_from_json(slurp(spec_file));
    auto parsed = gen_family_from_name(family);
    if (!parsed) fail(ErrorCode::ParseError, "unknown or missing --family");
    spec.family = *parsed;
    if (spec.family == GenFamily::FilteredRandom) {
      auto parsed_class = graph_class_from_name(cls);
      if (!parsed_class) fail(ErrorCode::ParseError, "unknown --class " + cls);
      spec.filter_class = *parsed_class;
    }
    return spec;
  }
};

SelectorKind selector_from_flag(const std::string& cls) {
  auto kind = selector_kind_from_name(cls);
  if (!kind) {
    fail(ErrorCode::ParseError,
         "--class must be one of helly | systolic2d | systolic | weakly-systolic");
  }
  return *kind;
}

GraphClass filter_class_for(SelectorKind kind) {
  switch (kind) {
    case SelectorKind::Helly: return GraphClass::Helly;
    case SelectorKind::Systolic2D: return GraphClass::Systolic2D;
    case SelectorKind::SystolicBacktracking: return GraphClass::Bridged;
    case SelectorKind::WeaklySystolicBacktracking: return GraphClass::WeaklyBridged;
  }
  return GraphClass::Helly;
}

int cmd_generate(GenFlags& flags, const std::string& out_path) {
  Graph g = generate(flags.resolve());
  std::ofstream file;
  open_out(out_path, file) << graph_to_json(g) << "\n";
  return 0;
}

int cmd_boundary(const std::string& graph_path, const std::string& out_path) {
  Graph g = graph_from_json(slurp(graph_path));
  BoundaryInstance instance = boundary_instance(g);
  std::ofstream file;
  open_out(out_path, file) << instance_to_json(instance) << "\n";
  return 0;
}

int cmd_verify(const std::string& graph_path, const std::string& cls,
               const std::string& out_path) {
  auto parsed_class = graph_class_from_name(cls);
  if (!parsed_class) fail(ErrorCode::ParseError, "unknown --class " + cls);
  Graph g = graph_from_json(slurp(graph_path));
  ClassReport report = verify_class(g, *parsed_class);
  std::ofstream file;
  open_out(out_path, file) << report_to_json(report) << "\n";
  return report.verdict ? 0 : kExitVerdictFalse;
}

int cmd_reconstruct(const std::string& instance_path, const std::string& cls,
                    const std::string& out_path) {
  SelectorKind kind = selector_from_flag(cls);
  BoundaryInstance instance = instance_from_json(slurp(instance_path));
  ReconstructionResult result = reconstruct(instance, kind);
  std::ofstream file;
  auto& out = open_out(out_path, file);
  out << graph_to_json(result.graph) << "\n";
  out << stats_to_json(result.stats) << "\n";
  return 0;
}

int cmd_roundtrip(GenFlags& flags, const std::string& cls) {
  SelectorKind kind = selector_from_flag(cls);
  flags.cls = graph_class_name(filter_class_for(kind));
  Graph hidden = generate(flags.resolve());
  BoundaryInstance instance = boundary_instance(hidden);
  ReconstructionResult result;
  try {
    result = reconstruct(instance, kind);
  } catch (const Error& e) {
    std::cout << "roundtrip FAIL: " << e.what() << "\n";
    std::cout << "hidden graph: " << graph_to_json(hidden) << "\n";
    std::cout << "instance: " << instance_to_json(instance) << "\n";
    return kExitVerdictFalse;
  }
  std::map<std::string, std::string> identity;
  for (const auto& label : instance.boundary) identity.emplace(label, label);
  auto mapping = iso_fixing_boundary(result.graph, hidden, identity);
  if (mapping) {
    std::cout << "roundtrip PASS: " << selector_kind_name(kind) << " rebuilt "
              << result.graph.vertex_count() << " vertices / " << result.graph.edge_count()
              << " edges in " << result.stats.steps << " steps ("
              << result.stats.backtracks << " backtracks)\n";
    return 0;
  }
  // Repro artifact: everything needed to replay the divergence offline.
  std::cout << "roundtrip FAIL: no isomorphism extends the identity on the boundary\n";
  std::cout << "hidden graph: " << graph_to_json(hidden) << "\n";
  std::cout << "instance: " << instance_to_json(instance) << "\n";
  std::cout << "reconstructed graph: " << graph_to_json(result.graph) << "\n";
  for (std::size_t i = 0; i < result.log.size(); ++i) {
    const auto& record = result.log[i];
    std::cout << "peel step " << i + 1 << ": removed " << record.removed << " ("
              << (record.step == PeelRecord::Step::DropCovered ? "covered by "
                                                               : "introduced ")
              << record.partner << ")\n";
  }
  return kExitVerdictFalse;
}

int cmd_bench(GenFlags& flags, const std::string& cls, const std::string& scales_flag,
              const std::string& out_path) {
  SelectorKind kind = selector_from_flag(cls);
  flags.cls = graph_class_name(filter_class_for(kind));
  std::vector<int> scales;
  std::stringstream splitter(scales_flag);
  for (std::string token; std::getline(splitter, token, ',');) {
    if (!token.empty()) scales.push_back(std::stoi(token));
  }
  if (scales.empty()) fail(ErrorCode::ParseError, "--scale-list must name at least one scale");

  std::ofstream file;
  auto& out = open_out(out_path, file);
  out << "family,scale,n0,n,m,steps,elapsed_ms,elapsed_per_n0m\n";
  GenSpec base = flags.resolve();
  for (int scale : scales) {
    GenSpec spec = base;
    switch (spec.family) {
      case GenFamily::KingGrid:
        spec.rows = spec.cols = scale;
        break;
      case GenFamily::TriangularPatch:
        if (spec.tri_count > 0) {
          spec.tri_count = scale;
        } else {
          spec.radius = scale;
        }
        break;
      default:
        spec.n = scale;
        break;
    }
    Graph hidden = generate(spec);
    BoundaryInstance instance = boundary_instance(hidden);
    // Repeat tiny instances so the per-scale timing is not all clock noise.
    double elapsed_ms = 0.0;
    long long steps = 0;
    int runs = 0;
    auto started = std::chrono::steady_clock::now();
    do {
      ReconstructionResult result = reconstruct(instance, kind);
      elapsed_ms += result.stats.elapsed_ms;
      steps = result.stats.steps;
      ++runs;
    } while (runs < 200 &&
             std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
                     .count() < 20.0);
    elapsed_ms /= runs;
    long long n0 = static_cast<long long>(instance.boundary.size());
    long long n = hidden.vertex_count();
    long long m = static_cast<long long>(hidden.edge_count());
    double per = m > 0 ? elapsed_ms / (static_cast<double>(n0) * static_cast<double>(m)) : 0.0;
    out << gen_family_name(spec.family) << "," << scale << "," << n0 << "," << n << "," << m
        << "," << steps << "," << elapsed_ms << "," << per << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"boundary distance matrices of flag complexes: compute, verify, reconstruct"};
  app.require_subcommand(1);

  GenFlags gen_flags;
  std::string out_path;
  std::string graph_path;
  std::string instance_path;
  std::string cls;
  std::string scales;

  auto* generate_cmd = app.add_subcommand("generate", "emit a generated graph as JSON");
  gen_flags.attach(generate_cmd, /*with_class=*/true);
  generate_cmd->add_option("--out", out_path, "output file (default stdout)");

  auto* boundary_cmd =
      app.add_subcommand("boundary", "boundary vertices and distance matrix of a graph");
  boundary_cmd->add_option("graph", graph_path, "graph JSON file")->required();
  boundary_cmd->add_option("--out", out_path, "output file (default stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "test membership in a graph class");
  verify_cmd->add_option("graph", graph_path, "graph JSON file")->required();
  verify_cmd->add_option("--class", cls, "class to verify")->required();
  verify_cmd->add_option("--out", out_path, "output file (default stdout)");

  auto* reconstruct_cmd =
      app.add_subcommand("reconstruct", "rebuild a complex from a boundary instance");
  reconstruct_cmd->add_option("instance", instance_path, "boundary instance JSON file")
      ->required();
  reconstruct_cmd->add_option("--class", cls, "helly | systolic2d | systolic | weakly-systolic")
      ->required();
  reconstruct_cmd->add_option("--out", out_path, "output file (default stdout)");

  auto* roundtrip_cmd =
      app.add_subcommand("roundtrip", "generate, take the boundary, reconstruct, compare");
  gen_flags.attach(roundtrip_cmd, /*with_class=*/false);
  roundtrip_cmd->add_option("--class", cls, "reconstruction class")->required();

  auto* bench_cmd = app.add_subcommand("bench", "reconstruction timings across scales as CSV");
  gen_flags.attach(bench_cmd, /*with_class=*/false);
  bench_cmd->add_option("--class", cls, "reconstruction class")->required();
  bench_cmd->add_option("--scale-list", scales, "comma-separated scales")->required();
  bench_cmd->add_option("--out", out_path, "output CSV file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (generate_cmd->parsed()) return cmd_generate(gen_flags, out_path);
    if (boundary_cmd->parsed()) return cmd_boundary(graph_path, out_path);
    if (verify_cmd->parsed()) return cmd_verify(graph_path, cls, out_path);
    if (reconstruct_cmd->parsed()) return cmd_reconstruct(instance_path, cls, out_path);
    if (roundtrip_cmd->parsed()) return cmd_roundtrip(gen_flags, cls);
    if (bench_cmd->parsed()) return cmd_bench(gen_flags, cls, scales, out_path);
  } catch (const flagrec::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
