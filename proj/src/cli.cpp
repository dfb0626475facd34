#include "sylow/cli.hpp"

#include <filesystem>
#include <iomanip>
#include <ostream>

#include "CLI11.hpp"
#include "sylow/checks.hpp"
#include "sylow/report.hpp"
#include "sylow/text.hpp"

namespace sylow {

namespace {

std::string base_stem(const std::filesystem::path& path) {
  std::string stem = path.stem().string();
  return stem.empty() ? "base" : stem;
}

int cmd_girth(const std::filesystem::path& base_file,
              const std::string& format, const std::filesystem::path& out_dir,
              bool timings, std::ostream& out) {
  const DiagonalBase base = read_base_file(base_file);
  const BaseReport report = analyze_base(base);
  if (format == "json")
    out << to_json(report, timings);
  else
    out << to_text(report);
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    export_json(report, out_dir / ("girth_" + base_stem(base_file) + ".json"),
                timings);
  }
  return 0;
}

int cmd_classify(const CensusOptions& options, const std::string& format,
                 const std::filesystem::path& out_dir, std::ostream& out) {
  const CensusResult census = classify(options);
  if (format == "json")
    out << to_json(census);
  else
    out << to_text(census);
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    const char* scope = options.scope == CensusScope::Exhaustive ? "exhaustive"
                        : options.scope == CensusScope::DeltaOnly
                            ? "delta"
                            : "sample";
    export_json(census, out_dir / ("census_n" + std::to_string(options.n) +
                                   "_" + scope + ".json"));
  }
  return 0;
}

int cmd_verify(const CheckOptions& options, std::ostream& out) {
  const std::vector<CheckResult> results = run_verification_suite(options);
  if (results.empty()) {
    out << "no check matches filter '" << options.filter << "'\n";
    return 2;
  }
  bool all_pass = true;
  for (const CheckResult& result : results) {
    out << (result.pass ? "[PASS] " : "[FAIL] ") << result.name << " ("
        << std::fixed << std::setprecision(2) << result.seconds << "s): "
        << result.details << "\n";
    all_pass = all_pass && result.pass;
  }
  out << (all_pass ? "all checks passed" : "some checks FAILED") << " ("
      << results.size() << " run)\n";
  return all_pass ? 0 : 1;
}

int cmd_extend(const std::filesystem::path& base_file, unsigned steps,
               const std::filesystem::path& out_dir, std::ostream& out) {
  DiagonalBase base = read_base_file(base_file);
  for (unsigned s = 0; s < steps; ++s) base = extend_no4cycle(base);
  out << format_base(base);
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    write_file_atomic(out_dir / (base_stem(base_file) + "_n" +
                                 std::to_string(base.depth()) + ".base"),
                      format_base(base));
  }
  return 0;
}

int cmd_delta(unsigned n, const std::string& vector_text,
              const std::filesystem::path& out_dir, std::ostream& out) {
  const CharacteristicVector a = CharacteristicVector::parse(n, vector_text);
  const DiagonalBase base = delta_base(a);
  out << format_base(base);
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    write_file_atomic(out_dir / ("delta_n" + std::to_string(n) + "_" +
                                 a.to_string() + ".base"),
                      format_base(base));
  }
  return 0;
}

int cmd_ball(const std::filesystem::path& base_file, unsigned radius,
             const std::string& format, const std::filesystem::path& out_dir,
             std::ostream& out) {
  const DiagonalBase base = read_base_file(base_file);
  const Ball b = ball(base, Tableau::identity(base.depth()), radius);
  if (format == "text") {
    out << "radius: " << b.radius << "\n";
    out << "vertices: " << b.vertices.size() << "\n";
    out << "edges: " << b.edges.size() << "\n";
    out << "center-edge 4-cycle counts:";
    for (unsigned c : center_edge_four_cycle_counts(b)) out << " " << c;
    out << "\n";
  } else {
    std::filesystem::path target =
        out_dir.empty() ? std::filesystem::path(".") : out_dir;
    std::filesystem::create_directories(target);
    const auto file = target / ("ball_" + base_stem(base_file) + "_r" +
                                std::to_string(radius) + ".dot");
    export_dot(b, file);
    out << "wrote " << file.string() << "\n";
  }
  return 0;
}

int cmd_export(const std::filesystem::path& base_file, bool graph_flag,
               bool report_flag, const std::filesystem::path& out_dir,
               std::ostream& out) {
  const DiagonalBase base = read_base_file(base_file);
  const std::filesystem::path target =
      out_dir.empty() ? std::filesystem::path(".") : out_dir;
  std::filesystem::create_directories(target);
  if (!graph_flag && !report_flag) graph_flag = report_flag = true;
  if (graph_flag) {
    const auto file = target / ("cayley_" + base_stem(base_file) + ".dot");
    export_dot(CayleyGraph(base), file);
    out << "wrote " << file.string() << "\n";
  }
  if (report_flag) {
    const auto file = target / ("report_" + base_stem(base_file) + ".json");
    export_json(analyze_base(base), file);
    out << "wrote " << file.string() << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Cayley graphs of Sylow 2-subgroups of S_{2^n} on diagonal "
               "bases: girth classification and invariants"};
  app.require_subcommand(1);

  // girth
  std::filesystem::path girth_base;
  std::string girth_format = "text";
  std::filesystem::path girth_out;
  bool girth_timings = false;
  auto* girth_cmd =
      app.add_subcommand("girth", "girth report for a base file");
  girth_cmd->add_option("--base", girth_base, "base file")->required();
  girth_cmd->add_option("--format", girth_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  girth_cmd->add_option("--out", girth_out, "directory for the JSON report");
  girth_cmd->add_flag("--timings", girth_timings, "include timings in JSON");

  // classify
  unsigned classify_n = 3;
  bool classify_delta = false;
  std::uint64_t classify_sample = 0;
  std::uint64_t classify_seed = 1;
  unsigned classify_jobs = 0;
  unsigned classify_guard = kDefaultExhaustiveGuard;
  std::string classify_format = "text";
  std::filesystem::path classify_out;
  auto* classify_cmd = app.add_subcommand(
      "classify", "census of girths over diagonal bases of depth n");
  classify_cmd->add_option("--n", classify_n, "depth")->required();
  classify_cmd->add_flag("--delta-only", classify_delta,
                         "restrict to delta bases");
  classify_cmd->add_option("--sample", classify_sample,
                           "sample this many random bases");
  classify_cmd->add_option("--seed", classify_seed, "sampling seed");
  classify_cmd->add_option("--jobs", classify_jobs,
                           "worker threads (0 = hardware)");
  classify_cmd->add_option("--max-exhaustive", classify_guard,
                           "largest depth allowed exhaustively");
  classify_cmd->add_option("--format", classify_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  classify_cmd->add_option("--out", classify_out,
                           "directory for the JSON census");

  // verify-paper
  CheckOptions verify_options;
  auto* verify_cmd = app.add_subcommand(
      "verify-paper", "run the built-in verification suite");
  verify_cmd->add_option("--filter", verify_options.filter,
                         "only checks whose name contains this substring");
  verify_cmd->add_option("--jobs", verify_options.jobs,
                         "worker threads (0 = hardware)");
  verify_cmd->add_option("--out", verify_options.scratch_dir,
                         "directory for exported artifacts");

  // extend
  std::filesystem::path extend_base;
  unsigned extend_steps = 1;
  std::filesystem::path extend_out;
  auto* extend_cmd = app.add_subcommand(
      "extend", "extend a 4-cycle-free base, one depth per step");
  extend_cmd->add_option("--base", extend_base, "base file")->required();
  extend_cmd->add_option("--steps", extend_steps, "extension steps");
  extend_cmd->add_option("--out", extend_out,
                         "directory for the extended base file");

  // delta
  unsigned delta_n = 0;
  std::string delta_vector;
  std::filesystem::path delta_out;
  auto* delta_cmd = app.add_subcommand(
      "delta", "build the delta base of a characteristic vector");
  delta_cmd->add_option("--n", delta_n, "depth")->required();
  delta_cmd->add_option("--vector", delta_vector, "bits a_2..a_{n-1}")
      ->required();
  delta_cmd->add_option("--out", delta_out, "directory for the base file");

  // ball
  std::filesystem::path ball_base;
  unsigned ball_radius = 2;
  std::string ball_format = "dot";
  std::filesystem::path ball_out;
  auto* ball_cmd = app.add_subcommand(
      "ball", "ball around the identity vertex of the Cayley graph");
  ball_cmd->add_option("--base", ball_base, "base file")->required();
  ball_cmd->add_option("--radius", ball_radius, "ball radius");
  ball_cmd->add_option("--format", ball_format, "dot|text")
      ->check(CLI::IsMember({"dot", "text"}));
  ball_cmd->add_option("--out", ball_out, "directory for the DOT file");

  // export
  std::filesystem::path export_base;
  bool export_graph = false;
  bool export_report = false;
  std::filesystem::path export_out;
  auto* export_cmd = app.add_subcommand(
      "export", "write the Cayley graph DOT and/or the JSON report");
  export_cmd->add_option("--base", export_base, "base file")->required();
  export_cmd->add_flag("--graph", export_graph, "Cayley graph DOT (n <= 4)");
  export_cmd->add_flag("--report", export_report, "JSON girth report");
  export_cmd->add_option("--out", export_out, "output directory");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (app.got_subcommand(girth_cmd))
      return cmd_girth(girth_base, girth_format, girth_out, girth_timings,
                       out);
    if (app.got_subcommand(classify_cmd)) {
      CensusOptions options;
      options.n = classify_n;
      options.scope = classify_delta    ? CensusScope::DeltaOnly
                      : classify_sample ? CensusScope::Sample
                                        : CensusScope::Exhaustive;
      options.sample_count = classify_sample;
      options.seed = classify_seed;
      options.jobs = classify_jobs;
      options.exhaustive_guard = classify_guard;
      return cmd_classify(options, classify_format, classify_out, out);
    }
    if (app.got_subcommand(verify_cmd)) return cmd_verify(verify_options, out);
    if (app.got_subcommand(extend_cmd))
      return cmd_extend(extend_base, extend_steps, extend_out, out);
    if (app.got_subcommand(delta_cmd))
      return cmd_delta(delta_n, delta_vector, delta_out, out);
    if (app.got_subcommand(ball_cmd))
      return cmd_ball(ball_base, ball_radius, ball_format, ball_out, out);
    if (app.got_subcommand(export_cmd))
      return cmd_export(export_base, export_graph, export_report, export_out,
                        out);
  } catch (const GuardViolation& e) {
    err << "guard violation: " << e.what() << "\n";
    return 3;
  } catch (const InternalInconsistency& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "no subcommand given\n";
  return 2;
}

}  // namespace sylow
