// imatch: generate graphs, compute certified induced matchings, run scaling
// sweeps, query the exhaustive oracles and verify certificates.
//
// Exit status: 0 success / valid, 1 invalid certificate, 2 usage or input
// error, 3 algorithmic failure (triangle budget, exhausted retries, empty
// matching).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "imatch/edge_list_io.hpp"
#include "imatch/experiment.hpp"
#include "imatch/generators.hpp"
#include "imatch/graph.hpp"
#include "imatch/oracle.hpp"
#include "imatch/pipeline.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;
constexpr int kExitAlgorithm = 3;

struct GenerateOptions {
  std::string family;
  std::uint32_t q = 0;
  std::size_t n = 0;
  std::size_t d = 0;
  std::uint64_t seed = 0;
  std::string name;
  std::string out;
};

struct PipelineOptions {
  std::size_t B = 2;
  std::optional<double> epsilon;
  std::optional<std::size_t> d0;
  std::optional<std::size_t> max_retries;
  std::uint64_t seed = 0;
  bool greedy_fallback = false;
  bool verify = true;
  std::string sampler = "independent";

  imatch::PipelineConfig config() const {
    imatch::PipelineConfig c;
    c.B = B;
    c.epsilon = epsilon;
    c.lemma.d0 = d0;
    c.lemma.max_retries = max_retries;
    c.seed = seed;
    c.greedy_fallback = greedy_fallback;
    c.verify = verify;
    c.sampler = sampler == "fourwise" ? imatch::SamplerKind::fourwise : imatch::SamplerKind::independent;
    return c;
  }
};

void add_pipeline_flags(CLI::App& cmd, PipelineOptions& o) {
  cmd.add_option("--B", o.B, "Forbidden K_{B,B} parameter")->check(CLI::Range(std::size_t{2}, std::size_t{1000}));
  cmd.add_option("--epsilon", o.epsilon, "Triangle budget exponent (default 1/(2B))");
  cmd.add_option("--d0", o.d0, "Degree at or below which sampling is skipped");
  cmd.add_option("--max-retries", o.max_retries, "Sampling attempts before giving up");
  cmd.add_option("--seed", o.seed, "Master seed");
  cmd.add_flag("--greedy-fallback", o.greedy_fallback, "Fall back to a greedy induced matching on exhausted retries");
  cmd.add_flag("--verify,!--no-verify", o.verify, "Certify the output (default on)");
  cmd.add_option("--sampler", o.sampler, "Vertex sampler")->check(CLI::IsMember({"independent", "fourwise"}));
}

int cmd_generate(const GenerateOptions& o) {
  imatch::Graph g;
  if (o.family == "projective") {
    g = imatch::projective_incidence_graph(o.q);
  } else if (o.family == "polarity") {
    g = imatch::polarity_graph(o.q);
  } else if (o.family == "random-regular") {
    g = imatch::random_regular(o.n, o.d, o.seed);
  } else {
    g = imatch::named_fixture(o.name);
  }
  const auto p = imatch::degree_profile(g);
  std::ostringstream info;
  info << "n=" << g.num_vertices() << " m=" << g.num_edges() << " min_degree=" << p.min_degree
       << " max_degree=" << p.max_degree << " regular=" << (p.is_regular ? "true" : "false") << '\n';
  if (o.out.empty()) {
    imatch::write_edge_list(std::cout, g);
    std::cerr << info.str();
  } else {
    imatch::write_edge_list_file(o.out, g);
    std::cout << info.str();
  }
  return kExitOk;
}

int cmd_run(const std::string& path, const PipelineOptions& o, const std::string& out) {
  const imatch::Graph g = imatch::read_edge_list_file(path);
  const auto config = o.config();
  try {
    const auto result = imatch::induced_matching(g, config);
    imatch::write_certificate(std::cout, result.matching);
    const auto row = imatch::make_row("file", std::nullopt, config.seed, result.stats, result.size, "ok");
    std::cout << imatch::csv_header() << '\n' << imatch::to_csv(row) << '\n';
    if (!out.empty()) {
      std::ofstream file(out, std::ios::binary);
      if (!file) throw std::runtime_error("cannot write " + out);
      imatch::write_certificate(file, result.matching);
    }
    if (result.certificate && !*result.certificate) {
      std::cerr << "certificate check failed\n";
      return kExitInvalid;
    }
    return kExitOk;
  } catch (const imatch::PipelineError& e) {
    const auto row = imatch::make_row("file", std::nullopt, config.seed, e.stats(), 0,
                                      std::string("failed:") + imatch::to_string(e.kind()));
    std::cerr << "error: " << e.what() << '\n' << imatch::csv_header() << '\n' << imatch::to_csv(row) << '\n';
    return kExitAlgorithm;
  }
}

struct ExperimentOptions {
  std::string family = "projective";
  std::vector<std::uint64_t> q;
  std::vector<std::uint64_t> n;
  std::size_t d = 3;
  std::size_t trials = 1;
  std::string out;
  bool timing = false;
  std::optional<double> floor;
  std::optional<std::uint64_t> calibrate;
  std::size_t calibration_trials = 50;
};

int cmd_experiment(const ExperimentOptions& o, const PipelineOptions& p) {
  imatch::ExperimentSpec spec;
  spec.family = imatch::parse_family(o.family);
  spec.params = spec.family == imatch::Family::random_regular ? o.n : o.q;
  spec.degree = o.d;
  spec.trials = o.trials;
  spec.seed = p.seed;
  spec.pipeline = p.config();
  spec.timing = o.timing;
  spec.floor = o.floor;
  spec.calibration_param = o.calibrate;
  spec.calibration_trials = o.calibration_trials;
  const auto report = imatch::run_experiment(spec);

  std::ostringstream csv;
  csv << imatch::csv_header() << '\n';
  for (const auto& row : report.rows) csv << imatch::to_csv(row) << '\n';
  if (o.out.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream file(o.out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + o.out);
    file << csv.str();
  }
  for (const auto& s : report.summaries) std::cout << imatch::summary_line(spec.family, s) << '\n';
  if (report.floor) std::cout << imatch::verdict_line(report) << '\n';
  return report.pass.value_or(true) ? kExitOk : kExitAlgorithm;
}

int cmd_oracle(const std::string& path, std::optional<std::size_t> B) {
  namespace oracle = imatch::oracle;
  const imatch::Graph g = imatch::read_edge_list_file(path);
  std::cout << "n=" << g.num_vertices() << " m=" << g.num_edges() << '\n';
  auto guarded = [](const char* label, auto&& fn) {
    std::cout << label << '=';
    try {
      fn();
    } catch (const oracle::OracleLimitError&) {
      std::cout << "NA (over oracle limit)";
    }
    std::cout << '\n';
  };
  guarded("triangles", [&] { std::cout << oracle::count_triangles_bf(g); });
  guarded("max_independent_set", [&] { std::cout << oracle::max_independent_set_bf(g).first; });
  guarded("max_induced_matching", [&] {
    const auto [size, witness] = oracle::max_induced_matching_bf(g);
    std::cout << size;
    for (const auto& e : witness) std::cout << ' ' << e.u << '-' << e.v;
  });
  guarded("c4_free", [&] { std::cout << (oracle::is_c4_free_bf(g) ? "true" : "false"); });
  if (B) {
    const std::string label = "contains_k" + std::to_string(*B) + "," + std::to_string(*B);
    guarded(label.c_str(), [&] { std::cout << (oracle::contains_kbb_bf(g, *B) ? "true" : "false"); });
  }
  return kExitOk;
}

int cmd_verify(const std::string& graph_path, const std::string& cert_path) {
  const imatch::Graph g = imatch::read_edge_list_file(graph_path);
  const imatch::Matching m = imatch::read_certificate_file(cert_path);
  bool valid = false;
  try {
    valid = imatch::is_induced_matching(g, m);
  } catch (const imatch::GraphError& e) {
    std::cout << "invalid: " << e.what() << '\n';
    return kExitInvalid;
  }
  std::cout << (valid ? "valid" : "invalid") << " induced matching of size " << m.size() << '\n';
  return valid ? kExitOk : kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified induced matchings in graphs avoiding K_{B,B}"};
  app.require_subcommand(1);

  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "Write a graph in edge-list format");
  generate->add_option("--family", gen.family, "Graph family")
      ->required()
      ->check(CLI::IsMember({"projective", "polarity", "random-regular", "fixture"}));
  generate->add_option("--q", gen.q, "Prime field order (projective, polarity)");
  generate->add_option("--n", gen.n, "Vertex count (random-regular)");
  generate->add_option("--d", gen.d, "Degree (random-regular)");
  generate->add_option("--seed", gen.seed, "Seed (random-regular)");
  generate->add_option("--name", gen.name, "Fixture name (fixture)");
  generate->add_option("--out", gen.out, "Output file (default: standard output)");

  std::string run_graph;
  std::string run_out;
  PipelineOptions run_opts;
  auto* run = app.add_subcommand("run", "Compute a certified induced matching");
  run->add_option("graph", run_graph, "Edge-list file")->required();
  run->add_option("--out", run_out, "Also write the certificate to this file");
  add_pipeline_flags(*run, run_opts);

  ExperimentOptions exp;
  PipelineOptions exp_opts;
  auto* experiment = app.add_subcommand("experiment", "Sweep a graph family and record stats rows");
  experiment->add_option("--family", exp.family, "projective, polarity or random-regular")
      ->check(CLI::IsMember({"projective", "polarity", "random-regular"}));
  experiment->add_option("--q", exp.q, "Comma-separated prime list")->delimiter(',');
  experiment->add_option("--n", exp.n, "Comma-separated vertex counts (random-regular)")->delimiter(',');
  experiment->add_option("--d", exp.d, "Degree (random-regular)");
  experiment->add_option("--trials", exp.trials, "Trials per parameter");
  experiment->add_option("--out", exp.out, "CSV output file (default: standard output)");
  experiment->add_flag("--timing", exp.timing, "Fill the wall_time_ms column (output no longer reproducible)");
  experiment->add_option("--floor", exp.floor, "Ratio floor r* for the verdict line");
  experiment->add_option("--calibrate-q", exp.calibrate, "Set r* to half the median ratio at this parameter");
  experiment->add_option("--calibration-trials", exp.calibration_trials, "Trials for --calibrate-q");
  add_pipeline_flags(*experiment, exp_opts);

  std::string oracle_graph;
  std::optional<std::size_t> oracle_b;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive reference values for a small graph");
  oracle_cmd->add_option("graph", oracle_graph, "Edge-list file")->required();
  oracle_cmd->add_option("--B", oracle_b, "Also test for K_{B,B}");

  std::string verify_graph;
  std::string verify_cert;
  auto* verify = app.add_subcommand("verify", "Check that a certificate is an induced matching");
  verify->add_option("graph", verify_graph, "Edge-list file")->required();
  verify->add_option("certificate", verify_cert, "Certificate file, one edge \"u v\" per line")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (generate->parsed()) return cmd_generate(gen);
    if (run->parsed()) return cmd_run(run_graph, run_opts, run_out);
    if (experiment->parsed()) return cmd_experiment(exp, exp_opts);
    if (oracle_cmd->parsed()) return cmd_oracle(oracle_graph, oracle_b);
    if (verify->parsed()) return cmd_verify(verify_graph, verify_cert);
  } catch (const imatch::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
