#include "imatch/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "imatch/generators.hpp"
#include "imatch/random.hpp"

namespace imatch {

const char* to_string(Family f) {
  switch (f) {
    case Family::projective: return "projective";
    case Family::polarity: return "polarity";
    case Family::random_regular: return "random-regular";
  }
  return "unknown";
}

Family parse_family(const std::string& name) {
  if (name == "projective") return Family::projective;
  if (name == "polarity") return Family::polarity;
  if (name == "random-regular") return Family::random_regular;
  throw std::invalid_argument("unknown family \"" + name + "\" (expected projective, polarity, random-regular)");
}

std::uint64_t trial_seed(std::uint64_t master, Family family, std::uint64_t param, std::uint64_t trial) {
  return split_seed(split_seed(split_seed(master, fnv1a64(to_string(family))), param), trial);
}

Graph family_graph(Family family, std::uint64_t param, std::size_t degree, std::uint64_t seed) {
  switch (family) {
    case Family::projective: return projective_incidence_graph(static_cast<std::uint32_t>(param));
    case Family::polarity: return polarity_graph(static_cast<std::uint32_t>(param));
    case Family::random_regular: return random_regular(param, degree, seed);
  }
  throw std::invalid_argument("unknown family");
}

std::string format_decimal(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

const std::string& csv_header() {
  static const std::string header =
      "family,q,n,d,matching_size,gm_vertices,gm_triangles,budget,lemma_attempts,im_size,"
      "ratio_natural_log,seed,wall_time_ms,status";
  return header;
}

std::string to_csv(const StatsRow& r) {
  std::ostringstream out;
  out << r.family << ',' << (r.q ? std::to_string(*r.q) : "") << ',' << r.n << ',' << r.d << ',' << r.matching_size
      << ',' << r.gm_vertices << ',' << r.gm_triangles << ',' << format_decimal(r.budget, 3) << ','
      << r.lemma_attempts << ',' << r.im_size << ',' << (r.ratio ? format_decimal(*r.ratio) : "") << ',' << r.seed
      << ',' << (r.wall_ms ? format_decimal(*r.wall_ms, 3) : "") << ',' << r.status;
  return out.str();
}

StatsRow make_row(const std::string& family, std::optional<std::uint64_t> q, std::uint64_t seed,
                  const PipelineStats& stats, std::size_t im_size, const std::string& status) {
  StatsRow row;
  row.family = family;
  row.q = q;
  row.n = stats.n;
  row.d = stats.d;
  row.matching_size = stats.matching_size;
  row.gm_vertices = stats.gm_vertices;
  row.gm_triangles = stats.gm_triangles;
  row.budget = stats.budget;
  row.lemma_attempts = stats.lemma_attempts;
  row.im_size = im_size;
  if (status == "ok") row.ratio = scaling_ratio(im_size, stats.n, stats.d);
  row.seed = seed;
  row.status = status;
  return row;
}

std::optional<double> median(std::vector<double> values) {
  if (values.empty()) return std::nullopt;
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return (values[mid - 1] + values[mid]) / 2.0;
}

namespace {

StatsRow run_trial(const ExperimentSpec& spec, std::uint64_t param, std::size_t trial) {
  const std::uint64_t seed = trial_seed(spec.seed, spec.family, param, trial);
  const std::optional<std::uint64_t> q =
      spec.family == Family::random_regular ? std::nullopt : std::optional<std::uint64_t>(param);
  PipelineConfig config = spec.pipeline;
  config.seed = seed;

  const auto start = std::chrono::steady_clock::now();
  StatsRow row;
  try {
    const Graph g = family_graph(spec.family, param, spec.degree, seed);
    try {
      const auto result = induced_matching(g, config);
      const bool valid = !result.certificate || *result.certificate;
      row = make_row(to_string(spec.family), q, seed, result.stats, result.size, valid ? "ok" : "failed:invalid");
    } catch (const PipelineError& e) {
      row = make_row(to_string(spec.family), q, seed, e.stats(), 0, std::string("failed:") + to_string(e.kind()));
    }
  } catch (const std::exception&) {
    row.family = to_string(spec.family);
    row.q = q;
    row.seed = seed;
    row.status = "failed:generator";
  }
  if (spec.timing) {
    row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return row;
}

ParamSummary summarize(std::uint64_t param, const std::vector<StatsRow>& rows) {
  ParamSummary s;
  s.param = param;
  s.rows = rows.size();
  std::vector<double> ratios;
  for (const auto& r : rows) {
    if (r.status != "ok") ++s.failures;
    if (r.ratio) ratios.push_back(*r.ratio);
  }
  if (!ratios.empty()) s.min_ratio = *std::min_element(ratios.begin(), ratios.end());
  s.median_ratio = median(ratios);
  return s;
}

}  // namespace

ExperimentReport run_experiment(const ExperimentSpec& spec) {
  if (spec.trials == 0) throw std::invalid_argument("trials must be at least 1");
  if (spec.params.empty()) throw std::invalid_argument("parameter list is empty");

  ExperimentReport report;
  report.floor = spec.floor;
  if (spec.calibration_param) {
    std::vector<StatsRow> calib;
    for (std::size_t t = 0; t < spec.calibration_trials; ++t) calib.push_back(run_trial(spec, *spec.calibration_param, t));
    const auto s = summarize(*spec.calibration_param, calib);
    if (!s.median_ratio) throw std::runtime_error("calibration produced no ratios");
    report.floor = *s.median_ratio / 2.0;
  }

  for (std::uint64_t param : spec.params) {
    std::vector<StatsRow> rows;
    for (std::size_t t = 0; t < spec.trials; ++t) rows.push_back(run_trial(spec, param, t));
    report.summaries.push_back(summarize(param, rows));
    report.rows.insert(report.rows.end(), rows.begin(), rows.end());
  }

  if (report.floor) {
    bool pass = true;
    for (const auto& s : report.summaries) {
      if (!s.min_ratio || *s.min_ratio < *report.floor) pass = false;
    }
    report.pass = pass;
  }
  return report;
}

std::string summary_line(Family family, const ParamSummary& s) {
  std::ostringstream out;
  out << "# summary family=" << to_string(family) << " param=" << s.param << " rows=" << s.rows
      << " failures=" << s.failures << " min_ratio=" << (s.min_ratio ? format_decimal(*s.min_ratio) : "NA")
      << " median_ratio=" << (s.median_ratio ? format_decimal(*s.median_ratio) : "NA");
  return out.str();
}

std::string verdict_line(const ExperimentReport& report) {
  std::ostringstream out;
  std::optional<double> overall;
  for (const auto& s : report.summaries) {
    if (s.min_ratio) overall = overall ? std::min(*overall, *s.min_ratio) : *s.min_ratio;
  }
  out << "# verdict min_ratio=" << (overall ? format_decimal(*overall) : "NA")
      << " floor=" << (report.floor ? format_decimal(*report.floor) : "NA") << ' '
      << (report.pass ? (*report.pass ? "PASS" : "FAIL") : "NO_FLOOR");
  return out.str();
}

}  // namespace imatch
