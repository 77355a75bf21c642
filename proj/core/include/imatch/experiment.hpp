#ifndef IMATCH_EXPERIMENT_HPP
#define IMATCH_EXPERIMENT_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "imatch/graph.hpp"
#include "imatch/pipeline.hpp"

namespace imatch {

/// Families a sweep can range over. The swept parameter is q for the finite
/// geometry families and n for random regular graphs (degree fixed).
enum class Family { projective, polarity, random_regular };

[[nodiscard]] const char* to_string(Family f);
/// Accepts "projective", "polarity", "random-regular". Throws
/// std::invalid_argument otherwise.
[[nodiscard]] Family parse_family(const std::string& name);

/// Per-trial seed: split_seed(split_seed(split_seed(master, fnv1a64(family)), param), trial).
[[nodiscard]] std::uint64_t trial_seed(std::uint64_t master, Family family, std::uint64_t param, std::uint64_t trial);

/// Graph for one sweep point. Random regular graphs use `seed`; the finite
/// geometry families ignore it.
[[nodiscard]] Graph family_graph(Family family, std::uint64_t param, std::size_t degree, std::uint64_t seed);

/// One CSV row: one pipeline run on one graph.
struct StatsRow {
  std::string family;
  std::optional<std::uint64_t> q;
  std::size_t n = 0;
  std::size_t d = 0;
  std::size_t matching_size = 0;
  std::size_t gm_vertices = 0;
  std::size_t gm_triangles = 0;
  double budget = 0;
  std::size_t lemma_attempts = 0;
  std::size_t im_size = 0;
  std::optional<double> ratio;  ///< im_size / ((n/d) ln d), d >= 2
  std::uint64_t seed = 0;
  std::optional<double> wall_ms;
  std::string status = "ok";  ///< "ok" or "failed:<reason>"
};

/// Column names; the ratio column states its natural-log base.
[[nodiscard]] const std::string& csv_header();
[[nodiscard]] std::string to_csv(const StatsRow& row);

[[nodiscard]] StatsRow make_row(const std::string& family, std::optional<std::uint64_t> q, std::uint64_t seed,
                                const PipelineStats& stats, std::size_t im_size, const std::string& status);

struct ExperimentSpec {
  Family family = Family::projective;
  std::vector<std::uint64_t> params;
  std::size_t degree = 3;  ///< random_regular only
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  PipelineConfig pipeline;
  bool timing = false;
  /// Explicit floor r* for the verdict.
  std::optional<double> floor;
  /// When set, r* = half the median ratio at this parameter over
  /// calibration_trials trials (overrides `floor`).
  std::optional<std::uint64_t> calibration_param;
  std::size_t calibration_trials = 50;
};

struct ParamSummary {
  std::uint64_t param = 0;
  std::size_t rows = 0;
  std::size_t failures = 0;
  std::optional<double> min_ratio;
  std::optional<double> median_ratio;
};

struct ExperimentReport {
  std::vector<StatsRow> rows;  ///< (param, trial) order
  std::vector<ParamSummary> summaries;
  std::optional<double> floor;
  std::optional<bool> pass;  ///< min over params of the per-parameter minimum ratio >= floor
};

/// Throws std::invalid_argument on trials == 0 or an empty parameter list.
/// Individual run failures become rows with a failed status.
[[nodiscard]] ExperimentReport run_experiment(const ExperimentSpec& spec);

[[nodiscard]] std::string summary_line(Family family, const ParamSummary& s);
[[nodiscard]] std::string verdict_line(const ExperimentReport& report);

[[nodiscard]] std::optional<double> median(std::vector<double> values);

/// Fixed-point decimal rendering used for every CSV float.
[[nodiscard]] std::string format_decimal(double value, int digits = 6);

}  // namespace imatch

#endif  // IMATCH_EXPERIMENT_HPP
