#include "phasebound/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <numbers>
#include <sstream>

#include "phasebound/bounds.hpp"
#include "phasebound/experiments.hpp"
#include "phasebound/geometry.hpp"
#include "phasebound/io.hpp"

namespace phasebound::cli {

using nlohmann::json;

namespace {

constexpr double kLemma1Tolerance = 1e-12;

void emit(const std::optional<std::filesystem::path>& path, const std::string& content, std::ostream& out) {
  if (path) {
    write_atomically(*path, content);
  } else {
    out << content;
  }
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

const char* format_name(OutputFormat format) { return format == OutputFormat::csv ? "csv" : "json"; }

// Shared error boundary: every input problem becomes exit code 1 with a
// diagnostic naming what was wrong.
template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const NonFiniteSample& e) {
    err << "error: non-finite sample: " << e.what() << "\n";
  } catch (const MalformedFile& e) {
    err << "error: " << e.what() << "\n";
  } catch (const GridMismatch& e) {
    err << "error: grid mismatch: " << e.what() << "\n";
  } catch (const HypothesisViolation& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitInputError;
}

bool valid_p(double p) { return p >= 1.0 && p < 2.0; }

}  // namespace

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!config.p || !valid_p(*config.p)) {
      err << "error: invalid p: --p must lie in [1, 2)\n";
      return kExitInputError;
    }
    if (config.zero_tol && !(*config.zero_tol >= 0.0)) {
      err << "error: invalid zero tolerance: --zero-tol must be nonnegative\n";
      return kExitInputError;
    }
    const SampledFunction f = load_function(config.f_path);
    const SampledFunction g = load_function(config.g_path);
    require_same_grid(f, g, "verify");

    const double zero_tol = config.zero_tol.value_or(default_zero_tolerance(fourier_transform(f)));
    const BoundReport report = evaluate_theorem(f, g, *config.p, zero_tol);
    const bool certified = report.certified();

    if (config.format == OutputFormat::csv) {
      emit(config.out_path, bound_report_csv(report), out);
    } else {
      json doc;
      doc["config"] = {{"f", config.f_path.string()},
                       {"g", config.g_path.string()},
                       {"p", *config.p},
                       {"zero_tol", zero_tol},
                       {"certification_tolerance", kCertificationTolerance},
                       {"grid", to_json(f.grid())},
                       {"format", format_name(config.format)}};
      doc["report"] = to_json(report);
      doc["certified"] = certified;
      doc["squared_form_certified"] = report.squared_form_certified();
      emit(config.out_path, dump(doc), out);
    }
    if (!certified) {
      err << "certification failed: slack " << report.slack << " < -" << kCertificationTolerance << " * rhs\n";
      return kExitCertificationFailure;
    }
    return kExitOk;
  });
}

int cmd_corollary1(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (config.support_tol && !(*config.support_tol >= 0.0)) {
      err << "error: invalid support tolerance: --support-tol must be nonnegative\n";
      return kExitInputError;
    }
    const SampledFunction f = load_function(config.f_path);
    const SampledFunction g = load_function(config.g_path);
    require_same_grid(f, g, "corollary1");
    const Corollary1Report report = evaluate_corollary1(f, g, config.support_tol);
    const bool certified = report.certified();

    if (config.format == OutputFormat::csv) {
      emit(config.out_path, corollary1_csv(report), out);
    } else {
      json doc;
      doc["config"] = {{"f", config.f_path.string()},
                       {"g", config.g_path.string()},
                       {"support_tol", config.support_tol ? json(*config.support_tol) : json("default")},
                       {"certification_tolerance", kCertificationTolerance},
                       {"grid", to_json(f.grid())}};
      doc["report"] = to_json(report);
      doc["certified"] = certified;
      emit(config.out_path, dump(doc), out);
    }
    return certified ? kExitOk : kExitCertificationFailure;
  });
}

int cmd_lemma1(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (config.radius_steps < 2 || config.angle_steps < 2) {
      err << "error: invalid steps: --radius-steps and --angle-steps must be at least 2\n";
      return kExitInputError;
    }
    const Lemma1ScanResult scan =
        lemma1_scan(static_cast<std::size_t>(config.radius_steps), static_cast<std::size_t>(config.angle_steps));
    emit(config.out_path, dump(to_json(scan)), out);
    return scan.min_gap >= -kLemma1Tolerance ? kExitOk : kExitCertificationFailure;
  });
}

namespace {

json experiment_config_json(const ExperimentConfig& c) {
  return json{{"name", c.name},
              {"sweep", c.sweep},
              {"grid_half_extent", c.grid_half_extent},
              {"grid_points", c.grid_points},
              {"k", c.k},
              {"n", c.n}};
}

struct ExperimentOutcome {
  std::vector<ScalingResult> results;
  json details;
  bool pass = false;
};

ExperimentOutcome run_experiment(const ExperimentConfig& c) {
  ExperimentOutcome o;
  const GridSpec grid = c.grid();
  if (c.name == "optimality") {
    const OptimalityResult r = optimality_experiment(c.sweep, grid);
    o.results = {r.l2, r.l1};
    o.details = {{"corollary1_ratio", r.corollary1_ratio},
                 {"max_corollary1_ratio", r.max_corollary1_ratio},
                 {"corollary1_ratio_spread", r.corollary1_ratio_spread},
                 {"theorem_certified", r.theorem_certified},
                 {"corollary1_certified", r.corollary1_certified}};
    o.pass = r.pass();
  } else if (c.name == "triangle") {
    const TriangleResult r = triangle_experiment(central_bump_perturbation(), c.sweep, grid);
    o.results = {r.small_amplitude};
    o.details = {{"residuals", r.residuals},
                 {"large_amplitude_slope", r.large_amplitude_slope},
                 {"crossover_ok", r.crossover_ok},
                 {"residual_bounded", r.residual_bounded},
                 {"theorem_certified", r.theorem_certified}};
    o.pass = r.pass();
  } else if (c.name == "translation") {
    const SampledFunction f = SampledFunction::sample(grid, [](std::span<const double> x) {
      double r2 = 0.0;
      for (double v : x) r2 += v * v;
      return std::exp(-std::numbers::pi * r2);
    });
    const TranslationResult r = translation_experiment(f, c.sweep);
    o.results = {r.scaling};
    o.details = {{"max_identity_error", r.max_identity_error},
                 {"max_term_modulus", r.max_term_modulus},
                 {"max_modulus_mismatch", r.max_modulus_mismatch},
                 {"theorem_certified", r.theorem_certified}};
    o.pass = r.pass();
  } else {
    const ScalingResult r = tail_experiment(TailParams{c.k, c.n}, c.sweep, grid);
    o.results = {r};
    o.details = json::object();
    o.pass = r.pass;
  }
  return o;
}

}  // namespace

int cmd_experiment(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    ExperimentConfig c = default_experiment_config(config.experiment_name, config.k, config.n);
    if (c.name != "tail" && config.n != 1) {
      err << "error: invalid dimension: --n applies to the tail experiment only\n";
      return kExitInputError;
    }
    if (c.name == "tail") TailParams{config.k, config.n}.validate();
    if (!config.sweep.empty()) c.sweep = config.sweep;
    if (config.grid_points) c.grid_points = *config.grid_points;
    if (config.grid_half_extent) c.grid_half_extent = *config.grid_half_extent;

    const ExperimentOutcome o = run_experiment(c);

    json doc;
    doc["experiment"] = c.name;
    doc["config"] = experiment_config_json(c);
    doc["results"] = json::array();
    for (const ScalingResult& r : o.results) doc["results"].push_back(to_json(r));
    doc["details"] = o.details;
    doc["pass"] = o.pass;

    if (config.format == OutputFormat::csv) {
      emit(config.out_path, scaling_csv(o.results), out);
      if (config.out_path) {
        std::filesystem::path sidecar = *config.out_path;
        if (sidecar.extension() == ".csv") {
          sidecar.replace_extension(".json");
        } else {
          sidecar += ".json";
        }
        write_atomically(sidecar, dump(doc));
      }
    } else {
      emit(config.out_path, dump(doc), out);
    }
    if (!o.pass) {
      err << "experiment '" << c.name << "' did not pass\n";
      return kExitCertificationFailure;
    }
    return kExitOk;
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Evaluate and certify Fourier phase-retrieval stability bounds on sampled functions"};
  app.require_subcommand(1);
  RunConfig config;
  std::string format = "json";
  std::string out_path;

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "Write the report to this path (atomic) instead of stdout");
    sub->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  };

  CLI::App* verify = app.add_subcommand("verify", "Evaluate every term of the stability bound for two functions");
  verify->add_option("--f", config.f_path, "Function file for f")->required();
  verify->add_option("--g", config.g_path, "Function file for g")->required();
  verify->add_option("--p", config.p, "Exponent p in [1, 2)")->required();
  verify->add_option("--zero-tol", config.zero_tol, "Treat |f^| at or below this as zero (default 1e-12 max|f^|)");
  add_output(verify);

  CLI::App* corollary1 = app.add_subcommand("corollary1", "Band-limited bound for f with real spectrum");
  corollary1->add_option("--f", config.f_path, "Function file for f")->required();
  corollary1->add_option("--g", config.g_path, "Function file for g")->required();
  corollary1->add_option("--support-tol", config.support_tol, "Support threshold (default 1e-12 max|f^|)");
  add_output(corollary1);

  CLI::App* lemma1 = app.add_subcommand("lemma1", "Brute-force scan of the half-radius disk inequality");
  lemma1->add_option("--radius-steps", config.radius_steps, "Radial samples (>= 2)")->required();
  lemma1->add_option("--angle-steps", config.angle_steps, "Angular samples (>= 2)")->required();
  lemma1->add_option("--out", out_path, "Write the summary to this path instead of stdout");

  CLI::App* experiment = app.add_subcommand("experiment", "Run a scaling experiment");
  experiment->add_option("--name", config.experiment_name, "optimality | triangle | translation | tail")->required();
  experiment->add_option("--sweep", config.sweep, "Comma-separated sweep values")->delimiter(',');
  experiment->add_option("--grid-n", config.grid_points, "Points per axis (even)");
  experiment->add_option("--grid-extent", config.grid_half_extent, "Half-extent T of the space grid");
  experiment->add_option("--k", config.k, "Decay order k (tail)");
  experiment->add_option("--n", config.n, "Dimension n (tail)");
  add_output(experiment);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  if (!out_path.empty()) config.out_path = out_path;
  config.format = format == "csv" ? OutputFormat::csv : OutputFormat::json;

  if (verify->parsed()) return cmd_verify(config, out, err);
  if (corollary1->parsed()) return cmd_corollary1(config, out, err);
  if (lemma1->parsed()) return cmd_lemma1(config, out, err);
  return cmd_experiment(config, out, err);
}

}  // namespace phasebound::cli
