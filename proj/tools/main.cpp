// Command-line front end: run simulations, emit plot-ready CSV data, and
// execute the verification suite.
//
// Subcommands: catalog, simulate, line, fractal, converge, verify.
// Exit codes: 0 success, 1 verification/runtime failure, 2 usage error.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lamb/analysis.hpp"
#include "lamb/io.hpp"
#include "lamb/line.hpp"
#include "lamb/manifest.hpp"
#include "lamb/periodic.hpp"
#include "lamb/verify.hpp"
#include "lamb/version.hpp"

namespace {

using nlohmann::ordered_json;

struct OscillatorFlags {
  double amplitude = -0.5;
  double damping = 0.1;
  double sigma = 1.0;
  double speed = 1.0;
};

void add_oscillator_flags(CLI::App* cmd, OscillatorFlags& f) {
  cmd->add_option("--amplitude", f.amplitude, "oscillator amplitude C")
      ->capture_default_str();
  cmd->add_option("--damping", f.damping, "oscillator damping beta")
      ->capture_default_str();
  cmd->add_option("--sigma", f.sigma, "oscillator natural frequency sigma")
      ->capture_default_str();
  cmd->add_option("--speed", f.speed, "medium wave speed c")
      ->capture_default_str();
}

lamb::OscillatorParams make_oscillator(const OscillatorFlags& f) {
  return {f.amplitude, f.damping, f.sigma, f.speed};
}

std::vector<std::pair<std::string, double>> parse_param_overrides(
    const std::vector<std::string>& raw) {
  std::vector<std::pair<std::string, double>> out;
  for (const auto& kv : raw) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == kv.size())
      throw std::invalid_argument("--param expects key=value, got '" + kv +
                                  "'");
    try {
      out.emplace_back(kv.substr(0, eq), std::stod(kv.substr(eq + 1)));
    } catch (const std::exception&) {
      throw std::invalid_argument("--param value in '" + kv +
                                  "' is not a number");
    }
  }
  return out;
}

const std::vector<std::string> kModelNames{"bi", "uni", "bidirectional",
                                           "unidirectional"};

std::string normalize_model(const std::string& model) {
  return (model == "uni" || model == "unidirectional") ? "uni" : "bi";
}

lamb::WaveModel parse_model(const std::string& model) {
  return normalize_model(model) == "uni" ? lamb::WaveModel::unidirectional
                                         : lamb::WaveModel::bidirectional;
}

std::string time_token(double t) {
  std::string s = lamb::format_double(t);
  return s;
}

ordered_json dispersion_json(const lamb::DispersionRelation& rel) {
  ordered_json p = ordered_json::object();
  for (const auto& [k, v] : rel.params()) p[k] = v;
  return p;
}

ordered_json regularity_json(const lamb::RegularityReport& rep) {
  ordered_json j;
  j["coefficient_decay_exponent"] = rep.coefficient_decay_exponent;
  if (rep.smoothness_order)
    j["smoothness_order"] = *rep.smoothness_order;
  else
    j["smoothness_order"] = nullptr;
  j["verdict"] = std::string(lamb::to_string(rep.verdict));
  return j;
}

int cmd_catalog(std::string model_filter, bool as_json) {
  if (!model_filter.empty()) model_filter = normalize_model(model_filter);
  const auto catalog = lamb::DispersionRelation::catalog();
  if (as_json) {
    ordered_json out = ordered_json::array();
    for (const auto& rel : catalog) {
      ordered_json entry;
      entry["name"] = std::string(rel.name());
      entry["formula"] = rel.formula();
      entry["params"] = dispersion_json(rel);
      entry["asymptotic_exponent"] = rel.asymptotic_exponent();
      if (model_filter.empty() || model_filter == "bi")
        entry["bidirectional"] = regularity_json(
            classify_regularity(rel, lamb::WaveModel::bidirectional));
      if (model_filter.empty() || model_filter == "uni")
        entry["unidirectional"] = regularity_json(
            classify_regularity(rel, lamb::WaveModel::unidirectional));
      out.push_back(entry);
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  auto describe = [](const lamb::RegularityReport& rep) {
    std::string s = "decay |k|^-" +
                    lamb::format_double(rep.coefficient_decay_exponent);
    if (rep.smoothness_order)
      s += ", C^" + std::to_string(*rep.smoothness_order);
    s += ", " + std::string(lamb::to_string(rep.verdict));
    return s;
  };
  for (const auto& rel : catalog) {
    std::printf("%-24s omega = %-30s m=%-4s", std::string(rel.name()).c_str(),
                rel.formula().c_str(),
                lamb::format_double(rel.asymptotic_exponent()).c_str());
    std::string params;
    for (const auto& [k, v] : rel.params()) {
      if (!params.empty()) params += ", ";
      params += k + "=" + lamb::format_double(v);
    }
    std::printf(" %s\n", params.empty() ? "(no parameters)" : params.c_str());
    if (model_filter.empty() || model_filter == "bi")
      std::printf("    bidirectional : %s\n",
                  describe(classify_regularity(
                               rel, lamb::WaveModel::bidirectional))
                      .c_str());
    if (model_filter.empty() || model_filter == "uni")
      std::printf("    unidirectional: %s\n",
                  describe(classify_regularity(
                               rel, lamb::WaveModel::unidirectional))
                      .c_str());
  }
  return 0;
}

struct SimulateArgs {
  std::string command_name = "simulate";
  OscillatorFlags osc;
  std::string model = "bi";
  std::string dispersion;
  std::vector<std::string> params;
  std::vector<double> times;
  int modes = 1000;
  int grid = 2048;
  unsigned threads = 1;
  std::string out_dir = ".";
  bool oracle = false;
  bool fractal = false;
  int scales = 8;
  std::string from_manifest;
};

int cmd_simulate(SimulateArgs args) {
  if (!args.from_manifest.empty()) {
    const auto m = lamb::RunManifest::load(args.from_manifest);
    if (m.command != "simulate" && m.command != "fractal")
      throw std::invalid_argument("manifest records a '" + m.command +
                                  "' run; use that subcommand to replay it");
    args.command_name = m.command;
    args.oracle = m.oracle;
    args.osc = {m.amplitude, m.damping, m.natural_frequency, m.wave_speed};
    args.model = m.model;
    args.dispersion = m.dispersion;
    args.params.clear();
    for (const auto& [k, v] : m.dispersion_params)
      args.params.push_back(k + "=" + lamb::format_double(v));
    args.times = m.times;
    args.modes = m.modes;
    args.grid = m.grid_points;
    args.threads = static_cast<unsigned>(m.threads);
    args.scales = m.scales > 0 ? m.scales : args.scales;
    args.fractal = m.scales > 0;
  }
  if (args.dispersion.empty())
    throw std::invalid_argument("--dispersion is required");
  if (args.times.empty())
    throw std::invalid_argument("--t requires at least one time");
  const auto osc = make_oscillator(args.osc);
  const auto rel = lamb::DispersionRelation::make(
      args.dispersion, parse_param_overrides(args.params));
  const auto model = parse_model(args.model);
  if (args.oracle && (model != lamb::WaveModel::bidirectional ||
                      rel.family() != lamb::DispersionFamily::wave))
    throw std::invalid_argument(
        "--oracle compares against the image-sum solution and needs "
        "--model bi --dispersion wave");
  if (args.fractal && args.grid < 1024)
    throw std::invalid_argument(
        "the dimension estimate needs --grid >= 1024 samples");

  const auto grid = lamb::uniform_periodic_grid(
      static_cast<std::size_t>(args.grid));
  std::filesystem::create_directories(args.out_dir);

  lamb::RunManifest manifest;
  manifest.command = args.command_name;
  manifest.oracle = args.oracle;
  manifest.amplitude = osc.amplitude();
  manifest.damping = osc.damping();
  manifest.natural_frequency = osc.natural_frequency();
  manifest.wave_speed = osc.wave_speed();
  manifest.model = normalize_model(args.model);
  manifest.dispersion = std::string(rel.name());
  manifest.dispersion_params = rel.params();
  manifest.times = args.times;
  manifest.modes = args.modes;
  manifest.grid_points = args.grid;
  manifest.threads = static_cast<int>(args.threads);
  if (args.fractal) manifest.scales = args.scales;

  ordered_json reports = ordered_json::object();
  for (double t : args.times) {
    const auto profile =
        model == lamb::WaveModel::bidirectional
            ? lamb::eval_bidirectional(osc, rel, args.modes, t, grid,
                                       args.threads)
            : lamb::eval_unidirectional(osc, rel, args.modes, t, grid,
                                        args.threads);
    const std::string name = "profile_t" + time_token(t) + ".csv";
    lamb::write_profile_csv(std::filesystem::path(args.out_dir) / name,
                            profile);
    manifest.outputs.push_back(name);
    std::printf("wrote %s (%d samples)\n", name.c_str(), args.grid);

    if (args.oracle) {
      const auto images = lamb::dalembert_periodic(osc, t, grid);
      const double scale = lamb::classical_forcing_scale(osc);
      double sup = 0.0;
      for (std::size_t i = 0; i < grid.size(); ++i)
        sup = std::max(sup, std::abs(images.values[i] -
                                     scale * profile.values[i]));
      std::printf("t=%s sup-norm vs image-sum solution: %.6e\n",
                  time_token(t).c_str(), sup);
      reports["oracle_sup_norm_t" + time_token(t)] = sup;
    }
    if (args.fractal) {
      const auto est = lamb::box_counting_dimension(profile, args.scales);
      std::printf("t=%s box-counting dimension: %.4f (fit residual %.4f)\n",
                  time_token(t).c_str(), est.dimension, est.fit_residual);
      ordered_json fj;
      fj["dimension"] = est.dimension;
      fj["fit_residual"] = est.fit_residual;
      fj["scale_min"] = est.scale_min;
      fj["scale_max"] = est.scale_max;
      fj["box_sizes"] = est.box_sizes;
      fj["box_counts"] = est.box_counts;
      fj["degenerate_flat"] = est.degenerate_flat;
      reports["fractal_t" + time_token(t)] = fj;
    }
  }
  manifest.outputs.push_back("manifest.json");
  manifest.write(std::filesystem::path(args.out_dir) / "manifest.json",
                 reports.empty() ? ordered_json() : reports);
  std::printf("wrote manifest.json\n");
  return 0;
}

struct LineArgs {
  OscillatorFlags osc;
  std::string model = "bi";
  std::string dispersion = "wave";
  std::vector<std::string> params;
  std::vector<double> times;
  int grid = 512;
  double xmax = 10.0;
  double k_max = 400.0;
  int panels = 1 << 15;
  bool closed_form = false;
  bool oracle = false;
  unsigned threads = 1;
  std::string out_dir = ".";
  std::string from_manifest;
};

int cmd_line(LineArgs args) {
  if (!args.from_manifest.empty()) {
    const auto m = lamb::RunManifest::load(args.from_manifest);
    if (m.command != "line")
      throw std::invalid_argument("manifest records a '" + m.command +
                                  "' run; use that subcommand to replay it");
    args.oracle = m.oracle;
    args.osc = {m.amplitude, m.damping, m.natural_frequency, m.wave_speed};
    args.model = m.model;
    args.dispersion = m.dispersion;
    args.params.clear();
    for (const auto& [k, v] : m.dispersion_params)
      args.params.push_back(k + "=" + lamb::format_double(v));
    args.times = m.times;
    args.grid = m.grid_points;
    args.xmax = m.xmax;
    args.closed_form = m.closed_form;
    if (!m.closed_form) {
      args.k_max = m.k_max;
      args.panels = m.panels;
    }
    args.threads = static_cast<unsigned>(m.threads);
  }
  if (args.times.empty())
    throw std::invalid_argument("--t requires at least one time");
  const auto osc = make_oscillator(args.osc);
  const auto model = parse_model(args.model);
  const auto rel = lamb::DispersionRelation::make(
      args.dispersion, parse_param_overrides(args.params));
  if (args.oracle && (args.closed_form ||
                      model != lamb::WaveModel::bidirectional ||
                      rel.family() != lamb::DispersionFamily::wave))
    throw std::invalid_argument(
        "--oracle compares quadrature to the classical closed form and needs "
        "--model bi --dispersion wave without --closed-form");

  const auto grid = lamb::uniform_grid(static_cast<std::size_t>(args.grid),
                                       -args.xmax, args.xmax);
  std::filesystem::create_directories(args.out_dir);

  lamb::RunManifest manifest;
  manifest.command = "line";
  manifest.oracle = args.oracle;
  manifest.amplitude = osc.amplitude();
  manifest.damping = osc.damping();
  manifest.natural_frequency = osc.natural_frequency();
  manifest.wave_speed = osc.wave_speed();
  manifest.model = normalize_model(args.model);
  manifest.dispersion = std::string(rel.name());
  manifest.dispersion_params = rel.params();
  manifest.times = args.times;
  manifest.grid_points = args.grid;
  manifest.threads = static_cast<int>(args.threads);
  manifest.xmax = args.xmax;
  manifest.closed_form = args.closed_form;
  manifest.k_max = args.k_max;
  manifest.panels = args.panels;

  ordered_json reports = ordered_json::object();
  for (double t : args.times) {
    lamb::SolutionProfile profile;
    if (args.closed_form) {
      profile = lamb::line_closed_form(osc, t, grid);
    } else {
      auto result = lamb::line_profile_quadrature(
          osc, rel, model, t, grid, args.k_max, args.panels, args.threads);
      if (result.cutoff_warning)
        std::fprintf(stderr,
                     "warning: tail estimate %.3e at t=%s exceeds 1e-2; "
                     "increase --kmax\n",
                     result.tail_estimate, time_token(t).c_str());
      reports["tail_estimate_t" + time_token(t)] = result.tail_estimate;
      profile = std::move(result.profile);
    }
    const std::string name = "line_t" + time_token(t) + ".csv";
    lamb::write_profile_csv(std::filesystem::path(args.out_dir) / name,
                            profile);
    manifest.outputs.push_back(name);
    std::printf("wrote %s (%d samples)\n", name.c_str(), args.grid);

    if (args.oracle) {
      const auto closed = lamb::line_closed_form(osc, t, grid);
      const double scale = lamb::classical_forcing_scale(osc);
      double sup = 0.0;
      for (std::size_t i = 0; i < grid.size(); ++i) {
        const double x = grid[i];
        const double to_kink = std::min(
            std::abs(x), std::abs(std::abs(x) - osc.wave_speed() * t));
        if (to_kink < 0.1) continue;
        sup = std::max(sup, std::abs(closed.values[i] -
                                     scale * profile.values[i]));
      }
      std::printf("t=%s sup-norm vs closed form (off kinks): %.6e\n",
                  time_token(t).c_str(), sup);
      reports["oracle_sup_norm_t" + time_token(t)] = sup;
    }
  }
  manifest.outputs.push_back("manifest.json");
  manifest.write(std::filesystem::path(args.out_dir) / "manifest.json",
                 reports.empty() ? ordered_json() : reports);
  std::printf("wrote manifest.json\n");
  return 0;
}

int cmd_fractal(SimulateArgs args) {
  args.command_name = "fractal";
  args.fractal = true;
  return cmd_simulate(std::move(args));
}

struct ConvergeArgs {
  OscillatorFlags osc;
  std::string model = "bi";
  std::string dispersion;
  std::vector<std::string> params;
  double t = 10.0;
  std::vector<int> truncations = {250, 500, 1000};
  int grid = 2048;
  unsigned threads = 1;
  std::string out_dir;
  bool as_json = false;
};

int cmd_converge(const ConvergeArgs& args) {
  if (args.dispersion.empty())
    throw std::invalid_argument("--dispersion is required");
  const auto osc = make_oscillator(args.osc);
  const auto rel = lamb::DispersionRelation::make(
      args.dispersion, parse_param_overrides(args.params));
  const auto grid = lamb::uniform_periodic_grid(
      static_cast<std::size_t>(args.grid));
  const auto report = lamb::convergence_report(
      osc, rel, parse_model(args.model), args.t, args.truncations, grid,
      args.threads);

  ordered_json j;
  j["dispersion"] = std::string(rel.name());
  j["model"] = args.model;
  j["t"] = args.t;
  j["truncations"] = report.truncations;
  j["sup_diffs"] = report.sup_diffs;
  j["l2_diffs"] = report.l2_diffs;
  j["verdict"] = std::string(lamb::to_string(report.verdict));
  if (args.as_json) {
    std::cout << j.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i + 1 < report.truncations.size(); ++i)
      std::printf("N %5d -> %5d : sup %.6e  l2 %.6e\n",
                  report.truncations[i], report.truncations[i + 1],
                  report.sup_diffs[i], report.l2_diffs[i]);
    std::printf("verdict: %s\n",
                std::string(lamb::to_string(report.verdict)).c_str());
  }
  if (!args.out_dir.empty()) {
    std::filesystem::create_directories(args.out_dir);
    lamb::RunManifest manifest;
    manifest.command = "converge";
    manifest.amplitude = osc.amplitude();
    manifest.damping = osc.damping();
    manifest.natural_frequency = osc.natural_frequency();
    manifest.wave_speed = osc.wave_speed();
    manifest.model = normalize_model(args.model);
    manifest.dispersion = std::string(rel.name());
    manifest.dispersion_params = rel.params();
    manifest.times = {args.t};
    manifest.grid_points = args.grid;
    manifest.threads = static_cast<int>(args.threads);
    manifest.truncations = args.truncations;
    manifest.outputs.push_back("manifest.json");
    manifest.write(std::filesystem::path(args.out_dir) / "manifest.json", j);
  }
  return 0;
}

int cmd_verify(bool sigma_variant, bool as_json, unsigned threads) {
  lamb::VerifyOptions options;
  options.sigma_variant = sigma_variant;
  options.threads = threads;
  const auto results = lamb::run_verification(options);
  bool all_passed = true;
  if (as_json) {
    ordered_json out = ordered_json::array();
    for (const auto& r : results) {
      out.push_back({{"name", r.name},
                     {"passed", r.passed},
                     {"detail", r.detail}});
      all_passed = all_passed && r.passed;
    }
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      std::printf("[%s] %-62s %s\n", r.passed ? "PASS" : "FAIL",
                  r.name.c_str(), r.detail.c_str());
      all_passed = all_passed && r.passed;
    }
    std::printf("%s\n", all_passed ? "all checks passed"
                                   : "verification FAILED");
  }
  if (!all_passed)
    for (const auto& r : results)
      if (!r.passed)
        std::fprintf(stderr, "failed check: %s\n", r.name.c_str());
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral solver and analysis toolkit for one-dimensional "
               "dispersive media driven by a damped point oscillator"};
  app.set_version_flag("--version", lamb::kVersion);
  app.require_subcommand(1);
  int rc = 0;

  // catalog
  std::string catalog_model;
  bool catalog_json = false;
  auto* catalog = app.add_subcommand(
      "catalog", "List the dispersion-relation catalog and its regularity "
                 "classification");
  catalog->add_option("--model", catalog_model, "restrict to one model")
      ->check(CLI::IsMember(kModelNames));
  catalog->add_flag("--json", catalog_json, "machine-readable output");
  catalog->callback([&] { rc = cmd_catalog(catalog_model, catalog_json); });

  // simulate
  SimulateArgs sim;
  auto* simulate = app.add_subcommand(
      "simulate", "Evaluate periodic solution profiles and write CSV data");
  add_oscillator_flags(simulate, sim.osc);
  simulate->add_option("--model", sim.model, "bi or uni")
      ->check(CLI::IsMember(kModelNames))
      ->capture_default_str();
  simulate->add_option("--dispersion", sim.dispersion,
                       "dispersion relation name");
  simulate->add_option("--param", sim.params,
                       "dispersion parameter override key=value (repeatable)");
  simulate->add_option("--t", sim.times, "times to evaluate (comma list)")
      ->delimiter(',');
  simulate->add_option("--modes", sim.modes, "Fourier truncation N")
      ->capture_default_str();
  simulate->add_option("--grid", sim.grid, "grid sample count")
      ->capture_default_str();
  simulate->add_option("--threads", sim.threads, "worker threads")
      ->capture_default_str();
  simulate->add_option("--out", sim.out_dir, "output directory")
      ->capture_default_str();
  simulate->add_flag("--oracle", sim.oracle,
                     "also compare against the image-sum solution (wave only)");
  simulate->add_flag("--fractal", sim.fractal,
                     "append a box-counting report per time");
  simulate->add_option("--scales", sim.scales,
                       "box-counting scale count (with --fractal)")
      ->capture_default_str();
  simulate->add_option("--from-manifest", sim.from_manifest,
                       "replay a previous run from its manifest");
  simulate->callback([&] { rc = cmd_simulate(sim); });

  // line
  LineArgs line;
  auto* line_cmd = app.add_subcommand(
      "line", "Evaluate full-line solutions (quadrature or closed form)");
  add_oscillator_flags(line_cmd, line.osc);
  line_cmd->add_option("--model", line.model, "bi or uni")
      ->check(CLI::IsMember(kModelNames))
      ->capture_default_str();
  line_cmd->add_option("--dispersion", line.dispersion,
                       "dispersion relation name")
      ->capture_default_str();
  line_cmd->add_option("--param", line.params,
                       "dispersion parameter override key=value (repeatable)");
  line_cmd->add_option("--t", line.times, "times to evaluate (comma list)")
      ->delimiter(',');
  line_cmd->add_option("--grid", line.grid, "grid sample count")
      ->capture_default_str();
  line_cmd->add_option("--xmax", line.xmax, "grid spans [-xmax, xmax]")
      ->capture_default_str();
  line_cmd->add_option("--kmax", line.k_max, "wave-number cutoff")
      ->capture_default_str();
  line_cmd->add_option("--nquad", line.panels, "quadrature panel count")
      ->capture_default_str();
  line_cmd->add_flag("--closed-form", line.closed_form,
                     "evaluate the classical wave closed form instead");
  line_cmd->add_flag("--oracle", line.oracle,
                     "also compare quadrature to the closed form (wave only)");
  line_cmd->add_option("--threads", line.threads, "worker threads")
      ->capture_default_str();
  line_cmd->add_option("--out", line.out_dir, "output directory")
      ->capture_default_str();
  line_cmd->add_option("--from-manifest", line.from_manifest,
                       "replay a previous run from its manifest");
  line_cmd->callback([&] { rc = cmd_line(line); });

  // fractal
  SimulateArgs frac;
  frac.grid = 8192;
  auto* fractal = app.add_subcommand(
      "fractal", "Evaluate profiles and estimate their box-counting "
                 "dimension");
  add_oscillator_flags(fractal, frac.osc);
  fractal->add_option("--model", frac.model, "bi or uni")
      ->check(CLI::IsMember(kModelNames))
      ->capture_default_str();
  fractal->add_option("--dispersion", frac.dispersion,
                      "dispersion relation name");
  fractal->add_option("--param", frac.params,
                      "dispersion parameter override key=value (repeatable)");
  fractal->add_option("--t", frac.times, "times to evaluate (comma list)")
      ->delimiter(',');
  fractal->add_option("--modes", frac.modes, "Fourier truncation N")
      ->capture_default_str();
  fractal->add_option("--grid", frac.grid, "grid sample count")
      ->capture_default_str();
  fractal->add_option("--scales", frac.scales, "box-counting scale count")
      ->capture_default_str();
  fractal->add_option("--threads", frac.threads, "worker threads")
      ->capture_default_str();
  fractal->add_option("--out", frac.out_dir, "output directory")
      ->capture_default_str();
  fractal->callback([&] { rc = cmd_fractal(frac); });

  // converge
  ConvergeArgs conv;
  auto* converge = app.add_subcommand(
      "converge", "Compare partial sums across truncations and report a "
                  "convergence verdict");
  add_oscillator_flags(converge, conv.osc);
  converge->add_option("--model", conv.model, "bi or uni")
      ->check(CLI::IsMember(kModelNames))
      ->capture_default_str();
  converge->add_option("--dispersion", conv.dispersion,
                       "dispersion relation name");
  converge->add_option("--param", conv.params,
                       "dispersion parameter override key=value (repeatable)");
  converge->add_option("--t", conv.t, "evaluation time")
      ->capture_default_str();
  converge->add_option("--truncations", conv.truncations,
                       "ascending truncation list (comma separated)")
      ->delimiter(',');
  converge->add_option("--grid", conv.grid, "grid sample count")
      ->capture_default_str();
  converge->add_option("--threads", conv.threads, "worker threads")
      ->capture_default_str();
  converge->add_option("--out", conv.out_dir,
                       "optional output directory for the report manifest");
  converge->add_flag("--json", conv.as_json, "machine-readable output");
  converge->callback([&] { rc = cmd_converge(conv); });

  // verify
  bool verify_sigma = false, verify_json = false;
  unsigned verify_threads = 2;
  auto* verify = app.add_subcommand(
      "verify", "Run the cross-module verification suite");
  verify->add_flag("--sigma-variant", verify_sigma,
                   "also demonstrate the sigma-frequency variant's "
                   "initial-slope violation");
  verify->add_flag("--json", verify_json, "machine-readable output");
  verify->add_option("--threads", verify_threads, "worker threads")
      ->capture_default_str();
  verify->callback(
      [&] { rc = cmd_verify(verify_sigma, verify_json, verify_threads); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return rc;
}
