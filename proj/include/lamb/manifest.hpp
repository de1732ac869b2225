// Run manifests: every CLI run that writes files also records the fully
// resolved parameters it ran with, in JSON with a stable key order, so the
// run can be replayed bit for bit.
#pragma once

#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lamb/io.hpp"
#include "lamb/version.hpp"

namespace lamb {

struct RunManifest {
  std::string command;
  std::string version = kVersion;

  double amplitude = -0.5;
  double damping = 0.1;
  double natural_frequency = 1.0;
  double wave_speed = 1.0;

  std::string model;       ///< "bi" or "uni"; empty when not applicable
  std::string dispersion;  ///< catalog name; empty when not applicable
  std::vector<std::pair<std::string, double>> dispersion_params;

  std::vector<double> times;
  int modes = 0;
  int grid_points = 0;
  int threads = 1;
  bool oracle = false;  ///< simulate/line: the built-in cross-check ran

  double xmax = 0.0;  ///< line command only
  double k_max = 0.0; ///< line command only
  int panels = 0;     ///< line command only
  bool closed_form = false;  ///< line command only

  std::vector<int> truncations;  ///< converge command only
  int scales = 0;                ///< fractal command only

  std::vector<std::string> outputs;  ///< file names written next to this

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["version"] = version;
    j["oscillator"] = {{"amplitude", amplitude},
                       {"damping", damping},
                       {"natural_frequency", natural_frequency},
                       {"wave_speed", wave_speed}};
    if (!model.empty()) j["model"] = model;
    if (!dispersion.empty()) {
      j["dispersion"] = dispersion;
      nlohmann::ordered_json p = nlohmann::ordered_json::object();
      for (const auto& [k, v] : dispersion_params) p[k] = v;
      j["dispersion_params"] = p;
    }
    if (!times.empty()) j["times"] = times;
    if (modes > 0) j["modes"] = modes;
    if (grid_points > 0) j["grid_points"] = grid_points;
    j["threads"] = threads;
    if (command == "simulate" || command == "line" || command == "fractal")
      j["oracle"] = oracle;
    if (command == "line") {
      j["xmax"] = xmax;
      j["closed_form"] = closed_form;
      if (!closed_form) {
        j["k_max"] = k_max;
        j["panels"] = panels;
      }
    }
    if (!truncations.empty()) j["truncations"] = truncations;
    if (scales > 0) j["scales"] = scales;
    j["outputs"] = outputs;
    return j;
  }

  static RunManifest from_json(const nlohmann::ordered_json& j) {
    RunManifest m;
    m.command = j.at("command").get<std::string>();
    m.version = j.value("version", std::string(kVersion));
    const auto& osc = j.at("oscillator");
    m.amplitude = osc.at("amplitude").get<double>();
    m.damping = osc.at("damping").get<double>();
    m.natural_frequency = osc.at("natural_frequency").get<double>();
    m.wave_speed = osc.at("wave_speed").get<double>();
    m.model = j.value("model", std::string());
    m.dispersion = j.value("dispersion", std::string());
    if (j.contains("dispersion_params"))
      for (const auto& [k, v] : j.at("dispersion_params").items())
        m.dispersion_params.emplace_back(k, v.get<double>());
    if (j.contains("times")) m.times = j.at("times").get<std::vector<double>>();
    m.modes = j.value("modes", 0);
    m.grid_points = j.value("grid_points", 0);
    m.threads = j.value("threads", 1);
    m.oracle = j.value("oracle", false);
    m.xmax = j.value("xmax", 0.0);
    m.closed_form = j.value("closed_form", false);
    m.k_max = j.value("k_max", 0.0);
    m.panels = j.value("panels", 0);
    if (j.contains("truncations"))
      m.truncations = j.at("truncations").get<std::vector<int>>();
    m.scales = j.value("scales", 0);
    if (j.contains("outputs"))
      m.outputs = j.at("outputs").get<std::vector<std::string>>();
    return m;
  }

  void write(const std::filesystem::path& path,
             nlohmann::ordered_json extra_reports =
                 nlohmann::ordered_json()) const {
    nlohmann::ordered_json j = to_json();
    if (!extra_reports.is_null()) j["reports"] = std::move(extra_reports);
    write_text_atomic(path, j.dump(2) + "\n");
  }

  static RunManifest load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open manifest " + path.string());
    nlohmann::ordered_json j;
    in >> j;
    return from_json(j);
  }
};

}  // namespace lamb
