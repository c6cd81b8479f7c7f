#pragma once

// yy: render, verify and cross-check yin-yang curves.
//
//   yy verify  --family fermat --turns 1          exit 0 iff the requested axioms pass
//   yy oracle  --family fermat --g 0.3 --n 1000000
//   yy render  --preset britannica --out b.svg
//   yy presets
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "yinyang/yinyang.hpp"

namespace yinyang::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

struct CurvePreset {
  std::string name;
  std::string description;
  CurveSpec spec;
};

/// alpha(u) = 4u^2 on [0, 1/2] as a table: monotone, ends at 1, but breaks
/// alpha(u + 1/4) = alpha(u) + 1/2, so its parts are not perfect.
inline std::vector<std::array<double, 2>> quadratic_alpha_table(int n = 1000) {
  std::vector<std::array<double, 2>> t;
  t.reserve(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    const double u = 0.5 * i / n;
    t.push_back({u, 4.0 * u * u});
  }
  return t;
}

inline std::vector<CurvePreset> curve_presets() {
  std::vector<CurvePreset> out;
  out.push_back({"fermat", "Fermat spiral pi^2 r^2 = phi, one turn", CurveSpec{}});
  {
    CurveSpec s;
    s.turns = 2.0;
    out.push_back({"fermat2", "two-turn Fermat spiral 2 pi^2 r^2 = phi (crosses each radius twice)", s});
  }
  {
    CurveSpec s;
    s.family = Family::sine_variant;
    s.lambda = 0.1;
    out.push_back({"sine", "analytic non-algebraic variant pi^2 r^2 = phi + lambda sin 4phi, lambda = 0.1", s});
  }
  {
    CurveSpec s;
    s.family = Family::ck_variant;
    s.lambda = 10.0;
    s.k = 1;
    out.push_back({"ck", "C^k algebraic variant pi r^2 = f(phi / 2pi), lambda = 10, k = 1", s});
  }
  {
    CurveSpec s;
    s.parts = 3;
    out.push_back({"tripartite", "three-part symbol from three copies of the one-turn Fermat spiral", s});
  }
  {
    CurveSpec s;
    s.family = Family::custom;
    s.samples = quadratic_alpha_table();
    s.turns = 1.0;
    out.push_back({"quadratic", "counterexample alpha(u) = 4u^2: satisfies A1-A3, not perfect", s});
  }
  return out;
}

namespace detail {

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

inline void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot write " + path);
  f << text;
}

struct CurveFlags {
  std::string family;
  std::string preset;
  std::string samples_path;
  std::string json_path;
  double turns = 1.0;
  double lambda = 0.0;
  int k = 0;
  int parts = 2;
  CLI::Option* turns_opt = nullptr;
  CLI::Option* lambda_opt = nullptr;
  CLI::Option* k_opt = nullptr;
  CLI::Option* parts_opt = nullptr;

  void attach(CLI::App& app) {
    app.add_option("--family", family, "curve family")
        ->check(CLI::IsMember({"fermat", "sine", "ck", "custom"}));
    app.add_option("--preset", preset, "named curve preset (see `yy presets`)");
    turns_opt = app.add_option("--turns", turns, "number of turns (fermat)");
    lambda_opt = app.add_option("--lambda", lambda, "perturbation size (sine, ck)");
    k_opt = app.add_option("--k", k, "smoothness order (ck)");
    parts_opt = app.add_option("--parts", parts, "number of congruent parts")->check(CLI::PositiveNumber);
    app.add_option("--samples", samples_path, "JSON (u, v) table for the custom family");
    app.add_option("--json", json_path, "curve spec as a JSON file");
  }

  CurveSpec build() const {
    CurveSpec s;
    if (!json_path.empty()) {
      s = curve_spec_from_json(read_json_file(json_path));
    } else if (!preset.empty()) {
      bool found = false;
      for (const auto& p : curve_presets()) {
        if (p.name == preset) {
          s = p.spec;
          found = true;
        }
      }
      if (!found) throw std::invalid_argument("unknown curve preset '" + preset + "'");
    }
    if (!family.empty()) s.family = *family_from_string(family);
    if (*turns_opt) s.turns = turns;
    if (*lambda_opt) s.lambda = lambda;
    if (*k_opt) s.k = k;
    if (*parts_opt) s.parts = parts;
    if (!samples_path.empty()) s.samples = samples_from_json(read_json_file(samples_path));
    if (s.family == Family::custom) {
      if (s.samples.empty()) throw std::invalid_argument("--family custom needs --samples <path.json>");
      const double derived = 2.0 * s.samples.back()[0];
      if (*turns_opt && std::abs(turns - derived) > 1e-9)
        throw std::invalid_argument("--turns does not match the sample table (which ends at u = turns / 2)");
      s.turns = derived;
    }
    return s;
  }
};

inline std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "A3''") item = "A3pp";
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace detail

/// Parses argv and runs one subcommand; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fermat-spiral yin-yang curves: verification and rendering", "yy"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", std::string(kVersion));

  // verify
  CLI::App* verify = app.add_subcommand("verify", "check the axioms for a curve and print a JSON report");
  detail::CurveFlags vcurve;
  vcurve.attach(*verify);
  VerifyOptions vopt;
  std::string vout;
  std::string axioms_csv;
  double tolerance = 0.0;
  verify->add_option("--g-grid", vopt.g_grid, "number of reflection axes g")->check(CLI::Range(2, 1 << 20));
  verify->add_option("--v-quad", vopt.v_quadrature, "Simpson panels in v")->check(CLI::Range(2, 1 << 26));
  verify->add_option("--q-max", vopt.q_max, "largest rotation denominator to check (0 = skip)")
      ->check(CLI::Range(0, 64));
  auto* tol_opt = verify->add_option("--tolerance", tolerance, "A4 flatness tolerance")
                      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", vopt.seed, "seed for the Monte-Carlo spot check");
  verify->add_option("--mc-samples", vopt.mc_samples, "Monte-Carlo samples at the A4 witness (0 = skip)")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--axioms", axioms_csv, "comma-separated axioms that decide the exit code "
                                             "(A1,A2,A3,A3pp,A4,A5; default A1,A2,A3,A4)");
  verify->add_option("--out", vout, "write the report here instead of stdout");

  // oracle
  CLI::App* oracle = app.add_subcommand("oracle", "Monte-Carlo estimate of mu(A ∩ s_g A)");
  detail::CurveFlags ocurve;
  ocurve.attach(*oracle);
  double og = 0.0;
  std::int64_t on = 1000000;
  std::uint64_t oseed = 0;
  int ovquad = kDefaultVQuadrature;
  oracle->add_option("--g", og, "reflection axis (fraction of a turn)")->required();
  oracle->add_option("--n", on, "number of samples")->check(CLI::PositiveNumber);
  oracle->add_option("--seed", oseed, "random seed");
  oracle->add_option("--v-quad", ovquad, "Simpson panels for the quadrature value")->check(CLI::Range(2, 1 << 26));

  // render
  CLI::App* render_cmd = app.add_subcommand("render", "write an SVG symbol");
  std::string rpreset, rjson, rout, evolution;
  double rturn = 1.0, rradius = 0.0, rrotate = 0.0, rinterpol = 0.0;
  bool rclockwise = true;
  int rparts = 2;
  render_cmd->add_option("--preset", rpreset, "named render preset (see `yy presets`)");
  render_cmd->add_option("--json", rjson, "render config as a JSON file");
  auto* rturn_opt = render_cmd->add_option("--turn", rturn, "spiral turns")->check(CLI::PositiveNumber);
  auto* rradius_opt = render_cmd->add_option("--radius", rradius, "radius in px")->check(CLI::PositiveNumber);
  auto* rrotate_opt = render_cmd->add_option("--rotate", rrotate, "extra rotation in degrees");
  auto* rcw_opt = render_cmd->add_option("--clockwise", rclockwise, "true or false");
  auto* rparts_opt = render_cmd->add_option("--parts", rparts, "number of parts")->check(CLI::Range(2, 64));
  auto* rinterpol_opt = render_cmd->add_option("--interpol", rinterpol, "sampling step of r")
                            ->check(CLI::PositiveNumber);
  render_cmd->add_option("--out", rout, "output SVG path (default stdout)");
  render_cmd->add_option("--evolution", evolution, "write four evolution phases to PREFIX_{a,b,c,d}.svg");

  // presets
  CLI::App* presets = app.add_subcommand("presets", "list built-in curve and render presets");
  bool presets_json = false;
  presets->add_flag("--json", presets_json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion& e) {
    out << kVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "yy: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (verify->parsed()) {
      if (*tol_opt) vopt.a4_tolerance = tolerance;
      if (!axioms_csv.empty()) vopt.axioms = detail::split_csv(axioms_csv);
      const VerifyReport rep = check_axioms(vcurve.build(), vopt);
      detail::write_text(vout, report_to_json(rep).dump(2) + "\n", out);
      return rep.passed() ? kExitOk : kExitFailed;
    }

    if (oracle->parsed()) {
      const Curve curve(ocurve.build());
      const CirclePoint g(og);
      const OracleEstimate est = monte_carlo_overlap(curve, g, on, oseed);
      json j = oracle_to_json(est);
      j["g"] = g.value();
      j["quadrature"] = profile_value(curve, g, ovquad);
      j["spec"] = curve_spec_to_json(curve.spec());
      out << j.dump(2) << "\n";
      return kExitOk;
    }

    if (render_cmd->parsed()) {
      RenderConfig cfg;
      if (!rpreset.empty()) {
        const auto p = find_render_preset(rpreset);
        if (!p) throw std::invalid_argument("unknown render preset '" + rpreset + "'");
        cfg = *p;
      }
      if (!rjson.empty()) cfg = render_config_from_json(detail::read_json_file(rjson), cfg);
      if (*rturn_opt) {
        cfg.turn = rturn;
        if (!*rinterpol_opt) cfg.interpol.reset();
      }
      if (*rradius_opt) cfg.radius_px = rradius;
      if (*rrotate_opt) cfg.rotate_deg = rrotate;
      if (*rcw_opt) cfg.clockwise = rclockwise;
      if (*rparts_opt) cfg.parts = rparts;
      if (*rinterpol_opt) cfg.interpol = rinterpol;
      cfg.validate();
      if (!evolution.empty()) {
        const char tags[] = {'a', 'b', 'c', 'd'};
        const auto turns = evolution_turns();
        for (std::size_t i = 0; i < turns.size(); ++i) {
          RenderConfig phase = cfg;
          phase.turn = turns[i];
          phase.interpol.reset();
          detail::write_text(evolution + "_" + tags[i] + ".svg", render(phase).str(), out);
        }
        return kExitOk;
      }
      detail::write_text(rout, render(cfg).str(), out);
      return kExitOk;
    }

    if (presets->parsed()) {
      if (presets_json) {
        json j;
        j["curves"] = json::array();
        for (const auto& p : curve_presets()) {
          json s = curve_spec_to_json(p.spec);
          if (p.spec.family == Family::custom) s.erase("samples");
          j["curves"].push_back({{"name", p.name}, {"description", p.description}, {"spec", s}});
        }
        j["render"] = json::array();
        for (const auto& p : render_presets())
          j["render"].push_back(
              {{"name", p.name}, {"description", p.description}, {"config", render_config_to_json(p.config)}});
        out << j.dump(2) << "\n";
      } else {
        out << "curve presets (yy verify --preset NAME):\n";
        for (const auto& p : curve_presets()) out << "  " << p.name << "\t" << p.description << "\n";
        out << "render presets (yy render --preset NAME):\n";
        for (const auto& p : render_presets()) out << "  " << p.name << "\t" << p.description << "\n";
      }
      return kExitOk;
    }
  } catch (const std::invalid_argument& e) {
    err << "yy: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "yy: " << e.what() << "\n";
    return kExitUsage;
  } catch (const json::exception& e) {
    err << "yy: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace yinyang::cli
