// gwlink: command-line front end for the drop-transducer library.
//
// Exit codes:
//   0  success
//   2  bad command line (unknown flag, missing subcommand, missing config file)
//   3  invalid configuration or physical-domain violation
//   4  numerical failure (integrator underflow, non-finite result)

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <gwlink/gwlink.hpp>

namespace {

using namespace gwlink;

[[nodiscard]] std::string join_args(int argc, char** argv) {
  std::string s;
  for (int i = 0; i < argc; ++i) {
    if (i) s += ' ';
    s += argv[i];
  }
  return s;
}

enum class out_format { json, csv, table };

struct io_options {
  std::string out_path;
  std::string format;  // empty = pick by destination
};

/// Reports go to stdout as tables by default; routing to a file flips the
/// default to JSON so piped output is machine-readable without extra flags.
[[nodiscard]] out_format resolve_format(const io_options& io, bool csv_allowed) {
  out_format f;
  if (io.format == "json")
    f = out_format::json;
  else if (io.format == "csv")
    f = out_format::csv;
  else if (io.format == "table")
    f = out_format::table;
  else
    f = io.out_path.empty() ? out_format::table : out_format::json;
  if (f == out_format::csv && !csv_allowed)
    throw CLI::ValidationError("--format: csv is only available for orbit and sweep output");
  return f;
}

void deliver(const io_options& io, const std::string& text) {
  if (io.out_path.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream f(io.out_path, std::ios::binary);
  if (!f) throw config_error("cannot open output file: " + io.out_path);
  f.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!f) throw config_error("failed writing output file: " + io.out_path);
}

void add_io(CLI::App* cmd, io_options& io) {
  cmd->add_option("--out", io.out_path, "write the report to this file instead of stdout");
  cmd->add_option("--format", io.format,
                  "output format (default: table on stdout, json with --out)")
      ->check(CLI::IsMember({"json", "csv", "table"}));
}

[[nodiscard]] nlohmann::json load_config(const std::string& path) {
  if (path.empty()) throw CLI::RequiredError("--config");
  return config::load_json_file(path);
}

[[nodiscard]] PminVariant parse_pmin_flag(const std::string& s) {
  return s == "root-bw" ? PminVariant::per_root_bandwidth : PminVariant::as_printed;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"radiated-power ratios and link budgets for charged superfluid helium drops"};
  app.set_version_flag("--version", std::string("gwlink ") + gwlink::artifact_version);
  app.require_subcommand(1);

  report::Provenance prov;
  prov.command_line = join_args(argc, argv);

  // --- constants --------------------------------------------------------
  io_options constants_io;
  auto* cmd_constants = app.add_subcommand("constants", "print the pinned constants table");
  add_io(cmd_constants, constants_io);
  cmd_constants->callback([&] {
    const auto f = resolve_format(constants_io, false);
    deliver(constants_io, f == out_format::json ? report::constants_json(prov)
                                                : report::constants_table(prov));
  });

  // --- ratio ------------------------------------------------------------
  io_options ratio_io;
  std::string ratio_q = "e";
  std::string ratio_m = "electron";
  double ratio_threshold = 1e-3;
  auto* cmd_ratio =
      app.add_subcommand("ratio", "gravitational-to-electromagnetic radiated power ratio");
  cmd_ratio->add_option("--q", ratio_q, "charge with unit suffix (default: e)");
  cmd_ratio->add_option("--m", ratio_m, "mass with unit suffix (default: electron)");
  cmd_ratio->add_option("--threshold", ratio_threshold,
                        "ratio below which the wave emission counts as negligible");
  add_io(cmd_ratio, ratio_io);
  cmd_ratio->callback([&] {
    const Quantity q = config::parse_unit_token(ratio_q, dims::charge, "--q");
    const Quantity m = config::parse_unit_token(ratio_m, dims::mass, "--m");
    const auto f = resolve_format(ratio_io, false);
    deliver(ratio_io, f == out_format::json ? report::ratio_json(q, m, ratio_threshold, prov)
                                            : report::ratio_table(q, m, ratio_threshold, prov));
  });

  // --- critical-mass ------------------------------------------------------
  io_options crit_io;
  int crit_n = 1;
  auto* cmd_crit = app.add_subcommand(
      "critical-mass", "drop mass at which gravitational emission matches electromagnetic");
  cmd_crit->add_option("--electrons,--n", crit_n, "number of trapped electrons (default: 1)");
  add_io(cmd_crit, crit_io);
  cmd_crit->callback([&] {
    const auto f = resolve_format(crit_io, false);
    deliver(crit_io, f == out_format::json ? report::critical_mass_json(crit_n, prov)
                                           : report::critical_mass_table(crit_n, prov));
  });

  // --- drop ---------------------------------------------------------------
  io_options drop_io;
  std::string drop_config;
  std::string drop_mass, drop_radius, drop_temperature, drop_bfield, drop_molar;
  int drop_n = 1;
  double drop_kappa = 1.0;
  auto* cmd_drop = app.add_subcommand("drop", "summarize one electron-on-drop transducer");
  cmd_drop->add_option("--config", drop_config, "JSON file with the drop description");
  cmd_drop->add_option("--mass", drop_mass, "drop mass with unit suffix (e.g. 1.86ug)");
  cmd_drop->add_option("--radius", drop_radius, "drop radius with unit suffix");
  cmd_drop->add_option("--temperature,--temp", drop_temperature,
                       "bath temperature with unit suffix");
  cmd_drop->add_option("--b-field", drop_bfield, "applied magnetic field (default: 0T)");
  cmd_drop->add_option("--molar-mass", drop_molar, "working-fluid molar mass (default: helium-4)");
  cmd_drop->add_option("--electrons,--n", drop_n, "number of trapped electrons (default: 1)");
  cmd_drop->add_option("--kappa", drop_kappa, "geometry factor (default: 1)");
  add_io(cmd_drop, drop_io);
  cmd_drop->callback([&] {
    DropSpec d;
    if (!drop_config.empty()) {
      const auto doc = load_config(drop_config);
      if (doc.contains("drop"))
        d = config::parse_drop(doc.at("drop"), "drop");
      else
        d = config::parse_drop(doc, "");
    } else {
      if (drop_mass.empty()) throw CLI::RequiredError("--mass (or --config)");
      if (drop_radius.empty()) throw CLI::RequiredError("--radius (or --config)");
      if (drop_temperature.empty()) throw CLI::RequiredError("--temperature (or --config)");
      d.mass = config::parse_unit_token(drop_mass, dims::mass, "--mass");
      d.radius = config::parse_unit_token(drop_radius, dims::length, "--radius");
      d.temperature =
          config::parse_unit_token(drop_temperature, dims::temperature, "--temperature");
      d.b_field = drop_bfield.empty()
                      ? Quantity(0.0, dims::magnetic_flux_density)
                      : config::parse_unit_token(drop_bfield, dims::magnetic_flux_density,
                                                 "--b-field");
      if (!drop_molar.empty())
        d.molar_mass = config::parse_unit_token(drop_molar, dims::molar_mass, "--molar-mass");
      d.n_electrons = drop_n;
      d.kappa = drop_kappa;
      validate_drop(d);
    }
    const auto f = resolve_format(drop_io, false);
    deliver(drop_io, f == out_format::json ? report::drop_json(d, prov)
                                           : report::drop_table(d, prov));
  });

  // --- orbit ----------------------------------------------------------------
  io_options orbit_io;
  std::string orbit_config;
  double orbit_tol = 0.0;  // 0 = keep the config value
  auto* cmd_orbit =
      app.add_subcommand("orbit", "integrate radiative decay of a charged circular orbit");
  cmd_orbit->add_option("--config", orbit_config, "JSON file with the orbit description")
      ->required();
  cmd_orbit->add_option("--tol", orbit_tol, "override the relative tolerance from the config");
  add_io(cmd_orbit, orbit_io);
  cmd_orbit->callback([&] {
    const auto doc = load_config(orbit_config);
    auto run = config::parse_orbit_config(doc);
    if (orbit_tol > 0.0) run.rel_tol = orbit_tol;
    const DecayTrace trace =
        integrate_decay(run.body, run.central, run.r0, run.t_end, run.r_min, run.rel_tol,
                        run.n_samples, run.channels);
    const auto f = resolve_format(orbit_io, true);
    if (f == out_format::json)
      deliver(orbit_io, report::orbit_json(trace, run, prov));
    else if (f == out_format::csv)
      deliver(orbit_io, report::orbit_csv(trace, prov));
    else
      deliver(orbit_io, report::orbit_table(trace, prov));
  });

  // --- link -------------------------------------------------------------------
  io_options link_io;
  std::string link_config;
  std::string link_pmin;
  auto* cmd_link = app.add_subcommand("link", "end-to-end link budget for a transducer pair");
  cmd_link->add_option("--config", link_config, "JSON file with the link scenario")->required();
  cmd_link->add_option("--pmin-variant", link_pmin,
                       "sensitivity convention: printed | root-bw (overrides the config)")
      ->check(CLI::IsMember({"printed", "root-bw"}));
  add_io(cmd_link, link_io);
  cmd_link->callback([&] {
    const auto doc = load_config(link_config);
    auto scenario = config::parse_link_scenario(doc);
    if (!link_pmin.empty()) scenario.receiver.pmin_variant = parse_pmin_flag(link_pmin);
    const LinkReport rep = hertz_link(scenario);
    const auto f = resolve_format(link_io, false);
    deliver(link_io, f == out_format::json ? report::link_json(rep, scenario, prov)
                                           : report::link_table(rep, scenario, prov));
  });

  // --- sweep --------------------------------------------------------------------
  io_options sweep_io;
  std::string sweep_config;
  std::string sweep_pmin;
  auto* cmd_sweep =
      app.add_subcommand("sweep", "link budget over a grid of scenario parameters");
  cmd_sweep->add_option("--config", sweep_config, "JSON file with scenario plus sweep axes")
      ->required();
  cmd_sweep->add_option("--pmin-variant", sweep_pmin,
                        "sensitivity convention: printed | root-bw (overrides the config)")
      ->check(CLI::IsMember({"printed", "root-bw"}));
  add_io(cmd_sweep, sweep_io);
  cmd_sweep->callback([&] {
    const auto doc = load_config(sweep_config);
    auto cfg = config::parse_sweep_config(doc);
    if (!sweep_pmin.empty()) cfg.base.receiver.pmin_variant = parse_pmin_flag(sweep_pmin);
    const auto rows = run_sweep(cfg);
    const auto f = resolve_format(sweep_io, true);
    if (f == out_format::json)
      deliver(sweep_io, report::sweep_json(cfg, rows, prov));
    else if (f == out_format::csv)
      deliver(sweep_io, report::sweep_csv(cfg, rows, prov));
    else
      deliver(sweep_io, report::sweep_table(cfg, rows, prov));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const config::missing_file_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const numerics_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 4;
  } catch (const gwlink::error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
  return 0;
}
