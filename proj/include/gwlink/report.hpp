#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "gwlink/config.hpp"
#include "gwlink/constants.hpp"
#include "gwlink/linkbudget.hpp"
#include "gwlink/orbit.hpp"
#include "gwlink/quantity.hpp"
#include "gwlink/radiation.hpp"
#include "gwlink/transducer.hpp"
#include "gwlink/version.hpp"

namespace gwlink::report {

// ============================================================================
// Deterministic report emission. Identical inputs must produce byte-identical
// output, so everything here is fixed: field order, float formatting (17
// significant digits in JSON and CSV, 9 in tables), and the absence of
// timestamps. nlohmann/json is used for *parsing* only; emission goes through
// the small writer below so the formatting rules hold exactly.
// ============================================================================

/// Recorded with every report: enough to reproduce the run, nothing volatile.
struct Provenance {
  std::string constants_release = gwlink::constants_release;
  std::string artifact_version = gwlink::artifact_version;
  std::string command_line;
};

/// %.17g: shortest fixed rule that round-trips IEEE doubles.
[[nodiscard]] inline std::string num17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

/// %.9g: the table/display precision.
[[nodiscard]] inline std::string num9(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

/// Minimal JSON emitter with explicit structure calls; keys appear exactly in
/// call order. Throws on non-finite numbers (JSON has no spelling for them,
/// and the library's finiteness rule should have caught them earlier anyway).
class JsonWriter {
public:
  JsonWriter& begin_object() { return open('{'); }
  JsonWriter& end_object() { return close('}'); }
  JsonWriter& begin_array() { return open('['); }
  JsonWriter& end_array() { return close(']'); }

  JsonWriter& key(const std::string& k) {
    comma();
    out_ += quote(k);
    out_ += ": ";
    fresh_ = true;
    return *this;
  }

  JsonWriter& value(double v) {
    if (!std::isfinite(v)) throw numerics_error("non-finite value in JSON report");
    comma();
    out_ += num17(v);
    return *this;
  }

  JsonWriter& value(int v) {
    comma();
    out_ += std::to_string(v);
    return *this;
  }

  JsonWriter& value(bool v) {
    comma();
    out_ += v ? "true" : "false";
    return *this;
  }

  JsonWriter& value(const std::string& v) {
    comma();
    out_ += quote(v);
    return *this;
  }

  JsonWriter& value(const char* v) { return value(std::string(v)); }

  [[nodiscard]] std::string str() const { return out_ + "\n"; }

private:
  JsonWriter& open(char c) {
    comma();
    out_ += c;
    fresh_ = true;
    return *this;
  }

  JsonWriter& close(char c) {
    out_ += c;
    fresh_ = false;
    return *this;
  }

  void comma() {
    if (!fresh_ && !out_.empty()) {
      const char last = out_.back();
      if (last != '{' && last != '[' && last != ' ') out_ += ", ";
    }
    fresh_ = false;
  }

  static std::string quote(const std::string& s) {
    std::string q = "\"";
    for (const char ch : s) {
      switch (ch) {
        case '"': q += "\\\""; break;
        case '\\': q += "\\\\"; break;
        case '\n': q += "\\n"; break;
        case '\r': q += "\\r"; break;
        case '\t': q += "\\t"; break;
        default:
          if (static_cast<unsigned char>(ch) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
            q += buf;
          } else {
            q += ch;
          }
      }
    }
    return q + "\"";
  }

  std::string out_;
  bool fresh_ = true;
};

namespace detail {

inline void emit_provenance(JsonWriter& w, const Provenance& p) {
  w.key("provenance").begin_object();
  w.key("constants_release").value(p.constants_release);
  w.key("artifact_version").value(p.artifact_version);
  w.key("command_line").value(p.command_line);
  w.end_object();
}

/// Provenance as comment lines for CSV and table output.
[[nodiscard]] inline std::string provenance_comment(const Provenance& p) {
  return "# constants_release: " + p.constants_release + "\n" +
         "# artifact_version: " + p.artifact_version + "\n" +
         "# command_line: " + p.command_line + "\n";
}

/// The tag attached to anything derived from the geometric cross-section.
inline constexpr const char* sigma_note =
    "order-of-magnitude estimate: sigma_total = pi (R_a^2 + R_b^2)";

} // namespace detail

/// Two-column key/value table, aligned, values at 9 significant digits
/// (pre-rendered by the caller when a value is not a plain number).
[[nodiscard]] inline std::string render_kv_table(
    const std::vector<std::pair<std::string, std::string>>& rows, const Provenance& p) {
  std::size_t w = 0;
  for (const auto& [k, v] : rows) w = std::max(w, k.size());
  std::string out = detail::provenance_comment(p);
  for (const auto& [k, v] : rows) {
    out += k;
    out.append(w - k.size() + 2, ' ');
    out += v;
    out += "\n";
  }
  return out;
}

/// Column-aligned table with a header row, for trace/sweep display.
[[nodiscard]] inline std::string render_grid_table(const std::vector<std::string>& columns,
                                                   const std::vector<std::vector<std::string>>& rows,
                                                   const Provenance& p) {
  std::vector<std::size_t> widths;
  widths.reserve(columns.size());
  for (const auto& c : columns) widths.push_back(c.size());
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size() && i < widths.size(); ++i)
      widths[i] = std::max(widths[i], r[i].size());
  std::string out = detail::provenance_comment(p);
  const auto emit_row = [&](const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      out += r[i];
      if (i + 1 < r.size()) out.append(widths[i] - r[i].size() + 2, ' ');
    }
    out += "\n";
  };
  emit_row(columns);
  for (const auto& r : rows) emit_row(r);
  return out;
}

// ----------------------------------------------------------------------------
// Report builders, one per CLI command. JSON field order is part of the
// output contract; do not reorder.
// ----------------------------------------------------------------------------

[[nodiscard]] inline std::string constants_json(const Provenance& p) {
  const auto& k = constants();
  JsonWriter w;
  w.begin_object();
  w.key("kind").value("constants");
  detail::emit_provenance(w, p);
  w.key("release").value(k.release);
  w.key("values").begin_array();
  const auto row = [&w](const char* name, const Quantity& q) {
    w.begin_object();
    w.key("name").value(name);
    w.key("value").value(q.magnitude());
    w.key("unit").value(q.dim().str());
    w.end_object();
  };
  row("G", k.G);
  row("c", k.c);
  row("hbar", k.hbar);
  row("e", k.e);
  row("k_B", k.k_B);
  row("k_e", k.k_e);
  row("m_e", k.m_e);
  row("m_He4", k.m_He4);
  row("N_A", k.N_A);
  w.end_array();
  w.key("derived").begin_object();
  w.key("alpha").value(k.alpha());
  w.key("inverse_alpha").value(1.0 / k.alpha());
  w.key("planck_mass_kg").value(planck_mass().magnitude());
  w.key("critical_mass_1e_kg").value(critical_mass(1).magnitude());
  w.key("gravity_wave_impedance_si").value(gravity_wave_impedance().magnitude());
  w.end_object();
  w.end_object();
  return w.str();
}

[[nodiscard]] inline std::string constants_table(const Provenance& p) {
  const auto& k = constants();
  std::vector<std::vector<std::string>> rows;
  const auto row = [&rows](const char* name, const Quantity& q) {
    rows.push_back({name, num9(q.magnitude()), q.dim().str()});
  };
  row("G", k.G);
  row("c", k.c);
  row("hbar", k.hbar);
  row("e", k.e);
  row("k_B", k.k_B);
  row("k_e", k.k_e);
  row("m_e", k.m_e);
  row("m_He4", k.m_He4);
  row("N_A", k.N_A);
  rows.push_back({"alpha", num9(k.alpha()), "1"});
  rows.push_back({"1/alpha", num9(1.0 / k.alpha()), "1"});
  rows.push_back({"planck_mass", num9(planck_mass().magnitude()), "kg"});
  rows.push_back({"critical_mass(1e)", num9(critical_mass(1).magnitude()), "kg"});
  rows.push_back({"Z_G", num9(gravity_wave_impedance().magnitude()),
                  gravity_wave_impedance().dim().str()});
  return render_grid_table({"name", "value", "unit"}, rows, p);
}

[[nodiscard]] inline std::string ratio_json(const Quantity& q, const Quantity& m,
                                            double threshold, const Provenance& p) {
  JsonWriter w;
  w.begin_object();
  w.key("kind").value("ratio");
  detail::emit_provenance(w, p);
  w.key("inputs").begin_object();
  w.key("q_C").value(q.magnitude());
  w.key("m_kg").value(m.magnitude());
  w.key("threshold").value(threshold);
  w.end_object();
  w.key("power_ratio").value(power_ratio(q, m));
  w.key("gr_negligible").value(gr_negligible(q, m, 1.0, threshold));
  w.end_object();
  return w.str();
}

[[nodiscard]] inline std::string ratio_table(const Quantity& q, const Quantity& m,
                                             double threshold, const Provenance& p) {
  return render_kv_table({{"q_C", num9(q.magnitude())},
                          {"m_kg", num9(m.magnitude())},
                          {"power_ratio", num9(power_ratio(q, m))},
                          {"gr_negligible", gr_negligible(q, m, 1.0, threshold) ? "true" : "false"}},
                         p);
}

[[nodiscard]] inline std::string critical_mass_json(int n, const Provenance& p) {
  const Quantity mc = critical_mass(n);
  JsonWriter w;
  w.begin_object();
  w.key("kind").value("critical_mass");
  detail::emit_provenance(w, p);
  w.key("n_electrons").value(n);
  w.key("mass_kg").value(mc.magnitude());
  w.key("mass_ug").value(mc.magnitude() * 1e9);
  w.key("planck_mass_kg").value(planck_mass().magnitude());
  w.key("power_ratio_check").value(power_ratio(static_cast<double>(n) * constants().e, mc));
  w.end_object();
  return w.str();
}

[[nodiscard]] inline std::string critical_mass_table(int n, const Provenance& p) {
  const Quantity mc = critical_mass(n);
  return render_kv_table(
      {{"n_electrons", std::to_string(n)},
       {"mass_ug", num9(mc.magnitude() * 1e9)},
       {"mass_kg", num9(mc.magnitude())},
       {"planck_mass_kg", num9(planck_mass().magnitude())},
       {"power_ratio_check", num9(power_ratio(static_cast<double>(n) * constants().e, mc))}},
      p);
}

namespace detail {
struct drop_numbers {
  double charge_C, atoms, enhancement, gap_J, gap_K, zero_phonon, rho, eta;
};

[[nodiscard]] inline drop_numbers compute_drop(const DropSpec& d) {
  drop_numbers n{};
  n.charge_C = drop_charge(d).magnitude();
  n.atoms = atom_count(d);
  n.enhancement = enhancement_factor(d);
  // A field-free drop has no cyclotron level structure; report a gapless
  // spectrum rather than tripping the B > 0 contract of cyclotron_gap.
  const Quantity gap = d.b_field.magnitude() > 0.0 ? cyclotron_gap(d.b_field)
                                                   : Quantity(0.0, dims::energy);
  n.gap_J = gap.magnitude();
  n.gap_K = as_scalar(gap / (constants().k_B * Quantity(1.0, dims::temperature)), "gap in K");
  n.zero_phonon = zero_phonon_probability(gap, d.temperature);
  n.rho = drop_power_ratio(d);
  n.eta = n.rho / (1.0 + n.rho);
  return n;
}
} // namespace detail

[[nodiscard]] inline std::string drop_json(const DropSpec& d, const Provenance& p) {
  const auto n = detail::compute_drop(d);
  JsonWriter w;
  w.begin_object();
  w.key("kind").value("drop");
  detail::emit_provenance(w, p);
  w.key("inputs").begin_object();
  w.key("mass_kg").value(d.mass.magnitude());
  w.key("n_electrons").value(d.n_electrons);
  w.key("radius_m").value(d.radius.magnitude());
  w.key("temperature_K").value(d.temperature.magnitude());
  w.key("b_field_T").value(d.b_field.magnitude());
  w.key("molar_mass_kg_per_mol").value(d.molar_mass.magnitude());
  w.key("kappa").value(d.kappa);
  w.end_object();
  w.key("charge_C").value(n.charge_C);
  w.key("atom_count").value(n.atoms);
  w.key("enhancement_factor").value(n.enhancement);
  w.key("cyclotron_gap_J").value(n.gap_J);
  w.key("cyclotron_gap_K").value(n.gap_K);
  w.key("zero_phonon_probability").value(n.zero_phonon);
  w.key("power_ratio").value(n.rho);
  w.key("branching_efficiency").value(n.eta);
  w.key("mass_over_critical").value(d.mass.magnitude() / critical_mass(d.n_electrons).magnitude());
  w.end_object();
  return w.str();
}

[[nodiscard]] inline std::string drop_table(const DropSpec& d, const Provenance& p) {
  const auto n = detail::compute_drop(d);
  return render_kv_table(
      {{"mass_kg", num9(d.mass.magnitude())},
       {"n_electrons", std::to_string(d.n_electrons)},
       {"charge_C", num9(n.charge_C)},
       {"atom_count", num9(n.atoms)},
       {"enhancement_factor", num9(n.enhancement)},
       {"cyclotron_gap_J", num9(n.gap_J)},
       {"cyclotron_gap_K", num9(n.gap_K)},
       {"zero_phonon_probability", num9(n.zero_phonon)},
       {"power_ratio", num9(n.rho)},
       {"branching_efficiency", num9(n.eta)},
       {"mass_over_critical", num9(d.mass.magnitude() / critical_mass(d.n_electrons).magnitude())}},
      p);
}

// --- orbit traces -----------------------------------------------------------

/// The fixed CSV schema: header + one row per sample, 17 significant digits.
[[nodiscard]] inline std::string orbit_csv(const DecayTrace& trace, const Provenance& p) {
  std::string out = detail::provenance_comment(p);
  out += "t_s,r_m,E_rad_em_J,E_rad_gr_J\n";
  for (const auto& s : trace.samples) {
    out += num17(s.t_s);
    out += ',';
    out += num17(s.r_m);
    out += ',';
    out += num17(s.e_rad_em_J);
    out += ',';
    out += num17(s.e_rad_gr_J);
    out += '\n';
  }
  return out;
}

[[nodiscard]] inline const char* stop_name(decay_stop s) {
  return s == decay_stop::reached_t_end ? "reached_t_end" : "reached_r_min";
}

[[nodiscard]] inline std::string orbit_json(const DecayTrace& trace,
                                            const config::OrbitRunConfig& run,
                                            const Provenance& p) {
  JsonWriter w;
  w.begin_object();
  w.key("kind").value("orbit_trace");
  detail::emit_provenance(w, p);
  w.key("inputs").begin_object();
  w.key("body_mass_kg").value(run.body.mass.magnitude());
  w.key("body_charge_C").value(run.body.charge.magnitude());
  w.key("kappa").value(run.body.kappa);
  w.key("central_mass_kg").value(run.central.mass.magnitude());
  w.key("r0_m").value(run.r0.magnitude());
  w.key("t_end_s").value(run.t_end.magnitude());
  w.key("r_min_m").value(run.r_min.magnitude());
  w.key("rel_tol").value(run.rel_tol);
  w.key("n_samples").value(run.n_samples);
  w.key("channels").value(run.channels == loss_channels::both
                              ? "both"
                              : (run.channels == loss_channels::em_only ? "em_only" : "gr_only"));
  w.end_object();
  w.key("termination_reason").value(stop_name(trace.termination));
  w.key("samples").begin_array();
  for (const auto& s : trace.samples) {
    w.begin_object();
    w.key("t_s").value(s.t_s);
    w.key("r_m").value(s.r_m);
    w.key("E_rad_em_J").value(s.e_rad_em_J);
    w.key("E_rad_gr_J").value(s.e_rad_gr_J);
    w.end_object();
  }
  w.end_array();
  w.end_object();
  return w.str();
}

[[nodiscard]] inline std::string orbit_table(const DecayTrace& trace, const Provenance& p) {
  std::vector<std::vector<std::string>> rows;
  rows.reserve(trace.samples.size());
  for (const auto& s : trace.samples)
    rows.push_back({num9(s.t_s), num9(s.r_m), num9(s.e_rad_em_J), num9(s.e_rad_gr_J)});
  std::string out = render_grid_table({"t_s", "r_m", "E_rad_em_J", "E_rad_gr_J"}, rows, p);
  out += "termination: ";
  out += stop_name(trace.termination);
  out += "\n";
  return out;
}

// --- link reports ------------------------------------------------------------

[[nodiscard]] inline std::string link_json(const LinkReport& r, const LinkScenario& s,
                                           const Provenance& p) {
  JsonWriter w;
  w.begin_object();
  w.key("kind").value("link");
  detail::emit_provenance(w, p);
  w.key("inputs").begin_object();
  w.key("p_in_W").value(s.source.power.magnitude());
  w.key("frequency_Hz").value(s.source.frequency.magnitude());
  w.key("mode_overlap").value(s.source.mode_overlap);
  w.key("distance_m").value(s.distance.magnitude());
  w.key("directivity").value(s.directivity);
  w.key("t_noise_K").value(s.receiver.t_noise.magnitude());
  w.key("bandwidth_Hz").value(s.receiver.bandwidth.magnitude());
  w.key("integration_time_s").value(s.receiver.integration_time.magnitude());
  w.end_object();
  w.key("sigma_rx_m2").value(r.sigma_rx.magnitude());
  w.key("eta_tx").value(r.eta_tx);
  w.key("eta_rx").value(r.eta_rx);
  w.key("coupling").value(r.coupling);
  w.key("stages").begin_array();
  for (const auto& st : r.stages) {
    w.begin_object();
    w.key("label").value(st.label);
    w.key("factor").value(st.factor);
    w.key("power_W").value(st.power.magnitude());
    w.end_object();
  }
  w.end_array();
  w.key("p_received_W").value(r.p_received.magnitude());
  w.key("p_min_printed_W").value(r.p_min_printed.magnitude());
  w.key("p_min_root_bw_W").value(r.p_min_root_bw.magnitude());
  w.key("pmin_variant")
      .value(s.receiver.pmin_variant == PminVariant::as_printed ? "printed" : "root-bw");
  w.key("p_min_W").value(r.p_min.magnitude());
  w.key("snr").value(r.snr);
  w.key("detectable").value(r.detectable);
  w.key("notes").begin_object();
  w.key("cross_section_model").value(detail::sigma_note);
  w.end_object();
  w.end_object();
  return w.str();
}

[[nodiscard]] inline std::string link_table(const LinkReport& r, const LinkScenario& s,
                                            const Provenance& p) {
  std::vector<std::vector<std::string>> stage_rows;
  stage_rows.reserve(r.stages.size());
  for (const auto& st : r.stages)
    stage_rows.push_back({st.label, num9(st.factor), num9(st.power.magnitude())});
  std::string out = render_grid_table({"stage", "factor", "power_W"}, stage_rows, p);
  out += "\n";
  // Summary block rendered by hand: the provenance comment already leads the
  // stage table and must not repeat.
  std::vector<std::pair<std::string, std::string>> kv = {
      {"p_received_W", num9(r.p_received.magnitude())},
      {"p_min_printed_W", num9(r.p_min_printed.magnitude())},
      {"p_min_root_bw_W", num9(r.p_min_root_bw.magnitude())},
      {"pmin_variant",
       s.receiver.pmin_variant == PminVariant::as_printed ? "printed" : "root-bw"},
      {"snr", num9(r.snr)},
      {"detectable", r.detectable ? "true" : "false"},
      {"note", detail::sigma_note},
  };
  std::size_t wid = 0;
  for (const auto& [k, v] : kv) wid = std::max(wid, k.size());
  for (const auto& [k, v] : kv) {
    out += k;
    out.append(wid - k.size() + 2, ' ');
    out += v;
    out += "\n";
  }
  return out;
}

// --- sweeps -------------------------------------------------------------------

inline const std::vector<std::string> sweep_summary_columns = {
    "p_received_W", "p_min_printed_W", "p_min_root_bw_W", "snr", "detectable"};

[[nodiscard]] inline std::string sweep_csv(const SweepConfig& cfg,
                                           const std::vector<SweepRow>& rows,
                                           const Provenance& p) {
  std::string out = detail::provenance_comment(p);
  for (std::size_t i = 0; i < cfg.axes.size(); ++i) {
    out += cfg.axes[i].parameter;
    out += ',';
  }
  for (std::size_t i = 0; i < sweep_summary_columns.size(); ++i) {
    out += sweep_summary_columns[i];
    out += (i + 1 < sweep_summary_columns.size()) ? "," : "\n";
  }
  for (const auto& row : rows) {
    for (const double v : row.values) {
      out += num17(v);
      out += ',';
    }
    out += num17(row.report.p_received.magnitude());
    out += ',';
    out += num17(row.report.p_min_printed.magnitude());
    out += ',';
    out += num17(row.report.p_min_root_bw.magnitude());
    out += ',';
    out += num17(row.report.snr);
    out += ',';
    out += row.report.detectable ? "1" : "0";
    out += '\n';
  }
  return out;
}

[[nodiscard]] inline std::string sweep_json(const SweepConfig& cfg,
                                            const std::vector<SweepRow>& rows,
                                            const Provenance& p) {
  JsonWriter w;
  w.begin_object();
  w.key("kind").value("sweep");
  detail::emit_provenance(w, p);
  w.key("axes").begin_array();
  for (const auto& ax : cfg.axes) {
    w.begin_object();
    w.key("parameter").value(ax.parameter);
    w.key("start").value(ax.start);
    w.key("stop").value(ax.stop);
    w.key("count").value(ax.count);
    w.end_object();
  }
  w.end_array();
  w.key("rows").begin_array();
  for (const auto& row : rows) {
    w.begin_object();
    w.key("values").begin_array();
    for (const double v : row.values) w.value(v);
    w.end_array();
    w.key("p_received_W").value(row.report.p_received.magnitude());
    w.key("p_min_printed_W").value(row.report.p_min_printed.magnitude());
    w.key("p_min_root_bw_W").value(row.report.p_min_root_bw.magnitude());
    w.key("snr").value(row.report.snr);
    w.key("detectable").value(row.report.detectable);
    w.end_object();
  }
  w.end_array();
  w.key("notes").begin_object();
  w.key("cross_section_model").value(detail::sigma_note);
  w.end_object();
  w.end_object();
  return w.str();
}

[[nodiscard]] inline std::string sweep_table(const SweepConfig& cfg,
                                             const std::vector<SweepRow>& rows,
                                             const Provenance& p) {
  std::vector<std::string> columns;
  for (const auto& ax : cfg.axes) columns.push_back(ax.parameter);
  for (const auto& c : sweep_summary_columns) columns.push_back(c);
  std::vector<std::vector<std::string>> out_rows;
  out_rows.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<std::string> r;
    for (const double v : row.values) r.push_back(num9(v));
    r.push_back(num9(row.report.p_received.magnitude()));
    r.push_back(num9(row.report.p_min_printed.magnitude()));
    r.push_back(num9(row.report.p_min_root_bw.magnitude()));
    r.push_back(num9(row.report.snr));
    r.push_back(row.report.detectable ? "1" : "0");
    out_rows.push_back(std::move(r));
  }
  return render_grid_table(columns, out_rows, p);
}

// ----------------------------------------------------------------------------
// Schema validation: the subset of JSON Schema the shipped schema file uses
// (type, properties, required, items, enum, const, oneOf, additionalProperties
// as a boolean, minimum, minItems). Returns human-readable violations; empty
// means valid.
// ----------------------------------------------------------------------------

namespace detail {

using nlohmann::json;

inline bool type_matches(const json& doc, const std::string& t) {
  if (t == "object") return doc.is_object();
  if (t == "array") return doc.is_array();
  if (t == "string") return doc.is_string();
  if (t == "number") return doc.is_number();
  if (t == "integer") return doc.is_number_integer();
  if (t == "boolean") return doc.is_boolean();
  if (t == "null") return doc.is_null();
  return false;
}

inline void validate_node(const json& doc, const json& schema, const std::string& path,
                          std::vector<std::string>& out);

inline bool branch_valid(const json& doc, const json& schema) {
  std::vector<std::string> sink;
  validate_node(doc, schema, "", sink);
  return sink.empty();
}

inline void validate_node(const json& doc, const json& schema, const std::string& path,
                          std::vector<std::string>& out) {
  const std::string where = path.empty() ? "$" : path;
  if (!schema.is_object()) return;

  if (schema.contains("type")) {
    const json& t = schema.at("type");
    bool ok = false;
    if (t.is_string()) ok = type_matches(doc, t.get<std::string>());
    else if (t.is_array())
      for (const auto& alt : t)
        if (alt.is_string() && type_matches(doc, alt.get<std::string>())) ok = true;
    if (!ok) {
      out.push_back(where + ": type mismatch");
      return;
    }
  }

  if (schema.contains("const") && doc != schema.at("const"))
    out.push_back(where + ": const mismatch");

  if (schema.contains("enum")) {
    bool ok = false;
    for (const auto& alt : schema.at("enum"))
      if (doc == alt) ok = true;
    if (!ok) out.push_back(where + ": not in enum");
  }

  if (schema.contains("minimum") && doc.is_number() &&
      doc.get<double>() < schema.at("minimum").get<double>())
    out.push_back(where + ": below minimum");

  if (schema.contains("oneOf")) {
    int hits = 0;
    for (const auto& alt : schema.at("oneOf"))
      if (branch_valid(doc, alt)) ++hits;
    if (hits != 1)
      out.push_back(where + ": matched " + std::to_string(hits) + " oneOf branches");
  }

  if (doc.is_object()) {
    if (schema.contains("required"))
      for (const auto& req : schema.at("required"))
        if (!doc.contains(req.get<std::string>()))
          out.push_back(where + ": missing required '" + req.get<std::string>() + "'");
    if (schema.contains("properties")) {
      for (const auto& [key, sub] : schema.at("properties").items())
        if (doc.contains(key)) validate_node(doc.at(key), sub, where + "." + key, out);
      if (schema.contains("additionalProperties") &&
          schema.at("additionalProperties").is_boolean() &&
          !schema.at("additionalProperties").get<bool>()) {
        for (const auto& [key, val] : doc.items())
          if (!schema.at("properties").contains(key))
            out.push_back(where + ": unexpected property '" + key + "'");
      }
    }
  }

  if (doc.is_array()) {
    if (schema.contains("minItems") &&
        doc.size() < schema.at("minItems").get<std::size_t>())
      out.push_back(where + ": fewer than minItems");
    if (schema.contains("items")) {
      std::size_t i = 0;
      for (const auto& el : doc) {
        validate_node(el, schema.at("items"), where + "[" + std::to_string(i) + "]", out);
        ++i;
      }
    }
  }
}

} // namespace detail

/// Validate a parsed report against a (subset) JSON schema. Empty result
/// means the document conforms.
[[nodiscard]] inline std::vector<std::string> validate_against_schema(const nlohmann::json& doc,
                                                                      const nlohmann::json& schema) {
  std::vector<std::string> out;
  detail::validate_node(doc, schema, "", out);
  return out;
}

} // namespace gwlink::report
