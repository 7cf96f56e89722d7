#pragma once

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gwlink/constants.hpp"
#include "gwlink/error.hpp"
#include "gwlink/linkbudget.hpp"
#include "gwlink/orbit.hpp"
#include "gwlink/quantity.hpp"
#include "gwlink/transducer.hpp"

namespace gwlink::config {

using nlohmann::json;

// ============================================================================
// JSON run configurations. Every physical field is an object
// {"value": <number>, "unit": "<token>"} checked against the dimension the
// field requires; a bare number is accepted only for dimensionless fields.
// Unit tokens come from a curated table, not a general parser: the point is
// to make unit confusion loud, not to accept everything.
// ============================================================================

struct UnitDef {
  double scale;   ///< multiplier to SI base units
  Dimension dim;
};

/// Token -> (scale, dimension). Longest-suffix matching relies on this exact
/// set; additions must not make an existing token a suffix of a new one with
/// a different meaning.
inline const std::map<std::string, UnitDef>& unit_table() {
  static const std::map<std::string, UnitDef> table = [] {
    std::map<std::string, UnitDef> t;
    const auto& k = constants();
    // mass
    t["kg"] = {1.0, dims::mass};
    t["g"] = {1e-3, dims::mass};
    t["mg"] = {1e-6, dims::mass};
    t["ug"] = {1e-9, dims::mass};
    t["ng"] = {1e-12, dims::mass};
    t["u"] = {atomic_mass_unit_kg, dims::mass};
    t["electron"] = {k.m_e.magnitude(), dims::mass};
    // length
    t["km"] = {1e3, dims::length};
    t["m"] = {1.0, dims::length};
    t["cm"] = {1e-2, dims::length};
    t["mm"] = {1e-3, dims::length};
    t["um"] = {1e-6, dims::length};
    t["nm"] = {1e-9, dims::length};
    // time
    t["yr"] = {3.15576e7, dims::time};  // Julian year
    t["d"] = {86400.0, dims::time};
    t["h"] = {3600.0, dims::time};
    t["min"] = {60.0, dims::time};
    t["s"] = {1.0, dims::time};
    t["ms"] = {1e-3, dims::time};
    t["us"] = {1e-6, dims::time};
    t["ns"] = {1e-9, dims::time};
    // frequency
    t["THz"] = {1e12, dims::frequency};
    t["GHz"] = {1e9, dims::frequency};
    t["MHz"] = {1e6, dims::frequency};
    t["kHz"] = {1e3, dims::frequency};
    t["Hz"] = {1.0, dims::frequency};
    // temperature
    t["K"] = {1.0, dims::temperature};
    t["mK"] = {1e-3, dims::temperature};
    t["uK"] = {1e-6, dims::temperature};
    // magnetic flux density
    t["T"] = {1.0, dims::magnetic_flux_density};
    t["mT"] = {1e-3, dims::magnetic_flux_density};
    t["uT"] = {1e-6, dims::magnetic_flux_density};
    t["G"] = {1e-4, dims::magnetic_flux_density};
    // charge
    t["C"] = {1.0, dims::charge};
    t["e"] = {k.e.magnitude(), dims::charge};
    // power
    t["MW"] = {1e6, dims::power};
    t["kW"] = {1e3, dims::power};
    t["W"] = {1.0, dims::power};
    t["mW"] = {1e-3, dims::power};
    t["uW"] = {1e-6, dims::power};
    t["nW"] = {1e-9, dims::power};
    t["pW"] = {1e-12, dims::power};
    t["fW"] = {1e-15, dims::power};
    // molar mass and amount
    t["kg/mol"] = {1.0, dims::molar_mass};
    t["g/mol"] = {1e-3, dims::molar_mass};
    t["mol"] = {1.0, dims::amount};
    // dimensionless
    t["1"] = {1.0, dims::scalar};
    return t;
  }();
  return table;
}

namespace detail {
inline std::string describe_dim(const Dimension& d) {
  std::string names;
  for (const auto& [token, def] : unit_table()) {
    if (def.dim == d) {
      if (!names.empty()) names += ", ";
      names += token;
    }
  }
  return d.str() + (names.empty() ? "" : " (e.g. " + names + ")");
}
} // namespace detail

/// Parse a flag-style value with an optional unit suffix: "1T", "10mK", "25mm",
/// "2.5e" (two and a half electron charges), bare "e" or "electron" (one unit
/// of it). A bare number is accepted only when `expected` is dimensionless.
[[nodiscard]] inline Quantity parse_unit_token(const std::string& text, const Dimension& expected,
                                               const std::string& what) {
  if (text.empty()) throw config_error(what + ": empty value");

  const auto try_number = [](const std::string& s, double& out) {
    if (s.empty()) {
      out = 1.0;
      return true;
    }
    std::size_t pos = 0;
    try {
      out = std::stod(s, &pos);
    } catch (const std::exception&) {
      return false;
    }
    return pos == s.size();
  };

  // Longest matching unit suffix whose numeric prefix parses wins; this keeps
  // "1e-9" a number and "2.5e" a charge.
  const std::string* best_token = nullptr;
  const UnitDef* best_def = nullptr;
  double best_value = 0.0;
  for (const auto& [token, def] : unit_table()) {
    if (token.size() > text.size()) continue;
    if (text.compare(text.size() - token.size(), token.size(), token) != 0) continue;
    double value = 0.0;
    if (!try_number(text.substr(0, text.size() - token.size()), value)) continue;
    if (!best_token || token.size() > best_token->size()) {
      best_token = &token;
      best_def = &def;
      best_value = value;
    }
  }

  if (best_def) {
    if (best_def->dim != expected)
      throw config_error(what + ": unit '" + *best_token + "' has dimension " +
                         best_def->dim.str() + ", expected " + detail::describe_dim(expected));
    return Quantity(best_value * best_def->scale, best_def->dim);
  }

  double bare = 0.0;
  if (try_number(text, bare) && !text.empty()) {
    if (expected.dimensionless()) return Quantity(bare, dims::scalar);
    throw config_error(what + ": '" + text + "' carries no unit; expected " +
                       detail::describe_dim(expected));
  }
  throw config_error(what + ": cannot parse '" + text + "'");
}

/// Read and parse a JSON file. A missing/unreadable file is reported as
/// `missing_file_error` so the CLI can map it to the bad-arguments exit code;
/// malformed JSON carries the parser's position and maps to the config exit.
class missing_file_error : public config_error {
public:
  using config_error::config_error;
};

[[nodiscard]] inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw missing_file_error("cannot open config file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw config_error("config file " + path + ": " + e.what());
  }
}

// ----------------------------------------------------------------------------
// Field readers. `path` is the dotted location used in error messages.
// ----------------------------------------------------------------------------

namespace detail {

inline const json& require_field(const json& node, const std::string& path, const char* key) {
  if (!node.is_object())
    throw config_error("field '" + path + "': expected an object");
  const auto it = node.find(key);
  if (it == node.end())
    throw config_error("field '" + (path.empty() ? std::string(key) : path + "." + key) +
                       "' is missing");
  return *it;
}

inline std::string join(const std::string& path, const char* key) {
  return path.empty() ? std::string(key) : path + "." + key;
}

} // namespace detail

/// {"value": v, "unit": "token"} -> Quantity of the expected dimension.
/// Bare numbers pass only for dimensionless fields.
[[nodiscard]] inline Quantity parse_quantity(const json& node, const std::string& path,
                                             const Dimension& expected) {
  if (node.is_number()) {
    if (expected.dimensionless()) {
      const double bare = node.get<double>();
      if (!std::isfinite(bare))
        throw config_error("field '" + path + "': not finite");
      return Quantity(bare, dims::scalar);
    }
    throw config_error("field '" + path + "': bare number; expected {\"value\", \"unit\"} with " +
                       detail::describe_dim(expected));
  }
  if (!node.is_object())
    throw config_error("field '" + path + "': expected {\"value\", \"unit\"}");
  const json& v = detail::require_field(node, path, "value");
  const json& u = detail::require_field(node, path, "unit");
  if (!v.is_number())
    throw config_error("field '" + path + ".value': expected a number");
  if (!u.is_string())
    throw config_error("field '" + path + ".unit': expected a unit string");
  const std::string token = u.get<std::string>();
  const auto it = unit_table().find(token);
  if (it == unit_table().end())
    throw config_error("field '" + path + "': unknown unit '" + token + "'; expected " +
                       detail::describe_dim(expected));
  if (it->second.dim != expected)
    throw config_error("field '" + path + "': unit '" + token + "' has dimension " +
                       it->second.dim.str() + ", expected " + detail::describe_dim(expected));
  const double value = v.get<double>();
  if (!std::isfinite(value))
    throw config_error("field '" + path + ".value': not finite");
  return Quantity(value * it->second.scale, it->second.dim);
}

[[nodiscard]] inline double parse_real(const json& node, const std::string& path) {
  if (!node.is_number()) throw config_error("field '" + path + "': expected a number");
  const double v = node.get<double>();
  if (!std::isfinite(v)) throw config_error("field '" + path + "': not finite");
  return v;
}

[[nodiscard]] inline int parse_int(const json& node, const std::string& path) {
  if (!node.is_number_integer()) throw config_error("field '" + path + "': expected an integer");
  return node.get<int>();
}

// ----------------------------------------------------------------------------
// Spec parsers. Every parser validates the finished object against the module
// invariants, converting domain errors into config errors that carry the path.
// ----------------------------------------------------------------------------

[[nodiscard]] inline DropSpec parse_drop(const json& node, const std::string& path) {
  DropSpec d;
  d.mass = parse_quantity(detail::require_field(node, path, "mass"),
                          detail::join(path, "mass"), dims::mass);
  if (node.contains("n_electrons"))
    d.n_electrons = parse_int(node.at("n_electrons"), detail::join(path, "n_electrons"));
  d.radius = parse_quantity(detail::require_field(node, path, "radius"),
                            detail::join(path, "radius"), dims::length);
  d.temperature = parse_quantity(detail::require_field(node, path, "temperature"),
                                 detail::join(path, "temperature"), dims::temperature);
  if (node.contains("b_field"))
    d.b_field = parse_quantity(node.at("b_field"), detail::join(path, "b_field"),
                               dims::magnetic_flux_density);
  else
    d.b_field = Quantity(0.0, dims::magnetic_flux_density);
  if (node.contains("molar_mass"))
    d.molar_mass = parse_quantity(node.at("molar_mass"), detail::join(path, "molar_mass"),
                                  dims::molar_mass);
  if (node.contains("kappa"))
    d.kappa = parse_real(node.at("kappa"), detail::join(path, "kappa"));
  try {
    validate_drop(d);
  } catch (const domain_error& e) {
    throw config_error("field '" + path + "': " + e.what());
  }
  return d;
}

[[nodiscard]] inline TransducerPair parse_pair(const json& node, const std::string& path) {
  TransducerPair p;
  p.drop_a = parse_drop(detail::require_field(node, path, "drop_a"), detail::join(path, "drop_a"));
  p.drop_b = parse_drop(detail::require_field(node, path, "drop_b"), detail::join(path, "drop_b"));
  p.separation = parse_quantity(detail::require_field(node, path, "separation"),
                                detail::join(path, "separation"), dims::length);
  p.frequency = parse_quantity(detail::require_field(node, path, "frequency"),
                               detail::join(path, "frequency"), dims::frequency);
  try {
    validate_pair(p);
  } catch (const domain_error& e) {
    throw config_error("field '" + path + "': " + e.what());
  }
  return p;
}

[[nodiscard]] inline SourceSpec parse_source(const json& node, const std::string& path) {
  SourceSpec s;
  s.power = parse_quantity(detail::require_field(node, path, "power"),
                           detail::join(path, "power"), dims::power);
  s.frequency = parse_quantity(detail::require_field(node, path, "frequency"),
                               detail::join(path, "frequency"), dims::frequency);
  if (node.contains("mode_overlap"))
    s.mode_overlap = parse_real(node.at("mode_overlap"), detail::join(path, "mode_overlap"));
  try {
    gwlink::detail::require_source(s);
  } catch (const domain_error& e) {
    throw config_error("field '" + path + "': " + e.what());
  }
  return s;
}

[[nodiscard]] inline ReceiverSpec parse_receiver(const json& node, const std::string& path) {
  ReceiverSpec r;
  r.t_noise = parse_quantity(detail::require_field(node, path, "t_noise"),
                             detail::join(path, "t_noise"), dims::temperature);
  r.bandwidth = parse_quantity(detail::require_field(node, path, "bandwidth"),
                               detail::join(path, "bandwidth"), dims::frequency);
  r.integration_time = parse_quantity(detail::require_field(node, path, "integration_time"),
                                      detail::join(path, "integration_time"), dims::time);
  if (node.contains("pmin_variant")) {
    const json& v = node.at("pmin_variant");
    if (!v.is_string())
      throw config_error("field '" + path + ".pmin_variant': expected a string");
    const std::string s = v.get<std::string>();
    if (s == "printed" || s == "as-printed")
      r.pmin_variant = PminVariant::as_printed;
    else if (s == "root-bw" || s == "per-root-bandwidth")
      r.pmin_variant = PminVariant::per_root_bandwidth;
    else
      throw config_error("field '" + path + ".pmin_variant': expected 'printed' or 'root-bw'");
  }
  try {
    gwlink::detail::require_receiver(r);
  } catch (const domain_error& e) {
    throw config_error("field '" + path + "': " + e.what());
  }
  return r;
}

[[nodiscard]] inline LinkScenario parse_link_scenario(const json& node,
                                                      const std::string& path = "") {
  LinkScenario s;
  s.source = parse_source(detail::require_field(node, path, "source"),
                          detail::join(path, "source"));
  s.tx_pair = parse_pair(detail::require_field(node, path, "tx_pair"),
                         detail::join(path, "tx_pair"));
  s.rx_pair = parse_pair(detail::require_field(node, path, "rx_pair"),
                         detail::join(path, "rx_pair"));
  s.distance = parse_quantity(detail::require_field(node, path, "distance"),
                              detail::join(path, "distance"), dims::length);
  if (node.contains("directivity"))
    s.directivity = parse_real(node.at("directivity"), detail::join(path, "directivity"));
  s.receiver = parse_receiver(detail::require_field(node, path, "receiver"),
                              detail::join(path, "receiver"));
  if (!(s.distance.magnitude() > 0.0))
    throw config_error("field '" + detail::join(path, "distance") + "': must be positive");
  if (!(s.directivity > 0.0))
    throw config_error("field '" + detail::join(path, "directivity") + "': must be positive");
  return s;
}

/// Full orbit run description.
struct OrbitRunConfig {
  OrbitBody body;
  CentralBody central;
  Quantity r0;
  Quantity t_end;
  Quantity r_min;
  double rel_tol = 1e-9;
  int n_samples = 129;
  loss_channels channels = loss_channels::both;
};

[[nodiscard]] inline OrbitRunConfig parse_orbit_config(const json& node,
                                                       const std::string& path = "") {
  OrbitRunConfig c;
  const json& body = detail::require_field(node, path, "body");
  const std::string body_path = detail::join(path, "body");
  c.body.mass = parse_quantity(detail::require_field(body, body_path, "mass"),
                               body_path + ".mass", dims::mass);
  if (body.contains("charge"))
    c.body.charge = parse_quantity(body.at("charge"), body_path + ".charge", dims::charge);
  else
    c.body.charge = Quantity(0.0, dims::charge);
  if (body.contains("kappa"))
    c.body.kappa = parse_real(body.at("kappa"), body_path + ".kappa");

  const json& central = detail::require_field(node, path, "central");
  c.central.mass = parse_quantity(detail::require_field(central, detail::join(path, "central"), "mass"),
                                  detail::join(path, "central") + ".mass", dims::mass);

  c.r0 = parse_quantity(detail::require_field(node, path, "r0"), detail::join(path, "r0"),
                        dims::length);
  c.t_end = parse_quantity(detail::require_field(node, path, "t_end"),
                           detail::join(path, "t_end"), dims::time);
  c.r_min = parse_quantity(detail::require_field(node, path, "r_min"),
                           detail::join(path, "r_min"), dims::length);
  if (node.contains("rel_tol")) c.rel_tol = parse_real(node.at("rel_tol"), detail::join(path, "rel_tol"));
  if (node.contains("n_samples")) c.n_samples = parse_int(node.at("n_samples"), detail::join(path, "n_samples"));
  if (node.contains("channels")) {
    const json& ch = node.at("channels");
    if (!ch.is_string())
      throw config_error("field '" + detail::join(path, "channels") + "': expected a string");
    const std::string s = ch.get<std::string>();
    if (s == "both")
      c.channels = loss_channels::both;
    else if (s == "em_only")
      c.channels = loss_channels::em_only;
    else if (s == "gr_only")
      c.channels = loss_channels::gr_only;
    else
      throw config_error("field '" + detail::join(path, "channels") +
                         "': expected 'both', 'em_only', or 'gr_only'");
  }

  // Surface invariant violations as config errors with the field location.
  if (!(c.body.mass.magnitude() > 0.0))
    throw config_error("field '" + body_path + ".mass': must be positive");
  if (!(c.body.kappa > 0.0))
    throw config_error("field '" + body_path + ".kappa': must be positive");
  if (!(c.central.mass.magnitude() > 0.0))
    throw config_error("field '" + detail::join(path, "central") + ".mass': must be positive");
  if (!(c.r_min.magnitude() > 0.0))
    throw config_error("field '" + detail::join(path, "r_min") + "': must be positive");
  if (!(c.r0 > c.r_min))
    throw config_error("field '" + detail::join(path, "r0") + "': must exceed r_min");
  if (!(c.t_end.magnitude() > 0.0))
    throw config_error("field '" + detail::join(path, "t_end") + "': must be positive");
  if (!(c.rel_tol > 0.0) || c.rel_tol > 1e-3)
    throw config_error("field '" + detail::join(path, "rel_tol") + "': must be in (0, 1e-3]");
  if (c.n_samples < 2)
    throw config_error("field '" + detail::join(path, "n_samples") + "': must be at least 2");
  return c;
}

[[nodiscard]] inline SweepConfig parse_sweep_config(const json& node,
                                                    const std::string& path = "") {
  SweepConfig c;
  c.base = parse_link_scenario(detail::require_field(node, path, "scenario"),
                               detail::join(path, "scenario"));
  const json& axes = detail::require_field(node, path, "axes");
  if (!axes.is_array() || axes.empty())
    throw config_error("field '" + detail::join(path, "axes") + "': expected a non-empty array");
  for (std::size_t i = 0; i < axes.size(); ++i) {
    const std::string apath = detail::join(path, "axes") + "[" + std::to_string(i) + "]";
    const json& a = axes[i];
    SweepAxis ax;
    const json& pname = detail::require_field(a, apath, "parameter");
    if (!pname.is_string())
      throw config_error("field '" + apath + ".parameter': expected a string");
    ax.parameter = pname.get<std::string>();
    Dimension dim;
    try {
      dim = sweep_parameter_dimension(ax.parameter);
    } catch (const config_error&) {
      throw config_error("field '" + apath + ".parameter': unknown sweep parameter '" +
                         ax.parameter + "'");
    }
    ax.start = parse_quantity(detail::require_field(a, apath, "start"), apath + ".start", dim)
                   .magnitude();
    ax.stop = parse_quantity(detail::require_field(a, apath, "stop"), apath + ".stop", dim)
                  .magnitude();
    ax.count = parse_int(detail::require_field(a, apath, "count"), apath + ".count");
    if (ax.count < 1) throw config_error("field '" + apath + ".count': must be at least 1");
    c.axes.push_back(std::move(ax));
  }
  return c;
}

} // namespace gwlink::config
