#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "gwlink/constants.hpp"
#include "gwlink/quantity.hpp"
#include "gwlink/transducer.hpp"

namespace gwlink {

// ============================================================================
// End-to-end link model: microwave drive -> transducer pair (EM to GR) ->
// free-space gravitational path through the Faraday cages -> far transducer
// pair (GR to EM) -> receiver SNR against the radiometer floor. Every stage
// is one multiplicative factor <= 1, recorded in a ledger so the chain can be
// audited; cross-section-derived factors inherit the order-of-magnitude
// character of the geometric estimate and reports tag them as such.
// ============================================================================

/// Microwave drive. mode_overlap is the spatial overlap of the drive mode
/// with the pair's quadrupole pattern (0, 1], default 1.
struct SourceSpec {
  Quantity power;       ///< dims::power, >= 0
  Quantity frequency;   ///< dims::frequency, > 0
  double mode_overlap = 1.0;
};

/// The radiometer floor comes in two variants because the published formula
/// and its published numeric value disagree by a factor of the bandwidth:
///   as_printed:          k_B T dnu / sqrt(tau dnu)   (a power as written)
///   per_root_bandwidth:  k_B T / (sqrt(tau dnu) * 1 s)
/// The second reproduces the quoted 1.3e-25 W at T = 300 K, dnu = 1 GHz,
/// tau = 1 s; the folded reference second makes it a power. Reports always
/// carry both; the variant selects which one gates detectability.
enum class PminVariant { as_printed, per_root_bandwidth };

struct ReceiverSpec {
  Quantity t_noise;           ///< dims::temperature, > 0
  Quantity bandwidth;         ///< dims::frequency, > 0
  Quantity integration_time;  ///< dims::time, > 0
  PminVariant pmin_variant = PminVariant::as_printed;
};

/// One ledger row: the factor this stage applied and the power leaving it.
struct LinkStage {
  std::string label;
  double factor;
  Quantity power;
};

struct LinkReport {
  std::vector<LinkStage> stages;  ///< first row is the raw input, factor 1
  Quantity p_received;
  Quantity p_min;          ///< the variant-selected floor
  Quantity p_min_printed;
  Quantity p_min_root_bw;
  double snr = 0.0;        ///< p_received / p_min
  bool detectable = false; ///< snr >= 1
  double eta_tx = 0.0;
  double eta_rx = 0.0;
  double coupling = 0.0;
  Quantity sigma_rx;       ///< receiving pair cross-section (order of magnitude)
};

/// Everything one link evaluation needs; the sweep mutates copies of this.
struct LinkScenario {
  SourceSpec source;
  TransducerPair tx_pair;
  TransducerPair rx_pair;
  Quantity distance;       ///< dims::length, > 0
  double directivity = 1.0;
  ReceiverSpec receiver;
};

/// Characteristic impedance of free space for gravitational radiation,
/// 16 pi G / c, about 1.1e-17 SI units (m^2 kg^-1 s^-1). Its smallness
/// against the EM 377 Ohm is the whole detection problem.
[[nodiscard]] inline Quantity gravity_wave_impedance() {
  const auto& k = constants();
  return 16.0 * 3.14159265358979323846 * k.G / k.c;
}

namespace detail {
inline void require_receiver(const ReceiverSpec& rx) {
  require_dim(rx.t_noise, dims::temperature, "t_noise");
  require_dim(rx.bandwidth, dims::frequency, "bandwidth");
  require_dim(rx.integration_time, dims::time, "integration_time");
  if (!(rx.t_noise.magnitude() > 0.0)) throw domain_error("t_noise must be positive");
  if (!(rx.bandwidth.magnitude() > 0.0)) throw domain_error("bandwidth must be positive");
  if (!(rx.integration_time.magnitude() > 0.0))
    throw domain_error("integration_time must be positive");
}

inline void require_source(const SourceSpec& src) {
  require_dim(src.power, dims::power, "power");
  require_dim(src.frequency, dims::frequency, "frequency");
  if (src.power.magnitude() < 0.0) throw domain_error("power must be non-negative");
  if (!(src.frequency.magnitude() > 0.0)) throw domain_error("frequency must be positive");
  if (!(src.mode_overlap > 0.0) || src.mode_overlap > 1.0)
    throw domain_error("mode_overlap must be in (0, 1]");
}

[[nodiscard]] inline Quantity pmin_variant_value(const ReceiverSpec& rx, PminVariant v) {
  const auto& k = constants();
  const double root = std::sqrt(as_scalar(rx.integration_time * rx.bandwidth,
                                          "tau * bandwidth"));
  if (v == PminVariant::as_printed)
    return k.k_B * rx.t_noise * rx.bandwidth / root;
  // Fold a reference second so the per-root-bandwidth reading is a power.
  return k.k_B * rx.t_noise / (root * Quantity(1.0, dims::time));
}
} // namespace detail

/// Minimum power distinguishable from amplifier noise, in the receiver's
/// selected variant. See PminVariant for the duality.
[[nodiscard]] inline Quantity min_detectable_power(const ReceiverSpec& rx) {
  detail::require_receiver(rx);
  return detail::pmin_variant_value(rx, rx.pmin_variant);
}

/// Fraction of isotropically spread power intercepted by the receiving
/// aperture: directivity * sigma_rx / (4 pi d^2), clamped to 1 so no geometry
/// can pretend to gain.
[[nodiscard]] inline double free_space_coupling(const Quantity& sigma_rx,
                                                const Quantity& distance,
                                                double directivity) {
  detail::require_dim(sigma_rx, dims::area, "sigma_rx");
  detail::require_dim(distance, dims::length, "distance");
  if (sigma_rx.magnitude() < 0.0) throw domain_error("sigma_rx must be non-negative");
  if (!(distance.magnitude() > 0.0)) throw domain_error("distance must be positive");
  if (!(directivity > 0.0)) throw domain_error("directivity must be positive");
  const double c = directivity *
                   as_scalar(sigma_rx / (4.0 * 3.14159265358979323846 * distance * distance),
                             "coupling");
  return std::min(c, 1.0);
}

/// Evaluate the full chain. Stage order is fixed:
///   input, mode_overlap, tx_conversion, faraday_exit (factor 1 for GR),
///   free_space, faraday_entry (factor 1), rx_conversion.
/// The product of all stage factors times the input power is the received
/// power, exactly as recorded.
[[nodiscard]] inline LinkReport hertz_link(const SourceSpec& src, const TransducerPair& tx,
                                           const TransducerPair& rx_pair,
                                           const Quantity& distance, const ReceiverSpec& rx,
                                           double directivity = 1.0) {
  detail::require_source(src);
  validate_pair(tx);
  validate_pair(rx_pair);
  detail::require_receiver(rx);

  LinkReport rep;
  rep.sigma_rx = geometric_cross_section(rx_pair);
  rep.eta_tx = conversion_efficiency(tx);
  rep.eta_rx = conversion_efficiency(rx_pair);
  rep.coupling = free_space_coupling(rep.sigma_rx, distance, directivity);

  Quantity p = src.power;
  rep.stages.push_back({"input", 1.0, p});
  const auto apply = [&rep, &p](const char* label, double factor) {
    p = p * factor;
    rep.stages.push_back({label, factor, p});
  };
  apply("mode_overlap", src.mode_overlap);
  apply("tx_conversion_em_to_gr", rep.eta_tx);
  apply("faraday_exit", 1.0);  // perfect EM block, perfect GR window
  apply("free_space", rep.coupling);
  apply("faraday_entry", 1.0);
  apply("rx_conversion_gr_to_em", rep.eta_rx);

  rep.p_received = p;
  rep.p_min_printed = detail::pmin_variant_value(rx, PminVariant::as_printed);
  rep.p_min_root_bw = detail::pmin_variant_value(rx, PminVariant::per_root_bandwidth);
  rep.p_min = (rx.pmin_variant == PminVariant::as_printed) ? rep.p_min_printed
                                                           : rep.p_min_root_bw;
  rep.snr = as_scalar(rep.p_received / rep.p_min, "snr");
  rep.detectable = rep.snr >= 1.0;
  return rep;
}

[[nodiscard]] inline LinkReport hertz_link(const LinkScenario& s) {
  return hertz_link(s.source, s.tx_pair, s.rx_pair, s.distance, s.receiver, s.directivity);
}

// ----------------------------------------------------------------------------
// Parameter sweeps: a dense grid over named scenario knobs, rows emitted in
// lexicographic order with the first axis slowest. Evaluation is serial and
// deterministic; rows are independent, so a parallel evaluator only needs to
// restore this ordering.
// ----------------------------------------------------------------------------

/// One swept knob. Values are SI base magnitudes; `count` grid points from
/// start to stop inclusive (count 1 uses start alone).
struct SweepAxis {
  std::string parameter;
  double start = 0.0;
  double stop = 0.0;
  int count = 1;
};

struct SweepConfig {
  LinkScenario base;
  std::vector<SweepAxis> axes;
};

struct SweepRow {
  std::vector<double> values;  ///< one per axis, SI base units
  LinkReport report;
};

namespace detail {

struct sweep_param {
  const char* name;
  Dimension dim;
  void (*apply)(LinkScenario&, double);
};

inline void for_each_drop(LinkScenario& s, void (*f)(DropSpec&, double), double v) {
  f(s.tx_pair.drop_a, v);
  f(s.tx_pair.drop_b, v);
  f(s.rx_pair.drop_a, v);
  f(s.rx_pair.drop_b, v);
}

/// The swept parameters. Drop-level knobs apply to all four drops: the sweep
/// explores one design point, not per-drop asymmetries.
inline const std::vector<sweep_param>& sweep_params() {
  static const std::vector<sweep_param> table = {
      {"drop_mass", dims::mass,
       [](LinkScenario& s, double v) {
         for_each_drop(s, [](DropSpec& d, double x) { d.mass = Quantity(x, dims::mass); }, v);
       }},
      {"drop_radius", dims::length,
       [](LinkScenario& s, double v) {
         for_each_drop(s, [](DropSpec& d, double x) { d.radius = Quantity(x, dims::length); }, v);
       }},
      {"temperature", dims::temperature,
       [](LinkScenario& s, double v) {
         for_each_drop(s, [](DropSpec& d, double x) { d.temperature = Quantity(x, dims::temperature); }, v);
       }},
      {"b_field", dims::magnetic_flux_density,
       [](LinkScenario& s, double v) {
         for_each_drop(s, [](DropSpec& d, double x) { d.b_field = Quantity(x, dims::magnetic_flux_density); }, v);
       }},
      {"separation", dims::length,
       [](LinkScenario& s, double v) {
         s.tx_pair.separation = Quantity(v, dims::length);
         s.rx_pair.separation = Quantity(v, dims::length);
       }},
      {"frequency", dims::frequency,
       [](LinkScenario& s, double v) {
         s.source.frequency = Quantity(v, dims::frequency);
         s.tx_pair.frequency = Quantity(v, dims::frequency);
         s.rx_pair.frequency = Quantity(v, dims::frequency);
       }},
      {"distance", dims::length,
       [](LinkScenario& s, double v) { s.distance = Quantity(v, dims::length); }},
      {"source_power", dims::power,
       [](LinkScenario& s, double v) { s.source.power = Quantity(v, dims::power); }},
      {"mode_overlap", dims::scalar,
       [](LinkScenario& s, double v) { s.source.mode_overlap = v; }},
      {"t_noise", dims::temperature,
       [](LinkScenario& s, double v) { s.receiver.t_noise = Quantity(v, dims::temperature); }},
      {"bandwidth", dims::frequency,
       [](LinkScenario& s, double v) { s.receiver.bandwidth = Quantity(v, dims::frequency); }},
      {"integration_time", dims::time,
       [](LinkScenario& s, double v) { s.receiver.integration_time = Quantity(v, dims::time); }},
      {"directivity", dims::scalar,
       [](LinkScenario& s, double v) { s.directivity = v; }},
  };
  return table;
}

inline const sweep_param& find_sweep_param(const std::string& name) {
  for (const auto& p : sweep_params())
    if (name == p.name) return p;
  throw config_error("unknown sweep parameter '" + name + "'");
}

} // namespace detail

/// Expected dimension of a named sweep parameter (for config validation).
[[nodiscard]] inline const Dimension& sweep_parameter_dimension(const std::string& name) {
  return detail::find_sweep_param(name).dim;
}

/// Dense-grid evaluation. Throws config_error on an unknown parameter name,
/// a duplicate axis, a non-finite bound, or count < 1.
[[nodiscard]] inline std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  if (config.axes.empty()) throw config_error("sweep needs at least one axis");
  std::size_t total = 1;
  for (std::size_t i = 0; i < config.axes.size(); ++i) {
    const auto& ax = config.axes[i];
    detail::find_sweep_param(ax.parameter);
    for (std::size_t j = 0; j < i; ++j)
      if (config.axes[j].parameter == ax.parameter)
        throw config_error("duplicate sweep axis '" + ax.parameter + "'");
    if (!std::isfinite(ax.start) || !std::isfinite(ax.stop))
      throw config_error("axis '" + ax.parameter + "' has non-finite bounds");
    if (ax.count < 1) throw config_error("axis '" + ax.parameter + "' needs count >= 1");
    total *= static_cast<std::size_t>(ax.count);
  }

  const auto axis_value = [](const SweepAxis& ax, int i) {
    if (ax.count == 1) return ax.start;
    return ax.start + (ax.stop - ax.start) * static_cast<double>(i) /
                          static_cast<double>(ax.count - 1);
  };

  std::vector<SweepRow> rows;
  rows.reserve(total);
  std::vector<int> idx(config.axes.size(), 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    // Decode with the first axis slowest (lexicographic row order).
    std::size_t rem = flat;
    for (std::size_t a = config.axes.size(); a-- > 0;) {
      idx[a] = static_cast<int>(rem % static_cast<std::size_t>(config.axes[a].count));
      rem /= static_cast<std::size_t>(config.axes[a].count);
    }
    LinkScenario s = config.base;
    SweepRow row;
    row.values.reserve(config.axes.size());
    for (std::size_t a = 0; a < config.axes.size(); ++a) {
      const double v = axis_value(config.axes[a], idx[a]);
      detail::find_sweep_param(config.axes[a].parameter).apply(s, v);
      row.values.push_back(v);
    }
    row.report = hertz_link(s);
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace gwlink
