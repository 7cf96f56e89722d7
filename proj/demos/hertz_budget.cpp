// Build the reference microwave-to-gravity link in code and walk through the
// stage ledger. Shows the intended library usage without any config files:
// describe the drops, assemble the scenario, evaluate, inspect.

#include <cstdio>

#include <gwlink/gwlink.hpp>

using namespace gwlink;

namespace {

DropSpec near_critical_drop() {
  DropSpec d;
  d.mass = Quantity(1.86e-9, dims::mass);  // a hair above the 1e critical mass
  d.n_electrons = 1;
  d.radius = Quantity(1e-3, dims::length);
  d.temperature = Quantity(0.01, dims::temperature);
  d.b_field = Quantity(1.0, dims::magnetic_flux_density);
  return d;
}

TransducerPair antenna() {
  TransducerPair p;
  p.drop_a = near_critical_drop();
  p.drop_b = near_critical_drop();
  p.separation = Quantity(0.025, dims::length);  // about one wavelength at 12 GHz
  p.frequency = Quantity(12e9, dims::frequency);
  return p;
}

} // namespace

int main() {
  LinkScenario s;
  s.source.power = Quantity(1.0, dims::power);
  s.source.frequency = Quantity(12e9, dims::frequency);
  s.tx_pair = antenna();
  s.rx_pair = antenna();
  s.distance = Quantity(1.0, dims::length);
  s.receiver.t_noise = Quantity(300.0, dims::temperature);
  s.receiver.bandwidth = Quantity(1e9, dims::frequency);
  s.receiver.integration_time = Quantity(1.0, dims::time);

  const LinkReport rep = hertz_link(s);

  std::printf("drop mass            %.9g kg (critical: %.9g kg)\n",
              s.tx_pair.drop_a.mass.magnitude(), critical_mass(1).magnitude());
  std::printf("conversion efficiency %.9g per pair\n\n", rep.eta_tx);

  std::printf("%-24s  %-14s  %s\n", "stage", "factor", "power_W");
  for (const auto& st : rep.stages)
    std::printf("%-24s  %-14.9g  %.9g\n", st.label.c_str(), st.factor,
                st.power.magnitude());

  std::printf("\nreceived   %.9g W\n", rep.p_received.magnitude());
  std::printf("floor      %.9g W (as printed), %.9g W (per root bandwidth)\n",
              rep.p_min_printed.magnitude(), rep.p_min_root_bw.magnitude());
  std::printf("snr        %.9g -> %s\n", rep.snr,
              rep.detectable ? "detectable" : "below the floor");
  return 0;
}
