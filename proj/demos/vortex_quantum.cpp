// The circulation around a single superfluid vortex is the same for every
// contour that encloses it, no matter the shape, size, or offset: one quantum
// of 2 pi hbar / m_He4. Loops that miss the vortex measure zero.

#include <cmath>
#include <cstdio>
#include <vector>

#include <gwlink/gwlink.hpp>

using namespace gwlink;

namespace {

VortexLoop wobbly_polygon(double base_radius, int sides) {
  std::vector<VortexLoop::Point> v;
  for (int i = 0; i <= sides; ++i) {
    const double th = 2.0 * 3.14159265358979323846 * i / sides;
    const double r = base_radius * (1.0 + 0.3 * std::sin(5.0 * th));
    v.push_back({r * std::cos(th), r * std::sin(th)});
  }
  // Close exactly on the first vertex.
  v.back() = v.front();
  return VortexLoop::polyline(std::move(v));
}

} // namespace

int main() {
  const auto& k = constants();
  const double quantum =
      as_scalar(2.0 * 3.14159265358979323846 * k.hbar / k.m_He4 /
                    Quantity(1.0, dims::circulation),
                "quantum");
  std::printf("circulation quantum  %.12g m^2/s\n\n", quantum);

  const struct {
    const char* name;
    VortexLoop loop;
  } cases[] = {
      {"circle r=1 m", VortexLoop::circle({0.0, 0.0}, 1.0)},
      {"circle r=1 um", VortexLoop::circle({0.0, 0.0}, 1e-6)},
      {"offset circle", VortexLoop::circle({0.4, -0.2}, 1.0)},
      {"wobbly 64-gon", wobbly_polygon(1.0, 64)},
      {"non-enclosing", VortexLoop::circle({3.0, 0.0}, 1.0)},
  };

  std::printf("%-16s  %-22s  %s\n", "loop", "circulation_m2_per_s", "quanta");
  for (const auto& c : cases) {
    const double gamma = circulation(c.loop).magnitude();
    std::printf("%-16s  %-22.12g  %.6f\n", c.name, gamma, gamma / quantum);
  }
  return 0;
}
