#include "petals/basin.hpp"

#include <array>
#include <cmath>
#include <string>

#include "core/error.hpp"

namespace rzlab {

namespace {

constexpr std::array<std::array<std::uint8_t, 3>, 8> kPalette{{
    {230, 25, 75},
    {60, 180, 75},
    {0, 130, 200},
    {245, 130, 48},
    {145, 30, 180},
    {70, 240, 240},
    {240, 50, 230},
    {210, 245, 60},
}};

}  // namespace

OrbitCaps basin_caps() {
  OrbitCaps caps;
  caps.max_iter = 4000;
  caps.window = 64;
  caps.escalate = false;
  return caps;
}

std::array<std::uint8_t, 3> petal_colour(int global_petal) {
  auto c = kPalette[static_cast<std::size_t>(global_petal) % kPalette.size()];
  // Darken on wrap-around so that more than eight petals stay distinguishable.
  const int round = global_petal / static_cast<int>(kPalette.size());
  if (round > 0)
    for (auto& ch : c) ch = static_cast<std::uint8_t>(ch / (1 + round));
  return c;
}

BasinRaster render_basin(const ExactRatFun& map, const std::vector<ParabolicPoint>& points,
                         const BasinGrid& grid, const OrbitCaps& caps) {
  if (grid.resolution < 1 || !(grid.width > 0) || !(grid.height > 0))
    throw DomainError("basin grid needs positive width, height and resolution");
  std::vector<int> offset;
  int total = 0;
  for (const auto& p : points) {
    offset.push_back(total);
    total += p.petal_count();
  }

  BasinRaster out;
  out.width_px = grid.resolution;
  out.height_px = std::max(1, static_cast<int>(std::lround(grid.resolution * grid.height / grid.width)));
  out.petal_pixels.assign(static_cast<std::size_t>(total), 0);
  out.rgb.assign(static_cast<std::size_t>(out.width_px) * out.height_px * 3, 0);

  const NumericMap numeric(map);
  const double dx = grid.width / out.width_px;
  const double dy = grid.height / out.height_px;
  auto column_x = [&](int c) { return grid.center.real() + (2 * c + 1 - out.width_px) * dx / 2; };

  std::size_t k = 0;
  for (int r = 0; r < out.height_px; ++r) {
    const double y = grid.center.imag() + (out.height_px - 1 - 2 * r) * dy / 2;
    for (int c = 0; c < out.width_px; ++c, k += 3) {
      const PetalAssignment a = orbit_to_petal(numeric, {column_x(c), y}, points, caps);
      if (a.outcome == OrbitOutcome::Escaped) {
        ++out.escaped;
      } else if (a.outcome == OrbitOutcome::Undetermined) {
        ++out.undetermined;
      } else {
        const int g = offset[static_cast<std::size_t>(a.point_index)] + a.petal_index - 1;
        ++out.petal_pixels[static_cast<std::size_t>(g)];
        const auto colour = petal_colour(g);
        out.rgb[k] = colour[0];
        out.rgb[k + 1] = colour[1];
        out.rgb[k + 2] = colour[2];
      }
    }
  }

  for (int c = 0; c < out.width_px; ++c) {
    ++out.real_axis_samples;
    const PetalAssignment a = orbit_to_petal(numeric, {column_x(c), grid.center.imag()}, points, caps);
    if (a.outcome == OrbitOutcome::Petal) ++out.real_axis_petal_hits;
  }
  return out;
}

std::vector<std::uint8_t> to_ppm(const BasinRaster& raster) {
  const std::string header =
      "P6\n" + std::to_string(raster.width_px) + " " + std::to_string(raster.height_px) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), raster.rgb.begin(), raster.rgb.end());
  return out;
}

}  // namespace rzlab
