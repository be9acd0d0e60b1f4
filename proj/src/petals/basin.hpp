#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "petals/petals.hpp"

namespace rzlab {

struct BasinGrid {
  std::complex<double> center = 0.0;
  double width = 4.0;
  double height = 4.0;
  int resolution = 512;  // pixels across the width
};

// Orbit caps suited to rasters: short windows and a small budget, since
// every pixel runs its own orbit.
OrbitCaps basin_caps();

struct BasinRaster {
  int width_px = 0;
  int height_px = 0;
  std::vector<std::uint8_t> rgb;  // row-major, top row first
  // Pixel counts per petal, indexed by global petal number (petals of
  // point 0 first, then point 1, ...).
  std::vector<long> petal_pixels;
  long escaped = 0;
  long undetermined = 0;
  // Petal hits among `resolution` samples on the real segment through the
  // center, evaluated separately from the raster rows.
  long real_axis_samples = 0;
  long real_axis_petal_hits = 0;
};

// Rows are placed symmetrically about center.imag(), so a real map with a
// real center gives a raster mirrored across its middle.
BasinRaster render_basin(const ExactRatFun& map, const std::vector<ParabolicPoint>& points,
                         const BasinGrid& grid, const OrbitCaps& caps);

// Colour of a global petal index; black is reserved for non-petal pixels.
std::array<std::uint8_t, 3> petal_colour(int global_petal);

// Binary PPM (P6, maxval 255).
std::vector<std::uint8_t> to_ppm(const BasinRaster& raster);

}  // namespace rzlab
