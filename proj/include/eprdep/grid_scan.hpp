#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>

#include "eprdep/bellagg.hpp"

namespace eprdep {

/// Lattice over [0, pi]^4 with `points_per_axis` evenly spaced values per
/// free axis (both endpoints included). Pinned axes hold a single value.
/// Axis order is (mu1, mu2, nu1, nu2).
struct GridSpec {
  std::size_t points_per_axis = 2;
  std::array<std::optional<double>, 4> pins{};

  std::uint64_t row_count() const {
    std::uint64_t rows = 1;
    for (const auto& p : pins) rows *= p ? 1 : points_per_axis;
    return rows;
  }
};

inline double grid_value(std::size_t k, std::size_t points_per_axis) {
  if (k + 1 == points_per_axis) return std::numbers::pi;
  return std::numbers::pi * static_cast<double>(k) /
         static_cast<double>(points_per_axis - 1);
}

/// Calls visit(config) for every lattice point in lexicographic index order,
/// mu1 outermost and nu2 innermost.
template <typename Visitor>
void for_each_grid_config(const GridSpec& spec, Visitor&& visit) {
  if (spec.points_per_axis < 2) throw std::invalid_argument("grid size must be at least 2");
  std::array<std::size_t, 4> extent{};
  for (int a = 0; a < 4; ++a) {
    if (spec.pins[a]) static_cast<void>(Angle{*spec.pins[a]});  // validates the pin
    extent[a] = spec.pins[a] ? 1 : spec.points_per_axis;
  }
  auto value = [&](int axis, std::size_t k) {
    return spec.pins[axis] ? *spec.pins[axis] : grid_value(k, spec.points_per_axis);
  };
  for (std::size_t a = 0; a < extent[0]; ++a)
    for (std::size_t b = 0; b < extent[1]; ++b)
      for (std::size_t c = 0; c < extent[2]; ++c)
        for (std::size_t d = 0; d < extent[3]; ++d)
          visit(AngleConfig::from_radians(value(0, a), value(1, b), value(2, c), value(3, d)));
}

}  // namespace eprdep
