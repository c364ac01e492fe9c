#include "wanopt/lattice.hpp"

#include <numbers>
#include <string>

namespace wanopt {

Lattice make_lattice(Vec2 a1, Vec2 a2) {
  const double det = a1.cross(a2);
  if (std::abs(det) <= 1e-14 * a1.norm() * a2.norm()) {
    throw DegenerateLattice("primitive vectors are collinear, |a1 x a2| = " +
                            std::to_string(det));
  }
  constexpr double two_pi = 2.0 * std::numbers::pi;
  Lattice lat;
  lat.a1 = a1;
  lat.a2 = a2;
  lat.b1 = Vec2{a2.y, -a2.x} * (two_pi / det);
  lat.b2 = Vec2{-a1.y, a1.x} * (two_pi / det);
  lat.v_puc = std::abs(det);
  return lat;
}

TorusGrid::TorusGrid(int n_points) : n(n_points), h(1.0 / n_points) {
  if (n_points < 2 || n_points % 2 != 0) {
    throw ShapeMismatch("grid size must be even and >= 2, got " +
                        std::to_string(n_points));
  }
}

}  // namespace wanopt
