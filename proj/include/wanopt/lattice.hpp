#ifndef WANOPT_LATTICE_HPP
#define WANOPT_LATTICE_HPP

#include <cmath>

#include "wanopt/errors.hpp"

namespace wanopt {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  double dot(const Vec2& o) const { return x * o.x + y * o.y; }
  double cross(const Vec2& o) const { return x * o.y - y * o.x; }
  double norm() const { return std::hypot(x, y); }
  double squared_norm() const { return x * x + y * y; }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }

/// Direct and reciprocal primitive vectors of a 2D Bravais lattice.
/// The reciprocal vectors satisfy a_i . b_j = 2*pi*delta_ij and v_puc
/// is the area of the primitive cell.
struct Lattice {
  Vec2 a1, a2;
  Vec2 b1, b2;
  double v_puc = 0.0;

  // k(kappa1, kappa2) = kappa1 b1 + kappa2 b2
  Vec2 k_of_kappa(double k1, double k2) const { return b1 * k1 + b2 * k2; }

  // R = m1 a1 + m2 a2
  Vec2 lattice_point(int m1, int m2) const { return a1 * double(m1) + a2 * double(m2); }
};

// Reciprocal vectors from the direct ones via the closed-form 2x2
// inverse-transpose scaled by 2*pi. Throws DegenerateLattice when the
// primitive vectors are (numerically) collinear.
Lattice make_lattice(Vec2 a1, Vec2 a2);

/// Uniform grid on the torus [-1/2,1/2)^2; n even, node j at j*h with
/// h = 1/n and j = -n/2 .. n/2-1 per axis. The duplicated right/top edge
/// is not stored; it is recovered by periodicity.
struct TorusGrid {
  int n = 0;
  double h = 0.0;

  explicit TorusGrid(int n_points);

  double node(int j) const { return j * h; }
  int lo() const { return -n / 2; }
  int hi() const { return n / 2; }  // exclusive
};

}  // namespace wanopt

#endif
