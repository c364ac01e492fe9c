#ifndef WANOPT_GRID_HPP
#define WANOPT_GRID_HPP

#include <complex>
#include <vector>

#include "wanopt/errors.hpp"
#include "wanopt/lattice.hpp"

namespace wanopt {

using cd = std::complex<double>;

/// Samples f(k(j1*h, j2*h)) of a Lambda*-periodic function on the n x n
/// torus grid, j1, j2 = -n/2 .. n/2-1. Storage is row-major in j1 with
/// offset n/2 per axis; indices wrap periodically through at_wrapped().
class GridField {
 public:
  GridField() = default;
  explicit GridField(int n, cd fill = cd(0.0, 0.0))
      : n_(n), data_(size_t(n) * n, fill) {}

  int n() const { return n_; }
  bool empty() const { return n_ == 0; }

  cd& at(int j1, int j2) { return data_[idx(j1, j2)]; }
  const cd& at(int j1, int j2) const { return data_[idx(j1, j2)]; }

  // Periodic access: any integer pair maps onto the stored cell.
  const cd& at_wrapped(int j1, int j2) const {
    return data_[idx(wrap(j1), wrap(j2))];
  }

  std::vector<cd>& data() { return data_; }
  const std::vector<cd>& data() const { return data_; }

  int wrap(int j) const {
    int r = (j + n_ / 2) % n_;
    if (r < 0) r += n_;
    return r - n_ / 2;
  }

 private:
  size_t idx(int j1, int j2) const {
    return size_t(j1 + n_ / 2) * n_ + size_t(j2 + n_ / 2);
  }

  int n_ = 0;
  std::vector<cd> data_;
};

/// Fourier coefficients g_hat(m1, m2), m1, m2 = -n/2 .. n/2-1, in the same
/// centered storage convention as GridField.
class FourierField {
 public:
  FourierField() = default;
  explicit FourierField(int n) : n_(n), data_(size_t(n) * n, cd(0, 0)) {}

  int n() const { return n_; }
  cd& at(int m1, int m2) { return data_[idx(m1, m2)]; }
  const cd& at(int m1, int m2) const { return data_[idx(m1, m2)]; }
  std::vector<cd>& data() { return data_; }
  const std::vector<cd>& data() const { return data_; }

 private:
  size_t idx(int m1, int m2) const {
    return size_t(m1 + n_ / 2) * n_ + size_t(m2 + n_ / 2);
  }

  int n_ = 0;
  std::vector<cd> data_;
};

/// g_hat_{m1 m2} = (1/n^2) sum_j exp(-2 pi i (m1 j1 + m2 j2) / n) f_{j1 j2}.
FourierField dft2(const GridField& f);

/// Unnormalized inverse; idft2(dft2(f)) == f to round-off.
GridField idft2(const FourierField& g);

/// Differentiation with respect to kappa_axis (axis = 1 or 2) in the Fourier
/// basis: multiply mode (m1, m2) by 2 pi i m_axis, including the m = -n/2 row.
GridField spectral_derivative(const GridField& f, int axis);

/// h^2 sum_j f_j with h = 1/n: the mean of f over the torus. Converges
/// exponentially in n for analytic periodic f.
cd trapezoid_mean(const GridField& f);

// One-dimensional analogues used for the sewing phase z(kappa_1).
// Sequences are indexed j = -n/2 .. n/2-1 through position j + n/2.
std::vector<cd> dft1(const std::vector<cd>& f);
std::vector<cd> idft1(const std::vector<cd>& g);
std::vector<cd> spectral_derivative1(const std::vector<cd>& f);

/// Evaluates the trigonometric interpolant of f on the grid refined by
/// `factor` along `axis`. Output has factor*n rows along the refined axis
/// (fine index s at kappa = s/(factor*n)) and n along the other.
std::vector<cd> spectral_upsample(const GridField& f, int axis, int factor);

/// 1D version: n samples -> factor*n samples of the interpolant.
std::vector<cd> spectral_upsample1(const std::vector<cd>& f, int factor);

// Derivatives in Cartesian coordinates from kappa derivatives and back
// (chain rule through k = kappa1 b1 + kappa2 b2).
struct FieldPair {
  GridField first, second;
};

FieldPair kappa_derivs_to_cartesian(const Lattice& lat, const GridField& d1,
                                    const GridField& d2);
FieldPair cartesian_derivs_to_kappa(const Lattice& lat, const GridField& dx,
                                    const GridField& dy);

/// Spectral d/dk_x and d/dk_y of a grid field.
FieldPair cartesian_gradient(const Lattice& lat, const GridField& f);

}  // namespace wanopt

#endif
