#include "wanopt/grid.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <numbers>
#include <tuple>

namespace wanopt {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// Shared FFTW plans keyed by (rows, cols, sign). Plan creation is not
// thread safe, and neither is reuse of the staging buffers, so every
// transform holds the mutex for its full duration. Transforms only run in
// the sequential reduction phases of the pipeline.
struct Plan {
  fftw_plan plan = nullptr;
  fftw_complex* in = nullptr;
  fftw_complex* out = nullptr;
};

std::mutex g_fft_mutex;

Plan& plan_for(int n1, int n2, int sign) {
  static std::map<std::tuple<int, int, int>, Plan> cache;
  auto key = std::make_tuple(n1, n2, sign);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  Plan p;
  p.in = fftw_alloc_complex(size_t(n1) * n2);
  p.out = fftw_alloc_complex(size_t(n1) * n2);
  p.plan = fftw_plan_dft_2d(n1, n2, p.in, p.out, sign, FFTW_ESTIMATE);
  return cache.emplace(key, p).first->second;
}

// Centered storage position p (index j + n/2) maps to the standard DFT
// position (p + n/2) mod n on both input and output sides; the exponentials
// only depend on indices mod n, so no phase factors appear.
inline int shift(int p, int n) { return (p + n / 2) % n; }

void run_shifted(const std::vector<cd>& src, std::vector<cd>& dst, int n1,
                 int n2, int sign) {
  std::lock_guard<std::mutex> lock(g_fft_mutex);
  Plan& p = plan_for(n1, n2, sign);
  for (int p1 = 0; p1 < n1; ++p1)
    for (int p2 = 0; p2 < n2; ++p2) {
      const cd& v = src[size_t(p1) * n2 + p2];
      fftw_complex& slot = p.in[size_t(shift(p1, n1)) * n2 + shift(p2, n2)];
      slot[0] = v.real();
      slot[1] = v.imag();
    }
  fftw_execute(p.plan);
  dst.resize(size_t(n1) * n2);
  for (int p1 = 0; p1 < n1; ++p1)
    for (int p2 = 0; p2 < n2; ++p2) {
      const fftw_complex& v = p.out[size_t(shift(p1, n1)) * n2 + shift(p2, n2)];
      dst[size_t(p1) * n2 + p2] = cd(v[0], v[1]);
    }
}

}  // namespace

FourierField dft2(const GridField& f) {
  const int n = f.n();
  FourierField g(n);
  run_shifted(f.data(), g.data(), n, n, FFTW_FORWARD);
  const double scale = 1.0 / (double(n) * n);
  for (cd& c : g.data()) c *= scale;
  return g;
}

GridField idft2(const FourierField& g) {
  const int n = g.n();
  GridField f(n);
  run_shifted(g.data(), f.data(), n, n, FFTW_BACKWARD);
  return f;
}

GridField spectral_derivative(const GridField& f, int axis) {
  const int n = f.n();
  FourierField g = dft2(f);
  for (int m1 = -n / 2; m1 < n / 2; ++m1)
    for (int m2 = -n / 2; m2 < n / 2; ++m2) {
      const int m = (axis == 1) ? m1 : m2;
      g.at(m1, m2) *= cd(0.0, two_pi * m);
    }
  return idft2(g);
}

cd trapezoid_mean(const GridField& f) {
  cd sum(0.0, 0.0);
  for (const cd& v : f.data()) sum += v;
  return sum / (double(f.n()) * f.n());
}

std::vector<cd> dft1(const std::vector<cd>& f) {
  const int n = int(f.size());
  std::vector<cd> g;
  run_shifted(f, g, 1, n, FFTW_FORWARD);
  for (cd& c : g) c /= double(n);
  return g;
}

std::vector<cd> idft1(const std::vector<cd>& g) {
  const int n = int(g.size());
  std::vector<cd> f;
  run_shifted(g, f, 1, n, FFTW_BACKWARD);
  return f;
}

std::vector<cd> spectral_derivative1(const std::vector<cd>& f) {
  const int n = int(f.size());
  std::vector<cd> g = dft1(f);
  for (int m = -n / 2; m < n / 2; ++m)
    g[size_t(m + n / 2)] *= cd(0.0, two_pi * m);
  return idft1(g);
}

std::vector<cd> spectral_upsample1(const std::vector<cd>& f, int factor) {
  const int n = int(f.size());
  const int m_fine = factor * n;
  std::vector<cd> coeffs = dft1(f);
  std::vector<cd> padded(size_t(m_fine), cd(0, 0));
  for (int m = -n / 2; m < n / 2; ++m)
    padded[size_t(m + m_fine / 2)] = coeffs[size_t(m + n / 2)];
  std::vector<cd> fine;
  run_shifted(padded, fine, 1, m_fine, FFTW_BACKWARD);
  return fine;
}

std::vector<cd> spectral_upsample(const GridField& f, int axis, int factor) {
  const int n = f.n();
  const int m_fine = factor * n;
  FourierField coeffs = dft2(f);
  const int rows = (axis == 1) ? m_fine : n;
  const int cols = (axis == 1) ? n : m_fine;
  std::vector<cd> padded(size_t(rows) * cols, cd(0, 0));
  for (int m1 = -n / 2; m1 < n / 2; ++m1)
    for (int m2 = -n / 2; m2 < n / 2; ++m2) {
      const int p1 = (axis == 1) ? m1 + m_fine / 2 : m1 + n / 2;
      const int p2 = (axis == 1) ? m2 + n / 2 : m2 + m_fine / 2;
      padded[size_t(p1) * cols + p2] = coeffs.at(m1, m2);
    }
  std::vector<cd> fine;
  run_shifted(padded, fine, rows, cols, FFTW_BACKWARD);
  return fine;
}

FieldPair kappa_derivs_to_cartesian(const Lattice& lat, const GridField& d1,
                                    const GridField& d2) {
  if (d1.n() != d2.n())
    throw ShapeMismatch("kappa derivative fields have different sizes");
  const int n = d1.n();
  FieldPair out{GridField(n), GridField(n)};
  for (size_t i = 0; i < d1.data().size(); ++i) {
    const cd v1 = d1.data()[i], v2 = d2.data()[i];
    out.first.data()[i] = (lat.a1.x * v1 + lat.a2.x * v2) / two_pi;
    out.second.data()[i] = (lat.a1.y * v1 + lat.a2.y * v2) / two_pi;
  }
  return out;
}

FieldPair cartesian_derivs_to_kappa(const Lattice& lat, const GridField& dx,
                                    const GridField& dy) {
  if (dx.n() != dy.n())
    throw ShapeMismatch("cartesian derivative fields have different sizes");
  const int n = dx.n();
  FieldPair out{GridField(n), GridField(n)};
  for (size_t i = 0; i < dx.data().size(); ++i) {
    const cd vx = dx.data()[i], vy = dy.data()[i];
    out.first.data()[i] = lat.b1.x * vx + lat.b1.y * vy;
    out.second.data()[i] = lat.b2.x * vx + lat.b2.y * vy;
  }
  return out;
}

FieldPair cartesian_gradient(const Lattice& lat, const GridField& f) {
  return kappa_derivs_to_cartesian(lat, spectral_derivative(f, 1),
                                   spectral_derivative(f, 2));
}

}  // namespace wanopt
