#include "wanopt/hodge.hpp"

#include <string>

namespace wanopt {

GridField poisson_solve_torus(const GridField& g, const Lattice& lat,
                              double solvability_tol) {
  FourierField ghat = dft2(g);
  const int n = g.n();
  const double mean = std::abs(ghat.at(0, 0));
  if (mean > solvability_tol) {
    throw NotSolvable("Poisson right-hand side has nonzero mean " +
                      std::to_string(mean) +
                      " (tol " + std::to_string(solvability_tol) + ")");
  }
  FourierField psihat(n);
  for (int m1 = -n / 2; m1 < n / 2; ++m1)
    for (int m2 = -n / 2; m2 < n / 2; ++m2) {
      if (m1 == 0 && m2 == 0) continue;
      const Vec2 r = lat.lattice_point(m1, m2);
      psihat.at(m1, m2) = ghat.at(m1, m2) / r.squared_norm();
    }
  return idft2(psihat);
}

HodgeDecomposition hodge_decompose(const GridField& fx, const GridField& fy,
                                   const Lattice& lat) {
  if (fx.n() != fy.n())
    throw ShapeMismatch("vector field components have different sizes");
  const int n = fx.n();
  FourierField fxh = dft2(fx);
  FourierField fyh = dft2(fy);
  FourierField psih(n), fh(n);
  const cd iu(0.0, 1.0);
  for (int m1 = -n / 2; m1 < n / 2; ++m1)
    for (int m2 = -n / 2; m2 < n / 2; ++m2) {
      if (m1 == 0 && m2 == 0) continue;
      const Vec2 r = lat.lattice_point(m1, m2);
      const double r2 = r.squared_norm();
      const cd cx = fxh.at(m1, m2), cy = fyh.at(m1, m2);
      psih.at(m1, m2) = iu * (r.x * cx + r.y * cy) / r2;
      fh.at(m1, m2) = -iu * (r.x * cy - r.y * cx) / r2;
    }
  HodgeDecomposition out;
  out.psi = idft2(psih);
  out.f_pot = idft2(fh);
  out.hx = fxh.at(0, 0).real();
  out.hy = fyh.at(0, 0).real();
  return out;
}

GridField cartesian_divergence(const Lattice& lat, const GridField& fx,
                               const GridField& fy) {
  FieldPair gx = cartesian_gradient(lat, fx);
  FieldPair gy = cartesian_gradient(lat, fy);
  GridField div(fx.n());
  for (size_t i = 0; i < div.data().size(); ++i)
    div.data()[i] = gx.first.data()[i] + gy.second.data()[i];
  return div;
}

GridField cartesian_curl(const Lattice& lat, const GridField& fx,
                         const GridField& fy) {
  FieldPair gx = cartesian_gradient(lat, fx);
  FieldPair gy = cartesian_gradient(lat, fy);
  GridField curl(fx.n());
  for (size_t i = 0; i < curl.data().size(); ++i)
    curl.data()[i] = gy.first.data()[i] - gx.second.data()[i];
  return curl;
}

}  // namespace wanopt
